#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "glcs/holonomy.hpp"

namespace glcs::cli {

enum class Format { text, json };

struct RunConfig {
  std::string input_path = "-";
  std::size_t order = 10;
  std::size_t oracle_degree = 4;
  Format format = Format::text;
  bool strict_parse = false;
  FeasibilityLimits limits;
};

// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kParseError = 2,
  kIntegralityError = 3,
  kFeasibilityError = 4,
  kMismatch = 5,
};

int cmd_compute(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_classify(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_decompose(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_chromatic(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

// Parses arguments (argv[0] is the program name) and dispatches.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace glcs::cli
