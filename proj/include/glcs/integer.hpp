#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace glcs {

// Arbitrary-precision integer used for every exact quantity in the library.
using Integer = mpz_class;

std::string to_decimal(const Integer& value);

// Parses a base-10 integer; throws std::invalid_argument on malformed input.
Integer from_decimal(const std::string& text);

Integer binomial(std::uint64_t n, std::uint64_t k);

Integer power(const Integer& base, std::uint64_t exponent);

std::vector<std::string> to_decimal_strings(const std::vector<Integer>& values);

}  // namespace glcs
