#include "glcs/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "glcs/graph.hpp"
#include "glcs/lcs_formula.hpp"
#include "glcs/polynomial.hpp"
#include "glcs/series.hpp"

namespace glcs::cli {

using nlohmann::json;

namespace {

struct Check {
  std::string name;
  bool pass = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph load_graph(const RunConfig& cfg, std::istream& in) {
  std::string text;
  if (cfg.input_path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(cfg.input_path);
    if (!file) throw InputError("cannot open input file '" + cfg.input_path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  ParseOptions options;
  options.strict = cfg.strict_parse;
  return parse_graph(text, options);
}

// Runs a subcommand body, mapping library errors onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kParseError;
  } catch (const GraphError& e) {
    err << "graph error: " << e.what() << '\n';
    return kParseError;
  } catch (const IntegralityError& e) {
    err << "integrality error: " << e.what() << '\n';
    return kIntegralityError;
  } catch (const FeasibilityError& e) {
    err << "feasibility guard: " << e.what()
        << "\nlower --oracle-degree, or raise --max-dim / GLCS_MAX_DIM\n";
    return kFeasibilityError;
  } catch (const FormulaError& e) {
    err << "mismatch: " << e.what() << '\n';
    return kMismatch;
  }
}

template <class T>
json decimal_array(const std::vector<T>& values) {
  auto out = json::array();
  for (const auto& v : values) {
    if constexpr (std::is_same_v<T, Integer>) {
      out.push_back(to_decimal(v));
    } else {
      out.push_back(std::to_string(v));
    }
  }
  return out;
}

template <class T>
std::string joined(const std::vector<T>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ' ';
    if constexpr (std::is_same_v<T, Integer>) {
      out << to_decimal(values[i]);
    } else {
      out << values[i];
    }
  }
  return out.str();
}

std::vector<std::string> labels_of(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (Vertex x : vs) out.push_back(g.label(x));
  return out;
}

std::vector<std::string> labels_of(const Graph& g) {
  return labels_of(g, std::vector<Vertex>(g.vertices().begin(), g.vertices().end()));
}

// "(1 - 2t)^4 (1 - 3t)", or "1" for the empty product.
std::string product_form(const ExponentVector& e) {
  std::ostringstream out;
  bool any = false;
  for (std::size_t j = 1; j <= e.size(); ++j) {
    const Integer ej = e[j];
    if (ej == 0) continue;
    if (any) out << ' ';
    out << "(1 - ";
    if (j != 1) out << j;
    out << "t)";
    if (ej != 1) out << '^' << (ej < 0 ? "(" + to_decimal(ej) + ")" : to_decimal(ej));
    any = true;
  }
  return any ? out.str() : "1";
}

json checks_json(const std::vector<Check>& checks) {
  auto out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}});
  return out;
}

void print_checks(std::ostream& out, const std::vector<Check>& checks) {
  for (const auto& c : checks) out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << '\n';
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int cmd_compute(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(cfg, in);
    const auto kappa = clique_vector(g);
    const auto e = glcs_exponents(kappa);
    const auto u = expand_product(e, cfg.order);
    const auto phi = phi_from_exponents(e, cfg.order);

    std::vector<Check> checks;
    checks.push_back({"phi_1 equals the number of edges", phi[1] == static_cast<unsigned long>(kappa[1])});
    if (cfg.order >= 2) {
      checks.push_back({"phi_2 equals the number of triangles",
                        phi[2] == static_cast<unsigned long>(kappa[2])});
    }
    checks.push_back({"all phi_k are nonnegative",
                      std::all_of(phi.phi.begin(), phi.phi.end(), [](const Integer& p) { return p >= 0; })});
    checks.push_back({"U(t) equals prod_k (1 - t^k)^phi_k", expand_lcs_product(phi, cfg.order) == u});

    if (cfg.format == Format::json) {
      emit_json(out, {{"command", "compute"},
                      {"vertices", std::to_string(g.num_vertices())},
                      {"edges", std::to_string(g.num_edges())},
                      {"kappa", decimal_array(kappa.kappa)},
                      {"e", decimal_array(e.e)},
                      {"U", u},
                      {"phi", decimal_array(phi.phi)},
                      {"checks", checks_json(checks)}});
    } else {
      out << "graph: " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n"
          << "kappa: " << joined(kappa.kappa) << '\n'
          << "e: " << joined(e.e) << '\n'
          << "U(t) = " << product_form(e) << '\n'
          << "     = " << to_string(u) << '\n'
          << "phi_1..phi_" << cfg.order << ": " << joined(phi.phi) << '\n'
          << "checks:\n";
      print_checks(out, checks);
    }
    return all_pass(checks) ? kSuccess : kMismatch;
  });
}

int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(cfg, in);
    const std::size_t d = cfg.oracle_degree;
    const auto kappa = clique_vector(g);
    const auto e = glcs_exponents(kappa);
    const auto u = expand_product(e, cfg.order);
    const auto formula = phi_from_exponents(e, d);
    const auto oracle = phi_bruteforce(g, d, cfg.limits);

    std::vector<Check> checks;
    for (std::size_t k = 1; k <= d; ++k) {
      checks.push_back({"degree " + std::to_string(k) + ": formula " + to_decimal(formula[k]) +
                            " vs oracle " + to_decimal(oracle[k]),
                        formula[k] == oracle[k]});
    }
    std::vector<MayerVietorisReport> mv;
    if (g.num_vertices() <= 6) {
      for (Vertex v : g.vertices()) {
        mv.push_back(verify_mayer_vietoris(g, v, d, cfg.limits));
        checks.push_back({"Mayer-Vietoris split at " + g.label(v), mv.back().passed()});
      }
    }

    if (cfg.format == Format::json) {
      auto mv_json = json::array();
      for (const auto& r : mv) {
        json j = r;
        j["pivot"] = g.label(r.pivot);
        mv_json.push_back(j);
      }
      emit_json(out, {{"command", "verify"},
                      {"degree", std::to_string(d)},
                      {"kappa", decimal_array(kappa.kappa)},
                      {"e", decimal_array(e.e)},
                      {"U", u},
                      {"phi", decimal_array(formula.phi)},
                      {"oracle_phi", decimal_array(oracle.phi)},
                      {"mayer_vietoris", mv_json},
                      {"checks", checks_json(checks)}});
    } else {
      out << "graph: " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n"
          << "U(t) = " << product_form(e) << "\n\n"
          << " k  formula  oracle\n";
      for (std::size_t k = 1; k <= d; ++k) {
        out << std::setw(2) << k << "  " << std::setw(7) << to_decimal(formula[k]) << "  "
            << std::setw(6) << to_decimal(oracle[k]) << (formula[k] == oracle[k] ? "" : "  <--")
            << '\n';
      }
      for (const auto& r : mv) {
        out << "\nsplit at " << g.label(r.pivot) << " (whole + seam = rest + star):\n";
        for (const auto& row : r.rows) {
          out << "  k=" << row.degree << ": " << row.whole << " + " << row.seam << " = "
              << row.rest << " + " << row.star << (row.pass ? "" : "  FAIL") << '\n';
        }
      }
      out << "\nchecks:\n";
      print_checks(out, checks);
      out << (all_pass(checks) ? "PASS\n" : "FAIL\n");
    }
    return all_pass(checks) ? kSuccess : kMismatch;
  });
}

int cmd_classify(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(cfg, in);
    const auto kappa = clique_vector(g);
    const auto chordal = is_chordal(g);
    const bool decomposable = kappa[3] == 0;
    std::string summary;
    if (chordal.chordal && decomposable) {
      summary = "supersolvable and decomposable";
    } else if (chordal.chordal) {
      summary = "supersolvable";
    } else if (decomposable) {
      summary = "decomposable";
    } else {
      summary = "neither supersolvable nor decomposable";
    }

    if (cfg.format == Format::json) {
      emit_json(out, {{"command", "classify"},
                      {"kappa", decimal_array(kappa.kappa)},
                      {"chordal", chordal.chordal},
                      {"supersolvable", chordal.chordal},
                      {"decomposable", decomposable},
                      {"elimination_order",
                       chordal.chordal ? json(labels_of(g, chordal.elimination_order)) : json(nullptr)},
                      {"chordless_cycle",
                       chordal.chordal ? json(nullptr) : json(labels_of(g, chordal.chordless_cycle))},
                      {"class", summary}});
    } else {
      out << "kappa: " << joined(kappa.kappa) << '\n';
      out << "chordal (supersolvable): " << (chordal.chordal ? "yes" : "no") << '\n';
      if (chordal.chordal) {
        out << "  perfect elimination ordering: " << joined(labels_of(g, chordal.elimination_order)) << '\n';
      } else {
        out << "  chordless cycle: " << joined(labels_of(g, chordal.chordless_cycle)) << '\n';
      }
      out << "decomposable (no K_4): " << (decomposable ? "yes" : "no") << '\n';
      out << "class: " << summary << '\n';
    }
    return kSuccess;
  });
}

namespace {

std::string describe(const Graph& g) {
  const std::size_t m = g.num_edges();
  return "{" + joined(labels_of(g)) + "} " + std::to_string(m) + (m == 1 ? " edge" : " edges");
}

// Emits the tree and returns the series of the subtree.
TruncatedSeries render_tree(const DecompositionTree& t, std::size_t order, std::size_t indent,
                            std::ostream& text, json& node) {
  const std::string pad(indent * 2, ' ');
  const Graph& g = t.graph();
  node["vertices"] = labels_of(g);
  node["edges"] = std::to_string(g.num_edges());
  if (t.is_leaf()) {
    const auto u = series_via_decomposition(t, order);
    node["leaf"] = std::string(to_string(t.leaf_reason()));
    node["U"] = u;
    text << pad << "leaf " << describe(g) << " [" << to_string(t.leaf_reason()) << "]  U = "
         << to_string(u) << '\n';
    return u;
  }
  node["pivot"] = t.pivot() ? json(g.label(*t.pivot())) : json(nullptr);
  text << pad << "split " << describe(g);
  if (t.pivot()) {
    text << " at " << g.label(*t.pivot());
  } else {
    text << " into components";
  }
  text << '\n';
  std::ostringstream nested;
  json left, right;
  const auto u1 = render_tree(t.left(), order, indent + 1, nested, left);
  const auto u2 = render_tree(t.right(), order, indent + 1, nested, right);
  const auto uk = series_via_decomposition(decompose(t.seam()), order);
  const auto u = glue_series(u1, u2, uk);
  text << pad << "  seam " << describe(t.seam()) << "  U = " << to_string(uk) << '\n';
  text << nested.str();
  text << pad << "  glued U = " << to_string(u) << '\n';
  node["seam"] = {{"vertices", labels_of(t.seam())},
                  {"edges", std::to_string(t.seam().num_edges())},
                  {"U", uk}};
  node["left"] = std::move(left);
  node["right"] = std::move(right);
  node["U"] = u;
  return u;
}

}  // namespace

int cmd_decompose(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(cfg, in);
    const auto tree = decompose(g);
    std::ostringstream text;
    json tree_json;
    const auto glued = render_tree(tree, cfg.order, 0, text, tree_json);
    const auto direct = lcs_series(g, cfg.order);
    const auto e = glcs_exponents(clique_vector(g));
    const std::vector<Check> checks{{"decomposition series equals the clique formula series", glued == direct}};

    if (cfg.format == Format::json) {
      emit_json(out, {{"command", "decompose"},
                      {"tree", tree_json},
                      {"leaves", std::to_string(tree.leaves().size())},
                      {"e", decimal_array(e.e)},
                      {"U", glued},
                      {"direct_U", direct},
                      {"checks", checks_json(checks)}});
    } else {
      out << text.str() << "\nroot U(t) = " << to_string(glued) << '\n'
          << "clique formula U(t) = " << product_form(e) << '\n'
          << "checks:\n";
      print_checks(out, checks);
    }
    return all_pass(checks) ? kSuccess : kMismatch;
  });
}

int cmd_chromatic(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(cfg, in);
    const auto kappa = clique_vector(g);
    const auto chi = chromatic_polynomial(g);
    const auto poincare = poincare_polynomial(g);
    const bool chordal = is_chordal(g).chordal;
    std::vector<Check> checks;
    std::optional<IntPolynomial> formula;
    std::optional<IntPolynomial> u_poly;
    if (chordal) {
      formula = chordal_chromatic(kappa);
      checks.push_back({"clique-product chromatic polynomial equals deletion-contraction",
                        *formula == chi});
      const auto e = glcs_exponents(kappa);
      IntPolynomial u{1};
      for (std::size_t j = 1; j <= e.size(); ++j) {
        u *= pow(IntPolynomial{1, -static_cast<long>(j)}, e[j].get_ui());
      }
      u_poly = u;
      checks.push_back({"P(X,-t) equals U(t)", poincare.negated_argument() == u});
    }

    if (cfg.format == Format::json) {
      emit_json(out, {{"command", "chromatic"},
                      {"kappa", decimal_array(kappa.kappa)},
                      {"chromatic", chi},
                      {"chordal", chordal},
                      {"chordal_formula", formula ? json(*formula) : json(nullptr)},
                      {"poincare", poincare},
                      {"U", u_poly ? json(*u_poly) : json(nullptr)},
                      {"checks", checks_json(checks)}});
    } else {
      out << "chi(t) = " << to_string(chi) << '\n';
      if (formula) {
        out << "chordal: yes\nclique-product chi(t) = " << to_string(*formula) << '\n';
      } else {
        out << "chordal: no (clique-product formula skipped)\n";
      }
      out << "P(X,t) = " << to_string(poincare) << '\n';
      if (u_poly) out << "U(t) = " << to_string(*u_poly) << '\n';
      if (!checks.empty()) {
        out << "checks:\n";
        print_checks(out, checks);
      }
    }
    return all_pass(checks) ? kSuccess : kMismatch;
  });
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Lower central series ranks of graphic arrangements", "glcs"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("GLCS_MAX_DIM")) {
    try {
      cfg.limits.max_dimension = std::stoul(env);
    } catch (const std::exception&) {
      err << "ignoring malformed GLCS_MAX_DIM='" << env << "'\n";
    }
  }
  std::string format = "text";
  std::size_t max_dim = 0;

  const std::map<std::string, std::function<int()>> commands{
      {"compute", [&] { return cmd_compute(cfg, in, out, err); }},
      {"verify", [&] { return cmd_verify(cfg, in, out, err); }},
      {"classify", [&] { return cmd_classify(cfg, in, out, err); }},
      {"decompose", [&] { return cmd_decompose(cfg, in, out, err); }},
      {"chromatic", [&] { return cmd_chromatic(cfg, in, out, err); }},
  };
  const std::map<std::string, std::string> help{
      {"compute", "clique counts, exponents, U(t) and the ranks phi_k"},
      {"verify", "compare the formula against the holonomy Lie algebra oracle"},
      {"classify", "chordal (supersolvable) and decomposable classification"},
      {"decompose", "vertex-split decomposition tree and gluing of U(t)"},
      {"chromatic", "chromatic and Poincare polynomials"},
  };
  for (const auto& [name, _] : commands) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--input,-i", cfg.input_path, "edge-list file, '-' for stdin");
    sub->add_option("--degree,-d", cfg.order, "truncation order N")->check(CLI::PositiveNumber);
    sub->add_option("--format,-f", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--strict", cfg.strict_parse, "reject duplicate edges");
    sub->add_option("--oracle-degree", cfg.oracle_degree, "oracle degree D")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-dim", max_dim, "feasibility cap on the free Lie algebra dimension")
        ->check(CLI::PositiveNumber);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kParseError;
  }
  cfg.format = format == "json" ? Format::json : Format::text;
  if (max_dim != 0) cfg.limits.max_dimension = max_dim;

  for (const auto& [name, command] : commands) {
    if (app.got_subcommand(name)) return command();
  }
  return kParseError;
}

}  // namespace glcs::cli
