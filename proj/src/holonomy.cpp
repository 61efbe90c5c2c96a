#include "glcs/holonomy.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>

#include "glcs/lcs_formula.hpp"
#include "glcs/lyndon.hpp"

namespace glcs {

FeasibilityError::FeasibilityError(const std::string& what, std::size_t degree,
                                   std::size_t estimate)
    : std::runtime_error(what), degree_(degree), estimate_(estimate) {}

HolonomyPresentation presentation(const Graph& g) {
  HolonomyPresentation p;
  p.num_generators = g.num_edges();
  for (const auto& flat : rank2_flats(g)) {
    auto idx = [&](std::size_t k) { return static_cast<std::uint32_t>(flat.edges[k]); };
    if (flat.mu == 2) {
      // [x1, x2 + x3] and [x2, x1 + x3]
      p.relators.push_back({Relator::Kind::triangle, {{idx(0), idx(1), 1}, {idx(0), idx(2), 1}}});
      p.relators.push_back({Relator::Kind::triangle, {{idx(0), idx(1), -1}, {idx(1), idx(2), 1}}});
    } else {
      p.relators.push_back({Relator::Kind::commuting, {{idx(0), idx(1), 1}}});
    }
  }
  return p;
}

std::string to_string(const Relator& r) {
  std::string out;
  for (const auto& t : r.terms) {
    if (!out.empty()) out += t.coeff < 0 ? " - " : " + ";
    else if (t.coeff < 0) out += "-";
    const auto mag = t.coeff < 0 ? -t.coeff : t.coeff;
    if (mag != 1) out += std::to_string(mag);
    out += "[x" + std::to_string(t.i + 1) + ",x" + std::to_string(t.j + 1) + "]";
  }
  return out.empty() ? "0" : out;
}

namespace {

// ---------------------------------------------------------------------------
// Scalar operations: overflow-checked int64 (throws ScalarOverflow) and GMP.

constexpr std::int64_t kInt64Min = std::numeric_limits<std::int64_t>::min();

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out) || out == kInt64Min) throw ScalarOverflow("int64 overflow");
  return out;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out) || out == kInt64Min) throw ScalarOverflow("int64 overflow");
  return out;
}
inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out) || out == kInt64Min) throw ScalarOverflow("int64 overflow");
  return out;
}
inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline bool negative(std::int64_t a) { return a < 0; }
inline bool is_one(std::int64_t a) { return a == 1; }

inline Integer mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer sub(const Integer& a, const Integer& b) { return a - b; }
inline Integer add(const Integer& a, const Integer& b) { return a + b; }
inline Integer gcd_of(const Integer& a, const Integer& b) { return gcd(a, b); }
inline bool negative(const Integer& a) { return sgn(a) < 0; }
inline bool is_one(const Integer& a) { return a == 1; }

template <class S>
using Row = std::vector<std::pair<std::uint32_t, S>>;

// Divides out the content and makes the leading coefficient positive.
template <class S>
void normalize(Row<S>& row) {
  if (row.empty()) return;
  S g = gcd_of(row.front().second, row.front().second);
  for (std::size_t i = 1; i < row.size() && !is_one(g); ++i) g = gcd_of(g, row[i].second);
  if (negative(row.front().second)) g = -g;
  if (!is_one(g)) {
    for (auto& entry : row) entry.second /= g;
  }
}

// Incremental row echelon form over the integers. Rows are reduced only at
// their leading column; content is removed after every step, so entries
// stay fraction-free and exact.
template <class S>
class Echelon {
 public:
  explicit Echelon(std::size_t num_cols) : pivots_(num_cols) {}

  bool insert(Row<S> row) {
    normalize(row);
    while (!row.empty()) {
      const std::uint32_t col = row.front().first;
      auto& pivot = pivots_[col];
      if (!pivot) {
        pivot = std::move(row);
        ++rank_;
        return true;
      }
      S a = pivot->front().second;
      S b = row.front().second;
      const S g = gcd_of(a, b);
      a /= g;
      b /= g;
      row = combine(a, row, b, *pivot);
      normalize(row);
    }
    return false;
  }

  std::size_t rank() const { return rank_; }

 private:
  // a * x - b * y, dropping zeros.
  static Row<S> combine(const S& a, const Row<S>& x, const S& b, const Row<S>& y) {
    Row<S> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.emplace_back(x[i].first, mul(a, x[i].second));
        ++i;
      } else if (i == x.size() || y[j].first < x[i].first) {
        out.emplace_back(y[j].first, -mul(b, y[j].second));
        ++j;
      } else {
        S v = sub(mul(a, x[i].second), mul(b, y[j].second));
        if (v != 0) out.emplace_back(x[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<std::optional<Row<S>>> pivots_;
  std::size_t rank_ = 0;
};

std::size_t checked_witt(std::size_t m, std::size_t k, const FeasibilityLimits& limits) {
  const Integer w = witt_dimension(m, k);
  if (w > static_cast<unsigned long>(limits.max_dimension)) {
    const std::size_t estimate =
        w.fits_ulong_p() ? w.get_ui() : std::numeric_limits<std::size_t>::max();
    throw FeasibilityError("free Lie algebra dimension " + to_decimal(w) + " at degree " +
                               std::to_string(k) + " exceeds the limit " +
                               std::to_string(limits.max_dimension),
                           k, estimate);
  }
  return w.get_ui();
}

// The relator ideal degree by degree: an echelon form per degree and the
// unreduced independent rows (a basis) that seed the next degree.
template <class S>
class IdealTower {
 public:
  IdealTower(const HolonomyPresentation& p, std::size_t up_to, const FeasibilityLimits& limits)
      : m_(p.num_generators), up_to_(up_to) {
    if (up_to == 0) throw std::invalid_argument("graded_dims: degree must be >= 1");
    checked_witt(m_, up_to, limits);
    basis_.emplace(m_, up_to);

    dims_.free_dims.resize(up_to);
    dims_.ideal_dims.assign(up_to, 0);
    dims_.quotient_dims.resize(up_to);
    for (std::size_t k = 1; k <= up_to; ++k) dims_.free_dims[k - 1] = basis_->dimension(k);

    echelons_.emplace_back(basis_->dimension(1));
    ideal_basis_.emplace_back();
    for (std::size_t k = 2; k <= up_to && m_ > 0; ++k) {
      const std::size_t cols = basis_->dimension(k);
      Echelon<S> echelon(cols);
      std::vector<Row<S>> kept;
      std::size_t entries = 0;
      auto offer = [&](Row<S> row) {
        if (row.empty()) return;
        entries += row.size();
        if (entries > limits.max_entries) {
          throw FeasibilityError("spanning matrix at degree " + std::to_string(k) +
                                     " exceeds the limit of " +
                                     std::to_string(limits.max_entries) + " nonzero entries",
                                 k, entries);
        }
        Row<S> copy = row;
        if (echelon.insert(std::move(row))) kept.push_back(std::move(copy));
      };
      if (k == 2) {
        for (const auto& r : p.relators) offer(relator_row(r));
      } else {
        for (const auto& b : ideal_basis_.back()) {
          for (Letter a = 0; a < m_; ++a) offer(bracket_with_letter(b, k - 1, a));
        }
      }
      dims_.ideal_dims[k - 1] = echelon.rank();
      echelons_.push_back(std::move(echelon));
      ideal_basis_.push_back(std::move(kept));
    }
    for (std::size_t k = 1; k <= up_to; ++k) {
      dims_.quotient_dims[k - 1] = dims_.free_dims[k - 1] - dims_.ideal_dims[k - 1];
    }
  }

  const GradedDims& dims() const { return dims_; }
  const LyndonBasis& basis() const { return *basis_; }
  // Echelon form of the degree-k ideal piece, local column indices.
  const Echelon<S>& echelon(std::size_t k) const { return echelons_.at(k - 1); }

 private:
  Row<S> relator_row(const Relator& r) {
    const std::size_t offset = basis_->first_index(2);
    std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
    for (const auto& t : r.terms) {
      const auto idx = basis_->find(Word{t.i, t.j});
      terms.emplace_back(static_cast<std::uint32_t>(*idx - offset), t.coeff);
    }
    std::sort(terms.begin(), terms.end());
    Row<S> row;
    for (const auto& [c, v] : terms) {
      if (!row.empty() && row.back().first == c) {
        row.back().second = add(row.back().second, S(v));
      } else {
        row.emplace_back(c, S(v));
      }
    }
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    return row;
  }

  // [b, x_a] for b of degree `degree`, in degree + 1 local coordinates.
  Row<S> bracket_with_letter(const Row<S>& b, std::size_t degree, Letter a) {
    const std::size_t from = basis_->first_index(degree);
    const std::size_t to = basis_->first_index(degree + 1);
    const std::size_t letter = basis_->letter_index(a);
    scratch_.resize(basis_->dimension(degree + 1));
    touched_.clear();
    for (const auto& [col, coeff] : b) {
      for (const auto& [w, c] : basis_->bracket(from + col, letter)) {
        const std::size_t local = w - to;
        if (scratch_[local] == 0) touched_.push_back(static_cast<std::uint32_t>(local));
        scratch_[local] = add(scratch_[local], mul(coeff, S(c)));
      }
    }
    std::sort(touched_.begin(), touched_.end());
    touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
    Row<S> row;
    for (std::uint32_t local : touched_) {
      if (scratch_[local] != 0) row.emplace_back(local, scratch_[local]);
      scratch_[local] = 0;
    }
    return row;
  }

  std::size_t m_;
  std::size_t up_to_;
  std::optional<LyndonBasis> basis_;
  GradedDims dims_;
  std::vector<Echelon<S>> echelons_;
  std::vector<std::vector<Row<S>>> ideal_basis_;
  std::vector<S> scratch_;
  std::vector<std::uint32_t> touched_;
};

template <class S>
KernelReport kernel_report(const Graph& g, const Graph& sub, std::size_t up_to,
                           const FeasibilityLimits& limits) {
  const IdealTower<S> tower(presentation(g), up_to, limits);
  const auto sub_dims = graded_dims(presentation(sub), up_to, limits);
  std::vector<char> outside(g.num_edges(), 0);
  for (std::size_t i = 0; i < g.num_edges(); ++i) outside[i] = !sub.has_edge(g.edges()[i]);

  KernelReport report;
  const auto& basis = tower.basis();
  for (std::size_t k = 1; k <= up_to; ++k) {
    KernelReport::Row row;
    row.degree = k;
    row.whole = tower.dims().quotient_dims[k - 1];
    row.subgraph = sub_dims.quotient_dims[k - 1];
    if (g.num_edges() > 0) {
      Echelon<S> echelon = tower.echelon(k);
      const std::size_t first = basis.first_index(k);
      for (std::size_t i = 0; i < basis.dimension(k); ++i) {
        const Word& w = basis.word(first + i);
        if (!std::all_of(w.begin(), w.end(), [&](Letter a) { return outside[a] != 0; })) continue;
        if (echelon.insert(Row<S>{{static_cast<std::uint32_t>(i), S(1)}})) ++row.kernel;
      }
    }
    row.pass = row.kernel + row.subgraph == row.whole;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace

GradedDims graded_dims(const HolonomyPresentation& p, std::size_t up_to,
                       const FeasibilityLimits& limits) {
  try {
    return IdealTower<std::int64_t>(p, up_to, limits).dims();
  } catch (const ScalarOverflow&) {
    return IdealTower<Integer>(p, up_to, limits).dims();
  }
}

LCSRanks phi_bruteforce(const Graph& g, std::size_t up_to, const FeasibilityLimits& limits) {
  const auto dims = graded_dims(presentation(g), up_to, limits);
  LCSRanks out;
  for (std::size_t d : dims.quotient_dims) out.phi.emplace_back(static_cast<unsigned long>(d));
  return out;
}

bool MayerVietorisReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });
}

MayerVietorisReport verify_mayer_vietoris(const Graph& g, Vertex pivot, std::size_t up_to,
                                          const FeasibilityLimits& limits) {
  const auto split = split_at_vertex(g, pivot);
  const auto whole = graded_dims(presentation(g), up_to, limits);
  const auto rest = graded_dims(presentation(split.rest), up_to, limits);
  const auto star = graded_dims(presentation(split.star), up_to, limits);
  const auto seam = graded_dims(presentation(split.seam), up_to, limits);
  MayerVietorisReport report;
  report.pivot = pivot;
  for (std::size_t k = 1; k <= up_to; ++k) {
    MayerVietorisReport::Row row{k,
                                 whole.quotient_dims[k - 1],
                                 rest.quotient_dims[k - 1],
                                 star.quotient_dims[k - 1],
                                 seam.quotient_dims[k - 1],
                                 false};
    row.pass = row.whole + row.seam == row.rest + row.star;
    report.rows.push_back(row);
  }
  return report;
}

bool KernelReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });
}

KernelReport verify_kernel_generation(const Graph& g, const Graph& sub, std::size_t up_to,
                                      const FeasibilityLimits& limits) {
  if (!is_triangle_complete(g, sub)) {
    throw GraphError("verify_kernel_generation: pair is not triangle-complete");
  }
  try {
    return kernel_report<std::int64_t>(g, sub, up_to, limits);
  } catch (const ScalarOverflow&) {
    return kernel_report<Integer>(g, sub, up_to, limits);
  }
}

void to_json(nlohmann::json& j, const GradedDims& dims) {
  j = nlohmann::json::array();
  for (std::size_t k = 1; k <= dims.free_dims.size(); ++k) {
    j.push_back({{"degree", std::to_string(k)},
                 {"free", std::to_string(dims.free_dims[k - 1])},
                 {"ideal", std::to_string(dims.ideal_dims[k - 1])},
                 {"quotient", std::to_string(dims.quotient_dims[k - 1])}});
  }
}

void to_json(nlohmann::json& j, const MayerVietorisReport& report) {
  auto rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"degree", std::to_string(r.degree)},
                    {"whole", std::to_string(r.whole)},
                    {"rest", std::to_string(r.rest)},
                    {"star", std::to_string(r.star)},
                    {"seam", std::to_string(r.seam)},
                    {"pass", r.pass}});
  }
  j = nlohmann::json{{"pivot", std::to_string(report.pivot)}, {"rows", rows},
                     {"pass", report.passed()}};
}

void to_json(nlohmann::json& j, const KernelReport& report) {
  auto rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"degree", std::to_string(r.degree)},
                    {"kernel", std::to_string(r.kernel)},
                    {"whole", std::to_string(r.whole)},
                    {"subgraph", std::to_string(r.subgraph)},
                    {"pass", r.pass}});
  }
  j = nlohmann::json{{"rows", rows}, {"pass", report.passed()}};
}

}  // namespace glcs
