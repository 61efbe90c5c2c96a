#include "glcs/lyndon.hpp"

#include <algorithm>
#include <map>

#include "glcs/series.hpp"

namespace glcs {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw ScalarOverflow("structure constant overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw ScalarOverflow("structure constant overflow");
  return out;
}

std::string key_of(const Word& w) {
  std::string out;
  out.reserve(w.size() * sizeof(Letter));
  for (Letter a : w) out.append(reinterpret_cast<const char*>(&a), sizeof(Letter));
  return out;
}

// Accumulates coefficients and returns a sorted LieElement.
class Accumulator {
 public:
  void add(std::uint32_t index, std::int64_t c) {
    auto& slot = terms_[index];
    slot = checked_add(slot, c);
  }
  void add(const LieElement& x, std::int64_t scale) {
    for (const auto& [i, c] : x) add(i, checked_mul(c, scale));
  }
  LieElement take() {
    LieElement out;
    out.reserve(terms_.size());
    for (const auto& [i, c] : terms_) {
      if (c != 0) out.emplace_back(i, c);
    }
    terms_.clear();
    return out;
  }

 private:
  std::map<std::uint32_t, std::int64_t> terms_;
};

}  // namespace

std::vector<Word> lyndon_words(std::size_t m, std::size_t length) {
  std::vector<Word> out;
  if (m == 0 || length == 0) return out;
  // Duval: successive Lyndon words of length <= n in lexicographic order.
  std::vector<std::int64_t> w{-1};
  const auto last = static_cast<std::int64_t>(m) - 1;
  while (!w.empty()) {
    ++w.back();
    if (w.size() == length) out.emplace_back(w.begin(), w.end());
    const std::size_t k = w.size();
    while (w.size() < length) w.push_back(w[w.size() - k]);
    while (!w.empty() && w.back() == last) w.pop_back();
  }
  return out;
}

Integer witt_dimension(std::size_t m, std::size_t k) {
  if (k == 0) return 0;
  Integer total = 0;
  for (std::size_t d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    const int mu = moebius(d);
    if (mu == 0) continue;
    Integer term = power(Integer(static_cast<unsigned long>(m)), k / d);
    if (mu > 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total / static_cast<unsigned long>(k);
}

LyndonBasis::LyndonBasis(std::size_t num_letters, std::size_t max_degree)
    : num_letters_(num_letters), max_degree_(max_degree) {
  degree_offsets_.assign(max_degree + 2, 0);
  for (std::size_t d = 1; d <= max_degree; ++d) {
    degree_offsets_[d] = words_.size();
    for (auto& w : lyndon_words(num_letters, d)) {
      index_of_.emplace(key_of(w), words_.size());
      words_.push_back(std::move(w));
    }
  }
  degree_offsets_[max_degree + 1] = words_.size();

  factors_.assign(words_.size(), {0, 0});
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word& w = words_[i];
    if (w.size() < 2) continue;
    // The longest proper Lyndon suffix starts at the smallest split point
    // whose suffix is in the table (every Lyndon word of this length is).
    for (std::size_t split = 1; split < w.size(); ++split) {
      Word right(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
      if (auto r = find(right)) {
        Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
        factors_[i] = {*find(left), *r};
        break;
      }
    }
  }
}

std::size_t LyndonBasis::dimension(std::size_t degree) const {
  if (degree == 0 || degree > max_degree_) return 0;
  return degree_offsets_[degree + 1] - degree_offsets_[degree];
}

std::size_t LyndonBasis::first_index(std::size_t degree) const {
  if (degree == 0 || degree > max_degree_) throw std::out_of_range("degree outside basis");
  return degree_offsets_[degree];
}

std::optional<std::size_t> LyndonBasis::find(const Word& w) const {
  auto it = index_of_.find(key_of(w));
  if (it == index_of_.end()) return std::nullopt;
  return it->second;
}

std::size_t LyndonBasis::letter_index(Letter a) const {
  if (a >= num_letters_ || max_degree_ == 0) throw std::out_of_range("letter outside alphabet");
  return a;
}

std::pair<std::size_t, std::size_t> LyndonBasis::factors(std::size_t index) const {
  if (degree(index) < 2) throw std::invalid_argument("letters have no standard factorization");
  return factors_[index];
}

std::string LyndonBasis::bracketing(std::size_t index) const {
  if (degree(index) == 1) return "x" + std::to_string(words_[index][0] + 1);
  auto [l, r] = factors_[index];
  return "[" + bracketing(l) + "," + bracketing(r) + "]";
}

const LieElement& LyndonBasis::bracket(std::size_t a, std::size_t b) {
  const std::uint64_t key = static_cast<std::uint64_t>(a) * words_.size() + b;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  auto value = compute_bracket(a, b);
  return memo_.emplace(key, std::move(value)).first->second;
}

LieElement LyndonBasis::compute_bracket(std::size_t a, std::size_t b) {
  if (a == b) return {};
  if (degree(a) + degree(b) > max_degree_) {
    throw std::out_of_range("bracket exceeds the maximal degree of the basis");
  }
  const Word& u = words_[a];
  const Word& v = words_[b];
  if (v < u) return lie_scale(bracket(b, a), -1);

  // u < v: uv is Lyndon, and (u, v) is its standard factorization when u is
  // a letter or the right factor of u is >= v.
  if (u.size() == 1 || !(words_[factors_[a].second] < v)) {
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    return {{static_cast<std::uint32_t>(*find(uv)), 1}};
  }

  // [[u1,u2],v] = [u1,[u2,v]] + [[u1,v],u2]
  const auto [u1, u2] = factors_[a];
  Accumulator acc;
  const LieElement inner_right = bracket(u2, b);
  for (const auto& [w, c] : inner_right) acc.add(bracket(u1, w), c);
  const LieElement inner_left = bracket(u1, b);
  for (const auto& [w, c] : inner_left) acc.add(bracket(w, u2), c);
  return acc.take();
}

LieElement lie_scale(const LieElement& x, std::int64_t c) {
  if (c == 0) return {};
  LieElement out;
  out.reserve(x.size());
  for (const auto& [i, v] : x) out.emplace_back(i, checked_mul(v, c));
  return out;
}

LieElement lie_add(const LieElement& x, const LieElement& y) {
  Accumulator acc;
  acc.add(x, 1);
  acc.add(y, 1);
  return acc.take();
}

LieElement lie_bracket(LyndonBasis& basis, const LieElement& x, const LieElement& y) {
  Accumulator acc;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : y) acc.add(basis.bracket(i, j), checked_mul(a, b));
  }
  return acc.take();
}

LieElement lie_generator(const LyndonBasis& basis, Letter a) {
  return {{static_cast<std::uint32_t>(basis.letter_index(a)), 1}};
}

}  // namespace glcs
