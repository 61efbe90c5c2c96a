#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "glcs/integer.hpp"

namespace glcs {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

// Sparse element of the free Lie algebra in Lyndon-basis coordinates:
// (basis index, coefficient) pairs sorted by index, no zero coefficients.
using LieElement = std::vector<std::pair<std::uint32_t, std::int64_t>>;

class ScalarOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Lyndon words of length exactly `length` over letters 0..m-1, in
// lexicographic order (Duval's algorithm).
std::vector<Word> lyndon_words(std::size_t m, std::size_t length);

// (1/k) sum_{d | k} mu(d) m^{k/d}.
Integer witt_dimension(std::size_t m, std::size_t k);

// Lyndon basis of the free Lie algebra on m generators, degrees 1..max_degree.
// Indices run by degree, then lexicographically within a degree. Brackets of
// basis elements are rewritten into the basis with the Jacobi identity and
// memoized, so an instance is not safe to share between threads.
class LyndonBasis {
 public:
  LyndonBasis(std::size_t num_letters, std::size_t max_degree);

  std::size_t num_letters() const { return num_letters_; }
  std::size_t max_degree() const { return max_degree_; }
  std::size_t size() const { return words_.size(); }
  std::size_t dimension(std::size_t degree) const;
  std::size_t first_index(std::size_t degree) const;

  const Word& word(std::size_t index) const { return words_.at(index); }
  std::size_t degree(std::size_t index) const { return words_.at(index).size(); }
  std::optional<std::size_t> find(const Word& w) const;
  std::size_t letter_index(Letter a) const;
  // Standard factorization w = uv with v the longest proper Lyndon suffix.
  std::pair<std::size_t, std::size_t> factors(std::size_t index) const;

  // "[x1,[x1,x2]]" style bracketing with 1-based generator names.
  std::string bracketing(std::size_t index) const;

  // [P_a, P_b] in basis coordinates. Requires degree(a) + degree(b) <= max_degree.
  const LieElement& bracket(std::size_t a, std::size_t b);

 private:
  LieElement compute_bracket(std::size_t a, std::size_t b);

  std::size_t num_letters_;
  std::size_t max_degree_;
  std::vector<Word> words_;
  std::vector<std::size_t> degree_offsets_;
  std::vector<std::pair<std::size_t, std::size_t>> factors_;
  std::unordered_map<std::string, std::size_t> index_of_;
  std::unordered_map<std::uint64_t, LieElement> memo_;
};

LieElement lie_scale(const LieElement& x, std::int64_t c);
LieElement lie_add(const LieElement& x, const LieElement& y);
LieElement lie_bracket(LyndonBasis& basis, const LieElement& x, const LieElement& y);
LieElement lie_generator(const LyndonBasis& basis, Letter a);

}  // namespace glcs
