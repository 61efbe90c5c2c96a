#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "glcs/integer.hpp"

namespace glcs {

// Exponents e_1, e_2, ... of U(t) = prod_j (1 - j t)^{e_j}; e[j-1] holds e_j.
// Entries may be negative. Trailing zeros are trimmed.
struct ExponentVector {
  std::vector<Integer> e;

  ExponentVector() = default;
  explicit ExponentVector(std::vector<Integer> values);
  ExponentVector(std::initializer_list<long> values);

  // e_j for j >= 1; zero past the end.
  Integer operator[](std::size_t j) const;
  std::size_t size() const { return e.size(); }
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

// Formal power series with exact coefficients of t^0..t^order.
class TruncatedSeries {
 public:
  TruncatedSeries() : TruncatedSeries(0) {}
  explicit TruncatedSeries(std::size_t order);
  TruncatedSeries(std::size_t order, std::vector<Integer> coeffs);

  static TruncatedSeries one(std::size_t order);
  // 1 - a t^k
  static TruncatedSeries binomial_factor(std::size_t order, const Integer& a, std::size_t k = 1);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }
  Integer& operator[](std::size_t i) { return coeffs_.at(i); }

  bool is_unit() const { return coeffs_[0] == 1; }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const TruncatedSeries& rhs);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Same coefficients cut (or zero-extended) to a new order.
  TruncatedSeries truncated(std::size_t order) const;

 private:
  void require_same_order(const TruncatedSeries& rhs) const;

  std::vector<Integer> coeffs_;
};

// Multiplicative inverse of a series with constant term 1.
TruncatedSeries reciprocal(const TruncatedSeries& s);

// s^n for any integer n; negative n requires a unit series.
TruncatedSeries pow(const TruncatedSeries& s, long n);

// Human-readable form, e.g. "1 - 11t + 48t^2".
std::string to_string(const TruncatedSeries& s);

void to_json(nlohmann::json& j, const TruncatedSeries& s);
void from_json(const nlohmann::json& j, TruncatedSeries& s);

// Ranks phi_1, phi_2, ...; phi[k-1] holds phi_k.
struct LCSRanks {
  std::vector<Integer> phi;

  const Integer& operator[](std::size_t k) const { return phi.at(k - 1); }
  std::size_t size() const { return phi.size(); }
  friend bool operator==(const LCSRanks&, const LCSRanks&) = default;
};

// Raised when an exponent vector does not correspond to integral ranks.
class IntegralityError : public std::runtime_error {
 public:
  IntegralityError(std::size_t degree, Integer residue);
  std::size_t degree() const { return degree_; }
  const Integer& residue() const { return residue_; }

 private:
  std::size_t degree_;
  Integer residue_;
};

int moebius(std::uint64_t n);

// prod_j (1 - j t)^{e_j} to the given order.
TruncatedSeries expand_product(const ExponentVector& e, std::size_t order);

// The unique integers phi_k with prod_k (1 - t^k)^{phi_k} = prod_j (1 - j t)^{e_j}
// up to t^up_to. Solves n phi_n = sum_{d | n} mu(n/d) sum_j e_j j^d.
LCSRanks phi_from_exponents(const ExponentVector& e, std::size_t up_to);

// Solves sum_{d | n} d phi_d = p_n for n = 1..size, where power_sums[n-1]
// holds p_n. Throws IntegralityError when some n phi_n is not divisible by n.
LCSRanks phi_from_power_sums(const std::vector<Integer>& power_sums);

// prod_{k <= order} (1 - t^k)^{phi_k}.
TruncatedSeries expand_lcs_product(const LCSRanks& phi, std::size_t order);

}  // namespace glcs
