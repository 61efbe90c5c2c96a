#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "glcs/integer.hpp"

namespace glcs {

// Dense univariate polynomial, lowest degree first. The zero polynomial has
// no coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(const Integer& c, std::size_t degree);
  // t - a
  static IntPolynomial linear_root(const Integer& a);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  Integer evaluate(const Integer& t) const;
  // p(-t)
  IntPolynomial negated_argument() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

IntPolynomial pow(const IntPolynomial& p, std::size_t n);

// e.g. "t^3 - 3t^2 + 2t"; `var` names the indeterminate.
std::string to_string(const IntPolynomial& p, char var = 't');

void to_json(nlohmann::json& j, const IntPolynomial& p);

}  // namespace glcs
