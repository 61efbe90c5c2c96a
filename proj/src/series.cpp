#include "glcs/series.hpp"

#include <sstream>

namespace glcs {

ExponentVector::ExponentVector(std::vector<Integer> values) : e(std::move(values)) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

ExponentVector::ExponentVector(std::initializer_list<long> values) {
  for (long v : values) e.emplace_back(v);
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Integer ExponentVector::operator[](std::size_t j) const {
  if (j == 0 || j > e.size()) return 0;
  return e[j - 1];
}

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::binomial_factor(std::size_t order, const Integer& a,
                                                 std::size_t k) {
  auto s = one(order);
  if (k <= order) s.coeffs_[k] -= a;
  return s;
}

void TruncatedSeries::require_same_order(const TruncatedSeries& rhs) const {
  if (order() != rhs.order()) {
    throw std::invalid_argument("series orders differ: " + std::to_string(order()) + " vs " +
                                std::to_string(rhs.order()));
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_same_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  require_same_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
  require_same_order(rhs);
  const std::size_t n = coeffs_.size();
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (rhs.coeffs_[j] != 0) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  return TruncatedSeries(order, std::vector<Integer>(
                                    coeffs_.begin(),
                                    coeffs_.begin() + std::min(coeffs_.size(), order + 1)));
}

TruncatedSeries reciprocal(const TruncatedSeries& s) {
  if (!s.is_unit()) throw std::domain_error("reciprocal: constant term is not 1");
  const std::size_t n = s.order();
  TruncatedSeries inv(n);
  inv[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += s[i] * inv[k - i];
    inv[k] = -acc;
  }
  return inv;
}

TruncatedSeries pow(const TruncatedSeries& s, long n) {
  auto base = n < 0 ? reciprocal(s) : s;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  auto out = TruncatedSeries::one(s.order());
  while (e) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

std::string to_string(const TruncatedSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i <= s.order(); ++i) {
    const Integer& c = s[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << 't';
    if (i >= 2) out << '^' << i;
    first = false;
  }
  if (first) out << '0';
  out << " + O(t^" << s.order() + 1 << ')';
  return out.str();
}

void to_json(nlohmann::json& j, const TruncatedSeries& s) {
  j = nlohmann::json{{"order", s.order()}, {"coeffs", to_decimal_strings(s.coeffs())}};
}

void from_json(const nlohmann::json& j, TruncatedSeries& s) {
  const auto order = j.at("order").get<std::size_t>();
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(from_decimal(c.get<std::string>()));
  if (coeffs.size() != order + 1) {
    throw std::invalid_argument("series JSON: expected order + 1 coefficients");
  }
  s = TruncatedSeries(order, std::move(coeffs));
}

IntegralityError::IntegralityError(std::size_t degree, Integer residue)
    : std::runtime_error("ranks are not integral at degree " + std::to_string(degree) +
                         " (residue " + to_decimal(residue) + ")"),
      degree_(degree),
      residue_(std::move(residue)) {}

int moebius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("moebius: n must be positive");
  int result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

TruncatedSeries expand_product(const ExponentVector& e, std::size_t order) {
  auto out = TruncatedSeries::one(order);
  for (std::size_t j = 1; j <= e.size(); ++j) {
    const Integer& ej = e.e[j - 1];
    if (ej == 0) continue;
    if (!ej.fits_slong_p()) throw std::overflow_error("expand_product: exponent too large");
    out *= pow(TruncatedSeries::binomial_factor(order, Integer(static_cast<unsigned long>(j))),
               ej.get_si());
  }
  return out;
}

LCSRanks phi_from_power_sums(const std::vector<Integer>& power_sums) {
  LCSRanks out;
  const std::size_t up_to = power_sums.size();
  for (std::size_t n = 1; n <= up_to; ++n) {
    Integer total = 0;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const int mu = moebius(n / d);
      if (mu == 1) total += power_sums[d - 1];
      if (mu == -1) total -= power_sums[d - 1];
    }
    Integer residue;
    mpz_fdiv_r_ui(residue.get_mpz_t(), total.get_mpz_t(), n);
    if (residue != 0) throw IntegralityError(n, residue);
    total /= static_cast<unsigned long>(n);
    out.phi.push_back(std::move(total));
  }
  return out;
}

LCSRanks phi_from_exponents(const ExponentVector& e, std::size_t up_to) {
  if (up_to == 0) throw std::invalid_argument("phi_from_exponents: up_to must be >= 1");
  std::vector<Integer> power_sums(up_to);
  for (std::size_t j = 1; j <= e.size(); ++j) {
    Integer jd = 1;
    for (std::size_t d = 1; d <= up_to; ++d) {
      jd *= static_cast<unsigned long>(j);
      power_sums[d - 1] += e.e[j - 1] * jd;
    }
  }
  return phi_from_power_sums(power_sums);
}

TruncatedSeries expand_lcs_product(const LCSRanks& phi, std::size_t order) {
  if (order > phi.size()) {
    throw std::invalid_argument("expand_lcs_product: order exceeds the number of ranks");
  }
  auto out = TruncatedSeries::one(order);
  for (std::size_t k = 1; k <= order; ++k) {
    const Integer& p = phi[k];
    if (p == 0) continue;
    if (!p.fits_slong_p()) throw std::overflow_error("expand_lcs_product: rank too large");
    out *= pow(TruncatedSeries::binomial_factor(order, 1, k), p.get_si());
  }
  return out;
}

}  // namespace glcs
