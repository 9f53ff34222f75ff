#include "hyperarr/polynomial.hpp"

#include <gmpxx.h>

#include "hyperarr/errors.hpp"

namespace hyperarr {

IntegerPolynomial::IntegerPolynomial(std::vector<std::int64_t> coefficients) : c_(std::move(coefficients)) { trim(); }

IntegerPolynomial IntegerPolynomial::monomial(int degree, std::int64_t coefficient) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(degree + 1), 0);
  c.back() = coefficient;
  return IntegerPolynomial(std::move(c));
}

void IntegerPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t IntegerPolynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(power)];
}

std::int64_t IntegerPolynomial::operator()(std::int64_t t) const {
  std::int64_t v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

IntegerPolynomial& IntegerPolynomial::operator+=(const IntegerPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator-=(const IntegerPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntegerPolynomial(std::move(c));
}

std::string IntegerPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int p = degree(); p >= 0; --p) {
    std::int64_t a = c_[static_cast<std::size_t>(p)];
    if (a == 0) continue;
    std::int64_t mag = a < 0 ? -a : a;
    if (s.empty())
      s += a < 0 ? "-" : "";
    else
      s += a < 0 ? " - " : " + ";
    if (mag != 1 || p == 0) s += std::to_string(mag);
    if (p >= 1) s += "t";
    if (p >= 2) s += "^" + std::to_string(p);
  }
  return s;
}

IntegerPolynomial interpolate_at_naturals(const std::vector<std::int64_t>& values) {
  // Newton forward differences: p(t) = sum_k Delta^k p(0) * binom(t, k)
  const std::size_t n = values.size();
  std::vector<mpz_class> diff(values.begin(), values.end());
  std::vector<mpz_class> lead;
  for (std::size_t k = 0; k < n; ++k) {
    lead.push_back(diff[0]);
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  std::vector<mpq_class> poly(n, 0);
  std::vector<mpq_class> binom{1};  // coefficients of binom(t, k)
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < binom.size(); ++i) poly[i] += mpq_class(lead[k]) * binom[i];
    // binom(t, k+1) = binom(t, k) * (t - k) / (k + 1)
    std::vector<mpq_class> next(binom.size() + 1, 0);
    for (std::size_t i = 0; i < binom.size(); ++i) {
      next[i + 1] += binom[i];
      next[i] -= binom[i] * static_cast<long>(k);
    }
    for (auto& x : next) x /= static_cast<long>(k + 1);
    binom = std::move(next);
  }
  std::vector<std::int64_t> out;
  for (auto& q : poly) {
    q.canonicalize();
    if (q.get_den() != 1) throw ConsistencyError("interpolant has non-integer coefficients");
    out.push_back(q.get_num().get_si());
  }
  return IntegerPolynomial(std::move(out));
}

} // namespace hyperarr
