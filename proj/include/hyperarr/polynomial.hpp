#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperarr {

/// Univariate polynomial in t with integer coefficients, stored low-to-high
/// with trailing zeros trimmed (the zero polynomial has no coefficients).
class IntegerPolynomial {
public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<std::int64_t> coefficients);

  static IntegerPolynomial monomial(int degree, std::int64_t coefficient = 1);

  const std::vector<std::int64_t>& coefficients() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t coefficient(int power) const;
  std::int64_t operator()(std::int64_t t) const;

  IntegerPolynomial& operator+=(const IntegerPolynomial& o);
  IntegerPolynomial& operator-=(const IntegerPolynomial& o);
  friend IntegerPolynomial operator+(IntegerPolynomial a, const IntegerPolynomial& b) { return a += b; }
  friend IntegerPolynomial operator-(IntegerPolynomial a, const IntegerPolynomial& b) { return a -= b; }
  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

  /// e.g. "t^4 - t^3 - t^2 + t"
  std::string to_string() const;

private:
  void trim();
  std::vector<std::int64_t> c_;
};

/// Unique polynomial of degree < values.size() with p(i) = values[i] for i = 0,1,...
/// Throws ConsistencyError if the interpolant does not have integer coefficients.
IntegerPolynomial interpolate_at_naturals(const std::vector<std::int64_t>& values);

} // namespace hyperarr
