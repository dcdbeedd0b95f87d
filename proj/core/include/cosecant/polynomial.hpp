#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cosecant/big_rational.hpp"

namespace cosecant {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree. Used for c_{rho,k} and d_{rho,k} (variable rho),
/// Pochhammer polynomials, and the Stirling r_l(k) polynomials (variable k).
///
/// Canonical form: no trailing zero coefficients; the zero polynomial is the
/// single coefficient 0. Every operation returns canonical values, so
/// operator== compares mathematical equality.
class RhoPolynomial {
 public:
  RhoPolynomial();
  RhoPolynomial(BigRational constant);  // NOLINT(google-explicit-constructor)
  explicit RhoPolynomial(std::vector<BigRational> coefficients);

  static RhoPolynomial monomial(BigRational coefficient, std::size_t degree);
  /// The identity polynomial x.
  static RhoPolynomial variable();

  std::size_t degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
  /// Coefficient of x^i; zero beyond the degree.
  BigRational coefficient(std::size_t i) const;
  std::span<const BigRational> coefficients() const { return coeffs_; }

  /// Horner evaluation.
  BigRational operator()(const BigRational& x) const;

  RhoPolynomial& operator+=(const RhoPolynomial& rhs);
  RhoPolynomial& operator-=(const RhoPolynomial& rhs);
  RhoPolynomial& operator*=(const BigRational& scalar);

  friend RhoPolynomial operator+(RhoPolynomial a, const RhoPolynomial& b) { return a += b; }
  friend RhoPolynomial operator-(RhoPolynomial a, const RhoPolynomial& b) { return a -= b; }
  friend RhoPolynomial operator*(RhoPolynomial a, const BigRational& s) { return a *= s; }
  friend RhoPolynomial operator*(const BigRational& s, RhoPolynomial a) { return a *= s; }
  friend RhoPolynomial operator*(const RhoPolynomial& a, const RhoPolynomial& b);
  RhoPolynomial operator-() const;

  friend bool operator==(const RhoPolynomial&, const RhoPolynomial&) = default;

  /// Ascending list of "num/den" strings.
  std::vector<std::string> to_strings() const;
  static RhoPolynomial from_strings(std::span<const std::string> coefficients);

  /// Human-readable form, e.g. "1/180*x + 1/72*x^2".
  std::string to_display(const std::string& variable = "rho") const;

 private:
  void normalize();

  std::vector<BigRational> coeffs_;
};

BigRational poly_eval(const RhoPolynomial& p, const BigRational& rho);

/// Rising factorial (rho)_N = rho (rho+1) ... (rho+N-1); (rho)_0 = 1.
RhoPolynomial pochhammer_poly(unsigned n);

/// Unique polynomial of degree < points.size() through the given (x, y)
/// pairs (Lagrange form, exact). Throws DomainError on repeated abscissae.
RhoPolynomial interpolate(std::span<const std::pair<BigRational, BigRational>> points);

}  // namespace cosecant
