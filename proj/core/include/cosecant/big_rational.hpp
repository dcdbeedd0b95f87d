#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cosecant {

using BigInt = mpz_class;

/// Exact rational number in canonical form: denominator > 0,
/// gcd(|num|, den) = 1, zero stored as 0/1. Every operation returns a
/// canonical value, so equality is structural.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value);  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& value);  // NOLINT(google-explicit-constructor)
  /// Integer-valued gmpxx expressions such as `a * b` convert without an
  /// intermediate BigInt at the call site.
  template <typename Expr>
  BigRational(const __gmp_expr<mpz_t, Expr>& expr) : BigRational(BigInt(expr)) {}  // NOLINT
  /// Throws DomainError when den == 0.
  BigRational(const BigInt& num, const BigInt& den);

  /// Accepts "num/den" or a bare integer; surrounding blanks are ignored.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  /// Throws DomainError on division by zero.
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  /// Canonical "num/den" form; integers still carry "/1".
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

 private:
  explicit BigRational(mpq_class value);

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

BigRational abs(const BigRational& q);
BigRational pow(const BigRational& base, unsigned exponent);
/// Largest integer not exceeding q.
BigInt floor(const BigRational& q);

/// n!, served from a process-wide write-once table.
BigInt factorial(unsigned n);
/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);
BigInt pow(const BigInt& base, unsigned exponent);

}  // namespace cosecant
