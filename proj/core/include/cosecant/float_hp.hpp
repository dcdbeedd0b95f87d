#pragma once

#include <compare>
#include <string>

#include <mpfr.h>

#include "cosecant/big_rational.hpp"

namespace cosecant {

/// Binary floating-point value whose precision is accounted in decimal
/// digits. A FloatHP built for P digits carries P + kGuardDigits digits of
/// working precision (rounded up to whole bits), so a chain of a few dozen
/// correctly rounded operations stays within one unit in the P-th digit.
///
/// Binary operations run at the larger of the two operand precisions.
/// Values are immutable from the caller's point of view; the type is
/// regular and safe to share across threads.
class FloatHP {
 public:
  static constexpr unsigned kGuardDigits = 10;

  explicit FloatHP(unsigned digits = 30);
  FloatHP(long value, unsigned digits);
  FloatHP(const BigRational& value, unsigned digits);
  /// Parses a decimal literal ("3.14159", "-1e-20").
  FloatHP(const std::string& decimal, unsigned digits);

  FloatHP(const FloatHP& other);
  FloatHP(FloatHP&& other) noexcept;
  FloatHP& operator=(const FloatHP& other);
  FloatHP& operator=(FloatHP&& other) noexcept;
  ~FloatHP();

  unsigned digits() const { return digits_; }
  /// Rounds to the requested precision (more or fewer digits).
  FloatHP with_digits(unsigned digits) const;

  friend FloatHP operator+(const FloatHP& a, const FloatHP& b);
  friend FloatHP operator-(const FloatHP& a, const FloatHP& b);
  friend FloatHP operator*(const FloatHP& a, const FloatHP& b);
  friend FloatHP operator/(const FloatHP& a, const FloatHP& b);
  FloatHP operator-() const;

  friend bool operator==(const FloatHP& a, const FloatHP& b);
  friend std::partial_ordering operator<=>(const FloatHP& a, const FloatHP& b);

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  double to_double() const;
  /// Exact rational value of the stored binary number.
  BigRational to_rational() const;

  /// Scientific notation with `significant` digits, e.g. "3.14159e+00".
  std::string to_scientific(unsigned significant) const;
  /// Fixed notation rounded to `decimals` places.
  std::string to_fixed(unsigned decimals) const;

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw_mutable() { return value_; }

 private:
  mpfr_t value_;
  unsigned digits_;
};

/// Working precision in bits used for a P-digit value.
mpfr_prec_t precision_bits(unsigned digits);

FloatHP abs(const FloatHP& x);
FloatHP pow(const FloatHP& base, unsigned exponent);
FloatHP sqrt(const FloatHP& x);
/// 10^(-digits) at the given precision: one unit in the digits-th place.
FloatHP ulp_bound(unsigned digits);

/// pi correct to `digits` (>= 10) digits, from Machin's formula
/// pi = 16 atan(1/5) - 4 atan(1/239) evaluated over exact rationals. Each
/// arctangent series is alternating with decreasing terms, so truncating it
/// where the next term drops below 10^-(digits+guard)/40 bounds the error.
FloatHP pi_hp(unsigned digits);

}  // namespace cosecant
