#include "cosecant/float_hp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "cosecant/errors.hpp"

namespace cosecant {

mpfr_prec_t precision_bits(unsigned digits) {
  const double bits = std::ceil((digits + FloatHP::kGuardDigits) * 3.321928094887362) + 8;
  return static_cast<mpfr_prec_t>(bits);
}

FloatHP::FloatHP(unsigned digits) : digits_(digits) {
  mpfr_init2(value_, precision_bits(digits));
  mpfr_set_zero(value_, 1);
}

FloatHP::FloatHP(long value, unsigned digits) : digits_(digits) {
  mpfr_init2(value_, precision_bits(digits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

FloatHP::FloatHP(const BigRational& value, unsigned digits) : digits_(digits) {
  mpfr_init2(value_, precision_bits(digits));
  mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

FloatHP::FloatHP(const std::string& decimal, unsigned digits) : digits_(digits) {
  mpfr_init2(value_, precision_bits(digits));
  char* end = nullptr;
  mpfr_strtofr(value_, decimal.c_str(), &end, 10, MPFR_RNDN);
  if (end == decimal.c_str() || *end != '\0') {
    mpfr_clear(value_);
    throw ParseError("not a decimal literal: \"" + decimal + "\"");
  }
}

FloatHP::FloatHP(const FloatHP& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

FloatHP::FloatHP(FloatHP&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

FloatHP& FloatHP::operator=(const FloatHP& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

FloatHP& FloatHP::operator=(FloatHP&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
  return *this;
}

FloatHP::~FloatHP() { mpfr_clear(value_); }

FloatHP FloatHP::with_digits(unsigned digits) const {
  FloatHP out(digits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

namespace {

template <typename Op>
FloatHP binary(const FloatHP& a, const FloatHP& b, Op op) {
  FloatHP out(std::max(a.digits(), b.digits()));
  op(out.raw_mutable(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

}  // namespace

FloatHP operator+(const FloatHP& a, const FloatHP& b) { return binary(a, b, mpfr_add); }
FloatHP operator-(const FloatHP& a, const FloatHP& b) { return binary(a, b, mpfr_sub); }
FloatHP operator*(const FloatHP& a, const FloatHP& b) { return binary(a, b, mpfr_mul); }

FloatHP operator/(const FloatHP& a, const FloatHP& b) {
  if (b.is_zero()) throw DomainError("FloatHP division by zero");
  return binary(a, b, mpfr_div);
}

FloatHP FloatHP::operator-() const {
  FloatHP out(*this);
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

bool operator==(const FloatHP& a, const FloatHP& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const FloatHP& a, const FloatHP& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  return mpfr_cmp(a.value_, b.value_) <=> 0;
}

int FloatHP::sign() const { return mpfr_sgn(value_); }

double FloatHP::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

BigRational FloatHP::to_rational() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return BigRational(q.get_num(), q.get_den());
}

std::string FloatHP::to_scientific(unsigned significant) const {
  if (significant == 0) significant = 1;
  std::vector<char> buf(significant + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(significant - 1), value_);
  return buf.data();
}

std::string FloatHP::to_fixed(unsigned decimals) const {
  const int needed = mpfr_snprintf(nullptr, 0, "%.*Rf", static_cast<int>(decimals), value_);
  std::vector<char> buf(static_cast<std::size_t>(needed) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", static_cast<int>(decimals), value_);
  return buf.data();
}

FloatHP abs(const FloatHP& x) { return x.sign() < 0 ? -x : x; }

FloatHP pow(const FloatHP& base, unsigned exponent) {
  FloatHP out(base.digits());
  mpfr_pow_ui(out.raw_mutable(), base.raw(), exponent, MPFR_RNDN);
  return out;
}

FloatHP sqrt(const FloatHP& x) {
  if (x.sign() < 0) throw DomainError("FloatHP sqrt of a negative value");
  FloatHP out(x.digits());
  mpfr_sqrt(out.raw_mutable(), x.raw(), MPFR_RNDN);
  return out;
}

FloatHP ulp_bound(unsigned digits) {
  return FloatHP(BigRational(BigInt(1), pow(BigInt(10), digits)), digits);
}

namespace {

// atan(1/x) summed until the first omitted term is below `tolerance`.
BigRational arctan_inverse(long x, const BigRational& tolerance) {
  BigRational sum;
  const BigInt x2 = BigInt(x) * x;
  BigInt power = x;  // x^(2n+1)
  for (long n = 0;; ++n) {
    const BigRational term(BigInt(1), power * (2 * n + 1));
    if (term < tolerance) break;
    if (n % 2 == 0) sum += term;
    else sum -= term;
    power *= x2;
  }
  return sum;
}

}  // namespace

FloatHP pi_hp(unsigned digits) {
  if (digits < 10) throw DomainError("pi_hp requires at least 10 digits");
  static std::mutex mutex;
  static std::map<unsigned, BigRational> cache;
  BigRational pi;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(digits);
    if (it == cache.end()) {
      // 16 e5 + 4 e239 < 20 * tol keeps the total truncation error below
      // half a unit in the last working digit.
      const BigRational tolerance(BigInt(1), pow(BigInt(10), digits + FloatHP::kGuardDigits) * 40);
      pi = BigRational(16) * arctan_inverse(5, tolerance) - BigRational(4) * arctan_inverse(239, tolerance);
      cache.emplace(digits, pi);
    } else {
      pi = it->second;
    }
  }
  return FloatHP(pi, digits);
}

}  // namespace cosecant
