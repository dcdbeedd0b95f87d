#include "cosecant/big_rational.hpp"

#include <mutex>
#include <ostream>
#include <vector>

#include "cosecant/errors.hpp"

namespace cosecant {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

BigInt parse_integer(std::string_view text, std::string_view whole) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ParseError("not a rational: \"" + std::string(whole) + "\"");
  }
  // mpz_class rejects a leading '+'.
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

}  // namespace

BigRational::BigRational(long value) : value_(value) {}

BigRational::BigRational(const BigInt& value) : value_(value) {}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) {}

BigRational BigRational::parse(std::string_view text) {
  const auto body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(body, text));
  return BigRational(parse_integer(body.substr(0, slash), text),
                     parse_integer(body.substr(slash + 1), text));
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

std::string BigRational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

BigRational abs(const BigRational& q) { return q.sign() < 0 ? -q : q; }

BigRational pow(const BigRational& base, unsigned exponent) {
  return BigRational(pow(base.numerator(), exponent), pow(base.denominator(), exponent));
}

BigInt floor(const BigRational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return out;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt factorial(unsigned n) {
  static std::mutex mutex;
  static std::vector<BigInt> table{BigInt(1)};
  std::lock_guard lock(mutex);
  while (table.size() <= n) {
    table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  }
  return table[n];
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace cosecant
