#include "cosecant/polynomial.hpp"

#include <mutex>
#include <sstream>

#include "cosecant/errors.hpp"

namespace cosecant {

RhoPolynomial::RhoPolynomial() : coeffs_{BigRational()} {}

RhoPolynomial::RhoPolynomial(BigRational constant) : coeffs_{std::move(constant)} {}

RhoPolynomial::RhoPolynomial(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

RhoPolynomial RhoPolynomial::monomial(BigRational coefficient, std::size_t degree) {
  std::vector<BigRational> c(degree + 1);
  c[degree] = std::move(coefficient);
  return RhoPolynomial(std::move(c));
}

RhoPolynomial RhoPolynomial::variable() { return monomial(BigRational(1), 1); }

void RhoPolynomial::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back();
}

BigRational RhoPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigRational();
}

BigRational RhoPolynomial::operator()(const BigRational& x) const {
  BigRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

RhoPolynomial& RhoPolynomial::operator+=(const RhoPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

RhoPolynomial& RhoPolynomial::operator-=(const RhoPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

RhoPolynomial& RhoPolynomial::operator*=(const BigRational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

RhoPolynomial operator*(const RhoPolynomial& a, const RhoPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return RhoPolynomial();
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RhoPolynomial(std::move(out));
}

RhoPolynomial RhoPolynomial::operator-() const {
  RhoPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::vector<std::string> RhoPolynomial::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_string());
  return out;
}

RhoPolynomial RhoPolynomial::from_strings(std::span<const std::string> coefficients) {
  std::vector<BigRational> c;
  c.reserve(coefficients.size());
  for (const auto& s : coefficients) c.push_back(BigRational::parse(s));
  return RhoPolynomial(std::move(c));
}

std::string RhoPolynomial::to_display(const std::string& variable) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const auto mag = abs(c);
    const std::string text = mag.is_integer() ? mag.numerator().get_str() : mag.to_string();
    if (i == 0) {
      os << text;
      continue;
    }
    if (mag != BigRational(1)) os << text << "*";
    os << variable;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

BigRational poly_eval(const RhoPolynomial& p, const BigRational& rho) { return p(rho); }

RhoPolynomial pochhammer_poly(unsigned n) {
  static std::mutex mutex;
  static std::vector<RhoPolynomial> cache{RhoPolynomial(BigRational(1))};
  std::lock_guard lock(mutex);
  while (cache.size() <= n) {
    const long shift = static_cast<long>(cache.size()) - 1;
    cache.push_back(cache.back() * RhoPolynomial({BigRational(shift), BigRational(1)}));
  }
  return cache[n];
}

RhoPolynomial interpolate(std::span<const std::pair<BigRational, BigRational>> points) {
  RhoPolynomial out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    RhoPolynomial basis(BigRational(1));
    BigRational denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      const auto gap = points[i].first - points[j].first;
      if (gap.is_zero()) throw DomainError("interpolate: repeated abscissa");
      basis = basis * RhoPolynomial({-points[j].first, BigRational(1)});
      denom *= gap;
    }
    out += basis * (points[i].second / denom);
  }
  return out;
}

}  // namespace cosecant
