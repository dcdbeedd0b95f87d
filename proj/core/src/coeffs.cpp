#include "cosecant/coeffs.hpp"

#include <cmath>
#include <string>

#include "cosecant/errors.hpp"
#include "cosecant/genseries.hpp"
#include "cosecant/stirling.hpp"

namespace cosecant {

namespace {

BigRational six_pow(long e) {
  return e >= 0 ? BigRational(pow(BigInt(6), static_cast<unsigned>(e)))
                : BigRational(BigInt(1), pow(BigInt(6), static_cast<unsigned>(-e)));
}

BigRational fact(long n) { return BigRational(factorial(static_cast<unsigned>(n))); }

BigRational q(long num, long den) { return BigRational(BigInt(num), BigInt(den)); }

}  // namespace

BigRational coefficient(unsigned k, unsigned i) {
  if (i > k) throw DomainError("coefficient: need 0 <= i <= k");
  return gen_cosecant(k).coefficient(i);
}

BigRational leading_closed(unsigned k, unsigned ell) {
  if (ell > 4) throw DomainError("leading_closed: closed forms exist for l <= 4 only");
  if (k < ell + 1) throw DomainError("leading_closed: need k >= l+1");
  const long kk = k;
  const BigRational kr(kk);
  switch (ell) {
    case 0:
      return BigRational(1) / (six_pow(kk) * fact(kk));
    case 1:
      return BigRational(1) / (BigRational(5) * six_pow(kk) * fact(kk - 2));
    case 2:
      return BigRational(21 * kk + 17) / (BigRational(175) * six_pow(kk + 1) * fact(kk - 3));
    case 3:
      return (kr * kr + q(17, 7) * kr) / (BigRational(125) * six_pow(kk + 1) * fact(kk - 4));
    default: {
      const BigRational poly = BigRational(3) * kr * kr * kr + q(102, 7) * kr * kr + q(289, 49) * kr - q(11170, 539);
      return BigRational(3) * poly / (BigRational(625) * six_pow(kk + 3) * fact(kk - 5));
    }
  }
}

BigRational leading_kk2_from_stirling(unsigned k) {
  if (k < 3) throw DomainError("leading_kk2_from_stirling: need k >= 3");
  const long kk = k;
  // {1^k}: rho^{k-2} coefficient of (rho)_k / ((3!)^k k!).
  BigRational total = BigRational(stirling1(k, k - 2)) / (six_pow(kk) * fact(kk));
  // {2,1^{k-2}}: -(rho)_{k-1} / (5! (3!)^{k-2} (k-2)!).
  total += BigRational(stirling1(k - 1, k - 2)) / (fact(5) * six_pow(kk - 2) * fact(kk - 2));
  // {3,1^{k-3}}: leading term of (rho)_{k-2} / (7! (3!)^{k-3} (k-3)!).
  total += BigRational(stirling1(k - 2, k - 2)) / (fact(7) * six_pow(kk - 3) * fact(kk - 3));
  // {2,2,1^{k-4}}: leading term of (rho)_{k-2} / (2! (5!)^2 (3!)^{k-4} (k-4)!).
  if (k >= 4) {
    total += BigRational(stirling1(k - 2, k - 2)) /
             (fact(2) * fact(5) * fact(5) * six_pow(kk - 4) * fact(kk - 4));
  }
  return total;
}

RhoPolynomial fit_leading_numerator(unsigned ell) {
  if (ell < 1 || ell > 4) throw DomainError("fit_leading_numerator: need 1 <= l <= 4");
  std::vector<std::pair<BigRational, BigRational>> nodes;
  for (unsigned k = ell + 1; k <= 2 * ell; ++k) {
    const BigRational scaled = coefficient(k, k - ell) * six_pow(k) * fact(static_cast<long>(k - ell - 1));
    nodes.emplace_back(BigRational(static_cast<long>(k)), scaled);
  }
  return interpolate(nodes);
}

BigRational leading_from_fit(const RhoPolynomial& numerator, unsigned k, unsigned ell) {
  if (k < ell + 1) throw DomainError("leading_from_fit: need k >= l+1");
  return numerator(BigRational(static_cast<long>(k))) /
         (six_pow(k) * fact(static_cast<long>(k - ell - 1)));
}

BigRational approx_cosecant_exact(const BigRational& rho, unsigned k) {
  if (k < 4) throw DomainError("approx_cosecant: need k >= 4");
  BigRational total;
  for (unsigned ell = 0; ell <= 3; ++ell) total += leading_closed(k, ell) * pow(rho, k - ell);
  return total;
}

FloatHP approx_cosecant(const BigRational& rho, unsigned k, unsigned digits) {
  return FloatHP(approx_cosecant_exact(rho, k), digits);
}

std::string truncate_decimal(const BigRational& value, unsigned decimals) {
  if (value.sign() < 0) throw DomainError("truncate_decimal: negative value");
  const BigInt scale = pow(BigInt(10), decimals);
  const BigInt scaled = floor(value * BigRational(scale));
  const BigInt whole = scaled / scale;
  if (decimals == 0) return whole.get_str();
  std::string frac = BigInt(scaled % scale).get_str();
  frac.insert(0, decimals - frac.size(), '0');
  return whole.get_str() + "." + frac;
}

BetaCell beta_ratio_cell(const BigRational& rho, unsigned k) {
  const BigRational exact = poly_eval(gen_cosecant(k), rho);
  if (exact.is_zero()) throw DomainError("beta_ratio: c_{rho,k} vanishes");
  BetaCell cell;
  cell.ratio = approx_cosecant_exact(rho, k) / exact;
  cell.truncated = truncate_decimal(abs(cell.ratio), 6);
  if (cell.ratio.sign() < 0) cell.truncated.insert(0, "-");
  const BigRational scaled = abs(cell.ratio) * BigRational(1000000);
  const BigRational below = scaled - BigRational(floor(scaled));
  const BigRational tolerance(BigInt(1), BigInt(1000000));  // 1e-12 after the 1e6 scale
  cell.near_boundary = below < tolerance || (BigRational(1) - below) < tolerance;
  return cell;
}

std::string beta_ratio(long rho, unsigned k) { return beta_ratio_cell(BigRational(rho), k).truncated; }

BigRational c2v_vm1_beta(unsigned v) {
  if (v < 2) throw DomainError("c2v_vm1_beta: need v >= 2");
  // B(v,1/2)/2 = Gamma(v) Gamma(1/2) / (2 Gamma(v+1/2)),
  // Gamma(v+1/2) = (2v)! sqrt(pi) / (4^v v!).
  return BigRational(factorial(v - 1) * factorial(v) * pow(BigInt(4), v), BigInt(2) * factorial(2 * v));
}

BigRational c2v_vm1_sum(unsigned v) {
  if (v < 1) throw DomainError("c2v_vm1_sum: need v >= 1");
  BigRational total;
  for (unsigned k = 0; k < v; ++k) {
    BigRational term(binomial(2 * v - 1, k), BigInt(2 * v - 2 * k - 1));
    if ((v - k - 1) % 2 == 1) term = -term;
    total += term;
  }
  return total / BigRational(pow(BigInt(2), 2 * v - 2));
}

FloatHP alternating_reciprocal_sum(const BigRational& x, unsigned digits) {
  if (x.sign() <= 0) throw DomainError("alternating_reciprocal_sum: need x > 0");
  const unsigned working = digits + FloatHP::kGuardDigits;
  // T_n(3) >= (3+sqrt 8)^n / 2; 1/x may exceed 1, so budget for it too.
  const double extra = std::max(0.0, std::log10(1.0 / std::max(1e-300, x.raw().get_d())));
  const unsigned n = static_cast<unsigned>(std::ceil((working + extra + 1) / std::log10(3.0 + std::sqrt(8.0)))) + 1;

  // d = T_n(3) by the Chebyshev recurrence; exact integers throughout.
  BigInt t_prev = 1, t_cur = 3;
  for (unsigned i = 1; i < n; ++i) {
    BigInt t_next = BigInt(6) * t_cur - t_prev;
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  const BigInt d = n == 0 ? BigInt(1) : t_cur;

  BigRational b(-1);
  BigRational c = -BigRational(d);
  BigRational s;
  for (unsigned j = 0; j < n; ++j) {
    c = b - c;
    s += c / (x + BigRational(static_cast<long>(j)));
    const long jj = j, nn = n;
    b = b * BigRational(BigInt(2 * (jj + nn) * (jj - nn)), BigInt((2 * jj + 1) * (jj + 1)));
  }
  return FloatHP(s / BigRational(d), digits);
}

FloatHP c2v_vm1_asymptotic(unsigned v, unsigned digits, AsymptoticVariant variant) {
  if (v < 2) throw DomainError("c2v_vm1_asymptotic: need v >= 2");
  const BigRational pre(binomial(2 * v - 1, v), pow(BigInt(2), 2 * v - 2));
  const BigRational sign = (v - 1) % 2 == 0 ? BigRational(1) : BigRational(-1);
  const BigRational vr(static_cast<long>(v));
  const FloatHP beta = alternating_reciprocal_sum(vr + q(1, 2), digits);
  const FloatHP half_beta = FloatHP(sign / BigRational(2), digits) * beta;

  // Rational pieces: floor term and the 5/(8v) parity term.
  BigRational rational_part = sign * BigRational(static_cast<long>(v / 2)) / (BigRational(2) * vr);
  if (v % 2 == 1) rational_part -= BigRational(10) / (BigRational(8) * vr);

  BigRational last_scale = q(3, 4) / vr;
  if (variant == AsymptoticVariant::flipped_last_term) last_scale = -last_scale;

  const FloatHP bracket = pi_hp(digits) / FloatHP(4L, digits) + half_beta + FloatHP(rational_part, digits) +
                          FloatHP(last_scale, digits) * half_beta;
  return FloatHP(pre, digits) * bracket;
}

FloatHP c2v_vm1_leading(unsigned v, unsigned digits) {
  if (v < 2) throw DomainError("c2v_vm1_leading: need v >= 2");
  const BigRational pre(binomial(2 * v - 1, v), pow(BigInt(2), 2 * v - 2));
  return FloatHP(pre, digits) * pi_hp(digits) / FloatHP(4L, digits);
}

}  // namespace cosecant
