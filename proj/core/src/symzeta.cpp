#include "cosecant/symzeta.hpp"

#include <string>
#include <tuple>

#include "cosecant/errors.hpp"
#include "cosecant/genseries.hpp"
#include "cosecant/partitions.hpp"
#include "cosecant/polynomial.hpp"

namespace cosecant {

bool report_less(const IdentityReport& a, const IdentityReport& b) {
  return std::tie(a.id, a.params) < std::tie(b.id, b.params);
}

SymTable::SymTable(unsigned v) : v_(v) {
  if (v < 2) throw DomainError("SymTable: need v >= 2");
  values_.assign(v, BigInt(0));
  values_[0] = 1;
  // Multiply in (1 + j^2 t) for j = 1..v-1, highest coefficient first.
  for (unsigned j = 1; j < v; ++j) {
    const BigInt sq = BigInt(j) * j;
    for (unsigned n = j; n >= 1; --n) values_[n] += sq * values_[n - 1];
  }
}

const BigInt& SymTable::operator()(unsigned n) const {
  if (n >= v_) throw DomainError("sym_poly: need n <= v-1");
  return values_[n];
}

BigInt sym_poly(unsigned v, unsigned n) {
  if (v < 2) throw DomainError("sym_poly: need v >= 2");
  if (n >= v) throw DomainError("sym_poly: need n <= v-1");
  return SymTable(v)(n);
}

BigRational sym_closed_low(unsigned v, unsigned n) {
  if (v < 2 || n > 2 || (n == 2 && v < 3)) throw DomainError("sym_closed_low: need v >= 2, n <= 2 (v >= 3 for n = 2)");
  const long vv = v;
  switch (n) {
    case 0:
      return BigRational(1);
    case 1:
      return BigRational(BigInt((vv - 1) * vv * (2 * vv - 1)), BigInt(6));
    default: {
      const BigRational poch = poly_eval(pochhammer_poly(5), BigRational(2 * vv - 4));
      return BigRational(5 * vv + 1) * poch / BigRational(4 * 720);
    }
  }
}

std::vector<BigRational> power_sums(unsigned v, unsigned m_max) {
  std::vector<BigRational> sums(m_max + 1);
  for (unsigned m = 1; m <= m_max; ++m) sums[m] = harmonic_power_sum(v, 2 * m);
  return sums;
}

BigRational harmonic_power_sum(unsigned v, unsigned r) {
  if (v < 2) throw DomainError("harmonic_power_sum: need v >= 2");
  if (r == 0 || r % 2 == 1) throw DomainError("harmonic_power_sum: need an even power");
  BigRational total;
  for (unsigned j = 1; j < v; ++j) total += BigRational(BigInt(1), pow(BigInt(j), r));
  return total;
}

BigRational sym_high_partition(unsigned v, unsigned ell) {
  if (ell < 1 || ell > v) throw DomainError("sym_high_partition: need 1 <= l <= v");
  const unsigned order = ell - 1;
  const auto sums = power_sums(v, std::max(order, 1u));
  BigRational total;
  for (const auto& pm : Partitions(order)) {
    BigRational term(factorial(order));
    for (const auto& e : pm.multiplicities()) {
      term /= BigRational(BigInt(factorial(e.multiplicity) * pow(BigInt(e.part), e.multiplicity)));
      term *= pow(sums[e.part], e.multiplicity);
    }
    if ((order - pm.length()) % 2 == 1) term = -term;
    total += term;
  }
  const BigInt vf = factorial(v - 1);
  return BigRational(BigInt(vf * vf)) / BigRational(factorial(order)) * total;
}

namespace {

BigRational c2v(unsigned v, unsigned j) { return poly_eval(gen_cosecant(j), BigRational(2L * v)); }

std::string params_text(unsigned v, unsigned other, const char* name) {
  return "v=" + std::to_string(v) + " " + name + "=" + std::to_string(other);
}

}  // namespace

IdentityReport identity_nine(unsigned v, unsigned i) {
  if (v < 1 || i >= v) throw DomainError("identity_nine: need 0 <= i < v");
  const BigRational left = c2v(v, i);
  // Gamma(2v-2i)/Gamma(2v) = 1 / ((2v-2i)(2v-2i+1)...(2v-1)).
  BigInt falling = 1;
  for (unsigned t = 2 * v - 2 * i; t <= 2 * v - 1; ++t) falling *= t;
  const BigRational right = BigRational(pow(BigInt(2), 2 * i) * SymTable(std::max(v, 2u)).values()[i], falling);
  IdentityReport r;
  r.id = "nine";
  r.params = {{"v", v}, {"i", i}};
  r.left = left.to_string();
  r.right = right.to_string();
  r.pass = left == right;
  r.note = params_text(v, i, "i");
  return r;
}

namespace {

// The order-2m combination of r[j] = c_{2v,v-1-j} / c_{2v,v-1}.
BigRational hurwitz_combination(const std::vector<BigRational>& r, unsigned m) {
  const auto& R1 = r[1];
  const auto& R2 = r[2];
  const auto& R3 = r[3];
  const auto& R4 = r[4];
  const auto& R5 = r[5];
  auto q = [](long a, long b) { return BigRational(BigInt(a), BigInt(b)); };
  switch (m) {
    case 1:
      return q(2, 3) * R1;
    case 2:
      return q(4, 9) * pow(R1, 2) - q(4, 15) * R2;
    case 3:
      return q(4, 105) * R3 - q(4, 15) * R2 * R1 + q(8, 27) * pow(R1, 3);
    case 4:
      return q(8, 14175) * (BigRational(350) * pow(R1, 4) - BigRational(420) * R2 * pow(R1, 2) +
                            BigRational(63) * pow(R2, 2) + BigRational(60) * R3 * R1 - BigRational(5) * R4);
    default:
      return q(4, 93555) * (BigRational(3080) * pow(R1, 5) - BigRational(4620) * R2 * pow(R1, 3) +
                            BigRational(1386) * pow(R2, 2) * R1 + BigRational(660) * R3 * pow(R1, 2) -
                            BigRational(198) * R3 * R2 - BigRational(55) * R4 * R1 + BigRational(3) * R5);
  }
}

void check_hurwitz_args(unsigned v, unsigned m, const char* who) {
  if (m < 1 || m > 5) throw DomainError(std::string(who) + ": need 1 <= m <= 5");
  if (v < m + 1) throw DomainError(std::string(who) + ": need v >= m+1");
}

}  // namespace

BigRational hurwitz_rhs(unsigned v, unsigned m) {
  check_hurwitz_args(v, m, "hurwitz_rhs");
  const BigRational base = c2v(v, v - 1);
  std::vector<BigRational> r(6);
  for (unsigned j = 1; j <= m; ++j) r[j] = c2v(v, v - 1 - j) / base;
  return hurwitz_combination(r, m);
}

BigRational hurwitz_rhs_direct(unsigned v, unsigned m) {
  check_hurwitz_args(v, m, "hurwitz_rhs_direct");
  const auto c = cosecant_values(BigRational(2L * v), v - 1);
  std::vector<BigRational> r(6);
  for (unsigned j = 1; j <= m; ++j) r[j] = c[v - 1 - j] / c[v - 1];
  return hurwitz_combination(r, m);
}

IdentityReport hurwitz_identity(unsigned v, unsigned m, bool report_below_threshold) {
  if (m < 1 || m > 5) throw DomainError("hurwitz_identity: need 1 <= m <= 5");
  const bool below = v < m + 2;
  if (below && !report_below_threshold) {
    throw DomainError("hurwitz_identity: need v >= m+2, got v=" + std::to_string(v) + " m=" + std::to_string(m));
  }
  IdentityReport r;
  r.id = "hurwitz";
  r.params = {{"v", v}, {"m", m}};
  r.asserted = !below;
  const BigRational left = harmonic_power_sum(v, 2 * m);
  const BigRational right = hurwitz_rhs(v, m);
  r.left = left.to_string();
  r.right = right.to_string();
  r.pass = left == right;
  r.note = params_text(v, m, "m");
  if (below) r.note += " (below the stated validity range; reported only)";
  return r;
}

FloatHP zeta_even_closed(unsigned m, unsigned digits) {
  static const long denominators[] = {0, 6, 90, 945, 9450, 93555};
  if (m < 1 || m > 5) throw DomainError("zeta_even_closed: need 1 <= m <= 5");
  return pow(pi_hp(digits), 2 * m) / FloatHP(denominators[m], digits);
}

RiemannLimit riemann_limit(unsigned m, unsigned v, unsigned digits) {
  if (m < 1 || m > 5) throw DomainError("riemann_limit: need 1 <= m <= 5");
  if (v < m + 2) throw DomainError("riemann_limit: need v >= m+2");
  if (digits < 30) throw DomainError("riemann_limit: need at least 30 digits");
  const FloatHP estimate(hurwitz_rhs_direct(v, m), digits);
  const FloatHP deviation = zeta_even_closed(m, digits) - estimate;
  const long e = 2L * m - 1;
  const FloatHP lower(BigRational(BigInt(1), pow(BigInt(v), static_cast<unsigned>(e)) * e), digits);
  const FloatHP upper(BigRational(BigInt(1), pow(BigInt(v - 1), static_cast<unsigned>(e)) * e), digits);
  return {estimate, deviation, lower, upper};
}

}  // namespace cosecant
