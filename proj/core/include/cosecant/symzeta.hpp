#pragma once

#include <vector>

#include "cosecant/big_rational.hpp"
#include "cosecant/float_hp.hpp"
#include "cosecant/identity_report.hpp"

namespace cosecant {

/// Elementary symmetric polynomials s(v,n), 0 <= n <= v-1, of the squares
/// {1^2, 2^2, ..., (v-1)^2}, read off the product prod_j (1 + j^2 t).
class SymTable {
 public:
  explicit SymTable(unsigned v);

  unsigned v() const { return v_; }
  const BigInt& operator()(unsigned n) const;
  const std::vector<BigInt>& values() const { return values_; }

 private:
  unsigned v_;
  std::vector<BigInt> values_;
};

/// s(v,n); throws DomainError unless v >= 2 and n <= v-1.
BigInt sym_poly(unsigned v, unsigned n);

/// s(v,0) = 1, s(v,1) = (v-1)v(2v-1)/6, s(v,2) = (5v+1)(2v-4)_5/(4*6!).
BigRational sym_closed_low(unsigned v, unsigned n);

/// T_m = sum_{j=1}^{v-1} j^{-2m} for m = 1..m_max (index 0 unused), i.e.
/// zeta(2m) - zeta(2m, v) as an exact partial sum.
std::vector<BigRational> power_sums(unsigned v, unsigned m_max);

/// H_{v-1,r} = sum_{k=1}^{v-1} k^{-r} for even r in 2..10.
BigRational harmonic_power_sum(unsigned v, unsigned r);

/// s(v, v-l) = ((v-1)!)^2 / (l-1)! * sum over partitions of l-1 of
///   (-1)^{(l-1)-N} (l-1)! / prod_i (lambda_i! i^{lambda_i}) * prod_i T_i^{lambda_i}.
/// Requires 1 <= l <= v.
BigRational sym_high_partition(unsigned v, unsigned ell);

/// c_{2v,i} = 2^{2i} Gamma(2v-2i)/Gamma(2v) s(v,i) for 0 <= i < v.
IdentityReport identity_nine(unsigned v, unsigned i);

/// The combination of R_j = c_{2v,v-1-j}/c_{2v,v-1} equal to H_{v-1,2m}.
/// Requires 1 <= m <= 5 and v >= m+1 (so every R_j is defined).
BigRational hurwitz_rhs(unsigned v, unsigned m);

/// Same combination with c_{2v,j} taken from cosecant_values(2v, v-1), which
/// avoids building the full polynomials; practical for v in the hundreds.
BigRational hurwitz_rhs_direct(unsigned v, unsigned m);

/// Checks H_{v-1,2m} == hurwitz_rhs(v, m) exactly. For v < m+2 this throws
/// DomainError unless `report_below_threshold` is set, in which case the
/// instance is computed (when v >= m+1) and reported as not asserted.
IdentityReport hurwitz_identity(unsigned v, unsigned m, bool report_below_threshold = false);

struct RiemannLimit {
  FloatHP estimate;   // hurwitz_rhs_direct(v, m) as a float
  FloatHP deviation;  // zeta(2m) - estimate
  FloatHP lower;      // v^{1-2m} / (2m-1)
  FloatHP upper;      // (v-1)^{1-2m} / (2m-1)

  bool within() const { return lower <= deviation && deviation <= upper; }
};

/// zeta(2m) is taken as pi^{2m} times 1/6, 1/90, 1/945, 1/9450, 1/93555.
/// Requires 1 <= m <= 5, v >= m+2, digits >= 30.
RiemannLimit riemann_limit(unsigned m, unsigned v, unsigned digits);

/// zeta(2m) for m = 1..5 from its rational multiple of pi^{2m}.
FloatHP zeta_even_closed(unsigned m, unsigned digits);

}  // namespace cosecant
