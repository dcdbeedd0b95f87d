#pragma once

#include <vector>

#include "cosecant/big_rational.hpp"
#include "cosecant/polynomial.hpp"

namespace cosecant {

/// Signed Stirling numbers of the first kind s_k^{(j)}, 0 <= j <= k <= k_max,
/// filled from s_{k+1}^{(j)} = s_k^{(j-1)} - k s_k^{(j)} with s_0^{(0)} = 1.
class StirlingTable {
 public:
  explicit StirlingTable(unsigned k_max);

  unsigned k_max() const { return k_max_; }
  /// Throws DomainError unless 0 <= j <= k <= k_max.
  const BigInt& operator()(unsigned k, unsigned j) const;

 private:
  unsigned k_max_;
  std::vector<std::vector<BigInt>> rows_;
};

/// s_k^{(j)} from a shared, lazily grown table.
BigInt stirling1(unsigned k, unsigned j);

/// s_k^{(k-j)} by the nested-sum formula
///   (-1)^j sum_{i_j=j}^{k-1} i_j sum_{i_{j-1}=j-1}^{i_j-1} i_{j-1} ... sum_{i_1=1}^{i_2-1} i_1
/// Limited to 1 <= j <= 6, j < k <= 14; throws DomainError otherwise.
BigInt stirling1_nested(unsigned k, unsigned j);

/// r_l(k) with s_k^{(k-l)} = (-1)^l C(k, l+1) r_l(k); a polynomial in k of
/// degree l-1.
struct RPolynomial {
  unsigned ell = 0;
  RhoPolynomial poly;  // variable is k

  BigRational operator()(long k) const { return poly(BigRational(k)); }
};

inline constexpr unsigned kRPolyValidationLimit = 40;

/// Interpolates r_l through k = l+1, ..., 2l from the recurrence table and
/// validates the result for every k up to kRPolyValidationLimit (throws
/// std::logic_error if validation fails). Requires 1 <= l <= 10.
RPolynomial r_poly(unsigned ell);

/// True when r_l(0) = r_l(1) = 0, i.e. k(k-1) divides r_l(k).
bool has_k_km1_factor(const RPolynomial& r);

}  // namespace cosecant
