#pragma once

#include <string>

#include "cosecant/big_rational.hpp"
#include "cosecant/float_hp.hpp"
#include "cosecant/polynomial.hpp"

namespace cosecant {

/// C_{k,i}, the coefficient of rho^i in c_{rho,k}. Requires 0 <= i <= k.
BigRational coefficient(unsigned k, unsigned i);

/// Closed forms for the top coefficients C_{k,k-l}, l = 0..4:
///   l=0  1/((3!)^k k!)
///   l=1  1/(5 (3!)^k (k-2)!)
///   l=2  (21k+17)/(175 (3!)^{k+1} (k-3)!)
///   l=3  (k^2+17k/7)/(125 (3!)^{k+1} (k-4)!)
///   l=4  3(3k^3+102k^2/7+289k/49-11170/539)/(625 (3!)^{k+3} (k-5)!)
/// Requires k >= l+1 (for l = 0 any k >= 1); throws DomainError otherwise.
BigRational leading_closed(unsigned k, unsigned ell);

/// C_{k,k-2} assembled from the four partitions {1^k}, {2,1^{k-2}},
/// {3,1^{k-3}}, {2,2,1^{k-4}} and Stirling numbers. Requires k >= 3.
BigRational leading_kk2_from_stirling(unsigned k);

/// Fits the numerator polynomial n_l(k) = C_{k,k-l} (3!)^k (k-l-1)! through
/// k = l+1, ..., 2l using computed coefficients (degree l-1). 1 <= l <= 4.
RhoPolynomial fit_leading_numerator(unsigned ell);
/// C_{k,k-l} predicted by a fitted numerator.
BigRational leading_from_fit(const RhoPolynomial& numerator, unsigned k, unsigned ell);

/// Four-term large-rho approximation of c_{rho,k}, exact for rational rho.
/// Requires k >= 4.
BigRational approx_cosecant_exact(const BigRational& rho, unsigned k);
FloatHP approx_cosecant(const BigRational& rho, unsigned k, unsigned digits);

/// One Table-3 style cell.
struct BetaCell {
  BigRational ratio;      // approximation / exact, exactly
  std::string truncated;  // six decimals, truncated toward zero
  bool near_boundary;     // ratio within 1e-12 of a 1e-6 grid point
};

BetaCell beta_ratio_cell(const BigRational& rho, unsigned k);
/// The ratio beta(rho,k) truncated (never rounded) to six decimals.
std::string beta_ratio(long rho, unsigned k);
/// Truncates a non-negative rational to `decimals` places, e.g. "0.998904".
std::string truncate_decimal(const BigRational& value, unsigned decimals);

/// c_{2v,v-1} = B(v,1/2)/2 = (v-1)! v! 4^v / (2 (2v)!); the sqrt(pi) factors
/// of Gamma(v+1/2) cancel. Requires v >= 2.
BigRational c2v_vm1_beta(unsigned v);
/// c_{2v,v-1} = 2^{2-2v} sum_{k=0}^{v-1} (-1)^{v-k-1} C(2v-1,k)/(2v-2k-1). v >= 1.
BigRational c2v_vm1_sum(unsigned v);

/// sum_{j>=0} (-1)^j / (x+j) for x > 0, via the Cohen-Villegas-Zagier
/// acceleration of the alternating series. Terms are moments of the positive
/// measure t^{x-1} dt on [0,1], so the n-term error is at most
/// (1/x) / T_n(3); n is chosen to push that below the working ulp.
FloatHP alternating_reciprocal_sum(const BigRational& x, unsigned digits);

enum class AsymptoticVariant {
  /// The expression as displayed: ... + (3/(4v)) (-1)^{v-1} beta(v+1/2)/2.
  displayed,
  /// Same with the sign of the final beta term flipped.
  flipped_last_term,
};

/// Asymptotic form of c_{2v,v-1}:
/// 2^{2-2v} C(2v-1,v) [pi/4 + (-1)^{v-1} beta(v+1/2)/2 + (-1)^{v-1} floor(v/2)/(2v)
///                     - 5(1-(-1)^v)/(8v) + (3/(4v)) (-1)^{v-1} beta(v+1/2)/2].
/// Requires v >= 2.
FloatHP c2v_vm1_asymptotic(unsigned v, unsigned digits,
                           AsymptoticVariant variant = AsymptoticVariant::displayed);
/// Leading term 2^{2-2v} C(2v-1,v) pi/4 only.
FloatHP c2v_vm1_leading(unsigned v, unsigned digits);

}  // namespace cosecant
