#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cosecant/big_rational.hpp"
#include "cosecant/float_hp.hpp"
#include "cosecant/partitions.hpp"
#include "cosecant/polynomial.hpp"

namespace cosecant {

/// Parameters of the partition-method transform
///
///   row(k) = global_sign(k) * sum over partitions of k of
///            [(-1)^N if alternate_by_length] * outer(N) * prod_i inner(i)^lambda_i / lambda_i!
///
/// where outer(N) is the Pochhammer polynomial (rho)_N when
/// outer_is_pochhammer is set, and the constant scalar_outer(N) otherwise.
struct SeriesSpec {
  /// Value assigned to part i (i >= 1); nullopt marks an undefined part.
  std::function<std::optional<BigRational>(unsigned part)> inner;
  bool outer_is_pochhammer = true;
  std::function<BigRational(unsigned length)> scalar_outer;
  /// +1 or -1; an empty function means +1.
  std::function<int(unsigned k)> global_sign;
  bool alternate_by_length = true;
};

enum class SeriesKind { cosecant, secant };

/// inner(i) = 1/(2i+1)!, global sign (-1)^k, alternating in N: the
/// coefficients of (z / sin z)^rho in powers of z^2.
SeriesSpec cosecant_spec();
/// inner(i) = 1/(2i)!: the coefficients of sec^rho z.
SeriesSpec secant_spec();
SeriesSpec spec_for(SeriesKind kind);

/// Signed contribution of a single partition, global sign included.
RhoPolynomial partition_contribution(const PartitionMultiset& pm, const SeriesSpec& spec);

/// Sum of all partition contributions for k. Contributions of equal length
/// share the same outer factor, so scalars are accumulated per length first.
/// With parallelism > 1 partitions are dealt round-robin to worker threads
/// and merged by exact addition, which is bit-identical to the serial sum.
/// Throws ConfigurationError if spec.inner is undefined for a needed part.
RhoPolynomial partition_transform(unsigned k, const SeriesSpec& spec, unsigned parallelism = 1);

/// c_{rho,k}: memoized, degree k, positive coefficients for k >= 1.
RhoPolynomial gen_cosecant(unsigned k);
/// d_{rho,k}: memoized.
RhoPolynomial gen_secant(unsigned k);

struct SeriesTable {
  unsigned k_max = 0;
  std::vector<RhoPolynomial> rows;
};

/// Rows 0..k_max by the partition method.
SeriesTable partition_table(unsigned k_max, SeriesKind kind, unsigned parallelism = 1);

/// Independent route: L = log(z/sin z) (or log sec z) as an exact series in
/// z^2 via the series logarithm, then exp(rho * L) via the series
/// exponential over rho-polynomial coefficients. Shares no code with the
/// partition transform.
SeriesTable oracle_explog(unsigned k_max, SeriesKind kind);
/// Coefficients L_0..L_{k_max} of the logarithm above (L_0 = 0).
std::vector<BigRational> explog_log_coefficients(unsigned k_max, SeriesKind kind);

/// c_{rho,0..k_max} at one rational rho, via exp(rho * L) on scalar
/// coefficients; O(k_max^2) operations, no partition enumeration.
std::vector<BigRational> cosecant_values(const BigRational& rho, unsigned k_max);

/// Classic cosecant number c_k = c_{1,k}.
BigRational cosecant_number(unsigned k);
/// B_{2k} = (-1)^{k+1} (2k)! c_k / (2^{2k} - 2); k >= 1.
BigRational bernoulli_from_cosecant(unsigned k);
/// zeta(2k) = c_k pi^{2k} / (2 (1 - 2^{1-2k})) at `digits` precision; k >= 1.
FloatHP zeta_even_from_cosecant(unsigned k, unsigned digits);

}  // namespace cosecant
