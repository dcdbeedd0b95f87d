#pragma once

#include <string>
#include <vector>

#include "cosecant/big_rational.hpp"
#include "cosecant/identity_report.hpp"

namespace cosecant {

/// Upper limits for the identity suites. Defaults are the full ranges.
struct VerifyRanges {
  unsigned k_max = 30;           // rho-identities, oracle equivalence
  unsigned stirling_k_max = 14;  // nested sum vs recurrence
  unsigned stirling_j_max = 6;
  unsigned nine_v_max = 15;
  unsigned hurwitz_v_max = 30;
  unsigned sym_v_max = 15;       // sym_high_partition vs sym_poly
  unsigned sym_ell_max = 6;
  unsigned c2v_v_max = 25;
  unsigned bernoulli_k_max = 15;
  unsigned leading_k_max = 20;
  unsigned parallelism = 1;
};

/// Suite names accepted by run_suite, "all" first.
const std::vector<std::string>& suite_names();

/// Runs a suite and returns its reports ordered by (id, params). Throws
/// ConfigurationError on an unknown name or an out-of-range limit.
std::vector<IdentityReport> run_suite(const std::string& name, const VerifyRanges& ranges = {});

/// True when every asserted report passed.
bool all_asserted_pass(const std::vector<IdentityReport>& reports);

/// B_0..B_n from sum_{j=0}^{m} C(m+1, j) B_j = 0, B_0 = 1.
std::vector<BigRational> bernoulli_recurrence(unsigned n);

}  // namespace cosecant
