#include <gtest/gtest.h>

#include "cosecant/coeffs.hpp"
#include "cosecant/errors.hpp"
#include "cosecant/genseries.hpp"
#include "oracles.hpp"

using cosecant::BigInt;
using cosecant::BigRational;
using cosecant::FloatHP;

namespace {

BigRational q(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }

BigRational exact_ratio(long rho, unsigned k) {
  return cosecant::approx_cosecant_exact(q(rho), k) / cosecant::gen_cosecant(k)(q(rho));
}

FloatHP rel_error(const FloatHP& approx, const BigRational& exact, unsigned digits) {
  const FloatHP e(exact, digits);
  return abs((approx - e) / e);
}

}  // namespace

TEST(Coeffs, CoefficientAccess) {
  EXPECT_EQ(cosecant::coefficient(4, 1), q(144, 5443200));
  EXPECT_EQ(cosecant::coefficient(2, 0), q(0));
  EXPECT_THROW(cosecant::coefficient(3, 4), cosecant::DomainError);
}

TEST(Coeffs, ClosedFormsMatchSeries) {
  for (unsigned ell = 0; ell <= 4; ++ell) {
    for (unsigned k = std::max(1u, ell + 1); k <= 20; ++k) {
      EXPECT_EQ(cosecant::leading_closed(k, ell), cosecant::coefficient(k, k - ell)) << k << " " << ell;
    }
  }
}

TEST(Coeffs, ClosedFormSpotValues) {
  EXPECT_EQ(cosecant::leading_closed(8, 3), q(73, 26453952000));
  EXPECT_EQ(cosecant::leading_closed(9, 4), BigRational(BigInt(229051), BigInt("733303549440000")));
  EXPECT_EQ(cosecant::leading_closed(1, 0), q(1, 6));
}

TEST(Coeffs, ClosedFormDomain) {
  EXPECT_THROW(cosecant::leading_closed(10, 5), cosecant::DomainError);
  EXPECT_THROW(cosecant::leading_closed(3, 3), cosecant::DomainError);
  EXPECT_THROW(cosecant::leading_closed(4, 4), cosecant::DomainError);
}

TEST(Coeffs, FourPartitionAssembly) {
  for (unsigned k = 3; k <= 25; ++k) {
    EXPECT_EQ(cosecant::leading_kk2_from_stirling(k), cosecant::coefficient(k, k - 2)) << k;
  }
  EXPECT_THROW(cosecant::leading_kk2_from_stirling(2), cosecant::DomainError);
}

TEST(Coeffs, FittedNumeratorsReproduceClosedForms) {
  for (unsigned ell = 1; ell <= 4; ++ell) {
    const auto fit = cosecant::fit_leading_numerator(ell);
    EXPECT_LE(fit.degree(), ell - 1);
    for (unsigned k = ell + 1; k <= 25; ++k) {
      EXPECT_EQ(cosecant::leading_from_fit(fit, k, ell), cosecant::leading_closed(k, ell)) << ell << " " << k;
    }
  }
  EXPECT_THROW(cosecant::fit_leading_numerator(5), cosecant::DomainError);
}

TEST(Coeffs, ApproximationErrorIsLowerOrder) {
  // c_{rho,k} - approx is a polynomial of degree k-4 in rho.
  for (unsigned k = 4; k <= 12; ++k) {
    const auto row = cosecant::gen_cosecant(k);
    std::vector<std::pair<BigRational, BigRational>> pts;
    for (long rho = 1; rho <= static_cast<long>(k) + 1; ++rho) {
      pts.emplace_back(q(rho), row(q(rho)) - cosecant::approx_cosecant_exact(q(rho), k));
    }
    EXPECT_EQ(cosecant::interpolate(pts).degree(), k - 4) << k;
  }
  EXPECT_THROW(cosecant::approx_cosecant_exact(q(10), 3), cosecant::DomainError);
}

TEST(Coeffs, RatioTendsToOne) {
  BigRational previous = q(0);
  for (long rho : {10, 100, 1000, 10000}) {
    const BigRational r = exact_ratio(rho, 8);
    EXPECT_GT(r, previous);
    EXPECT_LT(r, q(1));
    previous = r;
  }
  EXPECT_GT(previous, q(999999, 1000000));
}

TEST(Coeffs, BetaRatioIsTruncatedNotRounded) {
  // The exact ratio at (10, 6) is 0.99890471..., which rounds to 0.998905.
  const BigRational r = exact_ratio(10, 6);
  EXPECT_GT(r, q(9989045, 10000000));
  EXPECT_LT(r, q(998905, 1000000));
  EXPECT_EQ(cosecant::beta_ratio(10, 6), "0.998904");
  EXPECT_EQ(cosecant::beta_ratio(1000, 15), "0.999999");
  EXPECT_EQ(cosecant::beta_ratio(50, 10), "0.999644");
  EXPECT_EQ(cosecant::beta_ratio(30, 12), "0.990752");
}

TEST(Coeffs, BetaCellCarriesExactRatio) {
  const auto cell = cosecant::beta_ratio_cell(q(20), 12);
  EXPECT_EQ(cell.ratio, exact_ratio(20, 12));
  EXPECT_EQ(cell.truncated, cosecant::truncate_decimal(cell.ratio, 6));
  EXPECT_FALSE(cell.near_boundary);
}

TEST(Coeffs, TruncateDecimal) {
  EXPECT_EQ(cosecant::truncate_decimal(q(1), 6), "1.000000");
  EXPECT_EQ(cosecant::truncate_decimal(q(9999999, 10000000), 6), "0.999999");
  EXPECT_EQ(cosecant::truncate_decimal(q(1, 3), 6), "0.333333");
  EXPECT_EQ(cosecant::truncate_decimal(q(2, 3), 6), "0.666666");
  EXPECT_EQ(cosecant::truncate_decimal(q(5, 2), 0), "2");
  EXPECT_THROW(cosecant::truncate_decimal(q(-1, 3), 6), cosecant::DomainError);
}

TEST(Coeffs, CentralCoefficientRoutesAgree) {
  EXPECT_EQ(cosecant::c2v_vm1_beta(5), q(128, 315));
  EXPECT_EQ(cosecant::c2v_vm1_sum(5), q(128, 315));
  EXPECT_EQ(cosecant::c2v_vm1_beta(2), q(2, 3));
  EXPECT_EQ(cosecant::c2v_vm1_beta(3), q(8, 15));
  EXPECT_EQ(cosecant::c2v_vm1_sum(1), q(1));
  for (unsigned v = 2; v <= 40; ++v) EXPECT_EQ(cosecant::c2v_vm1_sum(v), cosecant::c2v_vm1_beta(v)) << v;
  for (unsigned v = 2; v <= 25; ++v) {
    EXPECT_EQ(cosecant::c2v_vm1_beta(v), cosecant::gen_cosecant(v - 1)(q(2 * static_cast<long>(v)))) << v;
  }
  EXPECT_THROW(cosecant::c2v_vm1_beta(1), cosecant::DomainError);
  EXPECT_THROW(cosecant::c2v_vm1_sum(0), cosecant::DomainError);
}

TEST(Coeffs, AlternatingReciprocalSumAtHalfIntegers) {
  for (unsigned v = 0; v <= 30; ++v) {
    oracle::Mp ref(cosecant::precision_bits(50) + 64);
    oracle::beta_half_integer(ref, v);
    const FloatHP got = cosecant::alternating_reciprocal_sum(q(2 * static_cast<long>(v) + 1, 2), 50);
    EXPECT_LT(oracle::relative_gap(got.to_scientific(55), ref.get()), 1e-50) << v;
  }
}

TEST(Coeffs, AlternatingReciprocalSumAtOneIsLogTwo) {
  oracle::Mp ref(cosecant::precision_bits(60) + 64);
  mpfr_const_log2(ref.get(), MPFR_RNDN);
  const FloatHP got = cosecant::alternating_reciprocal_sum(q(1), 60);
  EXPECT_LT(oracle::relative_gap(got.to_scientific(65), ref.get()), 1e-60);
  EXPECT_THROW(cosecant::alternating_reciprocal_sum(q(0), 30), cosecant::DomainError);
}

TEST(Coeffs, LeadingAsymptoticTermConverges) {
  double previous = 1.0;
  for (unsigned v : {4u, 8u, 16u, 32u, 64u}) {
    const double err = rel_error(cosecant::c2v_vm1_leading(v, 40), cosecant::c2v_vm1_beta(v), 40).to_double();
    EXPECT_LT(err, previous) << v;
    EXPECT_LT(err, 1.0 / (3.0 * v)) << v;
    previous = err;
  }
}

TEST(Coeffs, FullAsymptoticErrorIsNonIncreasing) {
  double previous = 1.0;
  for (unsigned v : {4u, 8u, 16u, 32u}) {
    const double err = rel_error(cosecant::c2v_vm1_asymptotic(v, 40), cosecant::c2v_vm1_beta(v), 40).to_double();
    EXPECT_LE(err, previous) << v;
    previous = err;
  }
}

TEST(Coeffs, FullAsymptoticFormPlateausNearOneThird) {
  // Neither sign choice for the last term converges; the leading term alone
  // is the better approximation at every tested v, including v = 10.
  for (unsigned v : {10u, 32u, 64u}) {
    const BigRational exact = cosecant::c2v_vm1_beta(v);
    const double full = rel_error(cosecant::c2v_vm1_asymptotic(v, 40), exact, 40).to_double();
    const double flipped = rel_error(
        cosecant::c2v_vm1_asymptotic(v, 40, cosecant::AsymptoticVariant::flipped_last_term), exact, 40).to_double();
    const double leading = rel_error(cosecant::c2v_vm1_leading(v, 40), exact, 40).to_double();
    EXPECT_GT(full, 0.3) << v;
    EXPECT_GT(flipped, 0.3) << v;
    EXPECT_LT(leading, full) << v;
  }
}

TEST(Coeffs, AsymptoticAtSmallestV) {
  const FloatHP a = cosecant::c2v_vm1_asymptotic(2, 30);
  EXPECT_GT(a.sign(), 0);
  EXPECT_LT(a.to_double(), 10.0);
  EXPECT_THROW(cosecant::c2v_vm1_asymptotic(1, 30), cosecant::DomainError);
  EXPECT_THROW(cosecant::c2v_vm1_leading(1, 30), cosecant::DomainError);
}
