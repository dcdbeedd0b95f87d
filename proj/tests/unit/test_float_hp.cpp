#include <gtest/gtest.h>

#include <cmath>

#include "cosecant/errors.hpp"
#include "cosecant/float_hp.hpp"
#include "oracles.hpp"

using cosecant::BigInt;
using cosecant::BigRational;
using cosecant::FloatHP;

TEST(FloatHP, PiAgreesWithMpfrConstant) {
  for (unsigned digits : {10u, 30u, 50u, 120u}) {
    const FloatHP pi = cosecant::pi_hp(digits);
    oracle::Mp ref(cosecant::precision_bits(digits) + 64);
    mpfr_const_pi(ref.get(), MPFR_RNDN);
    EXPECT_LT(oracle::relative_gap(pi.to_scientific(digits + 5), ref.get()), std::pow(10.0, -static_cast<double>(digits)))
        << digits;
  }
}

TEST(FloatHP, PiNeedsTenDigits) { EXPECT_THROW(cosecant::pi_hp(9), cosecant::DomainError); }

TEST(FloatHP, ExactRationalsSurvive) {
  const FloatHP half(BigRational(BigInt(1), BigInt(2)), 30);
  EXPECT_EQ(half.to_rational(), BigRational(BigInt(1), BigInt(2)));
  EXPECT_EQ(half.to_fixed(3), "0.500");
  EXPECT_DOUBLE_EQ(half.to_double(), 0.5);
}

TEST(FloatHP, Arithmetic) {
  const FloatHP a(3, 40);
  const FloatHP b(7, 40);
  EXPECT_EQ((a + b).to_fixed(0), "10");
  EXPECT_EQ((a - b).to_fixed(0), "-4");
  EXPECT_EQ((a * b).to_fixed(0), "21");
  EXPECT_EQ((a / b).to_fixed(10), "0.4285714286");
  EXPECT_EQ((-a).sign(), -1);
  EXPECT_LT(a, b);
  EXPECT_EQ(pow(FloatHP(2, 40), 10).to_fixed(0), "1024");
  const FloatHP root = sqrt(FloatHP(2, 40));
  EXPECT_LT(abs(root * root - FloatHP(2, 40)), cosecant::ulp_bound(35));
}

TEST(FloatHP, Errors) {
  EXPECT_THROW(FloatHP(1, 30) / FloatHP(0, 30), cosecant::DomainError);
  EXPECT_THROW(sqrt(FloatHP(-1, 30)), cosecant::DomainError);
  EXPECT_THROW(FloatHP(std::string("1.2.3"), 30), cosecant::ParseError);
}

TEST(FloatHP, DecimalConstruction) {
  const FloatHP x(std::string("0.125"), 20);
  EXPECT_EQ(x.to_rational(), BigRational(BigInt(1), BigInt(8)));
  EXPECT_EQ(FloatHP(std::string("1e-3"), 20).to_fixed(4), "0.0010");
}

TEST(FloatHP, CopyAndMoveKeepValueAndDigits) {
  FloatHP a(BigRational(BigInt(1), BigInt(3)), 45);
  FloatHP b = a;
  EXPECT_EQ(a, b);
  FloatHP c = std::move(b);
  EXPECT_EQ(c, a);
  EXPECT_EQ(c.digits(), 45u);
  FloatHP d(1, 10);
  d = c;
  EXPECT_EQ(d, a);
  EXPECT_EQ(a.with_digits(80).digits(), 80u);
}

TEST(FloatHP, MixedPrecisionUsesTheWiderOperand) {
  const FloatHP a(1, 20);
  const FloatHP b(3, 60);
  EXPECT_EQ((a / b).digits(), 60u);
}
