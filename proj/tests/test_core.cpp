#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "jetrep/core/cyclotomic.hpp"
#include "jetrep/core/finite_field.hpp"
#include "jetrep/core/intmath.hpp"
#include "jetrep/core/rational.hpp"

using namespace jetrep;

TEST(Rational, NormalisesSignAndGcd) {
    Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_THROW(Rational(1, 2) / Rational(0), Error);
}

TEST(Rational, FieldAxiomsOnRandomSample) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<i64> d(-50, 50), n(1, 50);
    for (int i = 0; i < 500; ++i) {
        Rational a(d(rng), n(rng)), b(d(rng), n(rng)), c(d(rng), n(rng));
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a + b - b, a);
        if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    }
}

TEST(FiniteField, EvenCharacteristicIsNotShipped) { EXPECT_THROW(FiniteField(4), Error); }

TEST(IntMath, Basics) {
    EXPECT_EQ(powmod(3, 200, 1000003), powmod(powmod(3, 100, 1000003), 2, 1000003));
    EXPECT_EQ(invmod(3, 7), 5);
    EXPECT_TRUE(is_prime(1000003));
    EXPECT_FALSE(is_prime(1));
    EXPECT_EQ(totient(36), 12);
    ASSERT_TRUE(prime_power(49).has_value());
    EXPECT_EQ(prime_power(49)->first, 7);
    EXPECT_FALSE(prime_power(12).has_value());
    EXPECT_EQ(divisors(12).size(), 6u);
    EXPECT_EQ(primitive_root(13), 2);
}

TEST(Cyc, RootsOfUnity) {
    EXPECT_EQ(Cyc::E(3) * Cyc::E(3) * Cyc::E(3), Cyc(1));
    Cyc s(0);
    for (int k = 0; k < 7; ++k) s += Cyc::E(7, k);
    EXPECT_EQ(s, Cyc(0));
    Cyc r2 = Cyc::E(8, 1) + Cyc::E(8, 7);
    EXPECT_EQ(r2 * r2, Cyc(2));
}

TEST(Cyc, GaussPeriodOfThirteen) {
    Cyc g(0);
    for (int k : {1, 3, 4, 9, 10, 12}) g += Cyc::E(13, k);
    // (-1 + sqrt 13)/2
    EXPECT_EQ(g * g + g, Cyc(3));
    EXPECT_NEAR(g.to_complex().real(), (-1 + std::sqrt(13.0)) / 2, 1e-12);
}

TEST(Cyc, ParseAndPrintRoundTrip) {
    Cyc a = Cyc::parse("1+3*E(3)");
    auto z = a.to_complex();
    EXPECT_NEAR(z.real(), -0.5, 1e-12);
    EXPECT_NEAR(z.imag(), 1.5 * std::sqrt(3.0), 1e-12);
    for (const char* s : {"0", "-7", "3/4", "E(5)^2-E(5)^3", "2*E(12)+E(4)", "-2-3*E(3)"}) {
        Cyc c = Cyc::parse(s);
        EXPECT_EQ(Cyc::parse(c.str()), c) << s;
    }
    EXPECT_THROW(Cyc::parse("1+*E(3)"), Error);
}

TEST(Cyc, InverseIsExact) {
    Cyc x = Cyc(2) + Cyc::E(5);
    EXPECT_EQ(x.inverse() * x, Cyc(1));
}

TEST(Cyc, MixedConductors) {
    Cyc i = Cyc::E(4);
    Cyc w = Cyc::E(3);
    EXPECT_EQ((i * w).conductor(), 12);
    EXPECT_EQ(((i * w) * (i * w).conj()).reduced(), Cyc(1));
}

class FieldTest : public ::testing::TestWithParam<int> {};

TEST_P(FieldTest, Axioms) {
    FiniteField F(GetParam());
    const int q = F.q();
    for (int a = 0; a < q; ++a) {
        EXPECT_EQ(F.add(a, F.neg(a)), 0);
        if (a) EXPECT_EQ(F.mul(a, F.inv(a)), 1);
        for (int b = 0; b < q; b += 3) EXPECT_EQ(F.mul(a, b), F.mul(b, a));
    }
    EXPECT_EQ(F.pow(F.generator(), q - 1), 1);
    for (int k = 1; k < q - 1; ++k) EXPECT_NE(F.exp(k), 1);
    EXPECT_FALSE(F.is_square(F.least_nonsquare()));
    for (int a = 0; a < q; ++a) EXPECT_EQ(F.pow(a, q), a);
}

INSTANTIATE_TEST_SUITE_P(Orders, FieldTest, ::testing::Values(3, 5, 7, 9, 11, 25, 27, 49));
