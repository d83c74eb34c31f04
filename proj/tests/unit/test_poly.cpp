#include <gtest/gtest.h>

#include "generators.hpp"
#include "ltower/errors.hpp"
#include "ltower/fp_poly.hpp"
#include "ltower/int_poly.hpp"

using namespace ltower;

namespace {

std::vector<oracle::Int> coeffs(const IntPoly& p) { return p.coefficients(); }

}  // namespace

TEST(IntPoly, ZeroAndDegrees) {
  EXPECT_TRUE(IntPoly().is_zero());
  EXPECT_EQ(IntPoly().degree(), -1);
  EXPECT_EQ(IntPoly({0, 0, 0}).degree(), -1);
  EXPECT_EQ(IntPoly({1, 2, 0}).degree(), 1);
  EXPECT_THROW(IntPoly().leading(), ZeroPolynomialError);
}

TEST(IntPoly, ArithmeticAndFormatting) {
  const IntPoly a{-1, 1};
  const IntPoly b{1, 1};
  EXPECT_EQ(a * b, IntPoly({-1, 0, 1}));
  EXPECT_EQ(a + b, IntPoly({0, 2}));
  EXPECT_EQ(a - a, IntPoly());
  EXPECT_EQ(BigInt(-3) * pow(a, 2), IntPoly({-3, 6, -3}));
  EXPECT_EQ(IntPoly({-3, 6, -3}).to_string(), "-3*T^2 + 6*T - 3");
  EXPECT_EQ(IntPoly({-3, 6, -3}).content(), 3);
  EXPECT_EQ(IntPoly({-3, 6, -3}).divexact(BigInt(-3)), IntPoly({1, -2, 1}));
  EXPECT_EQ(IntPoly({1, 3, 1}).evaluate(BigInt(2)), 11);
  EXPECT_TRUE(IntPoly({1, 4, 10, 4, 1}).is_palindromic());
  EXPECT_FALSE(IntPoly({1, 4, 10, 5, 1}).is_palindromic());
}

TEST(IntPoly, Division) {
  const IntPoly u = BigInt(-2) * pow(IntPoly{-1, 1}, 2) * IntPoly{1, 3, 1};
  const PolyDivision qr = divmod_monic(u, IntPoly{-1, 1});
  EXPECT_TRUE(qr.remainder.is_zero());
  EXPECT_EQ((qr.quotient * IntPoly{-1, 1}), u);
  EXPECT_EQ(divide_exact(u, IntPoly{1, 3, 1}), (BigInt(-2) * pow(IntPoly{-1, 1}, 2)));
  EXPECT_FALSE(divide_exact(u, IntPoly{1, 1}).has_value());
  EXPECT_FALSE(divide_exact(IntPoly{1, 2}, IntPoly{0, 2}).has_value());
  EXPECT_THROW(divmod_monic(u, IntPoly{1, 2}), Error);
  EXPECT_THROW(divide_exact(u, IntPoly()), ZeroPolynomialError);
}

TEST(Cyclotomic, SmallOrders) {
  EXPECT_EQ(cyclotomic(1), IntPoly({-1, 1}));
  EXPECT_EQ(cyclotomic(2), IntPoly({1, 1}));
  EXPECT_EQ(cyclotomic(3), IntPoly({1, 1, 1}));
  EXPECT_EQ(cyclotomic(4), IntPoly({1, 0, 1}));
  EXPECT_EQ(cyclotomic(6), IntPoly({1, -1, 1}));
  EXPECT_EQ(cyclotomic(9), IntPoly({1, 0, 0, 1, 0, 0, 1}));
  EXPECT_EQ(cyclotomic(12), IntPoly({1, 0, -1, 0, 1}));
  EXPECT_THROW(cyclotomic(0), Error);
}

TEST(Cyclotomic, ProductOverDivisorsIsTnMinusOne) {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    IntPoly product{1};
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) product = product * cyclotomic(d);
    EXPECT_EQ(product, (IntPoly::monomial(1, n) - IntPoly{1})) << n;
    EXPECT_EQ(static_cast<std::uint64_t>(cyclotomic(n).degree()), totient(n));
  }
  EXPECT_EQ(cyclotomic(105).coeff(7), -2);  // first coefficient of absolute value 2
}

TEST(Resultant, DocumentedValues) {
  EXPECT_EQ(resultant(cyclotomic(5), IntPoly{-1, 1}), 5);
  EXPECT_EQ(resultant(cyclotomic(5), IntPoly{-3, 6, -3}), 2025);
  EXPECT_EQ(resultant(IntPoly{-1, 1}, IntPoly{1, 1}), 2);
  EXPECT_EQ(resultant(IntPoly{1, 1, 1}, IntPoly{7}), 49);
  EXPECT_EQ(resultant(IntPoly{7}, IntPoly{1, 1, 1}), 49);
  EXPECT_EQ(resultant(IntPoly{-1, 0, 1}, IntPoly{1, 1}), 0);
  EXPECT_THROW(resultant(IntPoly(), IntPoly{1}), ZeroPolynomialError);
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  gen::Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const IntPoly a = gen::random_poly(rng, 6, 20);
    const IntPoly b = gen::random_poly(rng, 6, 20);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ(resultant(a, b), oracle::sylvester_resultant(coeffs(a), coeffs(b)))
        << a.to_string() << " | " << b.to_string();
  }
}

TEST(Resultant, MultiplicativeInSecondArgument) {
  gen::Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPoly a = gen::random_poly(rng, 5, 9);
    const IntPoly b = gen::random_poly(rng, 4, 9);
    const IntPoly c = gen::random_poly(rng, 4, 9);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    EXPECT_EQ(resultant(a, b * c), resultant(a, b) * resultant(a, c));
    EXPECT_EQ(resultant(a * b, c), resultant(a, c) * resultant(b, c));
  }
}

TEST(FpPoly, ReductionGcdAndPowers) {
  const FpPoly phi3 = FpPoly::reduce(cyclotomic(3), 2);
  const FpPoly g = FpPoly::reduce(IntPoly{1, 3, 1}, 2);
  EXPECT_EQ(gcd(phi3, g).degree(), 2);
  const FpPoly phi3_mod3 = FpPoly::reduce(cyclotomic(3), 3);
  EXPECT_EQ(phi3_mod3, FpPoly(3, {1, 1, 1}));
  EXPECT_EQ(gcd(phi3_mod3, FpPoly(3, {2, 1})), FpPoly(3, {2, 1}));
  EXPECT_EQ(FpPoly::reduce(IntPoly{-1, 5}, 5), FpPoly(5, {4}));
  EXPECT_EQ(gcd(FpPoly(7), FpPoly(7)).degree(), -1);
  EXPECT_THROW(FpPoly(5, {1, 1}) % FpPoly(5), ZeroPolynomialError);
}

TEST(FpPoly, PowerOfTMatchesRepeatedMultiplication) {
  gen::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t p = rng.pick(std::vector<std::uint64_t>{2, 3, 5, 7, 101});
    std::vector<std::uint64_t> c(static_cast<std::size_t>(rng.integer(2, 6)));
    for (auto& x : c) x = static_cast<std::uint64_t>(rng.integer(0, static_cast<long long>(p) - 1));
    c.back() = 1;
    const FpPoly m(p, c);
    const std::uint64_t e = static_cast<std::uint64_t>(rng.integer(0, 300));
    FpPoly expected(p, {1});
    const FpPoly t(p, {0, 1});
    for (std::uint64_t k = 0; k < e; ++k) expected = (expected * t) % m;
    EXPECT_EQ(power_of_t_mod(e, m), expected % m);
  }
}
