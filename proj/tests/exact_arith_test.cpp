#include "jetk/exact_arith.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace jetk;

namespace {

// Long division of 1 by a power series, coefficient by coefficient, using only
// schoolbook subtraction of shifted multiples.
std::vector<BigInt> divide_one_by(const std::vector<BigInt>& a, std::size_t n) {
  std::vector<BigInt> rem(n, 0);
  rem[0] = 1;
  std::vector<BigInt> q(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    q[k] = rem[k] / a[0];
    for (std::size_t i = 0; i + k < n && i < a.size(); ++i) rem[i + k] -= q[k] * a[i];
  }
  return q;
}

TruncPoly random_poly(std::mt19937_64& rng, std::size_t n, int span = 9) {
  std::uniform_int_distribution<int> dist(-span, span);
  std::vector<BigInt> c(n);
  for (auto& x : c) x = dist(rng);
  return TruncPoly(n, c);
}

TruncPoly poly(std::size_t n, std::vector<BigInt> c) { return TruncPoly(n, std::move(c)); }

}  // namespace

TEST(Binom, SmallValues) {
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(-2, 3), -4);
  EXPECT_EQ(binom(3, 5), 0);
  EXPECT_EQ(binom(0, 0), 1);
  for (int d = -20; d <= 20; ++d) EXPECT_EQ(binom(d, 0), 1);
}

TEST(Binom, NegativeKIsAnArgumentError) { EXPECT_THROW(binom(4, -1), ArgumentError); }

TEST(Binom, MatchesPascalTriangleForNonnegativeN) {
  std::vector<std::vector<BigInt>> pascal(41);
  for (std::size_t n = 0; n <= 40; ++n) {
    pascal[n].assign(n + 1, 1);
    for (std::size_t k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  for (std::int64_t n = 0; n <= 40; ++n)
    for (std::int64_t k = 0; k <= n + 2; ++k)
      EXPECT_EQ(binom(n, k), k <= n ? pascal[n][k] : BigInt(0)) << n << " " << k;
}

TEST(Binom, NegativeUpperIndexReflection) {
  // binom(-n, k) = (-1)^k binom(n+k-1, k)
  for (std::int64_t n = 1; n <= 15; ++n)
    for (std::int64_t k = 0; k <= 15; ++k)
      EXPECT_EQ(binom(-n, k), (k % 2 ? -1 : 1) * binom(n + k - 1, k));
}

TEST(Binom, LargeValuesStayExact) {
  EXPECT_EQ(binom(70, 35).str(), "112186277816662845432");
  EXPECT_EQ(binom(200, 100).str(), "90548514656103281165404177077484163874504589675413336841320");
}

TEST(TruncPoly, Multiplication) {
  EXPECT_EQ(poly(3, {1, -1}) * poly(3, {1, 1, 1}), TruncPoly::one(3));
  EXPECT_EQ(poly(3, {1, 1}) * poly(3, {1, 1}), poly(3, {1, 2, 1}));
  const TruncPoly a = poly(4, {3, -2, 0, 5});
  EXPECT_EQ(trunc_mul(a, TruncPoly::one(4)), a);
}

TEST(TruncPoly, StoresTrailingZeros) {
  const TruncPoly p = poly(5, {1});
  EXPECT_EQ(p.modulus_exponent(), 5u);
  EXPECT_EQ(p.coeffs().size(), 5u);
  EXPECT_EQ(TruncPoly::t(3) * TruncPoly::t(3) * TruncPoly::t(3), TruncPoly(3));
}

TEST(TruncPoly, MismatchedModuliThrow) {
  EXPECT_THROW(TruncPoly::one(2) * TruncPoly::one(3), ArgumentError);
  EXPECT_THROW(TruncPoly::one(2) + TruncPoly::one(3), ArgumentError);
  EXPECT_THROW(TruncPoly(0), ArgumentError);
}

TEST(TruncPoly, Inverse) {
  EXPECT_EQ(trunc_inverse(poly(3, {1, -1})), poly(3, {1, 1, 1}));
  EXPECT_EQ(trunc_inverse(TruncPoly::one(3)), TruncPoly::one(3));
  // oracle: long division of 1 by 1 - 2t + t^2
  const auto expected = divide_one_by({1, -2, 1}, 3);
  EXPECT_EQ(expected, (std::vector<BigInt>{1, 2, 3}));
  EXPECT_EQ(trunc_inverse(poly(3, {1, -2, 1})), poly(3, expected));
}

TEST(TruncPoly, NonUnitIsNotInvertible) {
  EXPECT_THROW(trunc_inverse(poly(3, {2, 1})), NotInvertibleError);
  EXPECT_THROW(trunc_inverse(poly(3, {0, 1})), NotInvertibleError);
}

TEST(TruncPoly, Printing) {
  EXPECT_EQ(poly(2, {1, 5}).to_string(), "1 + 5t");
  EXPECT_EQ(poly(3, {1, -3, 3}).to_string(), "1 - 3t + 3t^2");
  EXPECT_EQ(poly(3, {0, -1}).to_string(), "-t");
  EXPECT_EQ(TruncPoly(4).to_string(), "0");
}

TEST(TruncPolyProperty, RingAxioms) {
  std::mt19937_64 rng(20121);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const auto a = random_poly(rng, n), b = random_poly(rng, n), c = random_poly(rng, n);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + (-a), TruncPoly(n));
  }
}

TEST(TruncPolyProperty, InverseAgreesWithLongDivision) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 9;
    auto a = random_poly(rng, n);
    std::vector<BigInt> c = a.coeffs();
    c[0] = trial % 2 ? 1 : -1;
    a = TruncPoly(n, c);
    const TruncPoly inv = trunc_inverse(a);
    EXPECT_EQ(a * inv, TruncPoly::one(n));
    EXPECT_EQ(inv.coeffs(), divide_one_by(c, n));
  }
}

TEST(LaurentPoly, Arithmetic) {
  const auto u = LaurentPoly::u_pow(1);
  const auto inv = LaurentPoly::u_pow(-1);
  EXPECT_EQ((u + inv) * u, LaurentPoly::u_pow(2) + 1);
  EXPECT_EQ(u + LaurentPoly(), u);
  EXPECT_EQ((LaurentPoly(1) - inv) * (LaurentPoly(1) + inv), LaurentPoly(1) - LaurentPoly::u_pow(-2));
  EXPECT_TRUE((u - u).is_zero());
  EXPECT_TRUE((u - u).terms().empty());
}

TEST(LaurentPoly, DerivativeAndMonomialDivision) {
  const auto g = LaurentPoly::monomial(2, 3);
  EXPECT_EQ(g.derivative(), LaurentPoly::monomial(6, 2));
  EXPECT_EQ(g.derivative().divide_by_monomial(g), LaurentPoly::monomial(3, -1));
  EXPECT_THROW(g.divide_by_monomial(g + 1), ArgumentError);
}

TEST(LaurentPoly, ParseAndPrint) {
  const auto p = LaurentPoly::parse("3*u^-2 + 1 - 1/2*u^3");
  EXPECT_EQ(p.coeff(-2), 3);
  EXPECT_EQ(p.coeff(0), 1);
  EXPECT_EQ(p.coeff(3), Rational(-1, 2));
  EXPECT_EQ(p.to_string(), "3*u^-2 + 1 - 1/2*u^3");
  EXPECT_EQ(LaurentPoly::parse(" -u "), LaurentPoly::monomial(-1, 1));
  EXPECT_EQ(LaurentPoly::parse("2u^2"), LaurentPoly::monomial(2, 2));
  EXPECT_EQ(LaurentPoly::parse("0"), LaurentPoly());
  EXPECT_EQ(LaurentPoly::parse("u - u"), LaurentPoly());
}

TEST(LaurentPoly, ParseErrors) {
  EXPECT_THROW(LaurentPoly::parse(""), ParseError);
  EXPECT_THROW(LaurentPoly::parse("3*"), ParseError);
  EXPECT_THROW(LaurentPoly::parse("1/0"), ParseError);
  EXPECT_THROW(LaurentPoly::parse("u^"), ParseError);
  EXPECT_THROW(LaurentPoly::parse("x"), ParseError);
  EXPECT_THROW(LaurentPoly::parse("1 2"), ParseError);
}

TEST(LaurentPolyProperty, DegreeBoundsAndPrintRoundTrip) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> exp(-6, 6), coef(-5, 5), len(1, 4);
  auto random_laurent = [&] {
    LaurentPoly p;
    while (p.is_zero())
      for (int i = len(rng); i > 0; --i) p += LaurentPoly::monomial(Rational(coef(rng), 1 + (i % 3)), exp(rng));
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_laurent(), b = random_laurent();
    const auto ab = a * b;
    EXPECT_EQ(ab.min_degree(), a.min_degree() + b.min_degree());
    EXPECT_EQ(ab.max_degree(), a.max_degree() + b.max_degree());
    EXPECT_EQ(LaurentPoly::parse(a.to_string()), a);
    for (const auto& [e, c] : ab.terms()) EXPECT_NE(c, 0);
  }
}
