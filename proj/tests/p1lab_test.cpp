#include "jetk/p1lab.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace jetk;

namespace {

LaurentPoly u(std::int64_t e) { return LaurentPoly::u_pow(e); }

LaurentMatrix diag(const std::vector<std::int64_t>& exps) { return testkit::diag_powers(exps); }

bool exponents_within(const LaurentMatrix& m, bool nonnegative) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      const auto& e = m.at(i, j);
      if (e.is_zero()) continue;
      if (nonnegative ? e.min_degree() < 0 : e.max_degree() > 0) return false;
    }
  return true;
}

bool constant_nonzero_det(const LaurentMatrix& m) {
  const LaurentPoly d = m.determinant();
  return d.is_monomial() && d.min_degree() == 0;
}

}  // namespace

TEST(JetTransition, Examples) {
  EXPECT_EQ(jet_transition(2, Side::left), (LaurentMatrix{{u(2), 0}, {LaurentPoly::monomial(2, 1), -1}}));
  EXPECT_EQ(jet_transition(0, Side::left), (LaurentMatrix{{1, 0}, {0, -u(-2)}}));
  EXPECT_EQ(jet_transition(2, Side::right), (LaurentMatrix{{u(2), 0}, {0, -1}}));
}

TEST(JetTransition, LeftMatrixIsTheChainRule) {
  // For f1 = v^k: f0(u) = u^l f1(1/u) = u^{l-k}; check (f0, df0/du) = m (f1, df1/dv) with v = 1/u.
  for (std::int64_t l = -5; l <= 10; ++l) {
    const LaurentMatrix m = jet_transition(l, Side::left);
    for (std::int64_t k = 0; k <= 6; ++k) {
      const LaurentPoly f1 = u(-k);                                    // v^k
      const LaurentPoly df1_dv = LaurentPoly::monomial(k, -(k - 1));   // k v^{k-1}
      const LaurentPoly f0 = u(l) * f1;
      const LaurentPoly df0_du = f0.derivative();
      EXPECT_EQ(m.at(0, 0) * f1 + m.at(0, 1) * df1_dv, f0);
      EXPECT_EQ(m.at(1, 0) * f1 + m.at(1, 1) * df1_dv, df0_du) << l << " " << k;
    }
  }
}

TEST(BirkhoffSplit, Examples) {
  EXPECT_EQ(birkhoff_split(diag({2, -1})), SplittingType({2, -1}));
  EXPECT_EQ(birkhoff_split(LaurentMatrix{{1, u(-3)}, {0, 1}}), SplittingType({0, 0}));
  EXPECT_EQ(birkhoff_split(jet_transition(2, Side::left)), SplittingType({1, 1}));
  EXPECT_EQ(birkhoff_split(diag({7})), SplittingType({7}));
  // by hand: h0 = 2 and h0 of the (-1)-twist is 1, so one degree is >= 1
  EXPECT_EQ(birkhoff_split(LaurentMatrix{{u(1), 1}, {0, u(-1)}}), SplittingType({1, -1}));
}

TEST(BirkhoffSplit, NonUnitDeterminantRejected) {
  EXPECT_THROW(birkhoff_split(LaurentMatrix{{LaurentPoly(1) + u(1)}}), NotATransitionError);
  EXPECT_THROW(birkhoff_split(LaurentMatrix{{1, 1}, {1, 1}}), NotATransitionError);
  EXPECT_THROW(h0_count(LaurentMatrix{{1, 1}, {1, 1}}), NotATransitionError);
}

TEST(BirkhoffFactor, FactorsReassemble) {
  for (std::int64_t l = -5; l <= 10; ++l)
    for (Side side : {Side::left, Side::right}) {
      const LaurentMatrix m = jet_transition(l, side);
      const auto f = birkhoff_factor(m);
      EXPECT_EQ(f.product(), m);
      EXPECT_TRUE(exponents_within(f.left, true));
      EXPECT_TRUE(exponents_within(f.right, false));
      EXPECT_TRUE(constant_nonzero_det(f.left));
      EXPECT_TRUE(constant_nonzero_det(f.right));
    }
}

TEST(H0Count, Examples) {
  EXPECT_EQ(h0_count(LaurentMatrix::identity(2)), 2);
  EXPECT_EQ(h0_count(diag({1, 1})), 4);
  EXPECT_EQ(h0_count(jet_transition(1, Side::left)), 2);
  EXPECT_EQ(h0_count(diag({-1, -3})), 0);
  for (std::int64_t d = -4; d <= 8; ++d) EXPECT_EQ(h0_count(diag({d})), std::max<std::int64_t>(0, d + 1));
}

TEST(SplittingViaH0, Examples) {
  EXPECT_EQ(splitting_via_h0(diag({3})), SplittingType({3}));
  EXPECT_EQ(splitting_via_h0(jet_transition(3, Side::right)), SplittingType({1, 3}));
  std::mt19937_64 rng(42);
  const LaurentMatrix m = testkit::random_unimodular(rng, 2, 1) * diag({2, 0}) * testkit::random_unimodular(rng, 2, -1);
  EXPECT_EQ(splitting_via_h0(m), SplittingType({2, 0}));
}

TEST(JetSplittings, LeftAndRightFamilies) {
  for (std::int64_t l = 1; l <= 10; ++l) {
    EXPECT_EQ(birkhoff_split(jet_transition(l, Side::left)), SplittingType({l - 1, l - 1}));
    EXPECT_EQ(birkhoff_split(jet_transition(l, Side::right)), SplittingType({l - 2, l}));
  }
  for (std::int64_t l = -5; l <= 10; ++l) {
    const auto left = birkhoff_split(jet_transition(l, Side::left));
    const auto right = birkhoff_split(jet_transition(l, Side::right));
    EXPECT_EQ(left == right, l == 0) << l;
    EXPECT_EQ(deg_rk(LineBundleSum::from_degrees(1, left.degrees)),
              deg_rk(LineBundleSum::from_degrees(1, right.degrees)));
    for (Side side : {Side::left, Side::right}) {
      const LaurentMatrix m = jet_transition(l, side);
      const auto s = birkhoff_split(m);
      EXPECT_EQ(splitting_via_h0(m), s);
      BigInt expected = 0;
      for (auto a : s.degrees) expected += std::max<std::int64_t>(0, a + 1);
      EXPECT_EQ(h0_count(m), expected);
    }
  }
}

TEST(BirkhoffProperty, InvariantUnderUnimodularFactors) {
  std::mt19937_64 rng(1729);
  std::uniform_int_distribution<int> size(2, 3), degree(-3, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = size(rng);
    std::vector<std::int64_t> degrees;
    for (std::size_t i = 0; i < r; ++i) degrees.push_back(degree(rng));
    const LaurentMatrix base = trial % 3 == 0 ? jet_transition(degrees[0], trial % 2 ? Side::left : Side::right)
                                              : diag(degrees);
    const SplittingType expected = birkhoff_split(base);
    const LaurentMatrix m =
        testkit::random_unimodular(rng, base.size(), 1) * base * testkit::random_unimodular(rng, base.size(), -1);
    const SplittingType got = birkhoff_split(m);
    EXPECT_EQ(got, expected) << m.to_string();
    const LaurentPoly det = m.determinant();
    ASSERT_TRUE(det.is_monomial());
    EXPECT_EQ(got.total(), det.min_degree());
    EXPECT_EQ(splitting_via_h0(m), got);
    const auto f = birkhoff_factor(m);
    EXPECT_EQ(f.product(), m);
    EXPECT_TRUE(exponents_within(f.left, true));
    EXPECT_TRUE(exponents_within(f.right, false));
  }
}

TEST(AtiyahClass, Examples) {
  EXPECT_EQ(atiyah_class_p1(0), 0);
  EXPECT_EQ(atiyah_class_p1(3), 3);
  EXPECT_EQ(atiyah_class_p1(-4), -4);
  EXPECT_EQ(dlog(u(3)).coefficient, LaurentPoly::monomial(3, -1));
}

TEST(AtiyahClass, CoboundariesDoNotChangeTheClass) {
  // adding f0(u) - f1(1/u) with f0 in Q[u], f1 in Q[1/u] never touches u^{-1}
  const CechOneForm base = dlog(u(5));
  const CechOneForm shifted{base.coefficient + LaurentPoly::parse("2 + u^3 - 4*u^-2 + u^-7")};
  EXPECT_EQ(shifted.cohomology_class(), base.cohomology_class());
}

TEST(AtiyahClassProperty, Additive) {
  for (std::int64_t a = -10; a <= 10; ++a)
    for (std::int64_t b = -10; b <= 10; ++b)
      EXPECT_EQ(atiyah_class_p1(a + b), atiyah_class_p1(a) + atiyah_class_p1(b));
}

TEST(VerifyCorrP1, Examples) {
  const Report zero = verify_corr_p1(0);
  EXPECT_EQ(zero.verdict, Verdict::verified);
  EXPECT_EQ(std::get<std::vector<BigInt>>(zero.steps[1].values[1].value), (std::vector<BigInt>{0, -2}));
  EXPECT_EQ(std::get<std::vector<BigInt>>(zero.steps[2].values[1].value), (std::vector<BigInt>{0, -2}));

  const Report one = verify_corr_p1(1);
  EXPECT_EQ(one.verdict, Verdict::verified);
  EXPECT_EQ(std::get<std::string>(one.steps[0].values[1].value), "1");
  EXPECT_EQ(std::get<std::vector<BigInt>>(one.steps[1].values[1].value), (std::vector<BigInt>{0, 0}));
  EXPECT_EQ(std::get<std::vector<BigInt>>(one.steps[2].values[1].value), (std::vector<BigInt>{1, -1}));

  const Report neg = verify_corr_p1(-3);
  EXPECT_EQ(neg.verdict, Verdict::verified);
  EXPECT_EQ(std::get<std::string>(neg.steps[3].values[1].value), "false");
}

TEST(LaurentMatrixText, ParseRoundTrip) {
  const LaurentMatrix m = LaurentMatrix::parse("# left jet, l = 2\nu^2 ; 0\n2*u; -1\n\n");
  EXPECT_EQ(m, jet_transition(2, Side::left));
  EXPECT_EQ(LaurentMatrix::parse(m.to_string()), m);
  EXPECT_THROW(LaurentMatrix::parse("1; 0\n0"), ParseError);
  EXPECT_THROW(LaurentMatrix::parse("1; x\n0; 1"), ParseError);
  EXPECT_THROW(LaurentMatrix::parse("\n# nothing\n"), ParseError);
}
