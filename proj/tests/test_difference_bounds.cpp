#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace opart;
using testutil::matches_golden;
using testutil::table6k;

TEST(Differences, ForwardAndSigned) {
  auto sq = [](std::size_t m) { return CertInterval::exact(long(m * m), 64); };
  auto cube = [](std::size_t m) { return CertInterval::exact(long(m * m * m), 64); };
  EXPECT_TRUE(forward_difference(sq, 2, 5).contains(2L));
  EXPECT_TRUE(forward_difference(cube, 3, 7).contains(6L));
  EXPECT_TRUE(signed_difference(cube, 3, 7).contains(-6L));
  EXPECT_TRUE(forward_difference(sq, 1, 3).contains(7L));
  EXPECT_TRUE(forward_difference(sq, 0, 3).contains(9L));
}

TEST(Differences, SignedDiffLogGoldens) {
  const auto& t = table6k();
  EXPECT_TRUE(matches_golden(signed_diff_log(t, 2, 2, 0, 128).value, golden::sd_2_2_0));
  EXPECT_TRUE(matches_golden(signed_diff_log(t, 3, 2, 0, 128).value, golden::sd_3_2_0));
  EXPECT_TRUE(matches_golden(signed_diff_log(t, 4, 2, 0, 128).value, golden::sd_4_2_0));
  EXPECT_TRUE(matches_golden(signed_diff_log(t, 100, 2, 0, 256).value, golden::sd_100_2_0));
  EXPECT_TRUE(matches_golden(signed_diff_log(t, 1000, 2, 0, 256).value, golden::sd_1000_2_0, 25));
  EXPECT_TRUE(matches_golden(signed_diff_log(t, 500, 3, 1, 256).value, golden::sd_500_3_1, 25));
  EXPECT_TRUE(matches_golden(signed_diff_log(t, 2000, 2, Rational(5, 2), 256).value, golden::sd_2000_2_5_2, 25));
}

TEST(Differences, HPlusGIsTheDifference) {
  const auto& t = table6k();
  HGParts hg = hg_parts(t, 100, 2, 0, 256);
  EXPECT_TRUE(matches_golden(hg.H, golden::H_100_2_0, 25));
  EXPECT_TRUE(matches_golden(hg.G, golden::G_100_2, 20));
  EXPECT_EQ(tri_compare(hg.H + hg.G, signed_diff_log(t, 100, 2, 0, 256).value), Tri::Undetermined);
}

TEST(Differences, RangeErrors) {
  const auto& t = table6k();
  EXPECT_THROW(signed_diff_log(t, 6009, 2, 0, 128), IndexError);
  EXPECT_THROW(signed_diff_log(t, 0, 2, 0, 128), DomainError);
}

TEST(RemainderBound, HoldsAboveCutoffForR2AndR3) {
  const auto& t = table6k();
  for (unsigned r : {2u, 3u}) {
    std::size_t start = N1_cutoff(r).value().get_ui();
    for (std::size_t n : {start, start + 1, std::size_t(1000), std::size_t(2999)}) {
      BoundCheck c = lemma21_check(t, n, r);
      EXPECT_EQ(c.verdict, Verdict::Holds) << "r=" << r << " n=" << n;
      EXPECT_TRUE(c.in_cutoff);
    }
  }
}

TEST(RemainderBound, EnforcePolicyRejectsSmallN) {
  EXPECT_THROW(lemma21_check(table6k(), 50, 2, HypothesisPolicy::Enforce), HypothesisError);
  BoundCheck c = lemma21_check(table6k(), 50, 2, HypothesisPolicy::Record);
  EXPECT_FALSE(c.in_cutoff);
}

TEST(HSandwich, SeriesTailIsConservative) {
  Precision b = 256;
  CertInterval x = CertInterval::exact(100L, b);
  CertInterval dflt = lemma24_series(x, 2, b);
  CertInterval longer = lemma24_series(x, 2, b, 200);
  EXPECT_EQ(tri_compare(dflt, longer), Tri::Undetermined);
  // a one-term truncation with its tail still encloses the long sum
  CertInterval short_sum = lemma24_series(x, 2, b, 3);
  EXPECT_TRUE(mpfr_lessequal_p(short_sum.lo(), longer.lo()));
  EXPECT_TRUE(mpfr_greaterequal_p(short_sum.hi(), longer.hi()));
  EXPECT_THROW(lemma24_series(CertInterval::exact(Rational(1, 100), 128), 2, 128, 2), DomainError);
}

TEST(HSandwich, SandwichOfH) {
  for (unsigned r : {2u, 3u, 4u}) {
    for (std::size_t n : {std::size_t(lemma24_cutoff(r).get_ui()), std::size_t(100), std::size_t(5505)}) {
      BoundCheck c = lemma24_check(n, r, 0);
      EXPECT_EQ(c.verdict, Verdict::Holds) << "r=" << r << " n=" << n;
    }
  }
  EXPECT_EQ(lemma24_check(5505, 2, Rational(5, 2)).verdict, Verdict::Holds);
}

TEST(HSandwich, HypothesisPolicy) {
  EXPECT_THROW(UL_lemma24(4, 2, 0, 128), HypothesisError);
  EXPECT_NO_THROW(UL_lemma24(4, 2, 0, 128, HypothesisPolicy::Record));
  EXPECT_FALSE(lemma24_check(4, 2, 0).in_cutoff);
  EXPECT_THROW(UL_lemma24(10, 1, 0, 128), DomainError);
}

TEST(DifferenceSandwich, SandwichAtTheCutoff) {
  const auto& t = table6k();
  SandwichReport s = verify_theorem14(t, 5505, 2, 0);
  EXPECT_EQ(s.verdict, Verdict::Holds);
  EXPECT_TRUE(s.in_cutoff);
  EXPECT_TRUE(s.inner.is_positive());
  EXPECT_EQ(verify_theorem14(t, 6000, 3, 1).verdict, Verdict::Holds);
}

TEST(DifferenceSandwich, BelowCutoffIsExploratory) {
  SandwichReport s = verify_theorem14(table6k(), 10, 2, 0);
  EXPECT_FALSE(s.in_cutoff);
  EXPECT_EQ(s.verdict, Verdict::Fails);
  EXPECT_THROW(verify_theorem14(table6k(), 100, 1, 0), DomainError);
}

TEST(Asymptote, ApproachesThreePiOverFour) {
  AsymptoteScan s = asymptote_scan(table6k(), 2, 0, {1000, 4000}, 256);
  ASSERT_EQ(s.points.size(), 2u);
  EXPECT_TRUE(matches_golden(s.limit, golden::C_2));
  EXPECT_TRUE(matches_golden(s.points[0].scaled, golden::scaled_1000_2_0, 25));
  EXPECT_TRUE(matches_golden(s.points[1].scaled, golden::scaled_4000_2_0, 25));
  CertInterval d1000 = abs(s.points[0].scaled - s.limit), d4000 = abs(s.points[1].scaled - s.limit);
  EXPECT_EQ(certify_less(d4000, d1000), Verdict::Holds);
}

TEST(ConvexityAndRatio, ConvexityStartsAt4ForAlpha0) {
  const auto& t = table6k();
  EXPECT_EQ(corollary_checks(t, 2, 0).convexity, Verdict::Fails);
  EXPECT_EQ(corollary_checks(t, 3, 0).convexity, Verdict::Fails);
  EXPECT_EQ(corollary_checks(t, 4, 0).convexity, Verdict::Holds);
  EXPECT_EQ(exact_convexity(t, 3, 0), Verdict::Fails);
  EXPECT_EQ(exact_convexity(t, 4, 0), Verdict::Holds);
}

TEST(ConvexityAndRatio, ConvexityStartsAt19ForAlpha1) {
  const auto& t = table6k();
  EXPECT_EQ(corollary_checks(t, 18, 1).convexity, Verdict::Fails);
  EXPECT_EQ(corollary_checks(t, 19, 1).convexity, Verdict::Holds);
}

TEST(ConvexityAndRatio, Delta3SmallNAndLarge) {
  const auto& t = table6k();
  EXPECT_EQ(corollary_checks(t, 2, 0).delta3_negative, Verdict::Fails);
  EXPECT_EQ(corollary_checks(t, 3, 0).delta3_negative, Verdict::Holds);
  EXPECT_EQ(corollary_checks(t, 5505, 0).delta3_negative, Verdict::Holds);
  EXPECT_THROW(corollary_checks(t, 1, 0), DomainError);
}
