#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace opart;
using testutil::matches_golden;
using testutil::table6k;

TEST(HalfPowerPoly, EvaluateAndCancel) {
  Precision b = 128;
  HalfPowerPoly p;
  p.add(0, CertInterval::exact(1L, b), 0, "one").add(Rational(1, 2), CertInterval::exact(2L, b), 0, "half");
  EXPECT_TRUE(p.evaluate(4L, b).contains(2L));
  HalfPowerPoly q;
  q.add(Rational(1, 2), CertInterval::exact(2L, b), 0, "half").add(3, CertInterval::exact(5L, b), 1, "tail");
  HalfPowerPoly d = p - q;
  EXPECT_EQ(d.size(), 2u);  // "half" cancelled exactly
  EXPECT_EQ(d.find("half"), nullptr);
  ASSERT_NE(d.find("tail"), nullptr);
  EXPECT_TRUE(d.find("tail")->coeff.contains(-5L));
  EXPECT_EQ((p + q).size(), 4u);
}

TEST(HalfPowerPoly, SignInLogDomain) {
  Precision b = 128;
  // 1/n - 10^6/n^2 is positive only for n > 10^6
  HalfPowerPoly p;
  p.add(1, CertInterval::exact(1L, b)).add(2, CertInterval::exact(-1000000L, b));
  EXPECT_EQ(p.sign_log_domain(log(CertInterval::exact(1000L, b))), Tri::Less);
  EXPECT_EQ(p.sign_log_domain(CertInterval::exact(1000000000L, b)), Tri::Greater);
  HalfPowerPoly empty;
  EXPECT_EQ(empty.sign_log_domain(CertInterval::exact(5L, b)), Tri::Undetermined);
}

TEST(Turan, URatioValues) {
  const auto& t = table6k();
  EXPECT_TRUE(matches_golden(u_alpha(t, 3, 0, 128).u, golden::u0_3));
  EXPECT_TRUE(matches_golden(u_alpha(t, 4, 0, 128).u, golden::u0_4));
  EXPECT_TRUE(matches_golden(u_alpha(t, 5, 0, 128).u, golden::u0_5));
  EXPECT_THROW(u_alpha(t, 1, 0, 128), DomainError);
}

TEST(Turan, SPlusAndSMinusBounds) {
  const auto& t = table6k();
  for (std::size_t n : {1ul, 2ul, 7ul, 50ul, 1296ul, 3000ul})
    EXPECT_EQ(s_bounds_check(t, n, Side::Plus).verdict, Verdict::Holds) << n;
  for (std::size_t n : {2ul, 3ul, 7ul, 687ul, 3000ul})
    EXPECT_EQ(s_bounds_check(t, n, Side::Minus).verdict, Verdict::Holds) << n;
}

TEST(Turan, PrintedB6VariantFails) {
  // the printed sign of the n^{-3} coefficient is inconsistent with the expansion
  EXPECT_EQ(s_bounds_check(table6k(), 100, Side::Minus, B6Variant::AsPrinted).verdict, Verdict::Fails);
  auto corrected = s_minus_coefficients(128, B6Variant::Corrected);
  auto printed = s_minus_coefficients(128, B6Variant::AsPrinted);
  EXPECT_TRUE(corrected[6].is_positive());
  EXPECT_TRUE(printed[6].is_negative());
}

TEST(Turan, PowerQuotient) {
  EXPECT_EQ(power_quotient_check(5505, 1).verdict, Verdict::Holds);
  EXPECT_EQ(power_quotient_check(6000, Rational(5, 2)).verdict, Verdict::Holds);
  EXPECT_THROW(power_quotient_check(100, 1), HypothesisError);
  EXPECT_FALSE(power_quotient_check(100, 1, HypothesisPolicy::Record).in_cutoff);
}

TEST(Turan, PbarPower) {
  const auto& t = table6k();
  for (std::size_t n : {2ul, 3ul, 100ul, 687ul, 3000ul})
    EXPECT_EQ(pbar_power_check(t, n).verdict, Verdict::Holds) << n;
}

TEST(Turan, FourUBoundsAtDeskScale) {
  const auto& t = table6k();
  for (long a : {0L, 1L}) {
    Theorem35Check c = theorem35_check(t, 5505, a);
    EXPECT_EQ(c.verdict, Verdict::Holds);
    EXPECT_EQ(c.lower, Verdict::Holds);
    EXPECT_EQ(c.upper, Verdict::Holds);
    EXPECT_EQ(c.lower1, Verdict::Holds);
    EXPECT_EQ(c.upper1, Verdict::Holds);
  }
  EXPECT_THROW(theorem35_check(t, 100, 0), HypothesisError);
}

TEST(Turan, IdentityResidualEnclosesZero) {
  for (const char* a : {"0", "1", "5/2"}) {
    for (long n : {10L, 100L, 1000L}) {
      MPolynomials m = m_polynomials(BigInt(n), parse_rational(a), 256);
      EXPECT_TRUE(m.identity_residual.contains_zero()) << a << " " << n;
      EXPECT_LT(m.identity_residual.width(), 1e-20);
      EXPECT_TRUE(m.expansion_upper.contains_zero());
      EXPECT_TRUE(m.expansion_lower.contains_zero());
      EXPECT_TRUE(m.expansion_square.contains_zero());
    }
  }
}

TEST(Turan, ErrorMajorantsNeedTheCoefficientPremise) {
  MPolynomials small = m_polynomials(BigInt(1000), 0, 256);
  EXPECT_EQ(small.coefficient_premise, Verdict::Fails);
  CutoffValue n2 = turan_cutoff_set(0).N2;
  MPolynomials big = m_polynomials(n2.value(), 0, 1024);
  EXPECT_EQ(big.coefficient_premise, Verdict::Holds);
  ASSERT_EQ(big.errors.size(), 5u);
  for (const auto& e : big.errors) EXPECT_EQ(e.verdict, Verdict::Holds) << e.name;
  EXPECT_EQ(big.errors[2].count, 40u);
  EXPECT_EQ(big.errors[3].count, 45u);
}

TEST(Turan, RefinementsAtAstronomicalN) {
  CutoffValue nu = turan_cutoff_set(0).n_u;
  RefinementCheck r = refinement_check(nu, 0);
  EXPECT_EQ(r.U_below_Ustar, Verdict::Holds);
  EXPECT_EQ(r.L_above_Lstar, Verdict::Holds);
  EXPECT_EQ(r.U1_below_U1star, Verdict::Holds);
  EXPECT_EQ(r.L1_above_L1star, Verdict::Holds);
  CutoffValue ten = CutoffValue::exp_form(nu.ln() * 10L);
  RefinementCheck r10 = refinement_check(ten, 0);
  EXPECT_EQ(r10.U_below_Ustar, Verdict::Holds);
  EXPECT_EQ(r10.L_above_Lstar, Verdict::Holds);
}

TEST(Turan, LogLinearVersusRoot) {
  CutoffValue c = log_linear_cutoff(4096 + Rational(2147483648), 2, Rational(1, 4));
  ASSERT_FALSE(c.is_integer());
  EXPECT_TRUE(c.ln().contains(1073743872L));
  EXPECT_EQ(log_linear_vs_root_check(4096 + Rational(2147483648), 2, c, Rational(1, 4)), Verdict::Holds);
  CutoffValue p = log_linear_cutoff(1, 2, Rational(1, 4));
  EXPECT_EQ(p.value(), BigInt("274877906944"));
  EXPECT_EQ(log_linear_vs_root_check(1, 2, p, Rational(1, 4)), Verdict::Holds);
  EXPECT_EQ(log_linear_vs_root_check(1, 2, CutoffValue(BigInt(100)), Rational(1, 4)), Verdict::Fails);
  EXPECT_THROW(log_linear_cutoff(1, 2, Rational(1, 3)), DomainError);
  EXPECT_THROW(log_linear_vs_root_check(1, 1, p, Rational(1, 4)), DomainError);
}

TEST(Turan, TuranFormIsTheScaledDiscriminant) {
  const auto& t = table6k();
  for (std::size_t n : {2ul, 4ul, 50ul}) {
    Precision b = 256;
    CertInterval a0 = r_alpha_value(t, n - 1, 0, b).value, a1 = r_alpha_value(t, n, 0, b).value;
    CertInterval a2 = r_alpha_value(t, n + 1, 0, b).value, a3 = r_alpha_value(t, n + 2, 0, b).value;
    CertInterval ratio = jensen_discriminant(t, n, 0, b) / turan_form(a0, a1, a2, a3);
    EXPECT_TRUE(ratio.contains(27L)) << n;
  }
}

TEST(Turan, ReverseInequalityAndJensenAgree) {
  const auto& t = table6k();
  for (std::size_t n : {2ul, 3ul, 4ul, 5ul, 100ul, 2999ul}) {
    TuranReport r = reverse_turan_check(t, n, 0);
    EXPECT_EQ(r.verdict, Verdict::Holds) << n;
    EXPECT_TRUE(r.forms_agree);
    EXPECT_EQ(r.cubic_class, CubicClass::OneRealTwoComplex);
    EXPECT_FALSE(r.in_cutoff);
  }
  // u(3) < 1, so AM-GM does not apply at n = 3; u(4), u(5) > 1 so it does at 4
  EXPECT_FALSE(reverse_turan_check(t, 3, 0).amgm_applies);
  EXPECT_TRUE(reverse_turan_check(t, 4, 0).amgm_applies);
}
