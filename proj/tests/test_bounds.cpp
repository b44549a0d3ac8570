#include <cmath>

#include <gtest/gtest.h>

#include "klfree/bounds.hpp"
#include "klfree/oracle.hpp"

using namespace klfree;

TEST(Bounds, LowerBoundIsTuranEdgeCount) {
  EXPECT_EQ(lower_bound_log2(100, 5), turan_edge_count(100, 4));
  EXPECT_EQ(lower_bound_log2(100, 5), 3750);
  EXPECT_THROW(lower_bound_log2(2, 3), std::invalid_argument);
}

TEST(Bounds, TuranFloorBelowEdgeCountProperty) {
  for (std::uint64_t n = 3; n <= 200; n += 7)
    for (int l = 3; l <= std::min<int>(n, 9); ++l)
      EXPECT_LE(turan_display_floor(n, l), Rational(turan_edge_count(n, l - 1))) << n << "," << l;
}

TEST(Bounds, SandwichAgainstOracle) {
  for (int n = 3; n <= 6; ++n)
    for (int l = 3; l <= n; ++l) EXPECT_LE(pow2(static_cast<std::uint64_t>(lower_bound_log2(n, l))), count_free_graphs(n, l).count);
}

TEST(Bounds, UpperForms) {
  const Rational u = upper_bound_log2(10, 3, 0.5);
  const Rational d = to_rational(0.5);
  EXPECT_EQ(u, (1 - (1 - d) / 2) * 50 + d * Rational(100, 3));
  EXPECT_LE(upper_bound_log2_binomial(10, 3, 0.5), u);
  for (std::uint64_t n : {10u, 100u, 1000u})
    EXPECT_GE(upper_bound_log2(n, 4, 0.01), main_term_log2(n, 4));
}

TEST(Bounds, LogModeMatchesExact) {
  const Order ex = Order::exact(1000);
  const Order lg = Order::from_log2(std::log2(1000.0));
  EXPECT_NEAR(main_term_log2(ex, 4).ln(), main_term_log2(lg, 4).ln(), 1e-9);
  EXPECT_NEAR(upper_bound_log2(ex, 4, 0.1).ln(), upper_bound_log2(lg, 4, 0.1).ln(), 1e-9);
  EXPECT_NEAR(upper_bound_log2_binomial(ex, 4, 0.1).ln(), upper_bound_log2_binomial(lg, 4, 0.1).ln(), 1e-9);
  EXPECT_NEAR(turan_display_floor(ex, 4).ln(), turan_display_floor(lg, 4).ln(), 1e-9);
  EXPECT_NEAR(k_threshold(ex, 4, 0.1).ln(), k_threshold(lg, 4, 0.1).ln(), 1e-9);
}

TEST(Supersaturation, GeneralizedBinomial) {
  EXPECT_EQ(generalized_binomial(Rational(6), 3), 20);
  EXPECT_EQ(generalized_binomial(Rational(5, 2), 2), Rational(15, 8));
  EXPECT_DOUBLE_EQ(generalized_binomial(2.5, 2), 15.0 / 8.0);
  EXPECT_EQ(generalized_binomial(Rational(2), 3), 0);
}

TEST(Supersaturation, BoundAgreesWithOracle) {
  EXPECT_EQ(supersat_bound(6, Rational(3), 3), 8);
  EXPECT_NEAR(supersat_bound(6.0, 3.0, 3), 8.0, 1e-12);
  for (std::uint64_t n = 3; n <= 6; ++n)
    for (std::uint64_t t = 2; t <= n; ++t) {
      const Rational m_exact = (1 - Rational(1, t)) * Rational(BigInt(n * n), 2);
      BigInt m = numerator(m_exact) / denominator(m_exact);
      if (Rational(m) < m_exact) m += 1;
      const auto r = min_cliques_at_edge_count(static_cast<int>(n), 3, static_cast<std::uint64_t>(m));
      EXPECT_GE(Rational(r.min_count), supersat_bound(n, Rational(t), 3)) << n << "," << t;
    }
}

TEST(Supersaturation, ThresholdAndT) {
  EXPECT_EQ(supersat_t(3, 0.5), Rational(4));
  const SupersatThreshold s = supersat_threshold(Order::exact(8), 3, 0.5);
  EXPECT_EQ(*s.edge_threshold_exact, Rational(24));
  EXPECT_EQ(*s.k_value_exact, Rational(8 * 8 * 8, 64) * 4);
}

TEST(CaseAnalysis, LargeEllCase) {
  const CaseAnalysis c = case_analysis(Order::exact(100), 3, 0.5);
  EXPECT_TRUE(c.large_ell);
  ASSERT_EQ(c.steps.size(), 2u);
  EXPECT_EQ(c.steps[0].step, "k_vs_power");
  EXPECT_TRUE(c.pass());
  // C(100,3)/e^3 and 100^3/27 as frozen by the pre-build oracle.
  EXPECT_NEAR(c.steps[1].lhs.value(), 8050.57, 0.01);
  EXPECT_NEAR(c.steps[1].rhs.value(), 37037.04, 0.01);
}

TEST(CaseAnalysis, SmallEllCase) {
  const CaseAnalysis c = case_analysis(Order::from_log2(30.0), 3, 0.1);
  EXPECT_FALSE(c.large_ell);
  EXPECT_EQ(c.steps[0].step, "k_vs_product");
  EXPECT_TRUE(c.steps[0].pass);
  EXPECT_TRUE(c.pass());
}

TEST(CaseAnalysis, BoundaryGoesToLargeCase) {
  EXPECT_TRUE(case_analysis(Order::exact(50), 4, 0.25).large_ell);
}

TEST(FinalBound, Forms) {
  EXPECT_NEAR(final_count_bound(3, 0.5, 10, 2.0), 2.0 + 0.75 * 50.0, 1e-12);
  EXPECT_THROW(final_count_bound(3, 0.5, 10, -1.0), std::invalid_argument);
  const LogMagnitude lg = final_count_bound(3, 0.5, Order::exact(10), LogMagnitude::from_value(2.0));
  EXPECT_NEAR(lg.value(), 39.5, 1e-9);
}

TEST(BoundsReportTest, ExactWithOracle) {
  const BoundsReport r = bounds_report(Order::exact(6), 3, 0.2, count_free_graphs(6, 3).count);
  EXPECT_EQ(*r.lower_log2.exact, "9");
  EXPECT_EQ(*r.exact_count, 5789);
  EXPECT_NEAR(*r.gap_to_main_term, std::log2(5789.0) - 7.5, 1e-12);
  EXPECT_TRUE(r.supersat && r.cases);
}

TEST(BoundsReportTest, LogMode) {
  const BoundsReport r = bounds_report(Order::from_log2(1e6), 4, std::nullopt);
  EXPECT_FALSE(r.lower_log2.exact);
  EXPECT_NEAR(r.lower_log2.log2, std::log2(1.0 / 3.0) + 2e6, 1e-6);
  EXPECT_FALSE(r.upper_log2);
  EXPECT_THROW(bounds_report(Order::exact(2), 3, std::nullopt), std::invalid_argument);
}
