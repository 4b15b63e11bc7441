#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "lapspread/certify.hpp"
#include "lapspread/families.hpp"
#include "support.hpp"

using namespace lapspread;

namespace {

const std::set<std::string> kNewBounds = {"alpha1", "beta1",      "spread_cor32", "alpha2",
                                          "beta2",  "spread_ee7", "spread_ee8"};

std::set<std::string> tight_new_bounds(const ExtremalityCertificate& c) {
  std::set<std::string> out;
  for (const auto& b : c.tight_bounds()) {
    if (kNewBounds.count(b)) out.insert(b);
  }
  return out;
}

}  // namespace

TEST(Certify, EqualityHoldsOnStronglyRegularGraphs) {
  for (const auto& g : {gen_cycle(5), gen_petersen(), gen_complete_bipartite(3, 3)}) {
    const auto p = structural_params(g);
    const auto s = laplacian_spectrum(g);
    for (std::size_t k = 0; k + 1 < g.order(); ++k) {
      EXPECT_TRUE(equality_conditions(g, p, s.values[k], s.vectors[k]).holds);
    }
  }
}

TEST(Certify, FanHubEigenvector) {
  const std::size_t t = 4;
  const auto g = gen_fan(t);
  const auto p = structural_params(g);
  std::vector<double> x(2 * t + 1, 1.0);
  x.back() = -2.0 * static_cast<double>(t);
  const auto ev = equality_conditions(g, p, 2.0 * t + 1, x);
  EXPECT_TRUE(ev.holds);
  EXPECT_TRUE(ev.violating_pairs.empty());
}

TEST(Certify, Z8AlgebraicConnectivityFails) {
  const auto g = gen_named(NamedGraph::Z8);
  const auto p = structural_params(g);
  const auto s = laplacian_spectrum(g);
  const auto c = certify_graph(g);
  const auto& last = c.eigenvalues.back();
  EXPECT_NEAR(last.eigenvalue, (11 - std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_FALSE(last.conditions_any);
  EXPECT_FALSE(last.tight_some);
  const auto ev = equality_conditions(g, p, s.values[6], s.vectors[6]);
  EXPECT_FALSE(ev.holds);
  EXPECT_FALSE(ev.violating_pairs.empty());
}

TEST(Certify, RejectsNonEigenpairs) {
  const auto g = gen_cycle(5);
  const auto p = structural_params(g);
  const std::vector<double> x = {1, 0, 0, 0, 0};
  EXPECT_THROW(equality_conditions(g, p, 2.0, x), std::invalid_argument);
  const std::vector<double> zero(5, 0.0);
  EXPECT_THROW(equality_conditions(g, p, 2.0, zero), std::invalid_argument);
}

TEST(Certify, X8TightSet) {
  const auto c = certify_graph(gen_named(NamedGraph::X8));
  for (const char* b : {"alpha1", "alpha2", "beta1", "beta2", "spread_ee7", "maineq_l1", "maineq_ln1"}) {
    EXPECT_TRUE(c.tight(b)) << b;
  }
  EXPECT_TRUE(c.biconditional_holds());
}

TEST(Certify, Z8TightOnlyOnAlpha1AndAlpha2) {
  const auto c = certify_graph(gen_named(NamedGraph::Z8));
  EXPECT_EQ(tight_new_bounds(c), (std::set<std::string>{"alpha1", "alpha2"}));
  EXPECT_TRUE(c.tight("maineq_l1"));
  EXPECT_FALSE(c.tight("maineq_ln1"));
}

TEST(Certify, U8cTightOnlyOnAlpha1AndAlpha2) {
  const auto c = certify_graph(gen_named(NamedGraph::U8c));
  EXPECT_EQ(tight_new_bounds(c), (std::set<std::string>{"alpha1", "alpha2"}));
}

TEST(Certify, U8TightOnLowerSide) {
  const auto c = certify_graph(gen_named(NamedGraph::U8));
  EXPECT_EQ(tight_new_bounds(c), (std::set<std::string>{"beta1", "beta2"}));
}

TEST(Certify, CompleteBipartiteAndFan) {
  const auto kab = certify_graph(gen_complete_bipartite(2, 5));
  EXPECT_EQ(tight_new_bounds(kab), (std::set<std::string>{"beta1"}));
  EXPECT_TRUE(kab.tight("maineq_ln1"));
  const auto fan = certify_graph(gen_fan(3));
  EXPECT_EQ(tight_new_bounds(fan), (std::set<std::string>{"beta1"}));
  EXPECT_TRUE(fan.tight("maineq_l1"));
}

TEST(Certify, StronglyRegularGraphsAreTightEverywhere) {
  for (const auto& g : {gen_cycle(5), gen_petersen(), gen_complete_bipartite(3, 3),
                        gen_kn_minus_cycles(CyclePartition({3, 3, 3}))}) {
    const auto c = certify_graph(g);
    for (const char* b : {"maineq_l1", "maineq_ln1", "alpha1", "beta1", "spread_cor32", "alpha2", "beta2",
                          "spread_ee7", "spread_ee8"}) {
      EXPECT_TRUE(c.tight(b)) << b;
    }
    for (const auto& e : c.eigenvalues) {
      EXPECT_TRUE(e.tight_all);
      EXPECT_TRUE(e.conditions_all);
    }
  }
}

TEST(Certify, GapsHaveValiditySign) {
  for (const auto& g : support::random_connected_suite(60, 4, 11, 99)) {
    const auto c = certify_graph(g);
    for (const auto& r : c.rows) {
      if (r.gap) EXPECT_GE(*r.gap, -kValidityTolerance * std::max(1.0, std::abs(*r.value.value))) << r.bound;
      EXPECT_EQ(r.tight, r.gap && std::abs(*r.gap) <= kTightnessTolerance);
    }
    EXPECT_TRUE(c.biconditional_holds()) << c.graph6;
  }
}

TEST(Certify, CompleteGraphGivesPartialCertificate) {
  const auto c = certify_graph(gen_complete(5));
  EXPECT_FALSE(c.lambda_mu.has_value());
  EXPECT_FALSE(c.find("alpha1")->value.defined());
  EXPECT_FALSE(c.tight("maineq_l1"));
  EXPECT_TRUE(c.find("merris")->value.defined());
  EXPECT_TRUE(c.biconditional_holds());
  EXPECT_THROW(c.tight("no_such_bound"), std::out_of_range);
}

TEST(Certify, RepeatedEigenvaluesAreGrouped) {
  const auto c = certify_graph(gen_petersen());
  ASSERT_EQ(c.eigenvalues.size(), 2u);
  EXPECT_EQ(c.eigenvalues[0].multiplicity, 4u);
  EXPECT_EQ(c.eigenvalues[1].multiplicity, 5u);
  EXPECT_THROW(certify_graph(disjoint_union(gen_path(2), gen_path(2))), std::invalid_argument);
}

TEST(Certify, Table1DefaultRows) {
  const auto rows = table1();
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[2].name, "Y8");
  EXPECT_EQ(rows[4].name, "U8");
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_NEAR(rows[2].computed[k], (std::array<double, 6>{8, 8, 8, 4, 4, 4})[k], 1e-9);
    EXPECT_NEAR(rows[4].computed[k], (std::array<double, 6>{6, 8, 8, 2, 2, 2})[k], 1e-9);
  }
  for (const auto& r : rows) {
    EXPECT_TRUE(r.matches) << r.name;
    if (r.name.starts_with("K_")) {
      EXPECT_EQ(r.printed_deviations, (std::vector<std::string>{"alpha2"}));
    } else {
      EXPECT_TRUE(r.printed_deviations.empty()) << r.name;
    }
  }
  const auto& kab = rows[6];
  EXPECT_NEAR(kab.computed[1], (12 + std::sqrt(28.0)) / 2, 1e-12);
  EXPECT_NEAR(kab.computed[5], -1.0, 1e-12);
}

TEST(Certify, Table1ParameterGrid) {
  for (auto [a, b] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 3}, {2, 5}, {3, 7}}) {
    for (std::size_t t : {2u, 3u, 5u}) {
      for (const auto& r : table1({a, b, t})) EXPECT_TRUE(r.matches) << r.name << " max error " << r.max_error;
    }
  }
  const auto f2 = table1({2, 5, 2});
  EXPECT_NEAR(f2[7].computed[1], 4 + std::sqrt(3.0), 1e-12);
  const auto k37 = table1({3, 7, 3});
  EXPECT_NEAR(k37[6].computed[1], (17 + std::sqrt(57.0)) / 2, 1e-12);
}

TEST(Certify, Table1ParameterErrors) {
  EXPECT_THROW(table1({3, 3, 2}), std::invalid_argument);
  EXPECT_THROW(table1({0, 3, 2}), std::invalid_argument);
  EXPECT_THROW(table1({2, 5, 1}), std::invalid_argument);
}
