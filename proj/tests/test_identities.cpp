#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "conedet/identities.hpp"

using namespace conedet;

namespace {

// Drops the (1/2) log 2 pi term of the a = 1 closed form.
struct broken_cap : reference_formulas {
  static double logdet_poincare_cap(double eta) {
    return reference_formulas::logdet_poincare_cap(eta) + 0.5 * constants::log_two_pi;
  }
};

// Asymptotic expansion with the wrong power of eta in the remainder.
struct broken_asymptotics : reference_formulas {
  static double small_eta_asymptotics(int w, double eta) {
    return reference_formulas::small_eta_asymptotics(w, eta) + 1e-3 * eta;
  }
};

const IdentityReport& find(const std::vector<IdentityReport>& reports, const std::string& name) {
  const auto it = std::find_if(reports.begin(), reports.end(),
                               [&](const auto& r) { return r.identity_name == name; });
  if (it == reports.end()) throw std::runtime_error("missing report " + name);
  return *it;
}

}  // namespace

TEST(Identities, AllPassAtDefaultTolerance) {
  const auto reports = verify_identities(1e-8);
  EXPECT_EQ(reports.size(), 19u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed) << r.identity_name << " diff=" << r.abs_diff << " tol=" << r.tolerance;
    EXPECT_TRUE(std::isfinite(r.abs_diff));
    EXPECT_GE(r.abs_diff, 0.0);
  }
  EXPECT_TRUE(all_passed(reports));
}

TEST(Identities, SortedByName) {
  const auto reports = verify_identities(1e-8);
  EXPECT_TRUE(std::is_sorted(reports.begin(), reports.end(),
                             [](const auto& l, const auto& r) { return l.identity_name < r.identity_name; }));
}

TEST(Identities, Deterministic) {
  const auto first = verify_identities(1e-8);
  const auto second = verify_identities(1e-8);
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].identity_name, second[i].identity_name);
    EXPECT_EQ(first[i].lhs, second[i].lhs);
    EXPECT_EQ(first[i].rhs, second[i].rhs);
    EXPECT_EQ(first[i].abs_diff, second[i].abs_diff);
  }
}

TEST(Identities, BrokenCapFormulaIsCaught) {
  const auto reports = verify_identities<broken_cap>(1e-8);
  EXPECT_FALSE(all_passed(reports));
  EXPECT_FALSE(find(reports, "a1_closed_form").passed);
  EXPECT_FALSE(find(reports, "pa_disk").passed);
  EXPECT_TRUE(find(reports, "barnes_bridge").passed);
}

TEST(Identities, BrokenAsymptoticsIsCaught) {
  const auto reports = verify_identities<broken_asymptotics>(1e-8);
  EXPECT_FALSE(find(reports, "asymptotic_residual_ratio").passed);
  EXPECT_FALSE(find(reports, "fp_discrepancy_constant").passed);
}

TEST(Identities, TolerancePolicies) {
  const auto reports = verify_identities(1e-16);
  EXPECT_FALSE(all_passed(reports));
  EXPECT_EQ(find(reports, "orbifold_equality").tolerance, 1e-16);
  EXPECT_EQ(find(reports, "pa_disk").tolerance, 1e-7);
  EXPECT_EQ(find(reports, "k_continuity").tolerance, 1e-7);
  EXPECT_EQ(find(reports, "asymptotic_residual_bound").tolerance, 1e-4);
  EXPECT_EQ(find(reports, "asymptotic_residual_ratio").tolerance, 0.05);
  EXPECT_TRUE(find(reports, "zeta0_symmetry").passed);
  const auto loose = verify_identities(1.0);
  EXPECT_EQ(find(loose, "barnes_bridge").tolerance, 1e-8);
}

TEST(Identities, ResidualRatioNearQuarter) {
  const auto r = find(verify_identities(1e-8), "asymptotic_residual_ratio");
  EXPECT_NEAR(r.lhs, 0.25, 0.05);
  EXPECT_EQ(r.rhs, 0.25);
}

TEST(Identities, QuadratureFailureBecomesFailedReport) {
  QuadratureConfig starved;
  starved.abs_tol = 1e-15;
  starved.max_subdivisions = 1;
  const auto reports = verify_identities(1e-8, {}, starved);
  const auto& r = find(reports, "barnes_bridge");
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(std::isinf(r.abs_diff));
}

TEST(Identities, RejectsNonPositiveTolerance) {
  EXPECT_THROW(verify_identities(0.0), domain_error);
  EXPECT_THROW(verify_identities(-1.0), domain_error);
}
