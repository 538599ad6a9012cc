// Copyright 2026 The bellscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bellscope/hvm.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "support/gallery.h"
#include "support/oracles.h"

using namespace bellscope;
using namespace bellscope::testing;

namespace {

constexpr std::size_t kMillion = 1000000;

}  // namespace

TEST(TrialRng, deterministic_and_uniform_range) {
    TrialRng a(5, 17);
    TrialRng b(5, 17);
    for (int i = 0; i < 100; ++i) {
        double u = a.uniform();
        ASSERT_EQ(u, b.uniform());
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
    EXPECT_NE(TrialRng(5, 17).next_u64(), TrialRng(5, 18).next_u64());
    EXPECT_NE(TrialRng(5, 17).next_u64(), TrialRng(6, 17).next_u64());
}

TEST(HiddenStateSpace, rejects_bad_masses) {
    EXPECT_THROW(HiddenStateSpace<int>::finite({1, 2}, {0.5, 0.6}), std::invalid_argument);
    EXPECT_THROW(HiddenStateSpace<int>::finite({1, 2}, {1.5, -0.5}), std::invalid_argument);
    EXPECT_THROW(HiddenStateSpace<int>::finite({1}, {0.5, 0.5}), std::invalid_argument);
    EXPECT_THROW(HiddenStateSpace<int>::uniform({}), std::invalid_argument);
    EXPECT_NO_THROW(HiddenStateSpace<int>::finite({1, 2, 3}, {0.0, 1.0, 0.0}));
}

TEST(HiddenStateSpace, zero_mass_states_never_sampled) {
    auto space = HiddenStateSpace<int>::finite({1, 2, 3}, {0.0, 1.0, 0.0});
    for (std::size_t i = 0; i < 1000; ++i) {
        TrialRng rng(1, i);
        ASSERT_EQ(space.sample(rng), 2);
    }
}

TEST(ExactExpectations, two_state_models) {
    auto a = UnitVector3::e_x();
    auto b = UnitVector3::e_y();
    auto same = exact_expectations(two_state_same(), a, b);
    EXPECT_EQ(same.mean_a, 0.0);
    EXPECT_EQ(same.mean_b, 0.0);
    EXPECT_EQ(same.mean_ab, 1.0);
    EXPECT_TRUE(same.is_exact());
    EXPECT_EQ(exact_expectations(two_state_anti(), a, a).mean_ab, -1.0);
}

TEST(ExactExpectations, scrambled_model_matches_hand_sum) {
    auto m = scrambled_model();
    auto a = UnitVector3::normalize({0.3, -0.2, 0.9});
    auto b = UnitVector3::normalize({-0.7, 0.1, 0.4});
    const auto &f = m.states.finite_part();
    double ab = 0.0;
    for (std::size_t i = 0; i < f.states.size(); ++i) {
        ab += f.masses[i] * value(m.observable_a(a, f.states[i])) * value(m.observable_b(b, f.states[i]));
    }
    EXPECT_NEAR(exact_expectations(m, a, b).mean_ab, ab, 1e-15);
}

TEST(ExactExpectations, continuous_without_hook_is_unsupported) {
    auto m = make_sign_model();
    m.states = HiddenStateSpace<Vector3>::continuous(sample_sphere);
    EXPECT_THROW(exact_expectations(m, UnitVector3::e_x(), UnitVector3::e_y()), UnsupportedExact);
}

TEST(ExactExpectations, invalid_outcome_is_contract_violation) {
    auto m = two_state_same();
    m.observable_a = [](const UnitVector3 &, const int &) { return static_cast<Outcome>(0); };
    EXPECT_THROW(exact_expectations(m, UnitVector3::e_x(), UnitVector3::e_y()), ContractViolation);
}

TEST(SignModel, hook_matches_quadrature) {
    auto m = make_sign_model();
    std::mt19937_64 rng(31);
    for (int i = 0; i < 5; ++i) {
        auto a = random_unit(rng);
        auto b = random_unit(rng);
        auto e = exact_expectations(m, a, b);
        EXPECT_NEAR(e.mean_ab, sign_model_quadrature(a, b, 400, 800), 5e-3);
        EXPECT_EQ(e.mean_a, 0.0);
        EXPECT_EQ(e.mean_b, 0.0);
    }
    EXPECT_NEAR(sign_model_correlation(UnitVector3::e_x(), UnitVector3::from_angle_deg(60.0)), -1.0 / 3.0, 1e-12);
    EXPECT_NEAR(sign_model_correlation(UnitVector3::e_x(), UnitVector3::e_y()), 0.0, 1e-12);
    EXPECT_NEAR(sign_model_correlation(UnitVector3::e_x(), -UnitVector3::e_x()), 1.0, 1e-12);
}

TEST(SignModel, monte_carlo_parallel_settings_exact) {
    auto m = make_sign_model();
    auto a = UnitVector3::normalize({1, 2, 3});
    auto e = monte_carlo_expectations(m, a, a, 10000, 4);
    EXPECT_EQ(e.mean_ab, -1.0);
    EXPECT_EQ(e.std_error_ab, 0.0);
    EXPECT_EQ(e.n_trials, 10000u);
}

TEST(SignModel, monte_carlo_at_one_million) {
    auto m = make_sign_model();
    auto a = UnitVector3::e_x();
    for (double deg : {90.0, 60.0, 135.0}) {
        auto b = UnitVector3::from_angle_deg(deg);
        auto e = monte_carlo_expectations(m, a, b, kMillion, 2024);
        double theta = deg * std::numbers::pi / 180.0;
        EXPECT_NEAR(e.mean_ab, -1.0 + 2.0 * theta / std::numbers::pi, 0.004) << deg;
        EXPECT_NEAR(e.mean_a, 0.0, 0.004);
        EXPECT_NEAR(e.mean_b, 0.0, 0.004);
        EXPECT_NEAR(e.std_error_ab, std::sqrt((1.0 - e.mean_ab * e.mean_ab) / kMillion), 1e-5);
    }
}

TEST(MonteCarlo, within_statistical_tolerance_of_exact) {
    std::mt19937_64 rng(32);
    const std::size_t n = 20000;
    auto m = finite_sign_model(40, 3);
    for (int i = 0; i < 10; ++i) {
        auto a = random_unit(rng);
        auto b = random_unit(rng);
        auto mc = monte_carlo_expectations(m, a, b, n, 100 + i);
        EXPECT_NEAR(mc.mean_ab, exact_expectations(m, a, b).mean_ab, 4.0 / std::sqrt(static_cast<double>(n)));
    }
}

TEST(MonteCarlo, independent_of_worker_count) {
    auto m = make_sign_model();
    auto a = UnitVector3::e_x();
    auto b = UnitVector3::normalize({0.2, 0.5, -0.3});
    auto one = monte_carlo_expectations(m, a, b, 100001, 77, 1);
    EXPECT_EQ(one, monte_carlo_expectations(m, a, b, 100001, 77, 4));
    EXPECT_EQ(one, monte_carlo_expectations(m, a, b, 100001, 77, 3));
}

TEST(MonteCarlo, observable_errors_propagate_from_workers) {
    auto m = two_state_same();
    m.observable_b = [](const UnitVector3 &, const int &) { return static_cast<Outcome>(3); };
    EXPECT_THROW(monte_carlo_expectations(m, UnitVector3::e_x(), UnitVector3::e_x(), 1000, 1, 4), ContractViolation);
}

TEST(SimulateTrials, record_agrees_with_estimator_bitwise) {
    auto m = make_sign_model();
    auto a = UnitVector3::e_z();
    auto b = UnitVector3::normalize({1, 0, 1});
    auto record = simulate_trials(m, a, b, 10000, 42);
    EXPECT_EQ(record.seed, 42u);
    EXPECT_EQ(record.a, a);
    EXPECT_EQ(summarize(record), monte_carlo_expectations(m, a, b, 10000, 42));
}

TEST(SimulateTrials, parallel_settings_pointwise_anticorrelated) {
    auto m = make_sign_model();
    auto a = UnitVector3::normalize({-1, 4, 2});
    for (const auto &[oa, ob] : simulate_trials(m, a, a, 5000, 8).outcomes) {
        ASSERT_EQ(oa, -ob);
    }
}

TEST(SimulateTrials, alice_column_ignores_bob_setting) {
    auto m = make_sign_model();
    auto a = UnitVector3::e_x();
    auto r1 = simulate_trials(m, a, UnitVector3::e_y(), 2000, 5);
    auto r2 = simulate_trials(m, a, UnitVector3::e_z(), 2000, 5);
    for (std::size_t i = 0; i < r1.outcomes.size(); ++i) {
        ASSERT_EQ(r1.outcomes[i].first, r2.outcomes[i].first) << i;
    }
}

TEST(SimulateTrials, zero_trials_rejected) {
    EXPECT_THROW(simulate_trials(make_sign_model(), UnitVector3::e_x(), UnitVector3::e_x(), 0, 1), std::invalid_argument);
    EXPECT_THROW(monte_carlo_expectations(two_state_same(), UnitVector3::e_x(), UnitVector3::e_x(), 0, 1), std::invalid_argument);
}

TEST(OutcomeTally, unbiased_standard_error) {
    OutcomeTally t;
    t.add(Outcome::up, Outcome::up);
    t.add(Outcome::up, Outcome::down);
    t.add(Outcome::down, Outcome::down);
    t.add(Outcome::down, Outcome::down);
    auto e = t.estimate();
    EXPECT_EQ(e.mean_ab, 0.5);
    EXPECT_EQ(e.mean_a, 0.0);
    EXPECT_EQ(e.mean_b, -0.5);
    // Products {1, -1, 1, 1}: sample variance (n^2 - S^2) / (n (n - 1)) = (16 - 4) / 12 = 1.
    EXPECT_NEAR(e.std_error_ab, std::sqrt(1.0 / 4.0), 1e-15);
}
