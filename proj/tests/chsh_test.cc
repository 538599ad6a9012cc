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

#include "bellscope/chsh.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "bellscope/quantum.h"
#include "gtest/gtest.h"
#include "support/gallery.h"
#include "support/oracles.h"

using namespace bellscope;
using namespace bellscope::testing;

namespace {

constexpr double kTol = 1e-12;
constexpr double kTsirelson = 2.0 * std::numbers::sqrt2;

const Correlator kQuantum = [](const UnitVector3 &a, const UnitVector3 &b) { return qm_product_expectation(a, b); };
const Correlator kSign = [](const UnitVector3 &a, const UnitVector3 &b) { return sign_model_correlation(a, b); };
const Correlator kMinusOne = [](const UnitVector3 &, const UnitVector3 &) { return -1.0; };

}  // namespace

TEST(ChshCombination, sign_pattern) {
    EXPECT_EQ(chsh_combination(1, 1, 1, 1), 2.0);
    EXPECT_EQ(chsh_combination(-1, 1, -1, -1), 4.0);
    EXPECT_EQ(chsh_combination(0.5, 0.25, 0.0, 0.0), 0.25);
}

TEST(ChshStatistic, examples) {
    auto q = chsh_statistic(kQuantum, ChshSettings::standard(), "qm");
    EXPECT_NEAR(q.s, kTsirelson, kTol);
    EXPECT_NEAR(q.e_ab, -1.0 / std::numbers::sqrt2, kTol);
    EXPECT_NEAR(q.e_ab_prime, 1.0 / std::numbers::sqrt2, kTol);
    EXPECT_FALSE(q.bound_satisfied);
    EXPECT_EQ(q.source, "qm");

    EXPECT_NEAR(chsh_statistic(kSign, ChshSettings::standard()).s, 2.0, kTol);
    EXPECT_TRUE(chsh_statistic(kSign, ChshSettings::standard()).bound_satisfied);

    std::mt19937_64 rng(71);
    for (const auto &s : random_settings(50, 72)) {
        EXPECT_EQ(chsh_statistic(kMinusOne, s).s, 2.0);
    }
}

TEST(ChshStatistic, rejects_out_of_range_correlator) {
    Correlator bad = [](const UnitVector3 &, const UnitVector3 &) { return 1.01; };
    EXPECT_THROW(chsh_statistic(bad, ChshSettings::standard()), ContractViolation);
    Correlator nan = [](const UnitVector3 &, const UnitVector3 &) { return std::nan(""); };
    EXPECT_THROW(chsh_statistic(nan, ChshSettings::standard()), ContractViolation);
    Correlator edge = [](const UnitVector3 &, const UnitVector3 &) { return 1.0 + 1e-10; };
    EXPECT_NO_THROW(chsh_statistic(edge, ChshSettings::standard()));
}

TEST(ChshStatistic, never_exceeds_four_and_rotation_invariant) {
    std::mt19937_64 rng(73);
    for (const auto &s : random_settings(500, 74)) {
        auto r = chsh_statistic(kQuantum, s);
        ASSERT_LE(r.s, 4.0);
        ASSERT_LE(r.s, kTsirelson + kTol);
        auto rot = random_rotation(rng);
        ChshSettings t{rotate(rot, s.a), rotate(rot, s.a_prime), rotate(rot, s.b), rotate(rot, s.b_prime)};
        ASSERT_NEAR(chsh_statistic(kQuantum, t).s, r.s, 1e-9);
    }
}

TEST(MaximizeChsh, quantum_reaches_tsirelson_at_standard_family) {
    auto opt = maximize_chsh(kQuantum, SearchConfig{});
    EXPECT_NEAR(opt.s_max, kTsirelson, 1e-6);
    ASSERT_EQ(opt.coordinates_deg.size(), 4u);
    // Optimal settings: every correlation has magnitude 1/sqrt 2, i.e. each
    // pair (x, y) with x in {a, a'}, y in {b, b'} is 45 or 135 degrees apart.
    auto r = chsh_statistic(kQuantum, opt.settings);
    for (double e : {r.e_ab, r.e_ab_prime, r.e_a_prime_b, r.e_a_prime_b_prime}) {
        EXPECT_NEAR(std::abs(e), 1.0 / std::numbers::sqrt2, 1e-6);
    }
    EXPECT_NEAR(std::abs(dot(opt.settings.a, opt.settings.a_prime)), 0.0, 1e-6);
    EXPECT_GE(opt.correlator_evaluations, 360u * 360u);
}

TEST(MaximizeChsh, classical_correlators_stop_at_two) {
    EXPECT_NEAR(maximize_chsh(kSign, SearchConfig{}).s_max, 2.0, 1e-6);
    EXPECT_NEAR(maximize_chsh(kMinusOne, SearchConfig{.grid_step_deg = 10.0}).s_max, 2.0, kTol);
    auto two_state = exact_correlator(two_state_same());
    EXPECT_NEAR(maximize_chsh(two_state, SearchConfig{.grid_step_deg = 30.0}).s_max, 2.0, kTol);
}

TEST(MaximizeChsh, sphere_mode) {
    SearchConfig config{.mode = SearchConfig::Mode::sphere, .grid_step_deg = 15.0};
    auto opt = maximize_chsh(kQuantum, config);
    EXPECT_EQ(opt.coordinates_deg.size(), 8u);
    EXPECT_NEAR(opt.s_max, kTsirelson, 1e-6);
}

TEST(MaximizeChsh, deterministic) {
    SearchConfig config{.grid_step_deg = 5.0};
    auto x = maximize_chsh(kQuantum, config);
    auto y = maximize_chsh(kQuantum, SearchConfig{.grid_step_deg = 5.0, .workers = 3});
    EXPECT_EQ(x.s_max, y.s_max);
    EXPECT_EQ(x.coordinates_deg, y.coordinates_deg);
}

TEST(MaximizeChsh, rejects_bad_config) {
    EXPECT_THROW(maximize_chsh(kQuantum, SearchConfig{.grid_step_deg = 0.0}), std::invalid_argument);
    EXPECT_THROW(maximize_chsh(kQuantum, SearchConfig{.grid_step_deg = 7.0}), std::invalid_argument);
    EXPECT_THROW(maximize_chsh(kQuantum, SearchConfig{.grid_step_deg = -1.0}), std::invalid_argument);
    EXPECT_THROW(maximize_chsh(kQuantum, SearchConfig{.grid_step_deg = 1.0, .refine_min_step_deg = 0.0}),
                 std::invalid_argument);
    EXPECT_THROW(maximize_chsh(kQuantum, SearchConfig{.mode = SearchConfig::Mode::sphere, .grid_step_deg = 1.0}),
                 std::invalid_argument);
    EXPECT_THROW(maximize_chsh(Correlator{}, SearchConfig{}), std::invalid_argument);
}

TEST(AngleSweep, quantum_family) {
    auto rows = chsh_angle_sweep(kQuantum, 22.5, "qm");
    ASSERT_EQ(rows.size(), 9u);
    EXPECT_NEAR(rows[0].s, 2.0, kTol);
    // S(t) = |3 cos t - cos 3t|; t = 45 is the standard quadruple.
    for (std::size_t i = 0; i < rows.size(); ++i) {
        double t = 22.5 * static_cast<double>(i) * std::numbers::pi / 180.0;
        EXPECT_NEAR(rows[i].s, std::abs(3.0 * std::cos(t) - std::cos(3.0 * t)), kTol) << i;
    }
    EXPECT_NEAR(rows[2].s, kTsirelson, kTol);
    EXPECT_THROW(chsh_angle_sweep(kQuantum, 0.0), std::invalid_argument);
}

TEST(VerifyBound, gallery_models_exact) {
    auto sweep = random_settings(10000, 75);
    auto w = verify_bound(reduced_rotation_model(), sweep);
    EXPECT_EQ(w.n_checked, 10000u);
    EXPECT_EQ(w.max_s, 2.0);
    EXPECT_TRUE(w.satisfied);
    EXPECT_EQ(verify_bound(two_state_same(), sweep).max_s, 2.0);
    EXPECT_TRUE(verify_bound(finite_sign_model(30, 4), sweep).satisfied);
    EXPECT_TRUE(verify_bound(scrambled_model(), sweep).satisfied);
    EXPECT_TRUE(verify_bound(make_sign_model(), sweep).satisfied);
}

TEST(VerifyBound, sign_model_on_five_degree_grid) {
    auto r = verify_bound_coplanar_grid(exact_correlator(make_sign_model()), 5.0, kExactBoundTolerance, "sign-model");
    EXPECT_EQ(r.n_checked, 72u * 72u * 72u * 72u);
    EXPECT_NEAR(r.max_s, 2.0, kTol);
    EXPECT_TRUE(r.satisfied);
    ASSERT_TRUE(r.argmax.has_value());
}

TEST(VerifyBound, flags_quantum_violation) {
    auto r = verify_bound_coplanar_grid(kQuantum, 45.0, kExactBoundTolerance, "qm");
    EXPECT_FALSE(r.satisfied);
    EXPECT_NEAR(r.max_s, kTsirelson, kTol);
}

TEST(VerifyBound, monte_carlo_tolerance) {
    auto sweep = random_settings(5, 76);
    auto r = verify_bound(make_sign_model(), sweep, BoundCheck::monte_carlo(20000, 5));
    EXPECT_EQ(r.n_trials, 20000u);
    EXPECT_NEAR(r.tolerance, 5.0 / std::sqrt(20000.0), kTol);
    EXPECT_TRUE(r.satisfied);
}

TEST(EmpiricalChsh, quantum_and_sign_model) {
    auto qm = empirical_chsh([](const UnitVector3 &a, const UnitVector3 &b,
                                std::uint64_t seed) { return simulate_qm_trials(a, b, 200000, seed); },
                             ChshSettings::standard(), 3, "qm-sampled");
    EXPECT_NEAR(qm.s, kTsirelson, 0.03);
    auto m = make_sign_model();
    auto sign = empirical_chsh([&m](const UnitVector3 &a, const UnitVector3 &b,
                                    std::uint64_t seed) { return simulate_trials(m, a, b, 200000, seed); },
                               ChshSettings::standard(), 3);
    EXPECT_NEAR(sign.s, 2.0, 0.03);
}
