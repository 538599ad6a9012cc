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

#include "bellscope/projection.h"

#include <numbers>
#include <random>
#include <stdexcept>

#include "bellscope/chsh.h"
#include "bellscope/io.h"
#include "gtest/gtest.h"
#include "support/gallery.h"
#include "support/oracles.h"

using namespace bellscope;
using namespace bellscope::testing;

namespace {

constexpr double kTol = 1e-12;

template <typename State, typename X>
void expect_reduction_faithful(const GeneralizedHVM<State, X> &g, std::uint64_t seed) {
    auto reduced = reduce_to_hvm(g);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 100; ++i) {
        auto a = random_unit(rng);
        auto b = random_unit(rng);
        auto e = exact_expectations(reduced, a, b);
        ASSERT_NEAR(e.mean_ab, projected_product_expectation(g, a, b), kTol) << g.name;
        ASSERT_NEAR(e.mean_a, projected_single_expectation(g, Side::alice, a), kTol) << g.name;
        ASSERT_NEAR(e.mean_b, projected_single_expectation(g, Side::bob, b), kTol) << g.name;
    }
}

}  // namespace

TEST(DomainSet, examples) {
    RotationTensorModel m;
    auto xi = UnitVector3::normalize({0.3, -1.0, 0.5});
    EXPECT_TRUE(in_domain_set(xi, m.observable_a(xi, RotationState::plus())));
    EXPECT_TRUE(in_domain_set(xi, m.observable_b(xi, RotationState::minus())));
    // Norm^2 = 1/2.
    EXPECT_FALSE(in_domain_set(UnitVector3::e_z(), wedge(UnitVector3::e_x(), UnitVector3::e_y())));
    // Normalized but not orthogonal to e_x.
    EXPECT_FALSE(in_domain_set(UnitVector3::e_x(), std::numbers::sqrt2 * wedge(UnitVector3::e_x(), UnitVector3::e_y())));
    EXPECT_TRUE(in_domain_set(UnitVector3::e_z(), std::numbers::sqrt2 * wedge(UnitVector3::e_x(), UnitVector3::e_y())));
    EXPECT_FALSE(in_domain_set(UnitVector3::e_z(), Bivector3{}));
}

TEST(DomainSet, tolerance_edge) {
    auto x = std::numbers::sqrt2 * wedge(UnitVector3::e_x(), UnitVector3::e_y());
    EXPECT_TRUE(in_domain_set(UnitVector3::e_z(), (1.0 + 1e-12) * x));
    EXPECT_FALSE(in_domain_set(UnitVector3::e_z(), (1.0 + 1e-9) * x));
}

TEST(Project, recovers_lambda_and_minus_lambda) {
    RotationTensorModel m;
    std::mt19937_64 rng(51);
    for (int i = 0; i < 100; ++i) {
        auto alpha = random_unit(rng);
        auto beta = random_unit(rng);
        for (auto s : RotationTensorModel::states()) {
            ASSERT_EQ(value(project(alpha, m.observable_a(alpha, s))), s.lambda());
            ASSERT_EQ(value(project(beta, m.observable_b(beta, s))), -s.lambda());
            EXPECT_NEAR(projection_value(alpha, m.observable_a(alpha, s)), s.lambda(), 1e-12);
        }
    }
}

TEST(Project, sign_equivariant) {
    RotationTensorModel m;
    std::mt19937_64 rng(52);
    for (int i = 0; i < 50; ++i) {
        auto xi = random_unit(rng);
        auto x = m.observable_a(xi, RotationState::plus());
        EXPECT_EQ(project(xi, -x), -project(xi, x));
    }
}

TEST(Project, outside_domain_throws) {
    EXPECT_THROW(project(UnitVector3::e_z(), wedge(UnitVector3::e_x(), UnitVector3::e_y())), DomainError);
    EXPECT_THROW(project(UnitVector3::e_x(), std::numbers::sqrt2 * wedge(UnitVector3::e_x(), UnitVector3::e_y())),
                 DomainError);
}

TEST(Project, orientation_convention) {
    // Same rotation read against the opposite volume element flips the recorded sign.
    RotationTensorModel m;
    auto x = m.observable_a(UnitVector3::e_y(), RotationState::plus());
    EXPECT_EQ(project(UnitVector3::e_y(), x, LeviCivita::left_handed()), Outcome::down);
    RotationTensorModel left(LeviCivita::left_handed());
    auto y = left.observable_a(UnitVector3::e_y(), RotationState::plus());
    EXPECT_EQ(project(UnitVector3::e_y(), y, LeviCivita::left_handed()), Outcome::up);
}

TEST(ProjectedExpectations, rotation_model_singles_zero_product_minus_one) {
    auto g = rotation_tensor_ghvm();
    std::mt19937_64 rng(53);
    for (int i = 0; i < 1000; ++i) {
        auto a = random_unit(rng);
        auto b = random_unit(rng);
        ASSERT_EQ(projected_product_expectation(g, a, b), -1.0);
        if (i < 100) {
            ASSERT_EQ(projected_single_expectation(g, Side::alice, a), 0.0);
            ASSERT_EQ(projected_single_expectation(g, Side::bob, b), 0.0);
        }
    }
}

TEST(ProjectedExpectations, orthogonal_settings_mismatch_pre_projection_value) {
    auto g = rotation_tensor_ghvm();
    RotationTensorModel m;
    auto a = UnitVector3::e_x();
    auto b = UnitVector3::e_y();
    EXPECT_NEAR(m.tensor_product_expectation(a, b), 0.0, kTol);
    EXPECT_EQ(projected_product_expectation(g, a, b), -1.0);
}

TEST(ProjectedExpectations, frozen_alice_single_is_plus_one) {
    auto g = frozen_alice_ghvm();
    EXPECT_EQ(projected_single_expectation(g, Side::alice, UnitVector3::e_z()), 1.0);
    EXPECT_EQ(projected_single_expectation(g, Side::bob, UnitVector3::e_z()), 0.0);
}

TEST(ProjectedExpectations, domain_errors_propagate) {
    EXPECT_THROW(projected_product_expectation(unnormalized_ghvm(), UnitVector3::e_x(), UnitVector3::e_y()), DomainError);
}

TEST(Reduce, rotation_model_outcomes_are_lambda_and_minus_lambda) {
    auto reduced = reduce_to_hvm(rotation_tensor_ghvm());
    EXPECT_EQ(reduced.name, "rotation-tensor (projected)");
    std::mt19937_64 rng(54);
    for (int i = 0; i < 100; ++i) {
        auto a = random_unit(rng);
        auto b = random_unit(rng);
        for (auto s : RotationTensorModel::states()) {
            ASSERT_EQ(value(reduced.a(a, s)), s.lambda());
            ASSERT_EQ(value(reduced.b(b, s)), -s.lambda());
        }
        ASSERT_EQ(exact_expectations(reduced, a, b).mean_ab, -1.0);
    }
}

TEST(Reduce, faithful_for_gallery) {
    expect_reduction_faithful(rotation_tensor_ghvm(), 61);
    expect_reduction_faithful(rotation_tensor_ghvm(RotationTensorModel(LeviCivita::left_handed())), 62);
    expect_reduction_faithful(axis_ghvm(25, 7), 63);
    expect_reduction_faithful(integer_ghvm(), 64);
    expect_reduction_faithful(frozen_alice_ghvm(), 65);
}

TEST(Reduce, reduced_gallery_respects_bound) {
    auto sweep = random_settings(2000, 66);
    EXPECT_TRUE(verify_bound(reduce_to_hvm(axis_ghvm(25, 7)), sweep).satisfied);
    EXPECT_TRUE(verify_bound(reduce_to_hvm(integer_ghvm()), sweep).satisfied);
    auto w = verify_bound(reduce_to_hvm(rotation_tensor_ghvm()), sweep);
    EXPECT_EQ(w.max_s, 2.0);
}

TEST(Reduce, unnormalized_outputs_raise_with_context) {
    try {
        reduce_to_hvm(unnormalized_ghvm());
        FAIL() << "expected ReductionError";
    } catch (const ReductionError &e) {
        EXPECT_EQ(e.model(), "unnormalized");
        EXPECT_EQ(e.side(), Side::alice);
        EXPECT_EQ(e.state(), "l=-1");
        EXPECT_EQ(e.setting(), default_probe_settings().front().vec());
        EXPECT_NE(e.reason().find("domain"), std::string::npos);
        auto j = to_json(e);
        EXPECT_EQ(j["error"], "reduction");
        EXPECT_EQ(j["side"], "A");
        EXPECT_EQ(j["state"], "l=-1");
        EXPECT_EQ(j["schema_version"], kSchemaVersion);
    }
}

TEST(Reduce, unprobed_settings_fail_lazily) {
    // A model that leaves the domain only for settings with negative z.
    auto g = rotation_tensor_ghvm();
    g.name = "half-broken";
    RotationTensorModel m;
    g.observable_b = [m](const UnitVector3 &b, const RotationState &s) {
        auto x = m.observable_b(b, s);
        return b[2] < -0.5 ? 0.5 * x : x;
    };
    auto reduced = reduce_to_hvm(g, {UnitVector3::e_x(), UnitVector3::e_z()});
    EXPECT_NO_THROW(exact_expectations(reduced, UnitVector3::e_x(), UnitVector3::e_z()));
    EXPECT_THROW(exact_expectations(reduced, UnitVector3::e_x(), -UnitVector3::e_z()), ReductionError);
}
