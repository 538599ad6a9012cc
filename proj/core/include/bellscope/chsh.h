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

#ifndef BELLSCOPE_CHSH_H
#define BELLSCOPE_CHSH_H

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bellscope/hvm.h"
#include "bellscope/parallel.h"
#include "bellscope/tensor.h"

namespace bellscope {

/// E(a, b): expectation of the product of the two +-1 outcomes. Must be pure.
using Correlator = std::function<double(const UnitVector3 &, const UnitVector3 &)>;

inline constexpr double kClassicalBound = 2.0;
inline constexpr double kExactBoundTolerance = 1e-12;
inline constexpr double kOptimizerTolerance = 1e-6;
/// Correlator values may exceed [-1, 1] by this much before it is a contract violation.
inline constexpr double kCorrelatorSlack = 1e-9;

/// Statistical tolerance for a CHSH statistic built from n-trial estimates.
inline double monte_carlo_bound_tolerance(std::size_t n) { return 5.0 / std::sqrt(static_cast<double>(n)); }

struct ChshSettings {
    UnitVector3 a;
    UnitVector3 a_prime;
    UnitVector3 b;
    UnitVector3 b_prime;

    /// Settings in the x-y plane, angles in degrees from +x.
    static ChshSettings coplanar(double a_deg, double a_prime_deg, double b_deg, double b_prime_deg);
    /// a = 0, a' = 90, b = 45, b' = 135 degrees.
    static ChshSettings standard();
};

/// |E(a,b) - E(a,b') + E(a',b) + E(a',b')|.
double chsh_combination(double e_ab, double e_ab_prime, double e_a_prime_b, double e_a_prime_b_prime);

struct ChshReport {
    ChshSettings settings;
    double e_ab = 0.0;
    double e_ab_prime = 0.0;
    double e_a_prime_b = 0.0;
    double e_a_prime_b_prime = 0.0;
    double s = 0.0;
    std::string source{};
    /// s <= 2 (+1e-12 for rounding).
    bool bound_satisfied = true;
};

/// Evaluates the four correlations and the CHSH combination. Throws
/// ContractViolation when a correlator value leaves [-1, 1] by more than 1e-9.
ChshReport chsh_statistic(const Correlator &correlator, const ChshSettings &settings, std::string source = {});

struct SearchConfig {
    enum class Mode { coplanar, sphere };

    Mode mode = Mode::coplanar;
    /// Grid resolution in degrees; 360 (and 180 in sphere mode) must be a multiple of it.
    double grid_step_deg = 1.0;
    /// Coordinate descent starts at the grid step and halves down to this size.
    double refine_min_step_deg = 1e-9;
    std::size_t refine_max_iterations = 10000;
    unsigned workers = 1;
};

struct ChshOptimum {
    ChshSettings settings;
    double s_max = 0.0;
    /// Coplanar: 4 angles. Sphere: (polar, azimuth) for a, a', b, b'. Degrees.
    std::vector<double> coordinates_deg;
    std::size_t correlator_evaluations = 0;
};

/// Coarse grid search followed by coordinate-descent refinement of |S|.
///
/// The grid phase tabulates E over all pairs of grid directions once; S
/// separates into an (a, a', b) part and an (a, a', b') part, so the exact
/// grid optimum costs O(N^3) table lookups instead of O(N^4) correlator calls.
/// Deterministic for a fixed config. Throws std::invalid_argument on a bad config.
ChshOptimum maximize_chsh(const Correlator &correlator, const SearchConfig &config);

/// Sweep of the family a = 0, b = t, a' = 2t, b' = 3t for t in [0, 180] degrees.
std::vector<ChshReport> chsh_angle_sweep(const Correlator &correlator, double step_deg, const std::string &source = {});

struct BoundReport {
    std::string model;
    std::size_t n_checked = 0;
    double max_s = 0.0;
    std::optional<ChshSettings> argmax;
    double tolerance = kExactBoundTolerance;
    /// 0 for exact evaluation.
    std::size_t n_trials = 0;
    /// max_s <= 2 + tolerance. A false value for a conforming model is a framework bug.
    bool satisfied = true;
};

/// Evaluates S over an explicit list of settings quadruples.
BoundReport verify_bound(const Correlator &correlator, std::span<const ChshSettings> sweep, double tolerance,
                         std::string label);

/// Exact maximum of |S| over every quadruple of the coplanar grid with the given step.
BoundReport verify_bound_coplanar_grid(const Correlator &correlator, double step_deg, double tolerance,
                                       std::string label);

/// Uniformly random settings quadruples on the sphere.
std::vector<ChshSettings> random_settings(std::size_t count, std::uint64_t seed);

template <typename State>
Correlator exact_correlator(const HiddenVariableModel<State> &m) {
    return [m](const UnitVector3 &a, const UnitVector3 &b) { return exact_expectations(m, a, b).mean_ab; };
}

/// Monte Carlo correlator; every settings pair reuses the same seed.
template <typename State>
Correlator monte_carlo_correlator(const HiddenVariableModel<State> &m, std::size_t n, std::uint64_t seed,
                                  unsigned workers = 1) {
    return [m, n, seed, workers](const UnitVector3 &a, const UnitVector3 &b) {
        return monte_carlo_expectations(m, a, b, n, seed, workers).mean_ab;
    };
}

struct BoundCheck {
    enum class Kind { exact, monte_carlo };
    Kind kind = Kind::exact;
    std::size_t n = 0;
    std::uint64_t seed = 0;

    static BoundCheck exact() { return {}; }
    static BoundCheck monte_carlo(std::size_t n, std::uint64_t seed) { return {Kind::monte_carlo, n, seed}; }
};

/// Checks the CHSH bound for a hidden variable model across `sweep`. Exact
/// evaluation (finite Lambda or exact hook) uses tolerance 1e-12; Monte Carlo
/// uses 5 / sqrt(n).
template <typename State>
BoundReport verify_bound(const HiddenVariableModel<State> &m, std::span<const ChshSettings> sweep,
                         const BoundCheck &check = BoundCheck::exact()) {
    if (check.kind == BoundCheck::Kind::exact) {
        return verify_bound(exact_correlator(m), sweep, kExactBoundTolerance, m.name);
    }
    auto report = verify_bound(monte_carlo_correlator(m, check.n, check.seed), sweep,
                               monte_carlo_bound_tolerance(check.n), m.name);
    report.n_trials = check.n;
    return report;
}

/// Trial-level CHSH: each of the four settings pairs is sampled with its own
/// record of n trials (seed offset by the pair index) and S is computed from the
/// empirical product means.
ChshReport empirical_chsh(const std::function<TrialRecord(const UnitVector3 &, const UnitVector3 &, std::uint64_t)> &sampler,
                          const ChshSettings &settings, std::uint64_t seed, std::string source = {});

}  // namespace bellscope

#endif  // BELLSCOPE_CHSH_H
