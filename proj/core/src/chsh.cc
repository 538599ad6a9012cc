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

#include <algorithm>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bellscope {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;
// Rounding noise in S; smaller gains do not move the grid or refinement optimum.
constexpr double kTieTolerance = 1e-13;

double checked_correlation(const Correlator &correlator, const UnitVector3 &a, const UnitVector3 &b) {
    double e = correlator(a, b);
    if (!std::isfinite(e) || std::abs(e) > 1.0 + kCorrelatorSlack) {
        std::ostringstream s;
        s.precision(17);
        s << "correlator returned " << e << " at a=" << a.vec() << ", b=" << b.vec() << "; expected a value in [-1, 1]";
        throw ContractViolation(s.str());
    }
    return e;
}

// Number of grid steps that tile `span` degrees; rejects steps that do not divide it.
std::size_t steps_in(double span, double step) {
    if (!std::isfinite(step) || step <= 0.0 || step > span) {
        throw std::invalid_argument("grid step must be in (0, " + std::to_string(span) + "] degrees");
    }
    double n = std::round(span / step);
    if (std::abs(n * step - span) > 1e-9) {
        throw std::invalid_argument("grid step must divide " + std::to_string(span) + " degrees");
    }
    return static_cast<std::size_t>(n);
}

struct GridDirection {
    UnitVector3 u;
    double polar_deg;
    double azimuth_deg;
};

std::vector<GridDirection> grid_directions(SearchConfig::Mode mode, double step) {
    std::vector<GridDirection> dirs;
    std::size_t n_azimuth = steps_in(360.0, step);
    if (mode == SearchConfig::Mode::coplanar) {
        for (std::size_t i = 0; i < n_azimuth; ++i) {
            double deg = static_cast<double>(i) * step;
            dirs.push_back({UnitVector3::from_angle_deg(deg), 90.0, deg});
        }
        return dirs;
    }
    std::size_t n_polar = steps_in(180.0, step);
    for (std::size_t k = 0; k <= n_polar; ++k) {
        double polar = static_cast<double>(k) * step;
        bool pole = k == 0 || k == n_polar;
        for (std::size_t m = 0; m < (pole ? 1 : n_azimuth); ++m) {
            double azimuth = static_cast<double>(m) * step;
            dirs.push_back({UnitVector3::from_spherical(polar * kDeg, azimuth * kDeg), polar, azimuth});
        }
    }
    return dirs;
}

// table[i * n + j] = E(dirs[i], dirs[j]); rows are split across workers.
std::vector<double> tabulate(const Correlator &correlator, const std::vector<GridDirection> &dirs, unsigned workers) {
    const std::size_t n = dirs.size();
    std::vector<double> table(n * n);
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
    auto fill = [&](unsigned w) {
        for (std::size_t i = n * w / workers; i < n * (w + 1) / workers; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                table[i * n + j] = checked_correlation(correlator, dirs[i].u, dirs[j].u);
            }
        }
    };
    run_partitioned(workers, fill);
    return table;
}

struct GridBest {
    double s = -1.0;
    std::size_t a = 0, a_prime = 0, b = 0, b_prime = 0;
};

// Exact max of |S| over all index quadruples. Values within kTieTolerance of
// the running best count as ties, and the first in index order is kept.
GridBest grid_optimum(const std::vector<double> &table, std::size_t n) {
    GridBest best;
    for (std::size_t i = 0; i < n; ++i) {
        const double *row_a = &table[i * n];
        for (std::size_t i2 = 0; i2 < n; ++i2) {
            const double *row_a2 = &table[i2 * n];
            double p_max = -std::numeric_limits<double>::infinity(), p_min = std::numeric_limits<double>::infinity();
            double q_max = p_max, q_min = p_min;
            std::size_t jp_max = 0, jp_min = 0, jq_max = 0, jq_min = 0;
            for (std::size_t j = 0; j < n; ++j) {
                double p = row_a[j] + row_a2[j];
                double q = row_a2[j] - row_a[j];
                if (p > p_max) { p_max = p; jp_max = j; }
                if (p < p_min) { p_min = p; jp_min = j; }
                if (q > q_max) { q_max = q; jq_max = j; }
                if (q < q_min) { q_min = q; jq_min = j; }
            }
            if (-(p_min + q_min) > best.s + kTieTolerance) {
                best = {-(p_min + q_min), i, i2, jp_min, jq_min};
            }
            if (p_max + q_max > best.s + kTieTolerance) {
                best = {p_max + q_max, i, i2, jp_max, jq_max};
            }
        }
    }
    return best;
}

ChshSettings settings_from(SearchConfig::Mode mode, const std::vector<double> &c) {
    if (mode == SearchConfig::Mode::coplanar) {
        return ChshSettings::coplanar(c[0], c[1], c[2], c[3]);
    }
    auto dir = [&](std::size_t k) { return UnitVector3::from_spherical(c[2 * k] * kDeg, c[2 * k + 1] * kDeg); };
    return ChshSettings{dir(0), dir(1), dir(2), dir(3)};
}

}  // namespace

ChshSettings ChshSettings::coplanar(double a_deg, double a_prime_deg, double b_deg, double b_prime_deg) {
    return ChshSettings{UnitVector3::from_angle_deg(a_deg), UnitVector3::from_angle_deg(a_prime_deg),
                        UnitVector3::from_angle_deg(b_deg), UnitVector3::from_angle_deg(b_prime_deg)};
}

ChshSettings ChshSettings::standard() { return coplanar(0.0, 90.0, 45.0, 135.0); }

double chsh_combination(double e_ab, double e_ab_prime, double e_a_prime_b, double e_a_prime_b_prime) {
    return std::abs(e_ab - e_ab_prime + e_a_prime_b + e_a_prime_b_prime);
}

ChshReport chsh_statistic(const Correlator &correlator, const ChshSettings &settings, std::string source) {
    ChshReport r{.settings = settings};
    r.e_ab = checked_correlation(correlator, settings.a, settings.b);
    r.e_ab_prime = checked_correlation(correlator, settings.a, settings.b_prime);
    r.e_a_prime_b = checked_correlation(correlator, settings.a_prime, settings.b);
    r.e_a_prime_b_prime = checked_correlation(correlator, settings.a_prime, settings.b_prime);
    r.s = chsh_combination(r.e_ab, r.e_ab_prime, r.e_a_prime_b, r.e_a_prime_b_prime);
    r.source = std::move(source);
    r.bound_satisfied = r.s <= kClassicalBound + kExactBoundTolerance;
    return r;
}

ChshOptimum maximize_chsh(const Correlator &correlator, const SearchConfig &config) {
    if (!correlator) {
        throw std::invalid_argument("maximize_chsh needs a correlator");
    }
    if (!(config.refine_min_step_deg > 0.0) || !std::isfinite(config.refine_min_step_deg)) {
        throw std::invalid_argument("refinement step floor must be positive");
    }
    const auto dirs = grid_directions(config.mode, config.grid_step_deg);
    const std::size_t n = dirs.size();
    if (n > 2048) {
        throw std::invalid_argument("grid too fine: " + std::to_string(n) + " directions (limit 2048)");
    }
    const auto table = tabulate(correlator, dirs, config.workers);
    const GridBest best = grid_optimum(table, n);

    std::size_t evaluations = n * n;
    std::vector<double> coords;
    for (std::size_t k : {best.a, best.a_prime, best.b, best.b_prime}) {
        if (config.mode == SearchConfig::Mode::coplanar) {
            coords.push_back(dirs[k].azimuth_deg);
        } else {
            coords.push_back(dirs[k].polar_deg);
            coords.push_back(dirs[k].azimuth_deg);
        }
    }

    auto objective = [&](const std::vector<double> &c) {
        evaluations += 4;
        return chsh_statistic(correlator, settings_from(config.mode, c)).s;
    };

    double current = objective(coords);
    double step = config.grid_step_deg;
    for (std::size_t iter = 0; iter < config.refine_max_iterations && step >= config.refine_min_step_deg; ++iter) {
        bool improved = false;
        for (std::size_t k = 0; k < coords.size(); ++k) {
            for (double dir : {1.0, -1.0}) {
                auto trial = coords;
                trial[k] += dir * step;
                double v = objective(trial);
                if (v > current + kTieTolerance) {
                    current = v;
                    coords = std::move(trial);
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) {
            step /= 2.0;
        }
    }

    return ChshOptimum{settings_from(config.mode, coords), current, std::move(coords), evaluations};
}

std::vector<ChshReport> chsh_angle_sweep(const Correlator &correlator, double step_deg, const std::string &source) {
    if (!std::isfinite(step_deg) || step_deg <= 0.0 || step_deg > 180.0) {
        throw std::invalid_argument("sweep step must be in (0, 180] degrees");
    }
    std::vector<ChshReport> rows;
    const auto count = static_cast<std::size_t>(std::floor(180.0 / step_deg + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) {
        double t = static_cast<double>(i) * step_deg;
        rows.push_back(chsh_statistic(correlator, ChshSettings::coplanar(0.0, 2.0 * t, t, 3.0 * t), source));
    }
    return rows;
}

BoundReport verify_bound(const Correlator &correlator, std::span<const ChshSettings> sweep, double tolerance,
                         std::string label) {
    BoundReport report;
    report.model = std::move(label);
    report.tolerance = tolerance;
    for (const auto &settings : sweep) {
        auto r = chsh_statistic(correlator, settings);
        if (!report.argmax || r.s > report.max_s) {
            report.max_s = r.s;
            report.argmax = settings;
        }
        ++report.n_checked;
    }
    report.satisfied = report.max_s <= kClassicalBound + tolerance;
    return report;
}

BoundReport verify_bound_coplanar_grid(const Correlator &correlator, double step_deg, double tolerance,
                                       std::string label) {
    const auto dirs = grid_directions(SearchConfig::Mode::coplanar, step_deg);
    const std::size_t n = dirs.size();
    const auto table = tabulate(correlator, dirs, 1);
    const GridBest best = grid_optimum(table, n);
    BoundReport report;
    report.model = std::move(label);
    report.tolerance = tolerance;
    report.n_checked = n * n * n * n;
    report.max_s = best.s;
    report.argmax = ChshSettings{dirs[best.a].u, dirs[best.a_prime].u, dirs[best.b].u, dirs[best.b_prime].u};
    report.satisfied = report.max_s <= kClassicalBound + tolerance;
    return report;
}

std::vector<ChshSettings> random_settings(std::size_t count, std::uint64_t seed) {
    std::vector<ChshSettings> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        TrialRng rng(seed, i);
        auto draw = [&] { return UnitVector3::normalize(sample_sphere(rng)); };
        UnitVector3 a = draw();
        UnitVector3 a_prime = draw();
        UnitVector3 b = draw();
        UnitVector3 b_prime = draw();
        out.push_back({a, a_prime, b, b_prime});
    }
    return out;
}

ChshReport empirical_chsh(const std::function<TrialRecord(const UnitVector3 &, const UnitVector3 &, std::uint64_t)> &sampler,
                          const ChshSettings &settings, std::uint64_t seed, std::string source) {
    auto mean = [&](const UnitVector3 &a, const UnitVector3 &b, std::uint64_t offset) {
        return summarize(sampler(a, b, seed + offset)).mean_ab;
    };
    ChshReport r{.settings = settings};
    r.e_ab = mean(settings.a, settings.b, 0);
    r.e_ab_prime = mean(settings.a, settings.b_prime, 1);
    r.e_a_prime_b = mean(settings.a_prime, settings.b, 2);
    r.e_a_prime_b_prime = mean(settings.a_prime, settings.b_prime, 3);
    r.s = chsh_combination(r.e_ab, r.e_ab_prime, r.e_a_prime_b, r.e_a_prime_b_prime);
    r.source = std::move(source);
    r.bound_satisfied = r.s <= kClassicalBound + kExactBoundTolerance;
    return r;
}

}  // namespace bellscope
