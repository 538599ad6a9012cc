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

#ifndef BELLSCOPE_HVM_H
#define BELLSCOPE_HVM_H

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bellscope/parallel.h"
#include "bellscope/tensor.h"
#include "bellscope/trials.h"

namespace bellscope {

/// Closed-form expectations for a continuous state space, when known.
using ExactExpectations = std::function<CorrelationEstimate(const UnitVector3 &, const UnitVector3 &)>;

/// The space of complete states together with its probability distribution.
///
/// Finite spaces carry explicit probability masses and support exact
/// summation. Continuous spaces carry a sampler and, optionally, a closed-form
/// hook for the expectation integrals. For continuous spaces rho is a
/// distribution, not a pointwise density bounded by 1.
template <typename State>
class HiddenStateSpace {
   public:
    struct Finite {
        std::vector<State> states;
        std::vector<double> masses;
        std::vector<double> cumulative;
    };
    struct Continuous {
        std::function<State(TrialRng &)> sampler;
        ExactExpectations exact;
    };

    /// Throws std::invalid_argument for empty spaces, negative masses, or masses
    /// not summing to 1 within 1e-12.
    static HiddenStateSpace finite(std::vector<State> states, std::vector<double> masses) {
        if (states.empty() || states.size() != masses.size()) {
            throw std::invalid_argument("finite state space needs one mass per state");
        }
        double total = 0.0;
        std::vector<double> cumulative;
        cumulative.reserve(masses.size());
        for (double m : masses) {
            if (!std::isfinite(m) || m < 0.0) {
                throw std::invalid_argument("probability masses must be nonnegative");
            }
            total += m;
            cumulative.push_back(total);
        }
        if (std::abs(total - 1.0) > kTensorTolerance) {
            throw std::invalid_argument("probability masses must sum to 1");
        }
        return HiddenStateSpace(Finite{std::move(states), std::move(masses), std::move(cumulative)});
    }

    static HiddenStateSpace uniform(std::vector<State> states) {
        std::vector<double> masses(states.size(), states.empty() ? 0.0 : 1.0 / static_cast<double>(states.size()));
        return finite(std::move(states), std::move(masses));
    }

    static HiddenStateSpace continuous(std::function<State(TrialRng &)> sampler, ExactExpectations exact = {}) {
        if (!sampler) {
            throw std::invalid_argument("continuous state space needs a sampler");
        }
        return HiddenStateSpace(Continuous{std::move(sampler), std::move(exact)});
    }

    bool is_finite() const { return std::holds_alternative<Finite>(kind_); }
    const Finite &finite_part() const { return std::get<Finite>(kind_); }
    const Continuous &continuous_part() const { return std::get<Continuous>(kind_); }
    bool has_exact_hook() const { return !is_finite() && static_cast<bool>(continuous_part().exact); }

    /// One draw from rho. Finite spaces use a single uniform and inverse CDF.
    State sample(TrialRng &rng) const {
        if (const auto *f = std::get_if<Finite>(&kind_)) {
            double u = rng.uniform() * f->cumulative.back();
            auto it = std::upper_bound(f->cumulative.begin(), f->cumulative.end(), u);
            std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(it - f->cumulative.begin()), f->states.size() - 1);
            // Skip zero-mass states that share a cumulative boundary.
            while (f->masses[i] == 0.0 && i + 1 < f->states.size()) {
                ++i;
            }
            return f->states[i];
        }
        return std::get<Continuous>(kind_).sampler(rng);
    }

   private:
    explicit HiddenStateSpace(std::variant<Finite, Continuous> kind) : kind_(std::move(kind)) {}
    std::variant<Finite, Continuous> kind_;
};

/// A local, deterministic hidden variable model (Lambda, A, B, rho).
///
/// Locality is structural: Alice's observable sees only her setting and the
/// state, Bob's only his. Observables must be pure and total; any output other
/// than +-1 is reported as a ContractViolation when the model is evaluated.
template <typename State>
struct HiddenVariableModel {
    using Observable = std::function<Outcome(const UnitVector3 &, const State &)>;

    std::string name;
    HiddenStateSpace<State> states;
    Observable observable_a;
    Observable observable_b;

    Outcome a(const UnitVector3 &setting, const State &s) const { return checked(observable_a(setting, s), "A"); }
    Outcome b(const UnitVector3 &setting, const State &s) const { return checked(observable_b(setting, s), "B"); }

   private:
    Outcome checked(Outcome o, const char *which) const {
        if (!is_valid(o)) {
            throw ContractViolation("observable " + std::string(which) + " of model '" + name + "' returned a value outside {-1,+1}");
        }
        return o;
    }
};

/// Exact expectation values. Finite spaces are summed state by state;
/// continuous spaces defer to their exact hook and throw UnsupportedExact
/// without one.
template <typename State>
CorrelationEstimate exact_expectations(const HiddenVariableModel<State> &m, const UnitVector3 &a, const UnitVector3 &b) {
    if (!m.states.is_finite()) {
        if (!m.states.has_exact_hook()) {
            throw UnsupportedExact("model '" + m.name + "' has a continuous state space without an exact integrator; use Monte Carlo");
        }
        CorrelationEstimate e = m.states.continuous_part().exact(a, b);
        e.n_trials = 0;
        e.std_error_ab = 0.0;
        return e;
    }
    const auto &f = m.states.finite_part();
    CorrelationEstimate e;
    for (std::size_t i = 0; i < f.states.size(); ++i) {
        int va = value(m.a(a, f.states[i]));
        int vb = value(m.b(b, f.states[i]));
        e.mean_a += f.masses[i] * va;
        e.mean_b += f.masses[i] * vb;
        e.mean_ab += f.masses[i] * (va * vb);
    }
    return e;
}

namespace detail {

template <typename State>
std::pair<Outcome, Outcome> run_trial(const HiddenVariableModel<State> &m, const UnitVector3 &a, const UnitVector3 &b,
                                      std::uint64_t seed, std::size_t trial) {
    TrialRng rng(seed, trial);
    State s = m.states.sample(rng);
    return {m.a(a, s), m.b(b, s)};
}

inline void require_trials(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("trial count must be at least 1");
    }
}

}  // namespace detail

/// Monte Carlo estimate from n independent draws of the hidden state.
///
/// Trial i draws its state from TrialRng(seed, i), so the result does not
/// depend on `workers`; trials are partitioned into contiguous index ranges
/// and the integer tallies merged.
template <typename State>
CorrelationEstimate monte_carlo_expectations(const HiddenVariableModel<State> &m, const UnitVector3 &a,
                                             const UnitVector3 &b, std::size_t n, std::uint64_t seed,
                                             unsigned workers = 1) {
    detail::require_trials(n);
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::size_t>(n, 256))));
    std::vector<OutcomeTally> tallies(workers);
    auto work = [&](unsigned w) {
        std::size_t begin = n * w / workers;
        std::size_t end = n * (w + 1) / workers;
        for (std::size_t i = begin; i < end; ++i) {
            auto [oa, ob] = detail::run_trial(m, a, b, seed, i);
            tallies[w].add(oa, ob);
        }
    };
    run_partitioned(workers, work);
    OutcomeTally total;
    for (const auto &t : tallies) {
        total.merge(t);
    }
    return total.estimate();
}

/// The per-trial +-1 record. `summarize(simulate_trials(...))` equals
/// `monte_carlo_expectations(...)` for the same seed, bit for bit.
template <typename State>
TrialRecord simulate_trials(const HiddenVariableModel<State> &m, const UnitVector3 &a, const UnitVector3 &b,
                            std::size_t n, std::uint64_t seed) {
    detail::require_trials(n);
    TrialRecord record{a, b, {}, seed};
    record.outcomes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        record.outcomes.push_back(detail::run_trial(m, a, b, seed, i));
    }
    return record;
}

/// Uniformly distributed point on the sphere from two uniforms.
Vector3 sample_sphere(TrialRng &rng);

/// sign(a . lambda) with sign(0) = +1.
Outcome sign_outcome(double x);

/// Lambda = S^2 with uniform rho, A(a, l) = sign(a . l), B(b, l) = -sign(b . l).
/// Exposes the closed form E(AB) = -1 + 2 theta / pi as its exact hook.
HiddenVariableModel<Vector3> make_sign_model();

/// -1 + 2 theta / pi where theta is the angle between a and b.
double sign_model_correlation(const UnitVector3 &a, const UnitVector3 &b);

}  // namespace bellscope

#endif  // BELLSCOPE_HVM_H
