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

#ifndef BELLSCOPE_PROJECTION_H
#define BELLSCOPE_PROJECTION_H

#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bellscope/hvm.h"
#include "bellscope/tensor.h"
#include "bellscope/trials.h"
#include "bellscope/rotation_model.h"

namespace bellscope {

/// Tolerance for membership in the projection domain set.
inline constexpr double kDomainTolerance = 1e-10;

/// A bivector was handed to a projection outside the set it is defined on.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// True iff X_ab xi^a vanishes and X_ab X^ab = 1, both within 1e-10.
bool in_domain_set(const UnitVector3 &xi, const Bivector3 &x);

/// (1/sqrt 2) X_ab eps^nab xi_n without rounding or domain check.
double projection_value(const UnitVector3 &xi, const Bivector3 &x, const LeviCivita &eps = LeviCivita::right_handed());

/// P_xi(X): the orientation of the rotation X about xi, recorded as +-1.
/// Throws DomainError unless in_domain_set(xi, X). The raw value is within
/// 1e-10 of +-1 on the domain set and is rounded to the exact outcome.
Outcome project(const UnitVector3 &xi, const Bivector3 &x, const LeviCivita &eps = LeviCivita::right_handed());

/// A family of maps from the outcome space X to {-1, +1}, one per measurement
/// vector. Projections do not see the hidden state.
template <typename X>
struct ProjectionFamily {
    std::function<Outcome(const UnitVector3 &, const X &)> project;
};

ProjectionFamily<Bivector3> bivector_projection_family(LeviCivita eps = LeviCivita::right_handed());

/// Generalized hidden variable model (Lambda, X, A, B, rho, P).
///
/// `X` is opaque to the framework: only the observables and the projection
/// family touch it. `describe_state` is used in diagnostics.
template <typename State, typename X>
struct GeneralizedHVM {
    using Observable = std::function<X(const UnitVector3 &, const State &)>;

    std::string name;
    std::string outcome_space;
    HiddenStateSpace<State> states;
    Observable observable_a;
    Observable observable_b;
    ProjectionFamily<X> projections;
    std::function<std::string(const State &)> describe_state;

    Outcome projected(Side side, const UnitVector3 &v, const State &s) const {
        const auto &obs = side == Side::alice ? observable_a : observable_b;
        return projections.project(v, obs(v, s));
    }
};

/// Thrown when a generalized model cannot be reduced because some observable
/// output lies outside the projection's domain.
class ReductionError : public std::runtime_error {
   public:
    ReductionError(std::string model, Side side, Vector3 setting, std::string state, std::string reason)
        : std::runtime_error(format(model, side, setting, state, reason)),
          model_(std::move(model)),
          side_(side),
          setting_(setting),
          state_(std::move(state)),
          reason_(std::move(reason)) {}

    const std::string &model() const { return model_; }
    Side side() const { return side_; }
    const Vector3 &setting() const { return setting_; }
    const std::string &state() const { return state_; }
    const std::string &reason() const { return reason_; }

   private:
    static std::string format(const std::string &model, Side side, const Vector3 &setting, const std::string &state,
                              const std::string &reason) {
        std::ostringstream s;
        s << "cannot reduce '" << model << "': " << (side == Side::alice ? "A" : "B") << " at setting " << setting
          << ", state " << state << ": " << reason;
        return s.str();
    }

    std::string model_;
    Side side_;
    Vector3 setting_;
    std::string state_;
    std::string reason_;
};

/// Settings used by reduce_to_hvm to validate finite models up front.
std::vector<UnitVector3> default_probe_settings();

namespace detail {

template <typename State, typename X>
Outcome reduced_outcome(const GeneralizedHVM<State, X> &g, Side side, const UnitVector3 &v, const State &s) {
    try {
        return g.projected(side, v, s);
    } catch (const DomainError &e) {
        std::string state = g.describe_state ? g.describe_state(s) : std::string("<opaque>");
        throw ReductionError(g.name, side, v.vec(), std::move(state), e.what());
    }
}

}  // namespace detail

/// The standard model (Lambda, P o A, P o B, rho).
///
/// For finite Lambda every state is checked against `probes` first, and a
/// ReductionError names the first offending (side, setting, state). The
/// reduced observables also raise ReductionError lazily for settings that were
/// not probed.
template <typename State, typename X>
HiddenVariableModel<State> reduce_to_hvm(const GeneralizedHVM<State, X> &g,
                                         const std::vector<UnitVector3> &probes = default_probe_settings()) {
    if (g.states.is_finite()) {
        for (const auto &s : g.states.finite_part().states) {
            for (const auto &v : probes) {
                detail::reduced_outcome(g, Side::alice, v, s);
                detail::reduced_outcome(g, Side::bob, v, s);
            }
        }
    }
    return HiddenVariableModel<State>{
        g.name + " (projected)",
        g.states,
        [g](const UnitVector3 &a, const State &s) { return detail::reduced_outcome(g, Side::alice, a, s); },
        [g](const UnitVector3 &b, const State &s) { return detail::reduced_outcome(g, Side::bob, b, s); },
    };
}

namespace detail {

template <typename State, typename X>
const typename HiddenStateSpace<State>::Finite &finite_states_of(const GeneralizedHVM<State, X> &g) {
    if (!g.states.is_finite()) {
        throw UnsupportedExact("projected expectations of '" + g.name + "' need a finite state space");
    }
    return g.states.finite_part();
}

}  // namespace detail

/// Integral of P_v(observable(v, l)) rho(l) over Lambda (exact sum).
template <typename State, typename X>
double projected_single_expectation(const GeneralizedHVM<State, X> &g, Side side, const UnitVector3 &v) {
    const auto &f = detail::finite_states_of(g);
    double sum = 0.0;
    for (std::size_t i = 0; i < f.states.size(); ++i) {
        sum += f.masses[i] * value(g.projected(side, v, f.states[i]));
    }
    return sum;
}

/// Integral of P_a(A(a, l)) P_b(B(b, l)) rho(l) over Lambda (exact sum).
template <typename State, typename X>
double projected_product_expectation(const GeneralizedHVM<State, X> &g, const UnitVector3 &a, const UnitVector3 &b) {
    const auto &f = detail::finite_states_of(g);
    double sum = 0.0;
    for (std::size_t i = 0; i < f.states.size(); ++i) {
        int pa = value(g.projected(Side::alice, a, f.states[i]));
        int pb = value(g.projected(Side::bob, b, f.states[i]));
        sum += f.masses[i] * (pa * pb);
    }
    return sum;
}

/// The rotation-tensor model viewed as a generalized model with X = bivectors
/// and the orientation projections P_xi.
GeneralizedHVM<RotationState, Bivector3> rotation_tensor_ghvm(const RotationTensorModel &model = RotationTensorModel());

std::string describe(const RotationState &s);

}  // namespace bellscope

#endif  // BELLSCOPE_PROJECTION_H
