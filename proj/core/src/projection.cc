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

#include <cmath>
#include <numbers>

namespace bellscope {

bool in_domain_set(const UnitVector3 &xi, const Bivector3 &x) {
    bool orthogonal = norm(contract_first(xi, x)) <= kDomainTolerance;
    bool normalized = std::abs(bivector_inner(x, x) - 1.0) <= kDomainTolerance;
    return orthogonal && normalized;
}

double projection_value(const UnitVector3 &xi, const Bivector3 &x, const LeviCivita &eps) {
    // X_ab eps^nab xi_n: contract the bivector into its axis, then along xi.
    double sum = 0.0;
    for (std::size_t n = 0; n < 3; ++n) {
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 3; ++b) {
                sum += x(a, b) * eps(n, a, b) * xi[n];
            }
        }
    }
    return sum / std::numbers::sqrt2;
}

Outcome project(const UnitVector3 &xi, const Bivector3 &x, const LeviCivita &eps) {
    if (!in_domain_set(xi, x)) {
        std::ostringstream s;
        s.precision(17);
        s << "bivector " << x << " is outside the projection domain of " << xi.vec()
          << " (|X.xi| = " << norm(contract_first(xi, x)) << ", X.X = " << bivector_inner(x, x) << ")";
        throw DomainError(s.str());
    }
    double raw = projection_value(xi, x, eps);
    if (std::abs(std::abs(raw) - 1.0) > kDomainTolerance) {
        throw DomainError("projection value " + std::to_string(raw) + " is not +-1");
    }
    return raw > 0.0 ? Outcome::up : Outcome::down;
}

ProjectionFamily<Bivector3> bivector_projection_family(LeviCivita eps) {
    return {[eps](const UnitVector3 &xi, const Bivector3 &x) { return project(xi, x, eps); }};
}

std::vector<UnitVector3> default_probe_settings() {
    return {
        UnitVector3::e_x(),
        UnitVector3::e_y(),
        UnitVector3::e_z(),
        UnitVector3::normalize({1, 1, 1}),
        UnitVector3::normalize({-0.3, 0.8, -0.5}),
        UnitVector3::normalize({0.6, -0.1, 0.79}),
    };
}

std::string describe(const RotationState &s) { return s.lambda() > 0 ? "lambda=+1" : "lambda=-1"; }

GeneralizedHVM<RotationState, Bivector3> rotation_tensor_ghvm(const RotationTensorModel &model) {
    auto states = RotationTensorModel::states();
    return GeneralizedHVM<RotationState, Bivector3>{
        "rotation-tensor",
        "bivectors R3^R3",
        HiddenStateSpace<RotationState>::finite({states[0], states[1]},
                                                  {RotationTensorModel::mass(states[0]), RotationTensorModel::mass(states[1])}),
        [model](const UnitVector3 &alpha, const RotationState &s) { return model.observable_a(alpha, s); },
        [model](const UnitVector3 &beta, const RotationState &s) { return model.observable_b(beta, s); },
        bivector_projection_family(model.orientation()),
        [](const RotationState &s) { return describe(s); },
    };
}

}  // namespace bellscope
