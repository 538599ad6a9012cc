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

#include <numbers>

namespace bellscope {

Vector3 sample_sphere(TrialRng &rng) {
    // Archimedes: z is uniform on [-1, 1] for the uniform measure on S^2.
    double z = 2.0 * rng.uniform() - 1.0;
    double phi = 2.0 * std::numbers::pi * rng.uniform();
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

Outcome sign_outcome(double x) { return x >= 0.0 ? Outcome::up : Outcome::down; }

double sign_model_correlation(const UnitVector3 &a, const UnitVector3 &b) {
    double theta = std::acos(std::clamp(dot(a, b), -1.0, 1.0));
    return -1.0 + 2.0 * theta / std::numbers::pi;
}

HiddenVariableModel<Vector3> make_sign_model() {
    auto exact = [](const UnitVector3 &a, const UnitVector3 &b) {
        CorrelationEstimate e;
        e.mean_ab = sign_model_correlation(a, b);
        return e;
    };
    return HiddenVariableModel<Vector3>{
        "sign-model",
        HiddenStateSpace<Vector3>::continuous(sample_sphere, exact),
        [](const UnitVector3 &a, const Vector3 &l) { return sign_outcome(dot(a, l)); },
        [](const UnitVector3 &b, const Vector3 &l) { return -sign_outcome(dot(b, l)); },
    };
}

}  // namespace bellscope
