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

#include "bellscope/rotation_model.h"

#include <numbers>
#include <stdexcept>
#include <string>

namespace bellscope {

RotationState RotationState::make(int lambda) {
    if (lambda != 1 && lambda != -1) {
        throw std::invalid_argument("hidden state must be +1 or -1, got " + std::to_string(lambda));
    }
    return RotationState(lambda);
}

Bivector3 RotationTensorModel::observable_a(const UnitVector3 &alpha, const RotationState &s) const {
    return (s.lambda() / std::numbers::sqrt2) * eps_contract_vector(eps_, alpha);
}

Bivector3 RotationTensorModel::observable_b(const UnitVector3 &beta, const RotationState &s) const {
    return (-s.lambda() / std::numbers::sqrt2) * eps_contract_vector(eps_, beta);
}

Bivector3 RotationTensorModel::observable(Side side, const UnitVector3 &v, const RotationState &s) const {
    return side == Side::alice ? observable_a(v, s) : observable_b(v, s);
}

Bivector3 RotationTensorModel::tensor_single_expectation(Side side, const UnitVector3 &v) const {
    Bivector3 sum;
    for (const auto &s : states()) {
        sum = sum + mass(s) * observable(side, v, s);
    }
    return sum;
}

double RotationTensorModel::tensor_product_expectation(const UnitVector3 &alpha, const UnitVector3 &beta) const {
    double sum = 0.0;
    for (const auto &s : states()) {
        sum += mass(s) * bivector_inner(observable_a(alpha, s), observable_b(beta, s));
    }
    return sum;
}

}  // namespace bellscope
