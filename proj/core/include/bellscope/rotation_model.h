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

#ifndef BELLSCOPE_ROTATION_MODEL_H
#define BELLSCOPE_ROTATION_MODEL_H

#include <array>

#include "bellscope/tensor.h"
#include "bellscope/trials.h"

namespace bellscope {

/// Hidden state of the rotation-tensor model: lambda in {-1, +1}.
class RotationState {
   public:
    /// Throws std::invalid_argument unless lambda is -1 or +1.
    static RotationState make(int lambda);
    static RotationState plus() { return RotationState(1); }
    static RotationState minus() { return RotationState(-1); }

    int lambda() const { return lambda_; }
    friend bool operator==(const RotationState &, const RotationState &) = default;

   private:
    explicit RotationState(int lambda) : lambda_(lambda) {}
    int lambda_;
};

/// Local, deterministic model whose outcomes are rotation bivectors instead of
/// +-1. Lambda = {+1, -1} with mass 1/2 each, and
///
///   A_bc(alpha, l) =  (l / sqrt 2) eps_abc alpha^a
///   B_bc(beta,  l) = -(l / sqrt 2) eps_abc beta^a
///
/// Single-side "expectations" are bivector valued (both are the zero tensor);
/// the product expectation is the scalar contraction A_bc B^bc, which equals
/// -alpha.beta before any projection onto +-1.
class RotationTensorModel {
   public:
    explicit RotationTensorModel(LeviCivita eps = LeviCivita::right_handed()) : eps_(eps) {}

    const LeviCivita &orientation() const { return eps_; }
    static std::array<RotationState, 2> states() { return {RotationState::plus(), RotationState::minus()}; }
    static constexpr double mass(const RotationState &) { return 0.5; }

    Bivector3 observable_a(const UnitVector3 &alpha, const RotationState &s) const;
    Bivector3 observable_b(const UnitVector3 &beta, const RotationState &s) const;
    Bivector3 observable(Side side, const UnitVector3 &v, const RotationState &s) const;

    /// sum over lambda of rho(lambda) times the observable; exactly the zero bivector.
    Bivector3 tensor_single_expectation(Side side, const UnitVector3 &v) const;

    /// sum over lambda of rho(lambda) A_bc(alpha, lambda) B^bc(beta, lambda).
    double tensor_product_expectation(const UnitVector3 &alpha, const UnitVector3 &beta) const;

   private:
    LeviCivita eps_;
};

}  // namespace bellscope

#endif  // BELLSCOPE_ROTATION_MODEL_H
