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

#ifndef BELLSCOPE_QUANTUM_H
#define BELLSCOPE_QUANTUM_H

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "bellscope/tensor.h"
#include "bellscope/trials.h"

namespace bellscope {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Only dimensions 2 and 4 occur here.
class ComplexMatrix {
   public:
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Complex &operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    bool is_hermitian(double tol) const;

    friend ComplexMatrix operator*(const ComplexMatrix &x, const ComplexMatrix &y);
    friend ComplexMatrix operator+(const ComplexMatrix &x, const ComplexMatrix &y);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix &x);
    std::vector<Complex> apply(const std::vector<Complex> &v) const;

   private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Kronecker product; kron(a, b) acts as a on the first factor, b on the second.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(const ComplexMatrix &x, const ComplexMatrix &y);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// A pure two-qubit state. Basis order: |+z+z>, |+z-z>, |-z+z>, |-z-z>.
class QuantumState {
   public:
    /// Throws std::invalid_argument unless the amplitudes have unit norm within 1e-12.
    explicit QuantumState(std::array<Complex, 4> amplitudes);

    const std::array<Complex, 4> &amplitudes() const { return amplitudes_; }
    std::vector<Complex> as_vector() const { return {amplitudes_.begin(), amplitudes_.end()}; }

    /// <psi| op |psi>; `op` must be 4x4.
    Complex expectation(const ComplexMatrix &op) const;

   private:
    std::array<Complex, 4> amplitudes_;
};

/// sigma . n with eigenvalues +1 and -1 (hbar = 2).
struct SpinObservable {
    UnitVector3 n;
    ComplexMatrix matrix;
};

SpinObservable make_spin_observable(const UnitVector3 &n);

/// Eigenvector |n, sign> of sigma . n in the z basis, sign in {+1, -1}.
std::array<Complex, 2> spin_eigenvector(const UnitVector3 &n, int sign);

/// (|+z>|-z> - |-z>|+z>) / sqrt(2).
QuantumState singlet_state();

/// The singlet assembled from the eigenbasis of sigma . n:
/// (|n,+>|n,-> - |n,->|n,+>) / sqrt(2), expressed back in the z basis.
QuantumState singlet_in_basis(const UnitVector3 &n);

/// Largest amplitude difference after removing the global phase of `y` relative to `x`.
double distance_up_to_phase(const QuantumState &x, const QuantumState &y);

/// <Psi| (sigma.n) (x) I |Psi> for Alice, <Psi| I (x) (sigma.n) |Psi> for Bob.
double qm_single_expectation(Side side, const UnitVector3 &n);

/// <Psi| (sigma.a) (x) (sigma.b) |Psi>, by explicit 4x4 matrix algebra.
double qm_product_expectation(const UnitVector3 &a, const UnitVector3 &b);

/// Joint outcome probabilities over {-1,+1}^2.
///
/// The singlet prediction fixes only the expectation values; this table is the
/// unique completion with uniform marginals and product expectation equal to the
/// quantum correlation: P(s,t) = (1 + s t c) / 4 where c = -a.b is obtained from
/// `qm_product_expectation`.
class JointDistribution {
   public:
    explicit JointDistribution(double correlation);

    /// s, t in {-1, +1}.
    double operator()(int s, int t) const;
    double correlation() const;
    double marginal_alice(int s) const { return (*this)(s, -1) + (*this)(s, 1); }
    double marginal_bob(int t) const { return (*this)(-1, t) + (*this)(1, t); }

    /// Inverse-CDF lookup over the cells in order (+,+), (+,-), (-,+), (-,-).
    std::pair<Outcome, Outcome> sample(double u) const;

   private:
    // Indexed [s == +1 ? 0 : 1][t == +1 ? 0 : 1].
    std::array<std::array<double, 2>, 2> p_{};
};

JointDistribution qm_joint_distribution(const UnitVector3 &a, const UnitVector3 &b);

/// Draws n trial pairs from the quantum joint distribution using counter-based
/// randomness keyed by (seed, trial index).
TrialRecord simulate_qm_trials(const UnitVector3 &a, const UnitVector3 &b, std::size_t n, std::uint64_t seed);

}  // namespace bellscope

#endif  // BELLSCOPE_QUANTUM_H
