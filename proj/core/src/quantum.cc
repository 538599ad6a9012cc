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

#include "bellscope/quantum.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bellscope {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) {
        throw std::invalid_argument("matrix dimension must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0 || entries_.size() != dim * dim) {
        throw std::invalid_argument("matrix entries do not match dimension");
    }
    for (const auto &e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
            throw std::invalid_argument("matrix entries must be finite");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            r(i, j) = std::conj((*this)(j, i));
        }
    }
    return r;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

bool ComplexMatrix::is_hermitian(double tol) const { return max_abs_diff(*this, adjoint()) <= tol; }

ComplexMatrix operator*(const ComplexMatrix &x, const ComplexMatrix &y) {
    if (x.dim_ != y.dim_) {
        throw std::invalid_argument("matrix dimensions differ");
    }
    ComplexMatrix r(x.dim_);
    for (std::size_t i = 0; i < x.dim_; ++i) {
        for (std::size_t k = 0; k < x.dim_; ++k) {
            for (std::size_t j = 0; j < x.dim_; ++j) {
                r(i, j) += x(i, k) * y(k, j);
            }
        }
    }
    return r;
}

ComplexMatrix operator+(const ComplexMatrix &x, const ComplexMatrix &y) {
    if (x.dim_ != y.dim_) {
        throw std::invalid_argument("matrix dimensions differ");
    }
    ComplexMatrix r(x.dim_);
    for (std::size_t i = 0; i < r.entries_.size(); ++i) {
        r.entries_[i] = x.entries_[i] + y.entries_[i];
    }
    return r;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix &x) {
    ComplexMatrix r(x.dim_);
    for (std::size_t i = 0; i < r.entries_.size(); ++i) {
        r.entries_[i] = s * x.entries_[i];
    }
    return r;
}

std::vector<Complex> ComplexMatrix::apply(const std::vector<Complex> &v) const {
    if (v.size() != dim_) {
        throw std::invalid_argument("vector length does not match matrix dimension");
    }
    std::vector<Complex> r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            r[i] += (*this)(i, j) * v[j];
        }
    }
    return r;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    std::size_t n = a.dim() * b.dim();
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            for (std::size_t k = 0; k < b.dim(); ++k) {
                for (std::size_t l = 0; l < b.dim(); ++l) {
                    r(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return r;
}

double max_abs_diff(const ComplexMatrix &x, const ComplexMatrix &y) {
    if (x.dim() != y.dim()) {
        throw std::invalid_argument("matrix dimensions differ");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        for (std::size_t j = 0; j < x.dim(); ++j) {
            d = std::max(d, std::abs(x(i, j) - y(i, j)));
        }
    }
    return d;
}

ComplexMatrix pauli_x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix pauli_y() { return ComplexMatrix(2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}); }
ComplexMatrix pauli_z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

QuantumState::QuantumState(std::array<Complex, 4> amplitudes) : amplitudes_(amplitudes) {
    double total = 0.0;
    for (const auto &c : amplitudes_) {
        total += std::norm(c);
    }
    if (!std::isfinite(total) || std::abs(total - 1.0) > kTensorTolerance) {
        throw std::invalid_argument("quantum state must have unit norm");
    }
}

Complex QuantumState::expectation(const ComplexMatrix &op) const {
    if (op.dim() != 4) {
        throw std::invalid_argument("two-qubit expectation needs a 4x4 operator");
    }
    auto psi = as_vector();
    auto op_psi = op.apply(psi);
    Complex r = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        r += std::conj(psi[i]) * op_psi[i];
    }
    return r;
}

SpinObservable make_spin_observable(const UnitVector3 &n) {
    ComplexMatrix m = Complex(n[0]) * pauli_x() + Complex(n[1]) * pauli_y() + Complex(n[2]) * pauli_z();
    return SpinObservable{n, std::move(m)};
}

std::array<Complex, 2> spin_eigenvector(const UnitVector3 &n, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("eigenvector sign must be +1 or -1");
    }
    double polar = std::acos(std::clamp(n[2], -1.0, 1.0));
    double azimuth = std::atan2(n[1], n[0]);
    double c = std::cos(polar / 2.0);
    double s = std::sin(polar / 2.0);
    Complex phase = std::polar(1.0, azimuth);
    if (sign == 1) {
        return {Complex(c), phase * s};
    }
    return {-std::conj(phase) * s, Complex(c)};
}

QuantumState singlet_state() {
    const double r = 1.0 / std::numbers::sqrt2;
    return QuantumState({0.0, r, -r, 0.0});
}

QuantumState singlet_in_basis(const UnitVector3 &n) {
    auto up = spin_eigenvector(n, 1);
    auto down = spin_eigenvector(n, -1);
    const double r = 1.0 / std::numbers::sqrt2;
    std::array<Complex, 4> amp{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            amp[2 * i + j] = r * (up[i] * down[j] - down[i] * up[j]);
        }
    }
    return QuantumState(amp);
}

double distance_up_to_phase(const QuantumState &x, const QuantumState &y) {
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        overlap += std::conj(y.amplitudes()[i]) * x.amplitudes()[i];
    }
    Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
    double d = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        d = std::max(d, std::abs(x.amplitudes()[i] - phase * y.amplitudes()[i]));
    }
    return d;
}

double qm_single_expectation(Side side, const UnitVector3 &n) {
    const auto sigma = make_spin_observable(n).matrix;
    const auto id = ComplexMatrix::identity(2);
    const auto op = side == Side::alice ? kron(sigma, id) : kron(id, sigma);
    return singlet_state().expectation(op).real();
}

double qm_product_expectation(const UnitVector3 &a, const UnitVector3 &b) {
    const auto op = kron(make_spin_observable(a).matrix, make_spin_observable(b).matrix);
    return singlet_state().expectation(op).real();
}

JointDistribution::JointDistribution(double correlation) {
    if (!std::isfinite(correlation) || std::abs(correlation) > 1.0 + 1e-9) {
        throw ContractViolation("correlation outside [-1, 1]");
    }
    double c = std::clamp(correlation, -1.0, 1.0);
    for (int s : {1, -1}) {
        for (int t : {1, -1}) {
            p_[s == 1 ? 0 : 1][t == 1 ? 0 : 1] = (1.0 + s * t * c) / 4.0;
        }
    }
}

double JointDistribution::operator()(int s, int t) const {
    if ((s != 1 && s != -1) || (t != 1 && t != -1)) {
        throw std::invalid_argument("outcomes must be +1 or -1");
    }
    return p_[s == 1 ? 0 : 1][t == 1 ? 0 : 1];
}

double JointDistribution::correlation() const {
    double c = 0.0;
    for (int s : {1, -1}) {
        for (int t : {1, -1}) {
            c += s * t * (*this)(s, t);
        }
    }
    return c;
}

std::pair<Outcome, Outcome> JointDistribution::sample(double u) const {
    double acc = p_[0][0];
    if (u < acc) {
        return {Outcome::up, Outcome::up};
    }
    acc += p_[0][1];
    if (u < acc) {
        return {Outcome::up, Outcome::down};
    }
    acc += p_[1][0];
    if (u < acc) {
        return {Outcome::down, Outcome::up};
    }
    return {Outcome::down, Outcome::down};
}

JointDistribution qm_joint_distribution(const UnitVector3 &a, const UnitVector3 &b) {
    return JointDistribution(qm_product_expectation(a, b));
}

TrialRecord simulate_qm_trials(const UnitVector3 &a, const UnitVector3 &b, std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("trial count must be at least 1");
    }
    const auto dist = qm_joint_distribution(a, b);
    TrialRecord record{a, b, {}, seed};
    record.outcomes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        TrialRng rng(seed, i);
        record.outcomes.push_back(dist.sample(rng.uniform()));
    }
    return record;
}

}  // namespace bellscope
