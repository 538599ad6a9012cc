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

#ifndef BELLSCOPE_TENSOR_H
#define BELLSCOPE_TENSOR_H

#include <array>
#include <cstddef>
#include <iosfwd>

namespace bellscope {

/// Absolute tolerance used for every O(1) tensor comparison in the library.
inline constexpr double kTensorTolerance = 1e-12;

/// A constant vector (or covector; the metric is the identity) on Euclidean 3-space.
struct Vector3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
    constexpr double &operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }

    bool is_finite() const;

    friend constexpr Vector3 operator+(const Vector3 &u, const Vector3 &v) { return {u.x + v.x, u.y + v.y, u.z + v.z}; }
    friend constexpr Vector3 operator-(const Vector3 &u, const Vector3 &v) { return {u.x - v.x, u.y - v.y, u.z - v.z}; }
    friend constexpr Vector3 operator-(const Vector3 &u) { return {-u.x, -u.y, -u.z}; }
    friend constexpr Vector3 operator*(double s, const Vector3 &v) { return {s * v.x, s * v.y, s * v.z}; }
    friend constexpr Vector3 operator*(const Vector3 &v, double s) { return s * v; }
    friend constexpr bool operator==(const Vector3 &, const Vector3 &) = default;
};

constexpr double dot(const Vector3 &u, const Vector3 &v) { return u.x * v.x + u.y * v.y + u.z * v.z; }
constexpr Vector3 cross(const Vector3 &u, const Vector3 &v) {
    return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}
double norm(const Vector3 &v);
double max_abs_diff(const Vector3 &u, const Vector3 &v);
std::ostream &operator<<(std::ostream &out, const Vector3 &v);

/// A point of the 2-sphere: a detector setting.
///
/// Construction through `make` rejects vectors whose length differs from 1 by
/// more than `kTensorTolerance`; `normalize` rescales any finite nonzero vector.
class UnitVector3 {
   public:
    /// Throws std::invalid_argument unless | |v| - 1 | <= 1e-12 and v is finite.
    static UnitVector3 make(const Vector3 &v);
    /// Throws std::invalid_argument for zero or non-finite input.
    static UnitVector3 normalize(const Vector3 &v);
    /// Unit vector at `degrees` from +x inside the x-y plane.
    static UnitVector3 from_angle_deg(double degrees);
    /// Polar angle from +z, azimuth from +x, both in radians.
    static UnitVector3 from_spherical(double polar, double azimuth);

    static UnitVector3 e_x() { return UnitVector3(Vector3{1, 0, 0}); }
    static UnitVector3 e_y() { return UnitVector3(Vector3{0, 1, 0}); }
    static UnitVector3 e_z() { return UnitVector3(Vector3{0, 0, 1}); }

    const Vector3 &vec() const { return v_; }
    operator const Vector3 &() const { return v_; }
    double operator[](std::size_t i) const { return v_[i]; }
    UnitVector3 operator-() const { return UnitVector3(-v_); }

    friend bool operator==(const UnitVector3 &, const UnitVector3 &) = default;

   private:
    explicit UnitVector3(const Vector3 &v) : v_(v) {}
    Vector3 v_;
};

/// The volume element: +1 for the right-handed epsilon, -1 for its negative.
class LeviCivita {
   public:
    static constexpr LeviCivita right_handed() { return LeviCivita(1); }
    static constexpr LeviCivita left_handed() { return LeviCivita(-1); }

    constexpr int orientation() const { return orientation_; }
    constexpr LeviCivita flipped() const { return LeviCivita(-orientation_); }

    /// Component eps_abc with indices in {0,1,2}.
    constexpr int operator()(std::size_t a, std::size_t b, std::size_t c) const {
        if (a == b || b == c || a == c) {
            return 0;
        }
        // Even permutations of (0,1,2) are cyclic shifts.
        bool even = (b == (a + 1) % 3);
        return even ? orientation_ : -orientation_;
    }

    friend constexpr bool operator==(const LeviCivita &, const LeviCivita &) = default;

   private:
    explicit constexpr LeviCivita(int orientation) : orientation_(orientation) {}
    int orientation_;
};

/// A constant antisymmetric rank-2 tensor on Euclidean 3-space.
///
/// Only the three independent components w(1,2), w(2,0), w(0,1) are stored, so
/// antisymmetry holds by construction. Indexed access `(a, b)` returns the full
/// component array entry.
class Bivector3 {
   public:
    constexpr Bivector3() = default;
    /// Components (w12, w20, w01).
    static constexpr Bivector3 from_components(double w12, double w20, double w01) {
        Bivector3 r;
        r.c_ = {w12, w20, w01};
        return r;
    }
    /// Antisymmetric part 1/2 (m - m^T) of a full 3x3 array.
    static Bivector3 from_matrix(const std::array<std::array<double, 3>, 3> &m);

    double operator()(std::size_t a, std::size_t b) const;
    std::array<std::array<double, 3>, 3> matrix() const;
    const std::array<double, 3> &components() const { return c_; }

    bool is_zero() const { return c_[0] == 0.0 && c_[1] == 0.0 && c_[2] == 0.0; }

    friend Bivector3 operator+(const Bivector3 &x, const Bivector3 &y);
    friend Bivector3 operator-(const Bivector3 &x, const Bivector3 &y);
    friend Bivector3 operator-(const Bivector3 &x);
    friend Bivector3 operator*(double s, const Bivector3 &x);
    friend Bivector3 operator*(const Bivector3 &x, double s) { return s * x; }
    friend bool operator==(const Bivector3 &, const Bivector3 &) = default;

   private:
    std::array<double, 3> c_{0.0, 0.0, 0.0};
};

double max_abs_diff(const Bivector3 &x, const Bivector3 &y);
std::ostream &operator<<(std::ostream &out, const Bivector3 &x);

/// xi_[a eta_b] = 1/2 (xi_a eta_b - xi_b eta_a). Note the factor 1/2; some
/// texts define the wedge without it.
Bivector3 wedge(const Vector3 &xi, const Vector3 &eta);

/// T_bc = eps_abc v^a.
Bivector3 eps_contract_vector(const LeviCivita &eps, const Vector3 &v);

/// X_ab Y^ab, the full double sum over both indices.
double bivector_inner(const Bivector3 &x, const Bivector3 &y);

/// d^a = X_bc eps^abc. Recovers the rotation axis of X (scaled).
Vector3 hodge_dual(const Bivector3 &x, const LeviCivita &eps);

/// [x, y]_ab = x_an y^n_b - y_an x^n_b.
Bivector3 lie_bracket(const Bivector3 &x, const Bivector3 &y);

/// xi^a X_ab: contraction on the first slot.
Vector3 contract_first(const Vector3 &xi, const Bivector3 &x);

}  // namespace bellscope

#endif  // BELLSCOPE_TENSOR_H
