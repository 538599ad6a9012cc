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

#include "bellscope/tensor.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bellscope {

namespace {

using Matrix3 = std::array<std::array<double, 3>, 3>;

std::string describe(const Vector3 &v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

}  // namespace

bool Vector3::is_finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }

double norm(const Vector3 &v) { return std::sqrt(dot(v, v)); }

double max_abs_diff(const Vector3 &u, const Vector3 &v) {
    return std::max({std::abs(u.x - v.x), std::abs(u.y - v.y), std::abs(u.z - v.z)});
}

std::ostream &operator<<(std::ostream &out, const Vector3 &v) {
    return out << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

UnitVector3 UnitVector3::make(const Vector3 &v) {
    if (!v.is_finite()) {
        throw std::invalid_argument("unit vector has non-finite components: " + describe(v));
    }
    if (std::abs(norm(v) - 1.0) > kTensorTolerance) {
        throw std::invalid_argument("vector is not unit length: " + describe(v));
    }
    return UnitVector3(v);
}

UnitVector3 UnitVector3::normalize(const Vector3 &v) {
    if (!v.is_finite()) {
        throw std::invalid_argument("cannot normalize non-finite vector " + describe(v));
    }
    double n = norm(v);
    if (n == 0.0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    return UnitVector3((1.0 / n) * v);
}

UnitVector3 UnitVector3::from_angle_deg(double degrees) {
    if (!std::isfinite(degrees)) {
        throw std::invalid_argument("setting angle must be finite");
    }
    double rad = degrees * std::numbers::pi / 180.0;
    return normalize(Vector3{std::cos(rad), std::sin(rad), 0.0});
}

UnitVector3 UnitVector3::from_spherical(double polar, double azimuth) {
    if (!std::isfinite(polar) || !std::isfinite(azimuth)) {
        throw std::invalid_argument("spherical coordinates must be finite");
    }
    double s = std::sin(polar);
    return normalize(Vector3{s * std::cos(azimuth), s * std::sin(azimuth), std::cos(polar)});
}

Bivector3 Bivector3::from_matrix(const Matrix3 &m) {
    return from_components(0.5 * (m[1][2] - m[2][1]), 0.5 * (m[2][0] - m[0][2]), 0.5 * (m[0][1] - m[1][0]));
}

double Bivector3::operator()(std::size_t a, std::size_t b) const {
    if (a == b) {
        return 0.0;
    }
    // (a, b) is a cyclic pair iff b follows a; its stored slot is the third index.
    std::size_t k = 3 - a - b;
    return b == (a + 1) % 3 ? c_[k] : -c_[k];
}

Matrix3 Bivector3::matrix() const {
    Matrix3 m{};
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            m[a][b] = (*this)(a, b);
        }
    }
    return m;
}

Bivector3 operator+(const Bivector3 &x, const Bivector3 &y) {
    return Bivector3::from_components(x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2]);
}

Bivector3 operator-(const Bivector3 &x, const Bivector3 &y) {
    return Bivector3::from_components(x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2]);
}

Bivector3 operator-(const Bivector3 &x) { return Bivector3::from_components(-x.c_[0], -x.c_[1], -x.c_[2]); }

Bivector3 operator*(double s, const Bivector3 &x) {
    return Bivector3::from_components(s * x.c_[0], s * x.c_[1], s * x.c_[2]);
}

double max_abs_diff(const Bivector3 &x, const Bivector3 &y) {
    double d = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        d = std::max(d, std::abs(x.components()[i] - y.components()[i]));
    }
    return d;
}

std::ostream &operator<<(std::ostream &out, const Bivector3 &x) {
    const auto &c = x.components();
    return out << "[w12=" << c[0] << ", w20=" << c[1] << ", w01=" << c[2] << "]";
}

Bivector3 wedge(const Vector3 &xi, const Vector3 &eta) {
    Matrix3 m{};
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            m[a][b] = 0.5 * (xi[a] * eta[b] - xi[b] * eta[a]);
        }
    }
    return Bivector3::from_matrix(m);
}

Bivector3 eps_contract_vector(const LeviCivita &eps, const Vector3 &v) {
    Matrix3 m{};
    for (std::size_t b = 0; b < 3; ++b) {
        for (std::size_t c = 0; c < 3; ++c) {
            double sum = 0.0;
            for (std::size_t a = 0; a < 3; ++a) {
                sum += eps(a, b, c) * v[a];
            }
            m[b][c] = sum;
        }
    }
    return Bivector3::from_matrix(m);
}

double bivector_inner(const Bivector3 &x, const Bivector3 &y) {
    double sum = 0.0;
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            sum += x(a, b) * y(a, b);
        }
    }
    return sum;
}

Vector3 hodge_dual(const Bivector3 &x, const LeviCivita &eps) {
    Vector3 d;
    for (std::size_t a = 0; a < 3; ++a) {
        double sum = 0.0;
        for (std::size_t b = 0; b < 3; ++b) {
            for (std::size_t c = 0; c < 3; ++c) {
                sum += x(b, c) * eps(a, b, c);
            }
        }
        d[a] = sum;
    }
    return d;
}

Bivector3 lie_bracket(const Bivector3 &x, const Bivector3 &y) {
    Matrix3 m{};
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            double sum = 0.0;
            for (std::size_t n = 0; n < 3; ++n) {
                sum += x(a, n) * y(n, b) - y(a, n) * x(n, b);
            }
            m[a][b] = sum;
        }
    }
    return Bivector3::from_matrix(m);
}

Vector3 contract_first(const Vector3 &xi, const Bivector3 &x) {
    Vector3 r;
    for (std::size_t b = 0; b < 3; ++b) {
        double sum = 0.0;
        for (std::size_t a = 0; a < 3; ++a) {
            sum += xi[a] * x(a, b);
        }
        r[b] = sum;
    }
    return r;
}

}  // namespace bellscope
