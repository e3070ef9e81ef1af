// Copyright 2026 The spinmix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <string>
#include <string_view>

#include "spinmix/matrix.hpp"

namespace spinmix {

/// Measurement outcome / polarization sign along an axis.
enum class Sign : int { plus = +1, minus = -1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// Unit vector on the Bloch sphere. Construction normalizes; the zero vector
/// is rejected.
class Axis {
  public:
    Axis(double ux, double uy, double uz);

    static Axis x() { return {1.0, 0.0, 0.0}; }
    static Axis y() { return {0.0, 1.0, 0.0}; }
    static Axis z() { return {0.0, 0.0, 1.0}; }
    /// Polar angle theta from +z, azimuth phi from +x.
    static Axis polar(double theta, double phi);

    double ux() const { return v_[0]; }
    double uy() const { return v_[1]; }
    double uz() const { return v_[2]; }
    const std::array<double, 3>& components() const { return v_; }

    /// "x", "y", "z" for the coordinate axes, otherwise "ux,uy,uz".
    std::string label() const;

    friend bool operator==(const Axis&, const Axis&) = default;

  private:
    std::array<double, 3> v_;
};

/// Accepts "x", "y", "z" or a comma triple "ux,uy,uz" (normalized).
Axis parse_axis(std::string_view text);

/// Normalized single-particle state, amplitudes in the z basis.
class PureState {
  public:
    PureState(Complex up, Complex down);

    const std::array<Complex, 2>& amplitudes() const { return amp_; }
    Complex operator[](std::size_t i) const { return amp_[i]; }

    /// Bloch vector (<sx>, <sy>, <sz>).
    std::array<double, 3> bloch() const;
    ComplexMatrix projector() const { return ComplexMatrix::outer(amp_); }

    friend bool operator==(const PureState&, const PureState&) = default;

  private:
    std::array<Complex, 2> amp_;
};

/// |<a|b>|^2.
double fidelity(const PureState& a, const PureState& b);

/// Same ray in Hilbert space, within tol on the fidelity.
bool same_state(const PureState& a, const PureState& b, double tol = 1e-12);

/// Eigenvector of axis.sigma with eigenvalue sign. Phase convention: the first
/// nonzero amplitude is real and positive.
PureState spinor(const Axis& axis, Sign sign);

/// (I + sign * axis.sigma) / 2.
ComplexMatrix projector(const Axis& axis, Sign sign);

/// Born weight |<spinor(axis, sign)|state>|^2, computed from the Bloch vector so
/// that mutually unbiased cases come out as exactly 1/2.
double transition_probability(const PureState& state, const Axis& axis, Sign sign);

/// Matrix elements <x_i|m|x_j> in the product x basis, where bit value 0 of
/// each particle index is x+ and 1 is x-. m is given in the z basis.
ComplexMatrix to_x_basis(const ComplexMatrix& m);

/// Short human-readable label, e.g. "x+" for spinor(x, +1).
std::string describe(const PureState& s);

}  // namespace spinmix
