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

#include "spinmix/spin.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace spinmix {

Axis::Axis(double ux, double uy, double uz) {
    const double norm = std::sqrt(ux * ux + uy * uy + uz * uz);
    if (!std::isfinite(norm) || norm == 0.0) throw std::invalid_argument("Axis: zero or non-finite vector");
    if (std::abs(norm - 1.0) <= 1e-15) {
        v_ = {ux, uy, uz};
    } else {
        v_ = {ux / norm, uy / norm, uz / norm};
    }
}

Axis Axis::polar(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

std::string Axis::label() const {
    if (*this == x()) return "x";
    if (*this == y()) return "y";
    if (*this == z()) return "z";
    return fmt::format("{},{},{}", v_[0], v_[1], v_[2]);
}

namespace {

double parse_double(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("axis: cannot parse number '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

Axis parse_axis(std::string_view text) {
    if (text == "x") return Axis::x();
    if (text == "y") return Axis::y();
    if (text == "z") return Axis::z();
    std::vector<double> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        parts.push_back(parse_double(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 3) {
        throw std::invalid_argument("axis: expected x, y, z or 'ux,uy,uz', got '" + std::string(text) + "'");
    }
    return {parts[0], parts[1], parts[2]};
}

PureState::PureState(Complex up, Complex down) : amp_{up, down} {
    const double norm2 = std::norm(up) + std::norm(down);
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw std::invalid_argument(fmt::format("PureState: squared norm {} is not 1", norm2));
    }
}

std::array<double, 3> PureState::bloch() const {
    const Complex cross = std::conj(amp_[0]) * amp_[1];
    return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(amp_[0]) - std::norm(amp_[1])};
}

double fidelity(const PureState& a, const PureState& b) {
    return std::norm(std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1]);
}

bool same_state(const PureState& a, const PureState& b, double tol) {
    return fidelity(a, b) >= 1.0 - tol;
}

ComplexMatrix projector(const Axis& axis, Sign sign) {
    const double s = 0.5 * to_int(sign);
    ComplexMatrix p(2);
    p(0, 0) = 0.5 + s * axis.uz();
    p(1, 1) = 0.5 - s * axis.uz();
    p(0, 1) = s * Complex(axis.ux(), -axis.uy());
    p(1, 0) = s * Complex(axis.ux(), axis.uy());
    return p;
}

PureState spinor(const Axis& axis, Sign sign) {
    // Take the longer column of the projector; it is a nonzero multiple of the
    // eigenvector for every axis, including the poles.
    const ComplexMatrix p = projector(axis, sign);
    const std::size_t col = p(0, 0).real() >= p(1, 1).real() ? 0 : 1;
    const double len = std::sqrt(p(col, col).real());
    Complex a0 = p(0, col) / len;
    Complex a1 = p(1, col) / len;
    const Complex lead = a0 != Complex{} ? a0 : a1;
    const Complex phase = std::conj(lead) / std::abs(lead);
    a0 *= phase;
    a1 *= phase;
    // The leading amplitude is real by construction; drop roundoff residue.
    if (a0 != Complex{}) {
        a0 = a0.real();
    } else {
        a1 = a1.real();
    }
    const double norm = std::sqrt(std::norm(a0) + std::norm(a1));
    return {a0 / norm, a1 / norm};
}

double transition_probability(const PureState& state, const Axis& axis, Sign sign) {
    const auto r = state.bloch();
    const double dot = axis.ux() * r[0] + axis.uy() * r[1] + axis.uz() * r[2];
    return std::clamp(0.5 * (1.0 + to_int(sign) * dot), 0.0, 1.0);
}

ComplexMatrix to_x_basis(const ComplexMatrix& m) {
    // Conjugate by H on one particle at a time; H has x+ and x- as columns
    // and is real symmetric, so U^dagger M U needs only pairwise row and
    // column combinations.
    const PureState plus = spinor(Axis::x(), Sign::plus);
    const PureState minus = spinor(Axis::x(), Sign::minus);
    const double h00 = plus[0].real(), h10 = plus[1].real();
    const double h01 = minus[0].real(), h11 = minus[1].real();
    const std::size_t n = m.dim();
    ComplexMatrix out = m;
    for (std::size_t bit = 1; bit < n; bit <<= 1) {
        for (std::size_t r = 0; r < n; ++r) {
            if (r & bit) continue;
            for (std::size_t c = 0; c < n; ++c) {
                const Complex a = out(r, c), b = out(r | bit, c);
                out(r, c) = h00 * a + h10 * b;
                out(r | bit, c) = h01 * a + h11 * b;
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (c & bit) continue;
                const Complex a = out(r, c), b = out(r, c | bit);
                out(r, c) = a * h00 + b * h10;
                out(r, c | bit) = a * h01 + b * h11;
            }
        }
    }
    return out;
}

std::string describe(const PureState& s) {
    for (const auto& [name, axis] : {std::pair{"x", Axis::x()}, {"y", Axis::y()}, {"z", Axis::z()}}) {
        for (Sign sign : {Sign::plus, Sign::minus}) {
            if (same_state(s, spinor(axis, sign))) return std::string(name) + to_char(sign);
        }
    }
    const auto r = s.bloch();
    return fmt::format("bloch({:.6g},{:.6g},{:.6g})", r[0], r[1], r[2]);
}

}  // namespace spinmix
