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

// Test-only reference computations. Nothing here goes through the library's
// kron / reduced-density-matrix / pmf code paths.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "spinmix/ensemble.hpp"
#include "spinmix/matrix.hpp"

namespace oracle {

using spinmix::Complex;
using spinmix::ComplexMatrix;
using Vec = std::vector<Complex>;

inline Vec tensor(const Vec& a, const Vec& b) {
    Vec out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return out;
}

inline ComplexMatrix ketbra(const Vec& ket, const Vec& bra) {
    ComplexMatrix m(ket.size());
    for (std::size_t r = 0; r < ket.size(); ++r)
        for (std::size_t c = 0; c < bra.size(); ++c) m(r, c) = ket[r] * std::conj(bra[c]);
    return m;
}

inline const Vec& x_plus() {
    static const Vec v{std::sqrt(0.5), std::sqrt(0.5)};
    return v;
}
inline const Vec& x_minus() {
    static const Vec v{std::sqrt(0.5), -std::sqrt(0.5)};
    return v;
}
inline const Vec& z_plus() {
    static const Vec v{1.0, 0.0};
    return v;
}
inline const Vec& z_minus() {
    static const Vec v{0.0, 1.0};
    return v;
}

/// Average of |psi><psi| over every ordered selection of k distinct particles
/// from the explicit particle list of a fixed-composition ensemble.
inline ComplexMatrix brute_force_rdm(const spinmix::EnsembleSpec& spec, int k) {
    std::vector<Vec> particles;
    for (std::size_t c = 0; c < spec.component_count(); ++c)
        for (std::size_t i = 0; i < spec.count(c); ++i) {
            const auto& a = spec.state(c).amplitudes();
            particles.push_back({a[0], a[1]});
        }
    const std::size_t n = particles.size();
    ComplexMatrix acc(std::size_t{1} << k);
    std::size_t selections = 0;
    std::vector<std::size_t> pick;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self) -> void {
        if (pick.size() == static_cast<std::size_t>(k)) {
            Vec psi{1.0};
            for (auto i : pick) psi = tensor(psi, particles[i]);
            acc += ketbra(psi, psi);
            ++selections;
            return;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            used[i] = true;
            pick.push_back(i);
            self(self);
            pick.pop_back();
            used[i] = false;
        }
    };
    rec(rec);
    acc *= Complex(1.0 / static_cast<double>(selections));
    return acc;
}

/// Coefficient for parallel pairs: (N/2)(N/2 - 1) / (N(N - 1)).
inline double parallel_coefficient(double n) { return 0.5 * n * (0.5 * n - 1.0) / (n * (n - 1.0)); }
/// Coefficient for anti-parallel pairs: (N^2/4) / (N(N - 1)).
inline double antiparallel_coefficient(double n) { return (n * n / 4.0) / (n * (n - 1.0)); }

/// Displayed closed form of the two-particle state built from the +/- states
/// of one axis.
inline ComplexMatrix closed_form_rho2(double n, const Vec& plus, const Vec& minus) {
    const double a = parallel_coefficient(n);
    const double b = antiparallel_coefficient(n);
    const Vec pp = tensor(plus, plus), mm = tensor(minus, minus);
    const Vec pm = tensor(plus, minus), mp = tensor(minus, plus);
    ComplexMatrix m = (ketbra(pp, pp) + ketbra(mm, mm)) * Complex(a);
    m += (ketbra(pm, pm) + ketbra(mp, mp)) * Complex(b);
    return m;
}

inline ComplexMatrix closed_form_rho2_a(double n) { return closed_form_rho2(n, x_plus(), x_minus()); }
inline ComplexMatrix closed_form_rho2_b(double n) { return closed_form_rho2(n, z_plus(), z_minus()); }

/// Second displayed line for the z-prepared ensemble: diagonal x-basis terms
/// plus the ++/-- and +-/-+ cross terms.
inline ComplexMatrix closed_form_rho2_b_in_x_terms(double n) {
    const double a = 0.5 * n * (0.5 * n - 1.0);
    const double b = n * n / 4.0;
    const double denom = 2.0 * n * (n - 1.0);
    const Vec pp = tensor(x_plus(), x_plus()), mm = tensor(x_minus(), x_minus());
    const Vec pm = tensor(x_plus(), x_minus()), mp = tensor(x_minus(), x_plus());
    ComplexMatrix m = (ketbra(pp, pp) + ketbra(pm, pm) + ketbra(mp, mp) + ketbra(mm, mm)) * Complex((a + b) / denom);
    m += (ketbra(pp, mm) + ketbra(mm, pp) + ketbra(pm, mp) + ketbra(mp, pm)) * Complex((a - b) / denom);
    return m;
}

/// Permutation matrix exchanging particle slots i and j of k (slot 0 is the
/// most significant bit).
inline ComplexMatrix swap_operator(int k, int i, int j) {
    const std::size_t dim = std::size_t{1} << k;
    ComplexMatrix s(dim);
    const int bi = k - 1 - i, bj = k - 1 - j;
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t out = idx;
        const std::size_t vi = (idx >> bi) & 1u, vj = (idx >> bj) & 1u;
        out &= ~((std::size_t{1} << bi) | (std::size_t{1} << bj));
        out |= (vi << bj) | (vj << bi);
        s(out, idx) = 1.0;
    }
    return s;
}

/// C(n, m) 2^-n in long double via the multiplicative formula.
inline long double binomial_half(unsigned n, unsigned m) {
    long double c = 1.0L;
    for (unsigned i = 1; i <= m; ++i) c = c * static_cast<long double>(n - m + i) / static_cast<long double>(i);
    return c * std::pow(0.5L, static_cast<long double>(n));
}

inline std::uint64_t binomial_exact(unsigned n, unsigned m) {
    std::uint64_t c = 1;
    for (unsigned i = 1; i <= m; ++i) c = c * (n - m + i) / i;
    return c;
}

/// Random Hermitian unit-trace PSD matrix: a random mixture of random pure states.
inline ComplexMatrix random_density(std::size_t dim, std::mt19937_64& rng, int terms = 3) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0.05, 1.0);
    ComplexMatrix acc(dim);
    double total = 0.0;
    for (int t = 0; t < terms; ++t) {
        Vec v(dim);
        double norm = 0.0;
        for (auto& x : v) {
            x = Complex(g(rng), g(rng));
            norm += std::norm(x);
        }
        for (auto& x : v) x /= std::sqrt(norm);
        const double w = u(rng);
        acc += ketbra(v, v) * Complex(w);
        total += w;
    }
    acc *= Complex(1.0 / total);
    return acc;
}

}  // namespace oracle
