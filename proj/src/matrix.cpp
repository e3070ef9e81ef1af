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

#include "spinmix/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spinmix {

namespace {

// Below this result dimension the OpenMP fork costs more than the loop.
constexpr std::size_t kParallelDim = 128;

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
                                    ")");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) throw std::invalid_argument("ComplexMatrix: dim must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (dim == 0) throw std::invalid_argument("ComplexMatrix: dim must be >= 1");
    if (data_.size() != dim * dim) {
        throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(dim * dim) +
                                    " entries, got " + std::to_string(data_.size()));
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
    ComplexMatrix m(v.size());
    for (std::size_t r = 0; r < v.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * std::conj(v[c]);
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    require_same_dim(*this, o, "operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    require_same_dim(*this, o, "operator-=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& x : data_) x *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "operator*");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j) {
            const Complex arj = a(r, j);
            if (arj == Complex{}) continue;
            for (std::size_t c = 0; c < n; ++c) out(r, c) += arj * b(j, c);
        }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
    return worst;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    return a.dim() == b.dim() && max_abs_diff(a, b) <= tol;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    const std::size_t n = m.dim();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c)
            if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
    return true;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    const std::size_t n = na * nb;
    ComplexMatrix out(n);
#pragma omp parallel for if (n >= kParallelDim) schedule(static)
    for (std::size_t row = 0; row < n; ++row) {
        const std::size_t ia = row / nb;
        const std::size_t ib = row % nb;
        for (std::size_t ja = 0; ja < na; ++ja) {
            const Complex x = a(ia, ja);
            for (std::size_t jb = 0; jb < nb; ++jb) out(row, ja * nb + jb) = x * b(ib, jb);
        }
    }
    return out;
}

void accumulate_kron(ComplexMatrix& acc, double weight, const ComplexMatrix& a,
                     const ComplexMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    const std::size_t n = na * nb;
    if (acc.dim() != n) throw std::invalid_argument("accumulate_kron: accumulator dimension mismatch");
#pragma omp parallel for if (n >= kParallelDim) schedule(static)
    for (std::size_t row = 0; row < n; ++row) {
        const std::size_t ia = row / nb;
        const std::size_t ib = row % nb;
        for (std::size_t ja = 0; ja < na; ++ja) {
            const Complex x = weight * a(ia, ja);
            if (x == Complex{}) continue;
            for (std::size_t jb = 0; jb < nb; ++jb) acc(row, ja * nb + jb) += x * b(ib, jb);
        }
    }
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
    if (!is_hermitian(m, tol)) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
    }
    const std::size_t n = m.dim();
    ComplexMatrix a = m;
    // Symmetrize so roundoff in the input cannot stall the sweep.
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = a(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }

    double frob = 0.0;
    for (const auto& x : a.entries()) frob += std::norm(x);
    const double threshold = 1e-13 * std::max(1.0, std::sqrt(frob));

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    for (;; ++sweep) {
        double off = 0.0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c) off += 2.0 * std::norm(a(r, c));
        if (std::sqrt(off) < threshold) break;
        if (sweep == kMaxSweeps) throw std::runtime_error("hermitian_eigenvalues: Jacobi did not converge");

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double beta = std::abs(apq);
                if (beta < 1e-300) continue;
                // Phase-rotate column q so the (p,q) entry becomes real, then
                // apply the real symmetric Jacobi rotation that annihilates it.
                const Complex phase = std::conj(apq) / beta;  // e^{-i arg apq}
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * beta);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex vpp = c;
                const Complex vpq = s;
                const Complex vqp = -s * phase;
                const Complex vqq = c * phase;

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * vpp + akq * vqp;
                    a(k, q) = akp * vpq + akq * vqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex mpk = a(p, k);
                    const Complex mqk = a(q, k);
                    a(p, k) = std::conj(vpp) * mpk + std::conj(vqp) * mqk;
                    a(q, k) = std::conj(vpq) * mpk + std::conj(vqq) * mqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, const Tolerances& tol) : m_(std::move(m)) {
    const std::size_t n = m_.dim();
    if (n < 2 || !std::has_single_bit(n)) {
        throw std::invalid_argument("DensityMatrix: dimension " + std::to_string(n) +
                                    " is not 2^k with k >= 1");
    }
    k_ = std::countr_zero(n);
    if (k_ > kMaxParticles) {
        throw std::out_of_range("DensityMatrix: " + std::to_string(k_) +
                                " particles exceeds the cap of " + std::to_string(kMaxParticles));
    }
    if (!is_hermitian(m_, tol.algebraic)) throw std::invalid_argument("DensityMatrix: not Hermitian");
    if (std::abs(m_.trace() - 1.0) > tol.algebraic) {
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
}

bool DensityMatrix::is_positive_semidefinite(double tol) const {
    return hermitian_eigenvalues(m_).front() >= -tol;
}

DensityMatrix partial_trace_last(const DensityMatrix& m) {
    if (m.particle_count() < 2) {
        throw std::invalid_argument("partial_trace_last: need at least 2 particles");
    }
    const std::size_t n = m.dim() / 2;
    ComplexMatrix out(n);
#pragma omp parallel for if (n >= kParallelDim) schedule(static)
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = m(2 * r, 2 * c) + m(2 * r + 1, 2 * c + 1);
    return DensityMatrix(std::move(out));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    require_same_dim(a.matrix(), b.matrix(), "trace_distance");
    const auto eig = hermitian_eigenvalues(a.matrix() - b.matrix());
    double sum = 0.0;
    for (double e : eig) sum += std::abs(e);
    return std::clamp(0.5 * sum, 0.0, 1.0);
}

}  // namespace spinmix
