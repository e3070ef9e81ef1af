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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace spinmix {

using Complex = std::complex<double>;

/// Absolute tolerances used by validation and comparison helpers.
struct Tolerances {
    double algebraic = 1e-12;  // Hermiticity, trace, entrywise identities
    double spectral = 1e-10;   // anything that goes through an eigensolve
};

/// Largest supported particle count for k-particle operators (dim 2^12).
inline constexpr int kMaxParticles = 12;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    /// |v><v| for a state vector v.
    static ComplexMatrix outer(std::span<const Complex> v);

    std::size_t dim() const { return dim_; }
    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    std::span<const Complex> entries() const { return data_; }
    std::span<Complex> entries() { return data_; }

    Complex trace() const;
    ComplexMatrix adjoint() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b. Throws on dimension mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);
bool is_hermitian(const ComplexMatrix& m, double tol);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// acc += weight * kron(a, b), without materializing the product.
void accumulate_kron(ComplexMatrix& acc, double weight, const ComplexMatrix& a,
                     const ComplexMatrix& b);

/// Real eigenvalues of a Hermitian matrix in ascending order (cyclic Jacobi).
/// Throws std::invalid_argument if m is not Hermitian within tol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol = 1e-12);

/// Density operator on k spin-1/2 particles (dim 2^k). Construction checks
/// dimension, Hermiticity and unit trace; positivity is checked on demand
/// because it costs an eigensolve.
class DensityMatrix {
  public:
    explicit DensityMatrix(ComplexMatrix m, const Tolerances& tol = {});

    const ComplexMatrix& matrix() const { return m_; }
    int particle_count() const { return k_; }
    std::size_t dim() const { return m_.dim(); }
    const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    bool is_positive_semidefinite(double tol = 1e-12) const;

  private:
    ComplexMatrix m_;
    int k_ = 0;
};

/// Traces out the last (least significant) qubit factor.
DensityMatrix partial_trace_last(const DensityMatrix& m);

/// Half the sum of |eigenvalues(a - b)|, clamped to [0, 1].
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace spinmix
