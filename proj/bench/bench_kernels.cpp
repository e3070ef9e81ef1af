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

// Wall-clock comparison of the OpenMP kernels against their serial
// references. Usage: bench_kernels [trials] [k]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "spinmix/discrimination.hpp"
#include "spinmix/ensemble.hpp"
#include "spinmix/measurement.hpp"

using namespace spinmix;

namespace {

template <class F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1000000;
    const int k = argc > 2 ? std::atoi(argv[2]) : 8;
    std::printf("threads %d, trials %zu, k %d\n", omp_get_max_threads(), trials, k);

    const auto a = make_fh_a(20);
    const auto s = make_statistical(20, Axis::x());
    unsigned sink = 0;

    const double mc_serial = time_ms([&] { sink += simulate_plus_counts(a, Axis::z(), trials, 1, Execution::serial)[0]; });
    const double mc_par = time_ms([&] { sink += simulate_plus_counts(a, Axis::z(), trials, 1, Execution::parallel)[0]; });
    std::printf("%-28s serial %9.1f ms  parallel %9.1f ms  speedup %.2fx\n", "plus counts (A, N=20)", mc_serial, mc_par,
                mc_serial / mc_par);

    const double disc_serial = time_ms([&] {
        sink += static_cast<unsigned>(monte_carlo_discrimination(a, s, Axis::z(), trials, 2, Execution::serial).success * 10);
    });
    const double disc_par = time_ms([&] {
        sink += static_cast<unsigned>(monte_carlo_discrimination(a, s, Axis::z(), trials, 2, Execution::parallel).success * 10);
    });
    std::printf("%-28s serial %9.1f ms  parallel %9.1f ms  speedup %.2fx\n", "discrimination (A vs S)", disc_serial,
                disc_par, disc_serial / disc_par);

    const auto b = make_fh_b(40);
    const double rdm_ref = time_ms([&] { sink += static_cast<unsigned>(reduced_density_matrix_reference(b, k).dim()); });
    const double rdm_fast = time_ms([&] { sink += static_cast<unsigned>(reduced_density_matrix(b, k).dim()); });
    std::printf("%-28s ref    %9.1f ms  recursive %8.1f ms  speedup %.2fx\n", "rho_k (B, N=40)", rdm_ref, rdm_fast,
                rdm_ref / rdm_fast);

    return sink == 0 ? 1 : 0;
}
