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

#include <doctest.h>

#include <omp.h>

#include <cmath>

#include "oracles.hpp"
#include "spinmix/discrimination.hpp"

using namespace spinmix;

TEST_CASE("pairwise trace distances") {
    const auto d = pairwise_trace_distances(make_fh_a(4), make_fh_b(4), 2);
    REQUIRE(d.size() == 2);
    CHECK(d[0].k == 1);
    CHECK(d[0].distance <= 1e-12);
    CHECK(std::abs(d[1].distance - 1.0 / 6.0) <= 1e-10);

    for (const auto& kd : pairwise_trace_distances(make_statistical(6, Axis::z()), make_statistical(6, Axis::x()), 4))
        CHECK(kd.distance < 1e-12);

    CHECK_THROWS_AS(pairwise_trace_distances(make_fh_a(4), make_fh_b(4), 5), std::out_of_range);
    CHECK_THROWS_AS(pairwise_trace_distances(make_fh_a(4), make_fh_b(4), 0), std::out_of_range);
}

TEST_CASE("pair-level trace distance law 1/(2(N-1))") {
    for (std::size_t n : {2u, 4u, 6u, 10u, 100u}) {
        const double expected = 1.0 / (2.0 * (static_cast<double>(n) - 1.0));
        const double got = trace_distance(reduced_density_matrix(make_fh_a(n), 2), reduced_density_matrix(make_fh_b(n), 2));
        CHECK(std::abs(got - expected) <= 1e-10);
        // closed-form difference, eigendecomposed
        const DensityMatrix ca(oracle::closed_form_rho2_a(static_cast<double>(n)));
        const DensityMatrix cb(oracle::closed_form_rho2_b(static_cast<double>(n)));
        CHECK(std::abs(trace_distance(ca, cb) - expected) <= 1e-10);
        if (n <= 6) {
            const DensityMatrix ba(oracle::brute_force_rdm(make_fh_a(n), 2));
            const DensityMatrix bb(oracle::brute_force_rdm(make_fh_b(n), 2));
            CHECK(std::abs(trace_distance(ba, bb) - expected) <= 1e-10);
        }
    }
}

TEST_CASE("bayes success from counts") {
    CHECK(bayes_success_from_counts(make_fh_a(4), make_statistical(4), Axis::z()) == 0.5);
    CHECK(std::abs(bayes_success_from_counts(make_fh_a(4), make_fh_b(4), Axis::x()) - 0.8125) <= 1e-15);
    for (const auto& spec : {make_fh_a(6), make_fh_b(6), make_statistical(6, Axis::polar(0.5, 0.5))})
        for (const Axis& axis : {Axis::x(), Axis::y(), Axis::z()}) CHECK(bayes_success_from_counts(spec, spec, axis) == 0.5);
    CHECK_THROWS_AS(bayes_success_from_counts(make_fh_a(4), make_fh_b(6), Axis::z()), std::invalid_argument);
}

TEST_CASE("monte carlo discrimination") {
    const auto ab = monte_carlo_discrimination(make_fh_a(4), make_fh_b(4), Axis::x(), 100000, 7);
    CHECK(std::abs(ab.success - 0.8125) <= 3.0 * ab.standard_error);
    CHECK(ab.trials == 100000);
    const auto as = monte_carlo_discrimination(make_fh_a(4), make_statistical(4), Axis::z(), 100000, 7);
    CHECK(std::abs(as.success - 0.5) <= 3.0 * as.standard_error);
    CHECK_THROWS(monte_carlo_discrimination(make_fh_a(4), make_fh_b(4), Axis::x(), 0, 7));
    CHECK_THROWS(monte_carlo_discrimination(make_fh_a(4), make_fh_b(6), Axis::x(), 10, 7));

    const int saved = omp_get_max_threads();
    omp_set_num_threads(3);
    CHECK(monte_carlo_discrimination(make_fh_a(6), make_fh_b(6), Axis::z(), 20000, 1, Execution::parallel) ==
          monte_carlo_discrimination(make_fh_a(6), make_fh_b(6), Axis::z(), 20000, 1, Execution::serial));
    omp_set_num_threads(saved);
}

TEST_CASE("count-based success never beats the state-level bound") {
    const std::vector<Axis> axes{Axis::x(), Axis::z(), Axis::polar(0.9, 0.3)};
    for (std::size_t n : {2u, 4u, 6u}) {
        const std::vector<EnsembleSpec> specs{make_fh_a(n), make_fh_b(n), make_statistical(n, Axis::z()),
                                              make_statistical(n, Axis::x())};
        const int k = static_cast<int>(n);
        for (std::size_t i = 0; i < specs.size(); ++i)
            for (std::size_t j = i + 1; j < specs.size(); ++j) {
                const double td = trace_distance(reduced_density_matrix(specs[i], k), reduced_density_matrix(specs[j], k));
                for (const Axis& axis : axes) {
                    CHECK(bayes_success_from_counts(specs[i], specs[j], axis) - 0.5 <= 0.5 * td + 1e-10);
                }
            }
    }
}

TEST_CASE("A/B distance is non-decreasing in k") {
    for (std::size_t n : {2u, 4u, 6u}) {
        const auto d = pairwise_trace_distances(make_fh_a(n), make_fh_b(n), static_cast<int>(n));
        for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i].distance >= d[i - 1].distance - 1e-10);
    }
}

TEST_CASE("statistical ensembles along different axes are indistinguishable") {
    ReportOptions opt;
    opt.k_max = 4;
    opt.axes = {Axis::x(), Axis::y(), Axis::z(), Axis::polar(1.1, 0.7)};
    opt.trials = 50000;
    opt.seed = 11;
    const auto rep = distinguish(make_statistical(6, Axis::z()), "S:z", make_statistical(6, Axis::x()), "S:x", opt);
    CHECK(rep.n == 6);
    for (const auto& kd : rep.trace_distances) CHECK(kd.distance < 1e-12);
    for (const auto& row : rep.axes) {
        CHECK(row.count_tv < 1e-12);
        CHECK(std::abs(row.bayes_success - 0.5) < 1e-12);
        REQUIRE(row.monte_carlo);
        CHECK(std::abs(row.monte_carlo->success - 0.5) <= 3.0 * row.monte_carlo->standard_error);
    }
}

TEST_CASE("distinguish report for A vs B") {
    ReportOptions opt;
    opt.k_max = 2;
    opt.axes = {Axis::x()};
    const auto rep = distinguish(make_fh_a(4), "A", make_fh_b(4), "B", opt);
    CHECK(rep.label_a == "A");
    CHECK(rep.trace_distances[0].distance <= 1e-12);
    CHECK(std::abs(rep.trace_distances[1].distance - 1.0 / 6.0) <= 1e-10);
    CHECK(std::abs(rep.axes[0].bayes_success - 0.8125) <= 1e-15);
    CHECK(std::abs(rep.axes[0].count_tv - 0.625) <= 1e-15);
    CHECK_FALSE(rep.axes[0].monte_carlo.has_value());
}
