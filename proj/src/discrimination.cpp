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

#include "spinmix/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace spinmix {

namespace {

void require_equal_n(const EnsembleSpec& a, const EnsembleSpec& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(fmt::format("ensembles have different N ({} vs {})", a.size(), b.size()));
    }
}

}  // namespace

std::vector<KDistance> pairwise_trace_distances(const EnsembleSpec& a, const EnsembleSpec& b, int k_max) {
    const auto limit = std::min<std::size_t>({a.size(), b.size(), static_cast<std::size_t>(kMaxParticles)});
    if (k_max < 1 || static_cast<std::size_t>(k_max) > limit) {
        throw std::out_of_range(fmt::format("k_max = {} outside [1, {}]", k_max, limit));
    }
    std::vector<KDistance> out;
    for (int k = 1; k <= k_max; ++k) {
        out.push_back({k, trace_distance(reduced_density_matrix(a, k), reduced_density_matrix(b, k))});
    }
    return out;
}

double bayes_success_from_counts(const EnsembleSpec& a, const EnsembleSpec& b, const Axis& axis) {
    require_equal_n(a, b);
    const CountPmf pa = exact_count_pmf(a, axis);
    const CountPmf pb = exact_count_pmf(b, axis);
    double sum = 0.0;
    for (std::size_t m = 0; m <= pa.n(); ++m) sum += std::max(pa[m], pb[m]);
    return 0.5 * sum;
}

MonteCarloEstimate monte_carlo_discrimination(const EnsembleSpec& a, const EnsembleSpec& b,
                                              const Axis& axis, std::size_t trials,
                                              std::uint64_t master_seed, Execution exec) {
    require_equal_n(a, b);
    if (trials == 0) throw std::invalid_argument("monte_carlo_discrimination: trials must be >= 1");
    const CountPmf pa = exact_count_pmf(a, axis);
    const CountPmf pb = exact_count_pmf(b, axis);

    std::vector<unsigned char> correct(trials);
    const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
    for (std::int64_t i = 0; i < n; ++i) {
        Stream rng = Stream::derive(master_seed, static_cast<std::uint64_t>(i));
        const bool truth_is_a = (rng() >> 63) == 0;
        const Realization r = sample_realization(truth_is_a ? a : b, rng);
        const std::size_t m = measure_realization(r, axis, rng).plus_count;
        const bool guess_a = pa[m] >= pb[m];
        correct[static_cast<std::size_t>(i)] = guess_a == truth_is_a ? 1 : 0;
    }

    std::size_t hits = 0;
    for (unsigned char c : correct) hits += c;
    MonteCarloEstimate est;
    est.trials = trials;
    est.seed = master_seed;
    est.success = static_cast<double>(hits) / static_cast<double>(trials);
    est.standard_error = std::sqrt(est.success * (1.0 - est.success) / static_cast<double>(trials));
    return est;
}

DistinguishabilityReport distinguish(const EnsembleSpec& a, const std::string& label_a,
                                     const EnsembleSpec& b, const std::string& label_b,
                                     const ReportOptions& options) {
    require_equal_n(a, b);
    DistinguishabilityReport report;
    report.label_a = label_a;
    report.label_b = label_b;
    report.n = a.size();
    report.trace_distances = pairwise_trace_distances(a, b, options.k_max);
    for (const Axis& axis : options.axes) {
        AxisDiscrimination row;
        row.axis = axis;
        row.count_tv = total_variation(exact_count_pmf(a, axis), exact_count_pmf(b, axis));
        row.bayes_success = bayes_success_from_counts(a, b, axis);
        if (options.trials > 0) {
            row.monte_carlo = monte_carlo_discrimination(a, b, axis, options.trials, options.seed);
        }
        report.axes.push_back(row);
    }
    return report;
}

}  // namespace spinmix
