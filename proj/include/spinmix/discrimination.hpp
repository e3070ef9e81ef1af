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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinmix/ensemble.hpp"
#include "spinmix/measurement.hpp"
#include "spinmix/spin.hpp"

namespace spinmix {

struct KDistance {
    int k = 0;
    double distance = 0.0;

    friend bool operator==(const KDistance&, const KDistance&) = default;
};

struct MonteCarloEstimate {
    double success = 0.0;
    double standard_error = 0.0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const MonteCarloEstimate&, const MonteCarloEstimate&) = default;
};

/// Discrimination figures from the plus-count statistic along one axis.
struct AxisDiscrimination {
    Axis axis = Axis::z();
    double count_tv = 0.0;
    double bayes_success = 0.5;
    std::optional<MonteCarloEstimate> monte_carlo;

    friend bool operator==(const AxisDiscrimination&, const AxisDiscrimination&) = default;
};

struct DistinguishabilityReport {
    std::string label_a;
    std::string label_b;
    std::size_t n = 0;
    std::vector<KDistance> trace_distances;  // k = 1..k_max
    std::vector<AxisDiscrimination> axes;

    friend bool operator==(const DistinguishabilityReport&, const DistinguishabilityReport&) = default;
};

/// trace_distance(rho_k^a, rho_k^b) for k = 1..k_max.
std::vector<KDistance> pairwise_trace_distances(const EnsembleSpec& a, const EnsembleSpec& b, int k_max);

/// Equal-prior optimal guess from the count: 1/2 sum_m max(p_a(m), p_b(m)).
double bayes_success_from_counts(const EnsembleSpec& a, const EnsembleSpec& b, const Axis& axis);

/// Per trial: a fair coin picks the true ensemble, one experiment is run, and
/// the likelihood-ratio guess (ties go to `a`) is scored.
MonteCarloEstimate monte_carlo_discrimination(const EnsembleSpec& a, const EnsembleSpec& b,
                                              const Axis& axis, std::size_t trials,
                                              std::uint64_t master_seed,
                                              Execution exec = Execution::parallel);

struct ReportOptions {
    int k_max = 2;
    std::vector<Axis> axes{Axis::x(), Axis::z()};
    std::size_t trials = 0;  // 0: exact figures only
    std::uint64_t seed = 0;
};

DistinguishabilityReport distinguish(const EnsembleSpec& a, const std::string& label_a,
                                     const EnsembleSpec& b, const std::string& label_b,
                                     const ReportOptions& options);

}  // namespace spinmix
