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
#include <string>
#include <vector>

#include "spinmix/ensemble.hpp"
#include "spinmix/pmf.hpp"
#include "spinmix/rng.hpp"
#include "spinmix/spin.hpp"

namespace spinmix {

/// One prepared instance of an ensemble: N concrete particle states.
struct Realization {
    std::vector<PureState> states;
};

/// Outcome of measuring every particle of one realization along one axis.
struct ExperimentRecord {
    std::uint64_t seed = 0;  // seed of the stream that produced this record
    std::string spec_summary;
    Axis axis = Axis::z();
    std::vector<int> outcomes;  // +1 / -1 per particle, in realization order
    std::size_t plus_count = 0;

    friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

/// How Monte Carlo trial loops are executed. Both produce identical results;
/// serial is the reference the OpenMP path is tested against.
enum class Execution { serial, parallel };

/// Fixed composition: the multiset in uniformly random order (Fisher-Yates).
/// I.i.d. mixture: N independent categorical draws.
Realization sample_realization(const EnsembleSpec& spec, Stream& rng);

/// Each particle independently gives +1 with its Born weight along `axis`.
ExperimentRecord measure_realization(const Realization& r, const Axis& axis, Stream& rng);

/// Fresh realization plus measurement, on stream derive(master_seed, trial).
ExperimentRecord run_trial(const EnsembleSpec& spec, const Axis& axis, std::uint64_t master_seed,
                           std::uint64_t trial);

std::vector<ExperimentRecord> run_experiments(const EnsembleSpec& spec, const Axis& axis,
                                              std::size_t trials, std::uint64_t master_seed,
                                              Execution exec = Execution::parallel);

/// Plus counts of `trials` independent experiments; entry i equals
/// run_trial(spec, axis, master_seed, i).plus_count.
std::vector<unsigned> simulate_plus_counts(const EnsembleSpec& spec, const Axis& axis,
                                           std::size_t trials, std::uint64_t master_seed,
                                           Execution exec = Execution::parallel);

/// Exact law of the plus count: Poisson-binomial over the particles for a
/// fixed composition, Binomial(N, sum_c p_c q_c) for a mixture.
CountPmf exact_count_pmf(const EnsembleSpec& spec, const Axis& axis);

CountPmf monte_carlo_count_pmf(const EnsembleSpec& spec, const Axis& axis, std::size_t trials,
                               std::uint64_t master_seed, Execution exec = Execution::parallel);

}  // namespace spinmix
