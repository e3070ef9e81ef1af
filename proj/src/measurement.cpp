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

#include "spinmix/measurement.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace spinmix {

namespace {

// Trial body shared by the record and count paths so they consume the stream
// identically. `outcomes` may be null when only the count is wanted.
std::size_t simulate_one(const EnsembleSpec& spec, const Axis& axis, Stream& rng, std::vector<int>* outcomes) {
    const Realization r = sample_realization(spec, rng);
    std::size_t plus = 0;
    if (outcomes) outcomes->reserve(r.states.size());
    for (const auto& s : r.states) {
        const bool up = rng.bernoulli(transition_probability(s, axis, Sign::plus));
        plus += up ? 1 : 0;
        if (outcomes) outcomes->push_back(up ? +1 : -1);
    }
    return plus;
}

}  // namespace

Realization sample_realization(const EnsembleSpec& spec, Stream& rng) {
    Realization r;
    r.states.reserve(spec.size());
    if (spec.is_fixed()) {
        for (std::size_t c = 0; c < spec.component_count(); ++c)
            r.states.insert(r.states.end(), spec.count(c), spec.state(c));
        for (std::size_t i = r.states.size(); i > 1; --i) {
            const std::size_t j = rng.below(i);
            std::swap(r.states[i - 1], r.states[j]);
        }
        return r;
    }
    const std::size_t comps = spec.component_count();
    std::size_t last_positive = 0;
    for (std::size_t c = 0; c < comps; ++c)
        if (spec.fraction(c) > 0.0) last_positive = c;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const double u = rng.uniform();
        double cumulative = 0.0;
        std::size_t pick = last_positive;
        for (std::size_t c = 0; c < comps; ++c) {
            cumulative += spec.fraction(c);
            if (u < cumulative) {
                pick = c;
                break;
            }
        }
        r.states.push_back(spec.state(pick));
    }
    return r;
}

ExperimentRecord measure_realization(const Realization& r, const Axis& axis, Stream& rng) {
    ExperimentRecord rec;
    rec.seed = rng.seed();
    rec.axis = axis;
    rec.outcomes.reserve(r.states.size());
    for (const auto& s : r.states) {
        const bool up = rng.bernoulli(transition_probability(s, axis, Sign::plus));
        rec.outcomes.push_back(up ? +1 : -1);
        rec.plus_count += up ? 1 : 0;
    }
    return rec;
}

ExperimentRecord run_trial(const EnsembleSpec& spec, const Axis& axis, std::uint64_t master_seed,
                           std::uint64_t trial) {
    Stream rng = Stream::derive(master_seed, trial);
    ExperimentRecord rec;
    rec.seed = rng.seed();
    rec.spec_summary = describe(spec);
    rec.axis = axis;
    rec.plus_count = simulate_one(spec, axis, rng, &rec.outcomes);
    return rec;
}

std::vector<ExperimentRecord> run_experiments(const EnsembleSpec& spec, const Axis& axis,
                                              std::size_t trials, std::uint64_t master_seed,
                                              Execution exec) {
    std::vector<ExperimentRecord> records(trials);
    const std::string summary = describe(spec);
    const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
    for (std::int64_t i = 0; i < n; ++i) {
        auto& rec = records[static_cast<std::size_t>(i)];
        Stream rng = Stream::derive(master_seed, static_cast<std::uint64_t>(i));
        rec.seed = rng.seed();
        rec.spec_summary = summary;
        rec.axis = axis;
        rec.plus_count = simulate_one(spec, axis, rng, &rec.outcomes);
    }
    return records;
}

std::vector<unsigned> simulate_plus_counts(const EnsembleSpec& spec, const Axis& axis,
                                           std::size_t trials, std::uint64_t master_seed,
                                           Execution exec) {
    std::vector<unsigned> counts(trials);
    const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
    for (std::int64_t i = 0; i < n; ++i) {
        Stream rng = Stream::derive(master_seed, static_cast<std::uint64_t>(i));
        counts[static_cast<std::size_t>(i)] = static_cast<unsigned>(simulate_one(spec, axis, rng, nullptr));
    }
    return counts;
}

CountPmf exact_count_pmf(const EnsembleSpec& spec, const Axis& axis) {
    if (spec.is_fixed()) {
        std::vector<double> q;
        q.reserve(spec.size());
        for (std::size_t c = 0; c < spec.component_count(); ++c)
            q.insert(q.end(), spec.count(c), transition_probability(spec.state(c), axis, Sign::plus));
        return poisson_binomial_pmf(q);
    }
    double p = 0.0;
    for (std::size_t c = 0; c < spec.component_count(); ++c)
        p += spec.fraction(c) * transition_probability(spec.state(c), axis, Sign::plus);
    return binomial_pmf(spec.size(), std::min(p, 1.0));
}

CountPmf monte_carlo_count_pmf(const EnsembleSpec& spec, const Axis& axis, std::size_t trials,
                               std::uint64_t master_seed, Execution exec) {
    if (trials == 0) throw std::invalid_argument("monte_carlo_count_pmf: trials must be >= 1");
    const auto counts = simulate_plus_counts(spec, axis, trials, master_seed, exec);
    return empirical_pmf(spec.size(), counts);
}

}  // namespace spinmix
