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

#include "spinmix/ensemble.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include <fmt/format.h>

namespace spinmix {

namespace {

void require_distinct(std::span<const PureState> states) {
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i + 1; j < states.size(); ++j)
            if (same_state(states[i], states[j])) {
                throw std::invalid_argument(
                    fmt::format("ensemble: components {} and {} are the same state", i, j));
            }
}

void check_k(const EnsembleSpec& spec, int k) {
    if (k < 1) throw std::out_of_range("reduced_density_matrix: k must be >= 1");
    if (k > kMaxParticles) {
        throw std::out_of_range(fmt::format("reduced_density_matrix: k = {} exceeds the cap of {}", k, kMaxParticles));
    }
    if (spec.is_fixed() && static_cast<std::size_t>(k) > spec.size()) {
        throw std::out_of_range(fmt::format("reduced_density_matrix: k = {} exceeds N = {}", k, spec.size()));
    }
}

}  // namespace

EnsembleSpec::EnsembleSpec(FixedComposition fixed) {
    if (fixed.members.empty()) throw std::invalid_argument("ensemble: no members");
    for (const auto& m : fixed.members) {
        states_.push_back(m.state);
        n_ += m.count;
    }
    if (n_ == 0) throw std::invalid_argument("ensemble: counts sum to zero");
    require_distinct(states_);
    body_ = std::move(fixed);
}

EnsembleSpec::EnsembleSpec(IidMixture mixture) {
    if (mixture.components.empty()) throw std::invalid_argument("ensemble: no components");
    if (mixture.n == 0) throw std::invalid_argument("ensemble: N must be >= 1");
    double total = 0.0;
    for (const auto& c : mixture.components) {
        if (!(c.probability >= 0.0)) throw std::invalid_argument("ensemble: negative probability");
        total += c.probability;
        states_.push_back(c.state);
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument(fmt::format("ensemble: probabilities sum to {}", total));
    }
    require_distinct(states_);
    n_ = mixture.n;
    body_ = std::move(mixture);
}

std::size_t EnsembleSpec::count(std::size_t c) const {
    const auto* fixed = std::get_if<FixedComposition>(&body_);
    if (!fixed) throw std::logic_error("EnsembleSpec::count: not a fixed composition");
    return fixed->members.at(c).count;
}

double EnsembleSpec::fraction(std::size_t c) const {
    if (const auto* fixed = std::get_if<FixedComposition>(&body_)) {
        return static_cast<double>(fixed->members.at(c).count) / static_cast<double>(n_);
    }
    return std::get<IidMixture>(body_).components.at(c).probability;
}

std::string describe(const EnsembleSpec& spec) {
    std::string out = spec.is_fixed() ? "fixed[" : "iid[";
    for (std::size_t c = 0; c < spec.component_count(); ++c) {
        if (c) out += ", ";
        out += describe(spec.state(c)) + ":";
        out += spec.is_fixed() ? std::to_string(spec.count(c)) : fmt::format("{}", spec.fraction(c));
    }
    out += fmt::format("; N={}]", spec.size());
    return out;
}

namespace {

EnsembleSpec balanced_pair(std::size_t n, const Axis& axis) {
    if (n == 0 || n % 2 != 0) {
        throw std::invalid_argument(fmt::format("n must be even and positive, got {}", n));
    }
    return FixedComposition{{{spinor(axis, Sign::plus), n / 2}, {spinor(axis, Sign::minus), n / 2}}};
}

}  // namespace

EnsembleSpec make_fh_a(std::size_t n) { return balanced_pair(n, Axis::x()); }
EnsembleSpec make_fh_b(std::size_t n) { return balanced_pair(n, Axis::z()); }

EnsembleSpec make_statistical(std::size_t n, const Axis& axis) {
    return IidMixture{{{spinor(axis, Sign::plus), 0.5}, {spinor(axis, Sign::minus), 0.5}}, n};
}

EnsembleSpec make_urn(std::size_t n, std::size_t n_black) {
    if (n == 0 || n_black > n) {
        throw std::invalid_argument(fmt::format("urn: need 0 <= black <= n and n >= 1 (n={}, black={})", n, n_black));
    }
    return FixedComposition{{{spinor(Axis::z(), Sign::plus), n_black}, {spinor(Axis::z(), Sign::minus), n - n_black}}};
}

EnsembleSpec make_random_urn(std::size_t n) { return make_statistical(n, Axis::z()); }

CountPmf urn_composition(const EnsembleSpec& urn) { return composition_distribution(urn, 0); }

CountPmf composition_distribution(const EnsembleSpec& spec, std::size_t component) {
    if (component >= spec.component_count()) {
        throw std::out_of_range(fmt::format("composition_distribution: no component {}", component));
    }
    if (spec.is_fixed()) return delta_pmf(spec.size(), spec.count(component));
    return binomial_pmf(spec.size(), spec.fraction(component));
}

TypeSequenceWeight ordered_type_weight(const EnsembleSpec& spec, std::span<const std::size_t> sequence) {
    TypeSequenceWeight out{{sequence.begin(), sequence.end()}, 1.0};
    for (std::size_t c : sequence)
        if (c >= spec.component_count()) throw std::out_of_range("ordered_type_weight: bad component index");

    if (!spec.is_fixed()) {
        for (std::size_t c : sequence) out.weight *= spec.fraction(c);
        return out;
    }
    if (sequence.size() > spec.size()) {
        throw std::out_of_range(fmt::format("ordered_type_weight: {} draws from {} particles", sequence.size(), spec.size()));
    }
    std::vector<std::size_t> remaining(spec.component_count());
    for (std::size_t c = 0; c < remaining.size(); ++c) remaining[c] = spec.count(c);
    std::size_t total = spec.size();
    for (std::size_t c : sequence) {
        if (remaining[c] == 0) {
            out.weight = 0.0;
            return out;
        }
        out.weight *= static_cast<double>(remaining[c]) / static_cast<double>(total);
        --remaining[c];
        --total;
    }
    return out;
}

namespace {

// rho_m(pool) = sum_c w_c(pool) P_c (x) rho_{m-1}(pool - c), memoized on the
// remaining pool. For i.i.d. mixtures the pool is irrelevant and stays empty.
class RdmBuilder {
  public:
    RdmBuilder(const EnsembleSpec& spec, int k)
        : spec_(spec), top_(k), memo_(static_cast<std::size_t>(k) + 1) {
        for (const auto& s : spec.states()) projectors_.push_back(s.projector());
    }

    ComplexMatrix build(int m, const std::vector<std::size_t>& pool, std::size_t total) {
        auto& level = memo_[static_cast<std::size_t>(m)];
        if (auto it = level.find(pool); it != level.end()) return it->second;

        ComplexMatrix acc(std::size_t{1} << m);
        const ComplexMatrix one = ComplexMatrix::identity(1);
        for (std::size_t c = 0; c < projectors_.size(); ++c) {
            double w = 0.0;
            std::vector<std::size_t> next = pool;
            if (spec_.is_fixed()) {
                if (pool[c] == 0) continue;
                w = static_cast<double>(pool[c]) / static_cast<double>(total);
                --next[c];
            } else {
                w = spec_.fraction(c);
            }
            if (w == 0.0) continue;
            if (m == 1) {
                accumulate_kron(acc, w, projectors_[c], one);
            } else {
                accumulate_kron(acc, w, projectors_[c], build(m - 1, next, total - 1));
            }
        }
        if (m != top_) level.emplace(pool, acc);
        return acc;
    }

  private:
    const EnsembleSpec& spec_;
    int top_;
    std::vector<ComplexMatrix> projectors_;
    std::vector<std::map<std::vector<std::size_t>, ComplexMatrix>> memo_;
};

}  // namespace

DensityMatrix reduced_density_matrix(const EnsembleSpec& spec, int k) {
    check_k(spec, k);
    std::vector<std::size_t> pool;
    if (spec.is_fixed()) {
        for (std::size_t c = 0; c < spec.component_count(); ++c) pool.push_back(spec.count(c));
    }
    RdmBuilder builder(spec, k);
    return DensityMatrix(builder.build(k, pool, spec.size()));
}

DensityMatrix reduced_density_matrix_reference(const EnsembleSpec& spec, int k) {
    check_k(spec, k);
    const std::size_t comps = spec.component_count();
    std::vector<ComplexMatrix> projectors;
    for (const auto& s : spec.states()) projectors.push_back(s.projector());

    ComplexMatrix acc(std::size_t{1} << k);
    std::vector<std::size_t> seq(static_cast<std::size_t>(k), 0);
    while (true) {
        const double w = ordered_type_weight(spec, seq).weight;
        if (w != 0.0) {
            ComplexMatrix term = projectors[seq[0]];
            for (std::size_t i = 1; i < seq.size(); ++i) term = kron(term, projectors[seq[i]]);
            acc += term * Complex(w);
        }
        std::size_t pos = seq.size();
        while (pos > 0 && ++seq[pos - 1] == comps) seq[--pos] = 0;
        if (pos == 0) break;
    }
    return DensityMatrix(std::move(acc));
}

}  // namespace spinmix
