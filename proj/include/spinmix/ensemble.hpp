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

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "spinmix/matrix.hpp"
#include "spinmix/pmf.hpp"
#include "spinmix/spin.hpp"

namespace spinmix {

/// A deterministic multiset: exactly `count` particles in `state`.
struct FixedComposition {
    struct Member {
        PureState state;
        std::size_t count;
    };
    std::vector<Member> members;
};

/// N independent draws, each in component c with probability p_c.
struct IidMixture {
    struct Component {
        PureState state;
        double probability;
    };
    std::vector<Component> components;
    std::size_t n;
};

/// Either kind of ensemble, validated on construction: distinct states,
/// N >= 1, probabilities summing to 1.
class EnsembleSpec {
  public:
    EnsembleSpec(FixedComposition fixed);  // NOLINT(google-explicit-constructor)
    EnsembleSpec(IidMixture mixture);      // NOLINT(google-explicit-constructor)

    bool is_fixed() const { return std::holds_alternative<FixedComposition>(body_); }
    /// Total particle number N.
    std::size_t size() const { return n_; }
    std::size_t component_count() const { return states_.size(); }
    const PureState& state(std::size_t c) const { return states_.at(c); }
    std::span<const PureState> states() const { return states_; }

    /// Fixed count of component c. Throws for i.i.d. mixtures.
    std::size_t count(std::size_t c) const;
    /// Single-draw probability of component c: count/N or p_c.
    double fraction(std::size_t c) const;

    const std::variant<FixedComposition, IidMixture>& body() const { return body_; }

  private:
    std::variant<FixedComposition, IidMixture> body_;
    std::vector<PureState> states_;
    std::size_t n_ = 0;
};

std::string describe(const EnsembleSpec& spec);

/// n/2 particles in x+ and n/2 in x-. n must be even and positive.
EnsembleSpec make_fh_a(std::size_t n);
/// As make_fh_a, with z eigenstates.
EnsembleSpec make_fh_b(std::size_t n);
/// Random 50/50 mixture of the two eigenstates of `axis`, N = n.
EnsembleSpec make_statistical(std::size_t n, const Axis& axis = Axis::z());

/// Classical urn: n_black "black" balls (z+, component 0) and the rest white (z-).
EnsembleSpec make_urn(std::size_t n, std::size_t n_black);
/// Urn filled with n balls each chosen black or white at random.
EnsembleSpec make_random_urn(std::size_t n);
/// Distribution of the number of black balls.
CountPmf urn_composition(const EnsembleSpec& urn);

/// Distribution of how many of the N particles are in component c: a delta
/// for fixed composition, Binomial(N, p_c) for an i.i.d. mixture.
CountPmf composition_distribution(const EnsembleSpec& spec, std::size_t component);

struct TypeSequenceWeight {
    std::vector<std::size_t> sequence;
    double weight = 0.0;
};

/// Probability that k particles drawn in order have the given component
/// sequence: sampling without replacement for fixed composition, independent
/// draws for mixtures.
TypeSequenceWeight ordered_type_weight(const EnsembleSpec& spec, std::span<const std::size_t> sequence);

/// Exact k-particle reduced density matrix. Built recursively over the
/// remaining-count state; the kron accumulation runs under OpenMP.
DensityMatrix reduced_density_matrix(const EnsembleSpec& spec, int k);

/// Serial reference: explicit sum over all component^k type sequences of
/// weight times the tensor product of projectors.
DensityMatrix reduced_density_matrix_reference(const EnsembleSpec& spec, int k);

}  // namespace spinmix
