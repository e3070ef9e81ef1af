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
#include <vector>

namespace spinmix {

/// Probability mass function over the counts {0, ..., n}.
class CountPmf {
  public:
    /// Throws if any entry is negative or the total differs from 1 by more than tol.
    explicit CountPmf(std::vector<double> probabilities, double tol = 1e-12);

    std::size_t n() const { return p_.size() - 1; }
    double operator[](std::size_t m) const { return p_[m]; }
    double at(std::size_t m) const { return m < p_.size() ? p_[m] : 0.0; }
    std::span<const double> probabilities() const { return p_; }

    friend bool operator==(const CountPmf&, const CountPmf&) = default;

  private:
    std::vector<double> p_;
};

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

/// All mass at m, support {0..n}.
CountPmf delta_pmf(std::size_t n, std::size_t m);

/// Binomial(n, p) built by adding one Bernoulli(p) trial at a time.
CountPmf binomial_pmf(std::size_t n, double p);

/// Law of the number of successes in independent trials with the given
/// success probabilities (Poisson-binomial). Trials are folded in list order,
/// so equal inputs give bitwise-equal outputs regardless of how they were grouped.
CountPmf poisson_binomial_pmf(std::span<const double> success_probabilities);

/// Histogram of observed counts, normalized.
CountPmf empirical_pmf(std::size_t n, std::span<const unsigned> counts);

/// 1/2 sum |p(m) - q(m)|; shorter support is zero-padded.
double total_variation(const CountPmf& p, const CountPmf& q);

Moments pmf_moments(const CountPmf& p);

}  // namespace spinmix
