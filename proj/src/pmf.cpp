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

#include "spinmix/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spinmix {

CountPmf::CountPmf(std::vector<double> probabilities, double tol) : p_(std::move(probabilities)) {
    if (p_.empty()) throw std::invalid_argument("CountPmf: empty support");
    double total = 0.0;
    for (double x : p_) {
        if (!(x >= 0.0)) throw std::invalid_argument("CountPmf: negative or NaN probability");
        total += x;
    }
    if (std::abs(total - 1.0) > tol) {
        throw std::invalid_argument("CountPmf: probabilities sum to " + std::to_string(total));
    }
}

CountPmf delta_pmf(std::size_t n, std::size_t m) {
    if (m > n) throw std::invalid_argument("delta_pmf: m > n");
    std::vector<double> p(n + 1, 0.0);
    p[m] = 1.0;
    return CountPmf(std::move(p));
}

namespace {

// Fold one Bernoulli(q) trial into a pmf over {0..j}, producing {0..j+1}.
void add_trial(std::vector<double>& p, double q) {
    p.push_back(0.0);
    const double r = 1.0 - q;
    for (std::size_t m = p.size() - 1; m > 0; --m) p[m] = p[m] * r + p[m - 1] * q;
    p[0] *= r;
}

}  // namespace

CountPmf poisson_binomial_pmf(std::span<const double> success_probabilities) {
    std::vector<double> p{1.0};
    p.reserve(success_probabilities.size() + 1);
    for (double q : success_probabilities) {
        if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("poisson_binomial_pmf: probability outside [0,1]");
        add_trial(p, q);
    }
    return CountPmf(std::move(p));
}

CountPmf binomial_pmf(std::size_t n, double p) {
    const std::vector<double> trials(n, p);
    return poisson_binomial_pmf(trials);
}

CountPmf empirical_pmf(std::size_t n, std::span<const unsigned> counts) {
    if (counts.empty()) throw std::invalid_argument("empirical_pmf: no observations");
    std::vector<std::size_t> hist(n + 1, 0);
    for (unsigned c : counts) {
        if (c > n) throw std::out_of_range("empirical_pmf: count exceeds n");
        ++hist[c];
    }
    std::vector<double> p(n + 1);
    const double total = static_cast<double>(counts.size());
    for (std::size_t m = 0; m <= n; ++m) p[m] = static_cast<double>(hist[m]) / total;
    return CountPmf(std::move(p));
}

double total_variation(const CountPmf& p, const CountPmf& q) {
    const std::size_t len = std::max(p.n(), q.n()) + 1;
    double sum = 0.0;
    for (std::size_t m = 0; m < len; ++m) sum += std::abs(p.at(m) - q.at(m));
    return 0.5 * sum;
}

Moments pmf_moments(const CountPmf& p) {
    Moments out;
    for (std::size_t m = 0; m <= p.n(); ++m) out.mean += static_cast<double>(m) * p[m];
    for (std::size_t m = 0; m <= p.n(); ++m) {
        const double d = static_cast<double>(m) - out.mean;
        out.variance += d * d * p[m];
    }
    return out;
}

}  // namespace spinmix
