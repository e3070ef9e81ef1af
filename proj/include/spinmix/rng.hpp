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
#include <limits>

namespace spinmix {

/// SplitMix64 finalizer. Used for seeding and for deriving per-trial streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// xoshiro256** generator. A stream is fully determined by its 64-bit seed;
/// Stream::derive(master, i) is the split function that gives trial i of a
/// Monte Carlo run its own stream, so results do not depend on which thread
/// runs which trial.
class Stream {
  public:
    using result_type = std::uint64_t;

    explicit Stream(std::uint64_t seed) : seed_(seed) {
        for (std::uint64_t i = 0; i < 4; ++i) s_[i] = splitmix64(seed + i * 0x9E3779B97F4A7C15ULL);
    }

    /// Seed of stream `index` under `master`: splitmix64(master ^ splitmix64(index)).
    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
        return splitmix64(master ^ splitmix64(index));
    }
    static Stream derive(std::uint64_t master, std::uint64_t index) {
        return Stream(derive_seed(master, index));
    }

    std::uint64_t seed() const { return seed_; }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// True with probability p; p = 0 and p = 1 are exact.
    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform integer in [0, bound), bound >= 1, by rejection (no modulo bias).
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = max() - max() % bound;
        std::uint64_t x;
        do {
            x = (*this)();
        } while (x >= limit);
        return x % bound;
    }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t seed_;
    std::uint64_t s_[4];
};

}  // namespace spinmix
