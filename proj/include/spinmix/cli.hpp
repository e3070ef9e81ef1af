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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinmix/ensemble.hpp"

namespace spinmix::cli {

/// Parsed command line for one invocation.
struct RunConfig {
    std::string command;              // rho | pmf | distinguish | urn
    std::string ensemble = "S";       // rho, pmf
    std::string ensemble_b;           // distinguish: --a is `ensemble`, --b is this
    std::size_t n = 10;
    bool n_given = false;
    int k = 2;                        // rho: k; distinguish: k_max
    std::vector<std::string> axes;    // empty: command default
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string basis = "z";
    double tolerance = 1e-12;
    bool urn = false;
    std::optional<std::size_t> black;
    bool records = false;
};

/// Ensemble literal grammar:
///   A | B               fixed-composition presets (n even)
///   S | S:<axis>        random 50/50 mixture along axis (default z)
///   fixed:<count>@<axis><sign>;...   e.g. fixed:2@x+;2@x-
///   iid:<prob>@<axis><sign>;...      e.g. iid:0.5@z+;0.5@0.6,0,0.8-
/// For `fixed:` literals N is the sum of counts; an explicit --n must agree.
EnsembleSpec parse_ensemble(std::string_view literal, std::size_t n, bool n_given);

/// Throws std::invalid_argument naming the offending field.
void validate(const RunConfig& config);

/// Runs one command and writes its output to `out`. Throws on invalid input.
void execute(const RunConfig& config, std::ostream& out);

/// Full front end: parse `args` (without the program name), run, report
/// errors to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinmix::cli
