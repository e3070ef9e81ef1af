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

// JSON encodings. Complex numbers are [re, im] pairs; matrices are row-major
// nested arrays; axes are {"label": ..., "vector": [ux, uy, uz]}.

#include <json.hpp>

#include "spinmix/discrimination.hpp"
#include "spinmix/matrix.hpp"
#include "spinmix/measurement.hpp"
#include "spinmix/pmf.hpp"
#include "spinmix/spin.hpp"

namespace spinmix {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const ComplexMatrix& m);
void from_json(const Json& j, ComplexMatrix& m);

void to_json(Json& j, const CountPmf& p);
CountPmf pmf_from_json(const Json& j);

void to_json(Json& j, const Axis& a);
Axis axis_from_json(const Json& j);

void to_json(Json& j, const ExperimentRecord& r);
ExperimentRecord record_from_json(const Json& j);

void to_json(Json& j, const MonteCarloEstimate& e);
void from_json(const Json& j, MonteCarloEstimate& e);

void to_json(Json& j, const DistinguishabilityReport& r);
DistinguishabilityReport report_from_json(const Json& j);

}  // namespace spinmix
