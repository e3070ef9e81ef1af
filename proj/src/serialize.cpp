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

#include "spinmix/serialize.hpp"

#include <stdexcept>

namespace spinmix {

void to_json(Json& j, const ComplexMatrix& m) {
    j = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        j.push_back(std::move(row));
    }
}

void from_json(const Json& j, ComplexMatrix& m) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON: expected a nonempty array of rows");
    const std::size_t n = j.size();
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (j[r].size() != n) throw std::invalid_argument("matrix JSON: ragged rows");
        for (std::size_t c = 0; c < n; ++c) {
            const auto& e = j[r][c];
            if (!e.is_array() || e.size() != 2) throw std::invalid_argument("matrix JSON: entries must be [re, im]");
            out(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    m = std::move(out);
}

void to_json(Json& j, const CountPmf& p) { j = std::vector<double>(p.probabilities().begin(), p.probabilities().end()); }

CountPmf pmf_from_json(const Json& j) { return CountPmf(j.get<std::vector<double>>()); }

void to_json(Json& j, const Axis& a) {
    j = Json{{"label", a.label()}, {"vector", {a.ux(), a.uy(), a.uz()}}};
}

Axis axis_from_json(const Json& j) {
    const auto& v = j.at("vector");
    return {v.at(0).get<double>(), v.at(1).get<double>(), v.at(2).get<double>()};
}

void to_json(Json& j, const ExperimentRecord& r) {
    j = Json{{"seed", r.seed},
             {"spec", r.spec_summary},
             {"axis", r.axis},
             {"outcomes", r.outcomes},
             {"plus_count", r.plus_count}};
}

ExperimentRecord record_from_json(const Json& j) {
    ExperimentRecord r;
    r.seed = j.at("seed").get<std::uint64_t>();
    r.spec_summary = j.at("spec").get<std::string>();
    r.axis = axis_from_json(j.at("axis"));
    r.outcomes = j.at("outcomes").get<std::vector<int>>();
    r.plus_count = j.at("plus_count").get<std::size_t>();
    return r;
}

void to_json(Json& j, const MonteCarloEstimate& e) {
    j = Json{{"success", e.success}, {"standard_error", e.standard_error}, {"trials", e.trials}, {"seed", e.seed}};
}

void from_json(const Json& j, MonteCarloEstimate& e) {
    e.success = j.at("success").get<double>();
    e.standard_error = j.at("standard_error").get<double>();
    e.trials = j.at("trials").get<std::size_t>();
    e.seed = j.at("seed").get<std::uint64_t>();
}

void to_json(Json& j, const DistinguishabilityReport& r) {
    Json distances = Json::array();
    for (const auto& d : r.trace_distances) distances.push_back({{"k", d.k}, {"distance", d.distance}});
    Json axes = Json::array();
    for (const auto& a : r.axes) {
        Json row{{"axis", a.axis}, {"count_tv", a.count_tv}, {"bayes_success", a.bayes_success}};
        row["monte_carlo"] = a.monte_carlo ? Json(*a.monte_carlo) : Json(nullptr);
        axes.push_back(std::move(row));
    }
    j = Json{{"pair", {r.label_a, r.label_b}}, {"n", r.n}, {"trace_distances", distances}, {"axes", axes}};
}

DistinguishabilityReport report_from_json(const Json& j) {
    DistinguishabilityReport r;
    r.label_a = j.at("pair").at(0).get<std::string>();
    r.label_b = j.at("pair").at(1).get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    for (const auto& d : j.at("trace_distances")) {
        r.trace_distances.push_back({d.at("k").get<int>(), d.at("distance").get<double>()});
    }
    for (const auto& a : j.at("axes")) {
        AxisDiscrimination row;
        row.axis = axis_from_json(a.at("axis"));
        row.count_tv = a.at("count_tv").get<double>();
        row.bayes_success = a.at("bayes_success").get<double>();
        if (!a.at("monte_carlo").is_null()) row.monte_carlo = a.at("monte_carlo").get<MonteCarloEstimate>();
        r.axes.push_back(std::move(row));
    }
    return r;
}

}  // namespace spinmix
