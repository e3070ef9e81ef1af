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

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "spinmix/cli.hpp"
#include "spinmix/serialize.hpp"

using namespace spinmix;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
    const auto r = run(std::move(args));
    REQUIRE_MESSAGE(r.status == 0, r.err);
    CHECK(r.err.empty());
    return Json::parse(r.out);
}

}  // namespace

TEST_CASE("ensemble literals") {
    CHECK(cli::parse_ensemble("A", 4, true).count(0) == 2);
    CHECK(cli::parse_ensemble("S:x", 4, true).state(0) == spinor(Axis::x(), Sign::plus));
    const auto fixed = cli::parse_ensemble("fixed:2@x+; 1@0.6,0,0.8-", 10, false);
    CHECK(fixed.size() == 3);
    CHECK(fixed.state(1) == spinor(Axis(0.6, 0.0, 0.8), Sign::minus));
    const auto iid = cli::parse_ensemble("iid:0.25@z+;0.75@y-", 7, true);
    CHECK(iid.size() == 7);
    CHECK(iid.fraction(1) == 0.75);
    CHECK_THROWS_AS(cli::parse_ensemble("fixed:2@x+;2@x-", 5, true), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_ensemble("fixed:2@x", 2, false), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_ensemble("iid:0.5@z+;0.4@z-", 2, false), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_ensemble("C", 2, false), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_ensemble("fixed:two@x+", 2, false), std::invalid_argument);
}

TEST_CASE("rho command") {
    auto j = run_json({"rho", "--ensemble", "S", "--n", "8", "--k", "2"});
    ComplexMatrix m = j.at("matrix").get<ComplexMatrix>();
    CHECK(max_abs_diff(m, ComplexMatrix::identity(4) * Complex(0.25)) <= 1e-12);
    CHECK(j.at("dim") == 4);

    j = run_json({"rho", "--ensemble", "A", "--n", "4", "--k", "1"});
    CHECK(max_abs_diff(j.at("matrix").get<ComplexMatrix>(), ComplexMatrix::identity(2) * Complex(0.5)) <= 1e-12);
    CHECK_FALSE(j.contains("matrix_x"));

    j = run_json({"rho", "--ensemble", "A", "--n", "4", "--k", "2", "--basis", "x"});
    const std::vector<Complex> d{1.0 / 6, 1.0 / 3, 1.0 / 3, 1.0 / 6};
    CHECK(max_abs_diff(j.at("matrix_x").get<ComplexMatrix>(), ComplexMatrix::diagonal(d)) <= 1e-12);
    // the z-basis matrix round-trips exactly through the JSON encoding
    CHECK(j.at("matrix").get<ComplexMatrix>().entries().size() == 16);
    const auto direct = reduced_density_matrix(make_fh_a(4), 2);
    CHECK(max_abs_diff(j.at("matrix").get<ComplexMatrix>(), direct.matrix()) == 0.0);
}

TEST_CASE("pmf command") {
    auto j = run_json({"pmf", "--ensemble", "B", "--n", "4", "--axis", "z"});
    CHECK(pmf_from_json(j.at("exact").at("pmf")) == delta_pmf(4, 2));
    CHECK(j.at("exact").at("variance") == 0.0);

    j = run_json({"pmf", "--ensemble", "S", "--n", "4", "--axis", "z"});
    CHECK(pmf_from_json(j.at("exact").at("pmf")) == binomial_pmf(4, 0.5));
    CHECK(std::abs(j.at("exact").at("variance").get<double>() - 1.0) < 1e-12);

    j = run_json({"pmf", "--urn", "--n", "4", "--black", "2"});
    CHECK(pmf_from_json(j.at("exact").at("pmf")) == delta_pmf(4, 2));

    j = run_json({"pmf", "--ensemble", "A", "--n", "10", "--trials", "2000", "--seed", "5", "--records"});
    const auto& emp = j.at("empirical");
    CHECK(emp.at("trials") == 2000);
    CHECK(emp.at("records").size() == 2000);
    const auto rec = record_from_json(emp.at("records").at(17));
    CHECK(rec == run_trial(make_fh_a(10), Axis::z(), 5, 17));
    CHECK(Json(rec) == emp.at("records").at(17));

    const auto csv = run({"pmf", "--ensemble", "B", "--n", "2", "--axis", "x", "--format", "csv"});
    CHECK(csv.status == 0);
    CHECK(csv.out == "count,probability\n0,0.25\n1,0.5\n2,0.25\n");
    const auto csv2 = run({"urn", "--n", "2", "--trials", "10", "--format", "csv"});
    CHECK(csv2.out.starts_with("count,probability,empirical\n"));
}

TEST_CASE("urn command") {
    auto j = run_json({"urn", "--n", "4"});
    CHECK(pmf_from_json(j.at("exact").at("pmf")) == binomial_pmf(4, 0.5));
    j = run_json({"urn", "--n", "4", "--black", "1"});
    CHECK(pmf_from_json(j.at("exact").at("pmf")) == delta_pmf(4, 1));
    j = run_json({"urn", "--n", "6", "--black", "3", "--trials", "500"});
    CHECK(pmf_from_json(j.at("empirical").at("pmf")) == delta_pmf(6, 3));
}

TEST_CASE("distinguish command") {
    auto j = run_json({"distinguish", "--a", "A", "--b", "B", "--n", "4", "--kmax", "2", "--axis", "x",
                       "--trials", "100000", "--seed", "7"});
    const auto rep = report_from_json(j);
    CHECK(rep.trace_distances.at(0).distance <= 1e-12);
    CHECK(std::abs(rep.trace_distances.at(1).distance - 1.0 / 6.0) <= 1e-10);
    CHECK(std::abs(rep.axes.at(0).bayes_success - 0.8125) <= 1e-15);
    REQUIRE(rep.axes.at(0).monte_carlo);
    const auto& mc = *rep.axes.at(0).monte_carlo;
    CHECK(std::abs(mc.success - 0.8125) <= 3 * mc.standard_error);
    // schema round trip: decoded report re-encodes to the same document
    Json again{{"command", "distinguish"}};
    again.update(Json(rep));
    CHECK(again == j);

    j = run_json({"distinguish", "--a", "S:z", "--b", "S:x", "--n", "6", "--kmax", "3"});
    const auto s = report_from_json(j);
    REQUIRE(s.axes.size() == 2);
    for (const auto& kd : s.trace_distances) CHECK(kd.distance < 1e-12);
    for (const auto& row : s.axes) CHECK(std::abs(row.bayes_success - 0.5) < 1e-12);

    j = run_json({"distinguish", "--a", "B", "--b", "B", "--n", "4", "--trials", "1000"});
    for (const auto& row : report_from_json(j).axes) CHECK(row.bayes_success == 0.5);
}

TEST_CASE("errors give nonzero status and a diagnostic") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"distinguish", "--a", "A", "--b", "B:x", "--n", "4"},
          {"distinguish", "--a", "fixed:2@x+;2@x-", "--b", "A", "--n", "6"},
          {"rho", "--ensemble", "A", "--n", "4", "--k", "5"},
          {"rho", "--ensemble", "A", "--n", "4", "--k", "13"},
          {"rho", "--format", "csv"},
          {"pmf", "--axis", "0,0,0"},
          {"pmf", "--records"},
          {"pmf", "--trials", "-3"},
          {"urn", "--n", "3", "--black", "4"},
          {"frobnicate"},
          {}}) {
        const auto r = run(args);
        CHECK(r.status != 0);
        CHECK_FALSE(r.err.empty());
        CHECK(r.out.empty());
    }
    const auto k = run({"rho", "--k", "0"});
    CHECK(k.err.find("--k") != std::string::npos);
    const auto help = run({"--help"});
    CHECK(help.status == 0);
    CHECK(help.out.find("distinguish") != std::string::npos);
}

TEST_CASE("seeded commands are byte-identical on rerun") {
    const std::vector<std::vector<std::string>> cmds{
        {"pmf", "--ensemble", "A", "--n", "10", "--trials", "20000", "--seed", "99", "--records"},
        {"distinguish", "--a", "A", "--b", "S", "--n", "6", "--kmax", "3", "--trials", "20000", "--seed", "3"},
        {"urn", "--n", "8", "--trials", "1000", "--seed", "1", "--format", "csv"},
        {"rho", "--ensemble", "B", "--n", "6", "--k", "3", "--basis", "x"}};
    for (const auto& c : cmds) {
        const auto first = run(c), second = run(c);
        CHECK(first.status == 0);
        CHECK(first.out == second.out);
    }
    CHECK(run(cmds[0]).out != run({"pmf", "--ensemble", "A", "--n", "10", "--trials", "20000", "--seed", "98", "--records"}).out);
}
