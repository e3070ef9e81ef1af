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

#include "spinmix/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "spinmix/discrimination.hpp"
#include "spinmix/measurement.hpp"
#include "spinmix/serialize.hpp"

namespace spinmix::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

template <class T>
T parse_number(std::string_view s, std::string_view what) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument(fmt::format("cannot parse {} '{}'", what, s));
    }
    return v;
}

// "<value>@<axis><sign>" -> (value text, state)
std::pair<std::string_view, PureState> parse_entry(std::string_view entry) {
    const auto at = entry.find('@');
    if (at == std::string_view::npos || at + 2 >= entry.size() + 1) {
        throw std::invalid_argument(fmt::format("entry '{}' is not <value>@<axis><sign>", entry));
    }
    const std::string_view value = trim(entry.substr(0, at));
    std::string_view state = trim(entry.substr(at + 1));
    if (state.size() < 2 || (state.back() != '+' && state.back() != '-')) {
        throw std::invalid_argument(fmt::format("entry '{}' must end in + or -", entry));
    }
    const Sign sign = state.back() == '+' ? Sign::plus : Sign::minus;
    state.remove_suffix(1);
    return {value, spinor(parse_axis(state), sign)};
}

}  // namespace

EnsembleSpec parse_ensemble(std::string_view literal, std::size_t n, bool n_given) {
    const std::string_view lit = trim(literal);
    try {
        if (lit == "A") return make_fh_a(n);
        if (lit == "B") return make_fh_b(n);
        if (lit == "S") return make_statistical(n, Axis::z());
        if (lit.starts_with("S:")) return make_statistical(n, parse_axis(lit.substr(2)));
        if (lit.starts_with("fixed:")) {
            FixedComposition fixed;
            std::size_t total = 0;
            for (auto entry : split(lit.substr(6), ';')) {
                auto [value, state] = parse_entry(entry);
                const auto count = parse_number<std::size_t>(value, "count");
                fixed.members.push_back({state, count});
                total += count;
            }
            if (n_given && total != n) {
                throw std::invalid_argument(fmt::format("counts sum to {} but --n is {}", total, n));
            }
            return fixed;
        }
        if (lit.starts_with("iid:")) {
            IidMixture mixture{{}, n};
            for (auto entry : split(lit.substr(4), ';')) {
                auto [value, state] = parse_entry(entry);
                mixture.components.push_back({state, parse_number<double>(value, "probability")});
            }
            return mixture;
        }
    } catch (const std::exception& e) {
        throw std::invalid_argument(fmt::format("ensemble '{}': {}", lit, e.what()));
    }
    throw std::invalid_argument(
        fmt::format("ensemble '{}': expected A, B, S, S:<axis>, fixed:... or iid:...", lit));
}

void validate(const RunConfig& c) {
    static const std::vector<std::string> commands{"rho", "pmf", "distinguish", "urn"};
    if (std::find(commands.begin(), commands.end(), c.command) == commands.end()) {
        throw std::invalid_argument(fmt::format("command: unknown '{}'", c.command));
    }
    if (c.n == 0) throw std::invalid_argument("--n: must be >= 1");
    if (c.k < 1 || c.k > kMaxParticles) {
        throw std::invalid_argument(fmt::format("--{}: must be in [1, {}]", c.command == "distinguish" ? "kmax" : "k", kMaxParticles));
    }
    if (c.format != "json" && c.format != "csv") throw std::invalid_argument("--format: must be json or csv");
    if (c.format == "csv" && c.command != "pmf" && c.command != "urn") {
        throw std::invalid_argument("--format: csv is only available for pmf and urn");
    }
    if (c.basis != "z" && c.basis != "x") throw std::invalid_argument("--basis: must be z or x");
    if (!(c.tolerance > 0.0)) throw std::invalid_argument("--tolerance: must be positive");
    if (c.records && c.trials == 0) throw std::invalid_argument("--records: requires --trials >= 1");
    if (c.records && c.format == "csv") throw std::invalid_argument("--records: not available with csv output");
    if (c.command == "pmf" && c.axes.size() > 1) throw std::invalid_argument("--axis: pmf takes a single axis");
    if (c.command == "distinguish" && (c.ensemble.empty() || c.ensemble_b.empty())) {
        throw std::invalid_argument("--a/--b: distinguish needs two ensembles");
    }
    if (c.black && *c.black > c.n) throw std::invalid_argument("--black: must not exceed --n");
    if (c.black && !(c.urn || c.command == "urn")) throw std::invalid_argument("--black: only valid for urns");
}

namespace {

void write_pmf_csv(std::ostream& out, const CountPmf& exact, const std::optional<CountPmf>& empirical) {
    out << "count,probability" << (empirical ? ",empirical" : "") << '\n';
    for (std::size_t m = 0; m <= exact.n(); ++m) {
        out << m << ',' << fmt::format("{:.17g}", exact[m]);
        if (empirical) out << ',' << fmt::format("{:.17g}", (*empirical)[m]);
        out << '\n';
    }
}

Json moments_json(const CountPmf& p) {
    const Moments mom = pmf_moments(p);
    return Json{{"pmf", p}, {"mean", mom.mean}, {"variance", mom.variance}};
}

void run_rho(const RunConfig& c, std::ostream& out) {
    const EnsembleSpec spec = parse_ensemble(c.ensemble, c.n, c.n_given);
    const DensityMatrix rho = reduced_density_matrix(spec, c.k);
    Tolerances tol;
    tol.algebraic = c.tolerance;
    DensityMatrix checked(rho.matrix(), tol);
    Json j{{"command", "rho"},
           {"ensemble", c.ensemble},
           {"spec", describe(spec)},
           {"n", spec.size()},
           {"k", c.k},
           {"dim", rho.dim()},
           {"matrix", rho.matrix()}};
    if (c.basis == "x") j["matrix_x"] = to_x_basis(rho.matrix());
    out << j.dump(2) << '\n';
}

void run_counts(const RunConfig& c, const std::string& label, const EnsembleSpec& spec, const Axis& axis,
                const CountPmf& exact, std::ostream& out) {
    std::optional<CountPmf> empirical;
    if (c.trials > 0) empirical = monte_carlo_count_pmf(spec, axis, c.trials, c.seed);
    if (c.format == "csv") {
        write_pmf_csv(out, exact, empirical);
        return;
    }
    Json j{{"command", c.command},
           {"ensemble", label},
           {"spec", describe(spec)},
           {"n", spec.size()},
           {"axis", axis},
           {"exact", moments_json(exact)}};
    if (empirical) {
        Json e = moments_json(*empirical);
        e["trials"] = c.trials;
        e["seed"] = c.seed;
        e["tv_to_exact"] = total_variation(*empirical, exact);
        if (c.records) e["records"] = run_experiments(spec, axis, c.trials, c.seed);
        j["empirical"] = std::move(e);
    }
    out << j.dump(2) << '\n';
}

void run_urn(const RunConfig& c, std::ostream& out) {
    const EnsembleSpec urn = c.black ? make_urn(c.n, *c.black) : make_random_urn(c.n);
    const std::string label = c.black ? fmt::format("urn:{}/{}", *c.black, c.n) : fmt::format("urn:random/{}", c.n);
    // Black is z+, so measuring along z reads off the number of black balls.
    run_counts(c, label, urn, Axis::z(), urn_composition(urn), out);
}

void run_pmf(const RunConfig& c, std::ostream& out) {
    if (c.urn) {
        run_urn(c, out);
        return;
    }
    const EnsembleSpec spec = parse_ensemble(c.ensemble, c.n, c.n_given);
    const Axis axis = c.axes.empty() ? Axis::z() : parse_axis(c.axes.front());
    run_counts(c, c.ensemble, spec, axis, exact_count_pmf(spec, axis), out);
}

void run_distinguish(const RunConfig& c, std::ostream& out) {
    const EnsembleSpec a = parse_ensemble(c.ensemble, c.n, c.n_given);
    const EnsembleSpec b = parse_ensemble(c.ensemble_b, c.n, c.n_given);
    ReportOptions options;
    options.k_max = c.k;
    options.trials = c.trials;
    options.seed = c.seed;
    if (!c.axes.empty()) {
        options.axes.clear();
        for (const auto& text : c.axes) options.axes.push_back(parse_axis(text));
    }
    Json j{{"command", "distinguish"}};
    j.update(Json(distinguish(a, c.ensemble, b, c.ensemble_b, options)));
    out << j.dump(2) << '\n';
}

}  // namespace

void execute(const RunConfig& config, std::ostream& out) {
    validate(config);
    if (config.command == "rho") {
        run_rho(config, out);
    } else if (config.command == "pmf") {
        run_pmf(config, out);
    } else if (config.command == "urn") {
        run_urn(config, out);
    } else {
        run_distinguish(config, out);
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"spinmix: fixed-composition vs. randomly mixed spin-1/2 ensembles"};
    app.name("spinmix");
    app.require_subcommand(1);

    std::size_t black = 0;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--n", config.n, "Total particle number N")->capture_default_str();
        sub->add_option("--tolerance", config.tolerance, "Absolute tolerance for algebraic checks")
            ->capture_default_str();
    };
    auto sampling = [&](CLI::App* sub) {
        sub->add_option("--trials", config.trials, "Monte Carlo trials (0: exact only)")->capture_default_str();
        sub->add_option("--seed", config.seed, "Master seed for Monte Carlo streams")->capture_default_str();
        sub->add_option("--format", config.format, "Output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_flag("--records", config.records, "Include every experiment record (json only)");
    };

    auto* rho = app.add_subcommand("rho", "k-particle reduced density matrix");
    common(rho);
    rho->add_option("--ensemble", config.ensemble, "Ensemble literal")->capture_default_str();
    rho->add_option("--k", config.k, "Number of particles k")->capture_default_str();
    rho->add_option("--basis", config.basis, "Also print the matrix in the x-product basis when 'x'")
        ->check(CLI::IsMember({"z", "x"}))
        ->capture_default_str();
    rho->add_option("--format", config.format, "Output format (json only)")->capture_default_str();

    auto* pmf = app.add_subcommand("pmf", "Exact (and sampled) distribution of the plus count");
    common(pmf);
    sampling(pmf);
    pmf->add_option("--ensemble", config.ensemble, "Ensemble literal")->capture_default_str();
    pmf->add_option("--axis", config.axes, "Measurement axis: x, y, z or ux,uy,uz (default z)")->expected(1);
    pmf->add_flag("--urn", config.urn, "Classical urn composition instead of an ensemble");
    auto* pmf_black = pmf->add_option("--black", black, "Fixed number of black balls (omit for a random urn)");

    auto* dist = app.add_subcommand("distinguish", "Trace distances and count-based discrimination");
    common(dist);
    dist->add_option("--a", config.ensemble, "First ensemble literal")->required();
    dist->add_option("--b", config.ensemble_b, "Second ensemble literal")->required();
    dist->add_option("--kmax", config.k, "Largest k for trace distances")->capture_default_str();
    dist->add_option("--axis", config.axes, "Measurement axis, repeatable (default x and z)");
    dist->add_option("--trials", config.trials, "Monte Carlo trials per axis (0: exact only)")->capture_default_str();
    dist->add_option("--seed", config.seed, "Master seed")->capture_default_str();
    dist->add_option("--format", config.format, "Output format (json only)")->capture_default_str();

    auto* urn = app.add_subcommand("urn", "Classical urn: black-ball count distribution");
    common(urn);
    sampling(urn);
    auto* urn_black = urn->add_option("--black", black, "Fixed number of black balls (omit for a random urn)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    for (auto* sub : app.get_subcommands()) {
        config.command = sub->get_name();
        config.n_given = sub->count("--n") > 0;
    }
    if (pmf_black->count() > 0 || urn_black->count() > 0) config.black = black;

    try {
        std::ostringstream buffer;
        execute(config, buffer);
        out << buffer.str();
    } catch (const std::exception& e) {
        err << "spinmix " << config.command << ": " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace spinmix::cli
