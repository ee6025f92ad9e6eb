// Copyright 2026 The wqsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wqsc/cli.h"

#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wqsc/harness.h"
#include "wqsc/report.h"
#include "wqsc/states.h"

namespace wqsc {

namespace {

const std::vector<std::string> kSchemes = {"present", "cao"};
const std::vector<std::string> kAttacks = {"none", "ir-z", "ir-x", "cnot", "cao-ir-z"};
const std::vector<std::string> kInitial = {"random", "phi1", "phi2"};
const std::vector<std::string> kBases = {"random", "z", "x", "bell"};
const std::vector<std::string> kFormats = {"json", "csv"};

OutputFormat parse_format(const std::string &name) {
    return name == "csv" ? OutputFormat::Csv : OutputFormat::Json;
}

}  // namespace

int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulator and exact analyzer for W-state secure communication schemes", "wqsc"};
    app.require_subcommand(1);

    std::string scheme = "present";
    std::string attack = "none";
    std::string initial = "random";
    std::string basis = "random";
    std::string format = "json";
    RunConfig config;

    auto *run = app.add_subcommand("run", "Monte Carlo simulation of many rounds");
    run->add_option("--scheme", scheme, "present or cao")->check(CLI::IsMember(kSchemes))->capture_default_str();
    run->add_option("--attack", attack, "Eve's strategy")->check(CLI::IsMember(kAttacks))->capture_default_str();
    run->add_option("--rounds", config.rounds, "Number of rounds")->check(CLI::PositiveNumber)->capture_default_str();
    run->add_option("--check-fraction", config.check_fraction, "Fraction of rounds used as checks")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    run->add_option("--seed", config.seed, "Master seed")->capture_default_str();
    run->add_option("--init", initial, "Initial state policy (present scheme)")
        ->check(CLI::IsMember(kInitial))
        ->capture_default_str();
    run->add_option("--check-basis", basis, "Check basis policy (Cao scheme)")
        ->check(CLI::IsMember(kBases))
        ->capture_default_str();
    run->add_option("--format", format, "Output format")->check(CLI::IsMember(kFormats))->capture_default_str();
    run->add_option("--z", config.z, "Normal quantile for the error-rate interval")->capture_default_str();
    run->add_option("--threshold", config.threshold, "Error-rate threshold; annotates the output only");
    run->add_option("--threads", config.threads, "Worker threads (0 = all cores)")->capture_default_str();
    run->add_option("--trace", config.trace, "Include the first N round records (json only)")
        ->capture_default_str();
    run->add_flag("--unknown-as-half", config.unknown_as_half, "Count Eve's unknown guesses as half a leaked bit");

    auto *exact = app.add_subcommand("exact", "Exact error and leak rates by branch enumeration");
    exact->add_option("--scheme", scheme, "present or cao")->check(CLI::IsMember(kSchemes))->capture_default_str();
    exact->add_option("--attack", attack, "Eve's strategy")->check(CLI::IsMember(kAttacks))->capture_default_str();
    exact->add_option("--format", format, "Output format")->check(CLI::IsMember(kFormats))->capture_default_str();

    auto *identities = app.add_subcommand("identities", "Check every state decomposition identity");
    identities->add_option("--format", format, "Output format")->check(CLI::IsMember(kFormats))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        const OutputFormat fmt = parse_format(format);
        if (run->parsed()) {
            config.scheme = parse_scheme(scheme);
            config.attack = parse_attack_kind(attack);
            config.initial = parse_initial_policy(initial);
            config.check_basis = parse_check_basis_policy(basis);
            config.format = fmt;
            const RunStats stats = run_monte_carlo(config);
            if (fmt == OutputFormat::Csv) {
                write_csv(out, stats, config);
            } else {
                out << to_json(stats, config).dump(2) << '\n';
            }
            return 0;
        }
        if (exact->parsed()) {
            const ExactResult result = exact_analyze(parse_scheme(scheme), parse_attack_kind(attack));
            if (fmt == OutputFormat::Csv) {
                write_csv(out, result);
            } else {
                out << to_json(result).dump(2) << '\n';
            }
            return 0;
        }
        const std::vector<IdentityReport> reports = verify_identities();
        if (fmt == OutputFormat::Csv) {
            write_csv(out, reports);
        } else {
            out << to_json(reports).dump(2) << '\n';
        }
        for (const IdentityReport &r : reports) {
            if (!r.pass) {
                err << "identity " << r.id << " failed: deviation " << r.max_deviation << '\n';
                return 2;
            }
        }
        return 0;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace wqsc
