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

#include "wqsc/report.h"

#include <cmath>
#include <cstdio>
#include <optional>

namespace wqsc {

namespace {

using nlohmann::json;

json number(double value) {
    return round_significant(value);
}

json optional_number(const std::optional<double> &value) {
    return value ? number(*value) : json(nullptr);
}

template <typename T>
json optional_value(const std::optional<T> &value) {
    return value ? json(*value) : json(nullptr);
}

std::string csv_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.*g", kReportDigits, value);
    return buf;
}

std::string csv_number(const std::optional<double> &value) {
    return value ? csv_number(*value) : std::string();
}

std::string csv_field(const std::string &text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') {
            quoted.push_back('"');
        }
        quoted.push_back(c);
    }
    quoted.push_back('"');
    return quoted;
}

void write_row(std::ostream &out, const std::vector<std::string> &fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) {
            out << ',';
        }
        out << fields[i];
    }
    out << '\n';
}

std::string_view basis_kind_name(BasisKind kind) {
    switch (kind) {
        case BasisKind::Z:
            return "Z";
        case BasisKind::X:
            return "X";
        case BasisKind::BellPair:
            return "Bell";
    }
    return "?";
}

}  // namespace

const std::vector<std::string> kRunCsvColumns = {
    "scheme",         "attack",          "seed",          "rounds_total",     "check_rounds",
    "check_errors",   "error_rate",      "error_rate_ci95_low", "error_rate_ci95_high", "message_rounds",
    "recovery_accuracy", "eve_leak_rate", "unknown_fraction", "threshold",       "exceeds_threshold",
};

const std::vector<std::string> kExactCsvColumns = {
    "scheme", "attack", "condition", "weight", "error_rate", "leak_rate", "recovery_accuracy", "unknown_fraction",
};

const std::vector<std::string> kIdentityCsvColumns = {
    "id", "left", "right", "max_deviation", "right_norm", "pass", "printed_label", "printed_label_deviation",
};

double round_significant(double value, int digits) {
    if (value == 0 || !std::isfinite(value)) {
        return value;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    return std::strtod(buf, nullptr);
}

json to_json(const RoundRecord &r) {
    const EveNote &note = r.eve_note;
    json j;
    j["scheme"] = scheme_name(r.scheme);
    j["mode"] = round_mode_name(r.mode);
    j["initial"] = r.initial_label;
    j["alice_encoding"] = r.alice_encoding ? json(encoding_name(*r.alice_encoding)) : json(nullptr);
    j["eve_attack"] = attack_kind_name(note.kind);
    j["eve_basis"] = note.observed ? json(basis_kind_name(note.basis)) : json(nullptr);
    j["eve_observed"] = note.observed ? json(note.observed->to_string()) : json(nullptr);
    j["eve_ancilla"] = note.ancilla_outcome ? json(note.ancilla_outcome->to_string()) : json(nullptr);
    j["bob_decoded"] = r.bob_decoded;
    j["check_basis"] = r.check_basis ? json(check_basis_name(*r.check_basis)) : json(nullptr);
    j["alice_outcome"] = r.alice_outcome.to_string();
    j["bob_outcome"] = r.bob_outcome.to_string();
    j["check_pass"] = optional_value(r.check_pass);
    j["message_bit"] = optional_value(r.message_bit);
    j["alice_key"] = optional_value(r.alice_key);
    j["bob_key"] = optional_value(r.bob_key);
    j["ciphertext"] = optional_value(r.ciphertext);
    j["recovered_bit"] = optional_value(r.recovered_bit);
    j["eve_guess"] = eve_guess_name(r.eve_guess);
    return j;
}

json to_json(const RunStats &stats, const RunConfig &config) {
    json j;
    j["scheme"] = scheme_name(stats.scheme);
    j["attack"] = attack_kind_name(stats.attack);
    j["seed"] = stats.seed;
    j["rounds_total"] = stats.rounds_total;
    j["check_rounds"] = stats.check_rounds;
    j["check_errors"] = stats.check_errors;
    j["error_rate"] = number(stats.error_rate);
    j["error_rate_ci95"] = json::array({number(stats.error_rate_ci95.low), number(stats.error_rate_ci95.high)});
    json conditional = json::object();
    for (const auto &[key, c] : stats.conditional_errors) {
        conditional[key] = {{"trials", c.trials}, {"errors", c.hits}, {"rate", optional_number(c.rate())}};
    }
    j["conditional_error_rates"] = conditional;
    j["message_rounds"] = stats.message_rounds;
    j["recovered_correct"] = stats.recovered_correct;
    j["recovery_accuracy"] = optional_number(stats.recovery_accuracy);
    j["eve_known"] = stats.eve_known;
    j["eve_correct"] = stats.eve_correct;
    j["eve_unknown"] = stats.eve_unknown;
    j["eve_leak_rate"] = optional_number(stats.eve_leak_rate);
    j["unknown_fraction"] = optional_number(stats.unknown_fraction);
    if (config.threshold) {
        j["threshold"] = number(*config.threshold);
        j["exceeds_threshold"] = stats.error_rate > *config.threshold;
    }
    if (!stats.trace.empty()) {
        json trace = json::array();
        for (const RoundRecord &r : stats.trace) {
            trace.push_back(to_json(r));
        }
        j["trace"] = std::move(trace);
    }
    return j;
}

json to_json(const ExactResult &result) {
    json j;
    j["scheme"] = scheme_name(result.scheme);
    j["attack"] = attack_kind_name(result.attack);
    j["total_error_rate"] = number(result.total_error_rate);
    json conditional = json::object();
    for (const auto &[key, rate] : result.conditional_error_rates) {
        conditional[key] = number(rate);
    }
    j["conditional_error_rates"] = conditional;
    json weights = json::object();
    for (const auto &[key, w] : result.condition_weights) {
        weights[key] = number(w);
    }
    j["condition_weights"] = weights;
    j["recovery_accuracy"] = number(result.recovery_accuracy);
    j["leak_rate"] = optional_number(result.leak_rate);
    json leaks = json::object();
    for (const auto &[key, rate] : result.conditional_leak_rates) {
        leaks[key] = optional_number(rate);
    }
    j["conditional_leak_rates"] = leaks;
    j["unknown_fraction"] = number(result.unknown_fraction);
    j["check_branch_mass"] = number(result.check_branch_mass);
    j["message_branch_mass"] = number(result.message_branch_mass);
    return j;
}

json to_json(const std::vector<IdentityReport> &reports) {
    json list = json::array();
    bool all_pass = true;
    for (const IdentityReport &r : reports) {
        json item = {
            {"id", r.id},
            {"left", r.left},
            {"right", r.right},
            {"max_deviation", number(r.max_deviation)},
            {"right_norm", number(r.right_norm)},
            {"pass", r.pass},
        };
        if (r.printed_label) {
            item["printed_label"] = *r.printed_label;
            item["printed_label_deviation"] = optional_number(r.printed_label_deviation);
        }
        list.push_back(std::move(item));
        all_pass = all_pass && r.pass;
    }
    return {{"identities", list}, {"all_pass", all_pass}};
}

void write_csv(std::ostream &out, const RunStats &stats, const RunConfig &config) {
    write_row(out, kRunCsvColumns);
    write_row(out, {
                       std::string(scheme_name(stats.scheme)),
                       std::string(attack_kind_name(stats.attack)),
                       std::to_string(stats.seed),
                       std::to_string(stats.rounds_total),
                       std::to_string(stats.check_rounds),
                       std::to_string(stats.check_errors),
                       csv_number(stats.error_rate),
                       csv_number(stats.error_rate_ci95.low),
                       csv_number(stats.error_rate_ci95.high),
                       std::to_string(stats.message_rounds),
                       csv_number(stats.recovery_accuracy),
                       csv_number(stats.eve_leak_rate),
                       csv_number(stats.unknown_fraction),
                       csv_number(config.threshold),
                       config.threshold ? (stats.error_rate > *config.threshold ? "true" : "false") : "",
                   });
}

void write_csv(std::ostream &out, const ExactResult &result) {
    write_row(out, kExactCsvColumns);
    const std::string scheme(scheme_name(result.scheme));
    const std::string attack(attack_kind_name(result.attack));
    for (const auto &[key, rate] : result.conditional_error_rates) {
        const auto leak = result.conditional_leak_rates.find(key);
        write_row(out, {scheme, attack, key, csv_number(result.condition_weights.at(key)), csv_number(rate),
                        leak == result.conditional_leak_rates.end() ? std::string() : csv_number(leak->second), "",
                        ""});
    }
    write_row(out, {scheme, attack, "total", csv_number(1.0), csv_number(result.total_error_rate),
                    csv_number(result.leak_rate), csv_number(result.recovery_accuracy),
                    csv_number(result.unknown_fraction)});
}

void write_csv(std::ostream &out, const std::vector<IdentityReport> &reports) {
    write_row(out, kIdentityCsvColumns);
    for (const IdentityReport &r : reports) {
        write_row(out, {
                           csv_field(r.id),
                           csv_field(r.left),
                           csv_field(r.right),
                           csv_number(r.max_deviation),
                           csv_number(r.right_norm),
                           r.pass ? "true" : "false",
                           r.printed_label ? csv_field(*r.printed_label) : "",
                           csv_number(r.printed_label_deviation),
                       });
    }
}

}  // namespace wqsc
