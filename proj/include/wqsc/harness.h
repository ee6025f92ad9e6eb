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

#ifndef WQSC_HARNESS_H
#define WQSC_HARNESS_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wqsc/attacks.h"
#include "wqsc/protocol.h"

namespace wqsc {

struct Interval {
    double low = 0;
    double high = 0;
};

/// Normal-approximation interval p +- z*sqrt(p(1-p)/n), clamped to [0, 1].
/// Throws InvalidCounts unless trials >= 1 and successes <= trials.
Interval binomial_ci(std::uint64_t successes, std::uint64_t trials, double z);

enum class OutputFormat { Json, Csv };

struct RunConfig {
    Scheme scheme = Scheme::Present;
    AttackKind attack = AttackKind::None;
    std::uint64_t rounds = 100000;
    /// Fraction of rounds sacrificed for the eavesdropping check. Exactly
    /// round(check_fraction * rounds) rounds are chosen.
    double check_fraction = 0.5;
    std::uint64_t seed = 0;
    InitialPolicy initial = InitialPolicy::Random;
    CheckBasisPolicy check_basis = CheckBasisPolicy::Random;
    OutputFormat format = OutputFormat::Json;
    double z = 1.96;
    /// Count unknown guesses as half a leaked bit instead of excluding them.
    bool unknown_as_half = false;
    /// Annotates output only.
    std::optional<double> threshold;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
    /// Number of leading round records kept in RunStats::trace.
    std::size_t trace = 0;

    std::uint64_t check_rounds() const;
    /// Throws InvalidConfig.
    void validate() const;
};

struct RateCount {
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;

    std::optional<double> rate() const;
};

struct RunStats {
    Scheme scheme = Scheme::Present;
    AttackKind attack = AttackKind::None;
    std::uint64_t seed = 0;

    std::uint64_t rounds_total = 0;
    std::uint64_t check_rounds = 0;
    std::uint64_t check_errors = 0;
    double error_rate = 0;
    Interval error_rate_ci95;
    /// Check errors split by initial state (present) or check basis (Cao).
    std::map<std::string, RateCount> conditional_errors;

    std::uint64_t message_rounds = 0;
    std::uint64_t recovered_correct = 0;
    std::optional<double> recovery_accuracy;

    std::uint64_t eve_known = 0;
    std::uint64_t eve_correct = 0;
    std::uint64_t eve_unknown = 0;
    std::optional<double> eve_leak_rate;
    std::optional<double> unknown_fraction;

    std::vector<RoundRecord> trace;
};

/// Runs `rounds` independent rounds. Round i draws from
/// RandomStream::for_round(seed, i); check positions come from a master
/// stream seeded with `seed`. Results do not depend on the thread count.
RunStats run_monte_carlo(const RunConfig &config);

struct ExactResult {
    Scheme scheme = Scheme::Present;
    AttackKind attack = AttackKind::None;
    double total_error_rate = 0;
    /// Check-error rate conditioned on the initial state or check basis.
    std::map<std::string, double> conditional_error_rates;
    /// Probability of each condition; total = sum(weight * conditional).
    std::map<std::string, double> condition_weights;
    double recovery_accuracy = 0;
    /// P(guess correct | guess known); empty when Eve never guesses.
    std::optional<double> leak_rate;
    std::map<std::string, std::optional<double>> conditional_leak_rates;
    double unknown_fraction = 0;
    /// Summed path probabilities of the check and message trees; both 1.
    double check_branch_mass = 0;
    double message_branch_mass = 0;
};

/// Exact rates by walking every branch (condition x Eve outcome x party
/// outcomes) with probabilities from distribution(). Throws UnsupportedPair
/// when the attack does not apply to the scheme.
ExactResult exact_analyze(Scheme scheme, AttackKind attack);

}  // namespace wqsc

#endif
