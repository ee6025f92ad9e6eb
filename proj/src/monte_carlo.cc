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

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "wqsc/harness.h"

namespace wqsc {

namespace {

/// Per-worker partial counts. Merging is plain addition, so the totals do not
/// depend on how rounds were split between workers.
struct Tally {
    std::uint64_t check_rounds = 0;
    std::uint64_t check_errors = 0;
    std::map<std::string, RateCount> conditional;
    std::uint64_t message_rounds = 0;
    std::uint64_t recovered = 0;
    std::uint64_t known = 0;
    std::uint64_t correct = 0;
    std::uint64_t unknown = 0;
    std::vector<RoundRecord> trace;

    void add(const RoundRecord &r) {
        if (r.mode == RoundMode::Check) {
            ++check_rounds;
            const bool error = !*r.check_pass;
            check_errors += error;
            const std::string key =
                r.check_basis ? std::string(check_basis_name(*r.check_basis)) : r.initial_label;
            RateCount &c = conditional[key];
            ++c.trials;
            c.hits += error;
            return;
        }
        ++message_rounds;
        recovered += *r.recovered_bit == *r.message_bit;
        if (r.eve_guess == EveGuess::Unknown) {
            ++unknown;
        } else {
            ++known;
            correct += r.eve_guess == guess_from_bit(*r.message_bit);
        }
    }

    void merge(Tally &&other) {
        check_rounds += other.check_rounds;
        check_errors += other.check_errors;
        for (const auto &[key, c] : other.conditional) {
            conditional[key].trials += c.trials;
            conditional[key].hits += c.hits;
        }
        message_rounds += other.message_rounds;
        recovered += other.recovered;
        known += other.known;
        correct += other.correct;
        unknown += other.unknown;
        trace.insert(trace.end(), std::make_move_iterator(other.trace.begin()),
                     std::make_move_iterator(other.trace.end()));
    }
};

/// Chooses exactly `count` of `total` positions uniformly (selection sampling).
std::vector<bool> choose_check_positions(std::uint64_t total, std::uint64_t count, std::uint64_t seed) {
    RandomStream master(seed);
    std::vector<bool> chosen(total, false);
    std::uint64_t needed = count;
    for (std::uint64_t i = 0; i < total && needed > 0; ++i) {
        if (master.below(total - i) < needed) {
            chosen[i] = true;
            --needed;
        }
    }
    return chosen;
}

RoundRecord run_round(const RunConfig &config, bool is_check, std::uint64_t index) {
    RandomStream rng = RandomStream::for_round(config.seed, index);
    const AttackModel attack{config.attack};
    if (config.scheme == Scheme::Present) {
        PresentRoundConfig round{.initial = config.initial, .attack = attack};
        if (!is_check) {
            round.mode = RoundMode::Message;
            round.message_bit = rng.bit();
        }
        return present_round(round, rng);
    }
    CaoRoundConfig round{.attack = attack};
    if (is_check) {
        round.check_basis = config.check_basis;
    } else {
        round.mode = RoundMode::Message;
        round.message_bit = rng.bit();
    }
    return cao_round(round, rng);
}

}  // namespace

Interval binomial_ci(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials < 1 || successes > trials) {
        throw Error(ErrorCode::InvalidCounts,
                    std::to_string(successes) + " successes in " + std::to_string(trials) + " trials");
    }
    const double p = static_cast<double>(successes) / static_cast<double>(trials);
    const double half = z * std::sqrt(p * (1 - p) / static_cast<double>(trials));
    return {std::clamp(p - half, 0.0, 1.0), std::clamp(p + half, 0.0, 1.0)};
}

std::optional<double> RateCount::rate() const {
    if (trials == 0) {
        return std::nullopt;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

std::uint64_t RunConfig::check_rounds() const {
    const double wanted = std::round(check_fraction * static_cast<double>(rounds));
    return std::min<std::uint64_t>(rounds, static_cast<std::uint64_t>(wanted));
}

void RunConfig::validate() const {
    if (rounds < 1) {
        throw Error(ErrorCode::InvalidConfig, "rounds must be at least 1");
    }
    if (!(check_fraction > 0 && check_fraction < 1)) {
        throw Error(ErrorCode::InvalidConfig, "check fraction must lie strictly between 0 and 1");
    }
    if (check_rounds() < 1) {
        throw Error(ErrorCode::InvalidConfig, "check fraction selects no check rounds");
    }
    if (!(z >= 0) || !std::isfinite(z)) {
        throw Error(ErrorCode::InvalidConfig, "z must be a finite non-negative number");
    }
    if (!AttackModel{attack}.applies_to(scheme)) {
        throw Error(ErrorCode::InvalidConfig, std::string(attack_kind_name(attack)) + " does not apply to the " +
                                                  std::string(scheme_name(scheme)) + " scheme");
    }
}

RunStats run_monte_carlo(const RunConfig &config) {
    config.validate();
    const std::vector<bool> is_check = choose_check_positions(config.rounds, config.check_rounds(), config.seed);

    unsigned workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, config.rounds));
    std::vector<Tally> partial(workers);
    const std::uint64_t chunk = (config.rounds + workers - 1) / workers;

    auto work = [&](unsigned w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(config.rounds, begin + chunk);
        for (std::uint64_t i = begin; i < end; ++i) {
            RoundRecord record = run_round(config, is_check[i], i);
            if (i < config.trace) {
                partial[w].trace.push_back(record);
            }
            partial[w].add(record);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }

    Tally total;
    for (Tally &t : partial) {
        total.merge(std::move(t));
    }

    RunStats stats;
    stats.scheme = config.scheme;
    stats.attack = config.attack;
    stats.seed = config.seed;
    stats.rounds_total = config.rounds;
    stats.check_rounds = total.check_rounds;
    stats.check_errors = total.check_errors;
    stats.error_rate = static_cast<double>(total.check_errors) / static_cast<double>(total.check_rounds);
    stats.error_rate_ci95 = binomial_ci(total.check_errors, total.check_rounds, config.z);
    stats.conditional_errors = std::move(total.conditional);
    stats.message_rounds = total.message_rounds;
    stats.recovered_correct = total.recovered;
    stats.eve_known = total.known;
    stats.eve_correct = total.correct;
    stats.eve_unknown = total.unknown;
    if (total.message_rounds > 0) {
        const double messages = static_cast<double>(total.message_rounds);
        stats.recovery_accuracy = static_cast<double>(total.recovered) / messages;
        stats.unknown_fraction = static_cast<double>(total.unknown) / messages;
        if (config.unknown_as_half) {
            stats.eve_leak_rate = (static_cast<double>(total.correct) + 0.5 * static_cast<double>(total.unknown)) / messages;
        } else if (total.known > 0) {
            stats.eve_leak_rate = static_cast<double>(total.correct) / static_cast<double>(total.known);
        }
    }
    stats.trace = std::move(total.trace);
    return stats;
}

}  // namespace wqsc
