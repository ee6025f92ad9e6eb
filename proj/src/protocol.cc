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

#include "wqsc/protocol.h"

#include <array>
#include <string>

#include "wqsc/states.h"

namespace wqsc {

namespace {

constexpr std::array<int, 1> kPresentTransit = {3};
constexpr std::array<int, 2> kCaoTransit = {3, 4};

void check_message_bit(const std::optional<int> &bit) {
    if (bit && *bit != 0 && *bit != 1) {
        throw Error(ErrorCode::InvalidConfig, "message bit must be 0 or 1");
    }
}

void check_present_outcomes(const Outcome &alice, const Outcome &bob) {
    if (alice.is_bell() || alice.width() != 2 || alice.value() == 0b11) {
        throw Error(ErrorCode::InvalidOutcome, "Alice's result must be 10, 01 or 00, got " + alice.to_string());
    }
    if (bob.is_bell() || bob.width() != 1) {
        throw Error(ErrorCode::InvalidOutcome, "Bob's result must be a single bit, got " + bob.to_string());
    }
}

MeasurementBasis pair_basis(CheckBasis basis, int first, int second) {
    switch (basis) {
        case CheckBasis::Z:
            return MeasurementBasis::z({first, second});
        case CheckBasis::X:
            return MeasurementBasis::x({first, second});
        case CheckBasis::Bell:
            return MeasurementBasis::bell(first, second);
    }
    throw Error(ErrorCode::InvalidConfig, "check basis");
}

CheckBasis resolve_basis(CheckBasisPolicy policy, RandomStream &rng) {
    switch (policy) {
        case CheckBasisPolicy::Z:
            return CheckBasis::Z;
        case CheckBasisPolicy::X:
            return CheckBasis::X;
        case CheckBasisPolicy::Bell:
            return CheckBasis::Bell;
        case CheckBasisPolicy::Random:
            break;
    }
    constexpr std::array<CheckBasis, 3> all = {CheckBasis::Z, CheckBasis::X, CheckBasis::Bell};
    return all[rng.below(3)];
}

}  // namespace

std::string_view round_mode_name(RoundMode mode) {
    return mode == RoundMode::Check ? "check" : "message";
}

std::string_view check_basis_name(CheckBasis basis) {
    switch (basis) {
        case CheckBasis::Z:
            return "Z";
        case CheckBasis::X:
            return "X";
        case CheckBasis::Bell:
            return "Bell";
    }
    return "?";
}

std::string_view encoding_name(Encoding encoding) {
    return encoding == Encoding::I ? "I" : "U";
}

InitialPolicy parse_initial_policy(std::string_view name) {
    if (name == "random") {
        return InitialPolicy::Random;
    }
    if (name == "phi1") {
        return InitialPolicy::Phi1;
    }
    if (name == "phi2") {
        return InitialPolicy::Phi2;
    }
    throw Error(ErrorCode::InvalidConfig, "unknown initial-state policy '" + std::string(name) + "'");
}

CheckBasisPolicy parse_check_basis_policy(std::string_view name) {
    if (name == "random") {
        return CheckBasisPolicy::Random;
    }
    if (name == "z") {
        return CheckBasisPolicy::Z;
    }
    if (name == "x") {
        return CheckBasisPolicy::X;
    }
    if (name == "bell") {
        return CheckBasisPolicy::Bell;
    }
    throw Error(ErrorCode::InvalidConfig, "unknown check-basis policy '" + std::string(name) + "'");
}

void PresentRoundConfig::validate() const {
    check_message_bit(message_bit);
    if ((mode == RoundMode::Message) != message_bit.has_value()) {
        throw Error(ErrorCode::InvalidConfig, "a message bit is required in message rounds and only there");
    }
    if (!attack.applies_to(Scheme::Present)) {
        throw Error(ErrorCode::InvalidConfig,
                    std::string(attack_kind_name(attack.kind)) + " does not apply to the present scheme");
    }
}

void CaoRoundConfig::validate() const {
    check_message_bit(message_bit);
    if ((mode == RoundMode::Check) != check_basis.has_value()) {
        throw Error(ErrorCode::InvalidConfig, "a check basis is required in check rounds and only there");
    }
    if (mode == RoundMode::Message && !message_bit) {
        throw Error(ErrorCode::InvalidConfig, "key rounds need a message bit for the one-time pad");
    }
    if (!attack.applies_to(Scheme::Cao)) {
        throw Error(ErrorCode::InvalidConfig,
                    std::string(attack_kind_name(attack.kind)) + " does not apply to Cao's scheme");
    }
}

bool check_consistent(const Outcome &alice, const Outcome &bob) {
    check_present_outcomes(alice, bob);
    const bool single_excitation = alice.value() != 0;
    return single_excitation ? bob.value() == 0 : bob.value() == 1;
}

int recover_bit(const Outcome &alice, const Outcome &bob) {
    check_present_outcomes(alice, bob);
    const int b = static_cast<int>(bob.value());
    return alice.value() != 0 ? b : 1 - b;
}

RoundRecord present_round(const PresentRoundConfig &config, RandomStream &rng) {
    config.validate();

    InitialState initial;
    switch (config.initial) {
        case InitialPolicy::Phi1:
            initial = InitialState::Phi1;
            break;
        case InitialPolicy::Phi2:
            initial = InitialState::Phi2;
            break;
        default:
            initial = rng.bit() ? InitialState::Phi2 : InitialState::Phi1;
            break;
    }
    StateVector state = build(initial == InitialState::Phi1 ? StateLabel::Phi1 : StateLabel::Phi2);

    std::optional<Encoding> encoding;
    if (config.mode == RoundMode::Message) {
        encoding = *config.message_bit ? Encoding::U : Encoding::I;
        if (*encoding == Encoding::U) {
            state = apply_1q(state, 3, Gate1Q::flip());
        }
    }

    AttackResult attacked = apply_attack(config.attack, state, kPresentTransit, rng);
    state = std::move(attacked.state);

    const bool decode = initial == InitialState::Phi2;
    if (decode) {
        state = apply_1q(state, 3, Gate1Q::hadamard());
    }

    Branch alice = measure(state, MeasurementBasis::z({1, 2}), rng);
    Branch bob = measure(alice.state, MeasurementBasis::z({3}), rng);
    if (attacked.note.ancilla_qubit) {
        read_ancilla(attacked.note, bob.state, rng);
    }

    RoundRecord record{
        .scheme = Scheme::Present,
        .mode = config.mode,
        .initial_label = std::string(initial_state_name(initial)),
        .alice_encoding = encoding,
        .eve_note = attacked.note,
        .bob_decoded = decode,
        .alice_outcome = alice.outcome,
        .bob_outcome = bob.outcome,
    };
    if (config.mode == RoundMode::Check) {
        record.check_pass = check_consistent(alice.outcome, bob.outcome);
    } else {
        record.message_bit = config.message_bit;
        record.recovered_bit = recover_bit(alice.outcome, bob.outcome);
        const PublicTranscript transcript{
            .scheme = Scheme::Present,
            .initial = initial,
            .alice_published = alice.outcome,
        };
        record.eve_guess = eve_guess(config.attack, record.eve_note, transcript);
    }
    return record;
}

int cao_alice_key(BellLabel label) {
    switch (label) {
        case BellLabel::PsiPlus:
            return 0;
        case BellLabel::PhiPlus:
        case BellLabel::PhiMinus:
            return 1;
        default:
            throw Error(ErrorCode::InvalidOutcome, "psi- carries no key value");
    }
}

int cao_bob_key(BellLabel label) {
    switch (label) {
        case BellLabel::PsiPlus:
            return 1;
        case BellLabel::PhiPlus:
        case BellLabel::PhiMinus:
            return 0;
        default:
            throw Error(ErrorCode::InvalidOutcome, "psi- carries no key value");
    }
}

RoundRecord cao_round(const CaoRoundConfig &config, RandomStream &rng) {
    config.validate();

    AttackResult attacked = apply_attack(config.attack, build(StateLabel::W4), kCaoTransit, rng);

    const CheckBasis basis =
        config.mode == RoundMode::Check ? resolve_basis(*config.check_basis, rng) : CheckBasis::Bell;
    const Branch alice = measure(attacked.state, pair_basis(basis, 1, 2), rng);
    const Branch bob = measure(alice.state, pair_basis(basis, 3, 4), rng);

    RoundRecord record{
        .scheme = Scheme::Cao,
        .mode = config.mode,
        .initial_label = std::string(state_label_name(StateLabel::W4)),
        .eve_note = attacked.note,
        .alice_outcome = alice.outcome,
        .bob_outcome = bob.outcome,
    };
    if (config.mode == RoundMode::Check) {
        record.check_basis = basis;
        record.check_pass = !cao_check_error(basis, alice.outcome, bob.outcome);
        return record;
    }

    const int alice_key = cao_alice_key(alice.outcome.bell_label());
    const int bob_key = cao_bob_key(bob.outcome.bell_label());
    const int ciphertext = alice_key ^ *config.message_bit;
    record.message_bit = config.message_bit;
    record.alice_key = alice_key;
    record.bob_key = bob_key;
    record.ciphertext = ciphertext;
    record.recovered_bit = bob_key ^ ciphertext;
    const PublicTranscript transcript{.scheme = Scheme::Cao, .ciphertext = ciphertext};
    record.eve_guess = eve_guess(config.attack, record.eve_note, transcript);
    return record;
}

CaoCheckTable derive_cao_check_table(CheckBasis basis) {
    const StateVector w4 = build(StateLabel::W4);
    CaoCheckTable table{.basis = basis};
    if (basis == CheckBasis::Bell) {
        for (const auto &[a, pa] : distribution(w4, MeasurementBasis::bell(1, 2))) {
            if (pa <= kTolerance) {
                for (BellLabel b : kAllBellLabels) {
                    table.probability[{a, Outcome::bell(b)}] = 0.0;
                }
                continue;
            }
            const Branch collapsed = project(w4, MeasurementBasis::bell(1, 2), a);
            for (const auto &[b, pb] : distribution(collapsed.state, MeasurementBasis::bell(3, 4))) {
                table.probability[{a, b}] = pa * pb;
            }
        }
    } else {
        const auto all = basis == CheckBasis::Z ? MeasurementBasis::z({1, 2, 3, 4}) : MeasurementBasis::x({1, 2, 3, 4});
        for (const auto &[joint, p] : distribution(w4, all)) {
            table.probability[{joint.sub(0, 2), joint.sub(2, 2)}] = p;
        }
    }
    for (const auto &[key, p] : table.probability) {
        table.forbidden[key] = p <= kTolerance;
    }
    return table;
}

const CaoCheckTable &cao_check_table(CheckBasis basis) {
    static const std::array<CaoCheckTable, 3> tables = {
        derive_cao_check_table(CheckBasis::Z),
        derive_cao_check_table(CheckBasis::X),
        derive_cao_check_table(CheckBasis::Bell),
    };
    return tables[static_cast<std::size_t>(basis)];
}

bool cao_check_error(CheckBasis basis, const Outcome &alice, const Outcome &bob) {
    const bool want_bell = basis == CheckBasis::Bell;
    const auto fits = [&](const Outcome &o) { return o.is_bell() == want_bell && o.width() == 2; };
    if (!fits(alice) || !fits(bob)) {
        throw Error(ErrorCode::BasisMismatch, "outcomes " + alice.to_string() + ", " + bob.to_string() +
                                                  " do not come from a " + std::string(check_basis_name(basis)) +
                                                  " measurement");
    }
    return cao_check_table(basis).forbidden.at({alice, bob});
}

}  // namespace wqsc
