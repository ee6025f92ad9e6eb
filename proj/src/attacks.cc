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

#include "wqsc/attacks.h"

#include <algorithm>
#include <string>

#include "wqsc/protocol.h"

namespace wqsc {

namespace {

void check_arity(const AttackModel &model, std::span<const int> transit) {
    const int arity = model.arity();
    if (transit.empty() || (arity != 0 && static_cast<int>(transit.size()) != arity)) {
        throw Error(ErrorCode::ArityMismatch, std::string(attack_kind_name(model.kind)) + " acts on " +
                                                  std::to_string(arity) + " transit qubit(s), got " +
                                                  std::to_string(transit.size()));
    }
}

EveGuess present_guess(const AttackModel &model, const EveNote &note, const PublicTranscript &transcript) {
    if (!transcript.initial || !transcript.alice_published) {
        throw Error(ErrorCode::MissingTranscript, "present-scheme guess needs the initial state and Alice's result");
    }
    const InitialState readable = model.kind == AttackKind::InterceptResendX ? InitialState::Phi2 : InitialState::Phi1;
    if (*transcript.initial != readable) {
        return EveGuess::Unknown;
    }
    const std::optional<Outcome> &seen =
        model.kind == AttackKind::CnotAncilla ? note.ancilla_outcome : note.observed;
    if (!seen) {
        throw Error(ErrorCode::InvalidConfig, "Eve's note has no observation to guess from");
    }
    return guess_from_bit(recover_bit(*transcript.alice_published, *seen));
}

EveGuess cao_guess(const EveNote &note, const PublicTranscript &transcript) {
    if (!transcript.ciphertext) {
        throw Error(ErrorCode::MissingTranscript, "Cao-scheme guess needs the ciphertext");
    }
    if (!note.observed || note.observed->is_bell() || note.observed->width() != 2) {
        throw Error(ErrorCode::InvalidConfig, "Eve's note has no Z result for qubits 3,4");
    }
    // 00 on Bob's side leaves Alice with psi+ (key 0); 10 or 01 leaves phi+- (key 1).
    int key;
    switch (note.observed->value()) {
        case 0b00:
            key = 0;
            break;
        case 0b10:
        case 0b01:
            key = 1;
            break;
        default:
            throw Error(ErrorCode::InvalidOutcome, "Eve cannot observe 11 on a W state");
    }
    return guess_from_bit(*transcript.ciphertext ^ key);
}

}  // namespace

std::string_view scheme_name(Scheme scheme) {
    return scheme == Scheme::Present ? "present" : "cao";
}

Scheme parse_scheme(std::string_view name) {
    if (name == "present") {
        return Scheme::Present;
    }
    if (name == "cao") {
        return Scheme::Cao;
    }
    throw Error(ErrorCode::InvalidConfig, "unknown scheme '" + std::string(name) + "'");
}

std::string_view initial_state_name(InitialState initial) {
    return initial == InitialState::Phi1 ? "Phi1" : "Phi2";
}

std::string_view attack_kind_name(AttackKind kind) {
    switch (kind) {
        case AttackKind::None:
            return "none";
        case AttackKind::InterceptResendZ:
            return "ir-z";
        case AttackKind::InterceptResendX:
            return "ir-x";
        case AttackKind::CnotAncilla:
            return "cnot";
        case AttackKind::CaoInterceptResendZ34:
            return "cao-ir-z";
    }
    return "?";
}

AttackKind parse_attack_kind(std::string_view name) {
    for (AttackKind kind : {AttackKind::None, AttackKind::InterceptResendZ, AttackKind::InterceptResendX,
                            AttackKind::CnotAncilla, AttackKind::CaoInterceptResendZ34}) {
        if (name == attack_kind_name(kind)) {
            return kind;
        }
    }
    throw Error(ErrorCode::InvalidConfig, "unknown attack '" + std::string(name) + "'");
}

int AttackModel::arity() const {
    switch (kind) {
        case AttackKind::None:
            return 0;
        case AttackKind::CaoInterceptResendZ34:
            return 2;
        default:
            return 1;
    }
}

bool AttackModel::applies_to(Scheme scheme) const {
    if (kind == AttackKind::None) {
        return true;
    }
    return (kind == AttackKind::CaoInterceptResendZ34) == (scheme == Scheme::Cao);
}

AttackResult apply_attack(const AttackModel &model, const StateVector &state, std::span<const int> transit_qubits,
                          RandomStream &rng) {
    check_arity(model, transit_qubits);
    std::vector<int> transit(transit_qubits.begin(), transit_qubits.end());
    std::sort(transit.begin(), transit.end());

    EveNote note;
    note.kind = model.kind;
    switch (model.kind) {
        case AttackKind::None:
            return {state, note};
        case AttackKind::InterceptResendZ:
        case AttackKind::InterceptResendX: {
            note.basis = model.kind == AttackKind::InterceptResendZ ? BasisKind::Z : BasisKind::X;
            note.measured_qubits = transit;
            Branch b = measure(state, {note.basis, transit}, rng);
            note.observed = b.outcome;
            return {std::move(b.state), note};
        }
        case AttackKind::CaoInterceptResendZ34: {
            note.basis = BasisKind::Z;
            note.measured_qubits = transit;
            const Branch b = measure(state, MeasurementBasis::z(transit), rng);
            note.observed = b.outcome;
            const StateVector kept = slice(b.state, transit, b.outcome);
            const StateVector resend =
                b.outcome.value() == 0 ? StateVector::basis_state(2, 0) : bell_state(BellLabel::PsiPlus);
            return {embed(kept, transit, resend), note};
        }
        case AttackKind::CnotAncilla: {
            const int ancilla = state.num_qubits() + 1;
            note.ancilla_qubit = ancilla;
            const StateVector extended = tensor(state, StateVector::basis_state(1, 0));
            return {apply_cnot(extended, transit.front(), ancilla), note};
        }
    }
    throw Error(ErrorCode::InvalidConfig, "unhandled attack kind");
}

StateVector read_ancilla(EveNote &note, const StateVector &state, RandomStream &rng) {
    if (!note.ancilla_qubit) {
        throw Error(ErrorCode::InvalidConfig, "no ancilla to read");
    }
    Branch b = measure(state, MeasurementBasis::z({*note.ancilla_qubit}), rng);
    note.ancilla_outcome = b.outcome;
    return std::move(b.state);
}

std::string_view eve_guess_name(EveGuess guess) {
    switch (guess) {
        case EveGuess::Zero:
            return "0";
        case EveGuess::One:
            return "1";
        case EveGuess::Unknown:
            return "unknown";
    }
    return "?";
}

EveGuess guess_from_bit(int bit) {
    return bit ? EveGuess::One : EveGuess::Zero;
}

EveGuess eve_guess(const AttackModel &model, const EveNote &note, const PublicTranscript &transcript) {
    if (model.kind == AttackKind::None) {
        return EveGuess::Unknown;
    }
    if (note.kind != model.kind) {
        throw Error(ErrorCode::InvalidConfig, "Eve's note was produced by a different attack");
    }
    if (!model.applies_to(transcript.scheme)) {
        throw Error(ErrorCode::InvalidConfig,
                    std::string(attack_kind_name(model.kind)) + " does not apply to the " +
                        std::string(scheme_name(transcript.scheme)) + " scheme");
    }
    if (transcript.scheme == Scheme::Cao) {
        return cao_guess(note, transcript);
    }
    return present_guess(model, note, transcript);
}

}  // namespace wqsc
