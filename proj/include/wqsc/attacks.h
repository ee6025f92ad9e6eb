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

#ifndef WQSC_ATTACKS_H
#define WQSC_ATTACKS_H

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wqsc/qstate.h"

namespace wqsc {

enum class Scheme { Present, Cao };
enum class InitialState { Phi1, Phi2 };

std::string_view scheme_name(Scheme scheme);
Scheme parse_scheme(std::string_view name);
std::string_view initial_state_name(InitialState initial);

enum class AttackKind { None, InterceptResendZ, InterceptResendX, CnotAncilla, CaoInterceptResendZ34 };

/// CLI identifiers: none, ir-z, ir-x, cnot, cao-ir-z.
std::string_view attack_kind_name(AttackKind kind);
/// Throws InvalidConfig for unknown names.
AttackKind parse_attack_kind(std::string_view name);

struct AttackModel {
    AttackKind kind = AttackKind::None;

    /// Number of transit qubits the channel acts on; 0 means any.
    int arity() const;
    bool applies_to(Scheme scheme) const;
};

/// What Eve learned privately in one round.
struct EveNote {
    AttackKind kind = AttackKind::None;
    /// Intercept-resend: the measured transit qubits, basis and result.
    std::vector<int> measured_qubits;
    BasisKind basis = BasisKind::Z;
    std::optional<Outcome> observed;
    /// CNOT attack: position of the ancilla in the global state and its Z
    /// result once read.
    std::optional<int> ancilla_qubit;
    std::optional<Outcome> ancilla_outcome;
};

struct AttackResult {
    StateVector state;
    EveNote note;
};

/// Passes the transit qubits through Eve's channel.
///
///   none      state unchanged, empty note
///   ir-z/ir-x transit qubit measured in Z/X and resent in the observed
///             eigenstate (equivalent to collapse in place)
///   cao-ir-z  qubits measured in Z; |00> is resent for outcome 00 and psi+
///             for 10 or 01
///   cnot      |0> ancilla appended as the last qubit, CNOT(transit -> ancilla);
///             the ancilla stays in the state until read_ancilla
///
/// Throws ArityMismatch when `transit_qubits` does not fit the model.
AttackResult apply_attack(const AttackModel &model, const StateVector &state, std::span<const int> transit_qubits,
                          RandomStream &rng);

/// Measures the CNOT ancilla in Z, stores the result in `note` and returns the
/// collapsed state.
StateVector read_ancilla(EveNote &note, const StateVector &state, RandomStream &rng);

/// Everything announced on the classical channel during one round.
struct PublicTranscript {
    Scheme scheme = Scheme::Present;
    std::optional<InitialState> initial;
    /// Alice's published Z result on her qubits 1,2 (message rounds).
    std::optional<Outcome> alice_published;
    /// Cao scheme: alice_key xor message bit.
    std::optional<int> ciphertext;
};

enum class EveGuess { Zero, One, Unknown };

std::string_view eve_guess_name(EveGuess guess);
EveGuess guess_from_bit(int bit);

/// Eve's best guess of the message bit from her note and the public
/// transcript. For the present scheme she guesses only when her observation
/// was taken in the basis the announced initial state encodes in (Z for Phi1,
/// X for Phi2); Table-style recovery then fixes the bit. For Cao's scheme her
/// Z result on qubits 3,4 reveals Alice's key.
///
/// Throws MissingTranscript when an announcement she needs is absent.
EveGuess eve_guess(const AttackModel &model, const EveNote &note, const PublicTranscript &transcript);

}  // namespace wqsc

#endif
