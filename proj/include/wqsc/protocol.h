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

#ifndef WQSC_PROTOCOL_H
#define WQSC_PROTOCOL_H

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "wqsc/attacks.h"
#include "wqsc/qstate.h"
#include "wqsc/random.h"

namespace wqsc {

/// Cao's key rounds are Message rounds: the derived key one-time-pads a bit.
enum class RoundMode { Check, Message };
enum class InitialPolicy { Random, Phi1, Phi2 };
enum class CheckBasis { Z, X, Bell };
enum class CheckBasisPolicy { Random, Z, X, Bell };
enum class Encoding { I, U };

std::string_view round_mode_name(RoundMode mode);
std::string_view check_basis_name(CheckBasis basis);
std::string_view encoding_name(Encoding encoding);
InitialPolicy parse_initial_policy(std::string_view name);
CheckBasisPolicy parse_check_basis_policy(std::string_view name);

struct PresentRoundConfig {
    InitialPolicy initial = InitialPolicy::Random;
    RoundMode mode = RoundMode::Check;
    /// Required in message mode, forbidden in check mode.
    std::optional<int> message_bit;
    AttackModel attack;

    void validate() const;
};

struct CaoRoundConfig {
    RoundMode mode = RoundMode::Check;
    /// Required in check mode, forbidden in key mode.
    std::optional<CheckBasisPolicy> check_basis;
    AttackModel attack;
    /// Key mode: the bit sent under the one-time pad.
    std::optional<int> message_bit;

    void validate() const;
};

/// Full trace of one round.
struct RoundRecord {
    Scheme scheme;
    RoundMode mode;
    std::string initial_label;
    std::optional<Encoding> alice_encoding;
    EveNote eve_note;
    /// Bob applied the Hadamard to qubit 3 before measuring.
    bool bob_decoded = false;
    std::optional<CheckBasis> check_basis;
    Outcome alice_outcome;
    Outcome bob_outcome;
    std::optional<bool> check_pass;
    std::optional<int> message_bit;
    std::optional<int> alice_key;
    std::optional<int> bob_key;
    std::optional<int> ciphertext;
    std::optional<int> recovered_bit;
    EveGuess eve_guess = EveGuess::Unknown;
};

/// One round of the three-qubit scheme:
///   prepare Phi1/Phi2, encode I/U on qubit 3 (message rounds), send qubit 3
///   through the attack, Bob applies H iff Phi2, both measure Z, then check
///   or recover.
RoundRecord present_round(const PresentRoundConfig &config, RandomStream &rng);

/// Alice's result |10> or |01> requires Bob |0>; |00> requires Bob |1>.
/// Throws InvalidOutcome for anything else, including Alice |11>.
bool check_consistent(const Outcome &alice, const Outcome &bob);

/// Message recovery table:
///   |10>,|01> with |0> -> 0     |10>,|01> with |1> -> 1
///   |00> with |0> -> 1          |00> with |1> -> 0
int recover_bit(const Outcome &alice, const Outcome &bob);

/// One round of Cao's four-qubit scheme. Alice keeps qubits 1,2; qubits 3,4
/// travel to Bob.
RoundRecord cao_round(const CaoRoundConfig &config, RandomStream &rng);

/// Alice's key from her Bell result: psi+ -> 0, phi+- -> 1.
int cao_alice_key(BellLabel label);
/// Bob's key from his Bell result: phi+- -> 0, psi+ -> 1.
int cao_bob_key(BellLabel label);

/// Joint outcome table of the ideal four-qubit W state for one check basis,
/// keyed by (Alice's pair outcome, Bob's pair outcome).
struct CaoCheckTable {
    CheckBasis basis;
    std::map<std::pair<Outcome, Outcome>, double> probability;
    /// Joint outcomes with zero probability; seeing one is a check error.
    std::map<std::pair<Outcome, Outcome>, bool> forbidden;

    bool operator==(const CaoCheckTable &other) const = default;
};

/// Recomputes the table from distribution() of W4.
CaoCheckTable derive_cao_check_table(CheckBasis basis);
/// Table derived once per process and cached.
const CaoCheckTable &cao_check_table(CheckBasis basis);

/// True when the joint outcome cannot occur on an untouched W4 state.
/// Throws BasisMismatch when the outcomes do not come from `basis`.
bool cao_check_error(CheckBasis basis, const Outcome &alice, const Outcome &bob);

}  // namespace wqsc

#endif
