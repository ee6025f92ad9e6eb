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

#include <array>
#include <string>
#include <vector>

#include "wqsc/harness.h"
#include "wqsc/states.h"

namespace wqsc {

namespace {

/// One way Eve's channel can resolve: its probability, the resulting state
/// and what she recorded.
struct EveBranch {
    double probability;
    StateVector state;
    std::optional<Outcome> observed;
    bool has_ancilla = false;
};

/// Accumulated probability mass for a message tree.
struct MessageTally {
    double mass = 0;
    double recovered = 0;
    double known = 0;
    double correct = 0;

    void add(double p, int sent, int recovered_bit, EveGuess guess) {
        mass += p;
        if (recovered_bit == sent) {
            recovered += p;
        }
        if (guess != EveGuess::Unknown) {
            known += p;
            if (guess == guess_from_bit(sent)) {
                correct += p;
            }
        }
    }
};

std::vector<EveBranch> present_eve_branches(AttackKind attack, const StateVector &state) {
    switch (attack) {
        case AttackKind::None:
            return {{1.0, state, std::nullopt}};
        case AttackKind::InterceptResendZ:
        case AttackKind::InterceptResendX: {
            const MeasurementBasis basis = attack == AttackKind::InterceptResendZ ? MeasurementBasis::z({3})
                                                                                  : MeasurementBasis::x({3});
            std::vector<EveBranch> out;
            for (const auto &[o, p] : distribution(state, basis)) {
                if (p > kTolerance) {
                    out.push_back({p, project(state, basis, o).state, o});
                }
            }
            return out;
        }
        case AttackKind::CnotAncilla:
            return {{1.0, apply_cnot(tensor(state, StateVector::basis_state(1, 0)), 3, 4), std::nullopt, true}};
        default:
            throw Error(ErrorCode::UnsupportedPair, "attack does not apply to the present scheme");
    }
}

std::vector<EveBranch> cao_eve_branches(AttackKind attack, const StateVector &w4) {
    if (attack == AttackKind::None) {
        return {{1.0, w4, std::nullopt}};
    }
    const std::array<int, 2> transit = {3, 4};
    const MeasurementBasis basis = MeasurementBasis::z({3, 4});
    std::vector<EveBranch> out;
    for (const auto &[o, p] : distribution(w4, basis)) {
        if (p <= kTolerance) {
            continue;
        }
        const StateVector kept = slice(project(w4, basis, o).state, transit, o);
        const StateVector resend = o.value() == 0 ? StateVector::basis_state(2, 0) : bell_state(BellLabel::PsiPlus);
        out.push_back({p, tensor(kept, resend), o});
    }
    return out;
}

/// (Alice's pair result, Bob's pair result, probability) over all joint outcomes.
struct JointOutcome {
    Outcome alice;
    Outcome bob;
    double probability;
};

std::vector<JointOutcome> cao_joint(const StateVector &state, CheckBasis basis) {
    std::vector<JointOutcome> out;
    if (basis == CheckBasis::Bell) {
        for (const auto &[a, pa] : distribution(state, MeasurementBasis::bell(1, 2))) {
            if (pa <= kTolerance) {
                continue;
            }
            const StateVector rest = project(state, MeasurementBasis::bell(1, 2), a).state;
            for (const auto &[b, pb] : distribution(rest, MeasurementBasis::bell(3, 4))) {
                if (pa * pb > kTolerance) {
                    out.push_back({a, b, pa * pb});
                }
            }
        }
        return out;
    }
    const auto all = basis == CheckBasis::Z ? MeasurementBasis::z({1, 2, 3, 4}) : MeasurementBasis::x({1, 2, 3, 4});
    for (const auto &[o, p] : distribution(state, all)) {
        if (p > kTolerance) {
            out.push_back({o.sub(0, 2), o.sub(2, 2), p});
        }
    }
    return out;
}

void finish_leak(ExactResult &result, const MessageTally &tally) {
    result.recovery_accuracy = tally.recovered / tally.mass;
    result.message_branch_mass = tally.mass;
    result.unknown_fraction = (tally.mass - tally.known) / tally.mass;
    if (tally.known > kTolerance) {
        result.leak_rate = tally.correct / tally.known;
    }
}

ExactResult analyze_present(AttackKind attack) {
    const AttackModel model{attack};
    ExactResult result{.scheme = Scheme::Present, .attack = attack};
    MessageTally all_messages;

    for (InitialState initial : {InitialState::Phi1, InitialState::Phi2}) {
        const std::string key(initial_state_name(initial));
        const double weight = 0.5;
        const StateVector prepared = build(initial == InitialState::Phi1 ? StateLabel::Phi1 : StateLabel::Phi2);
        const bool decode = initial == InitialState::Phi2;

        // Check rounds: no encoding.
        double errors = 0;
        for (const EveBranch &eve : present_eve_branches(attack, prepared)) {
            const StateVector at_bob = decode ? apply_1q(eve.state, 3, Gate1Q::hadamard()) : eve.state;
            for (const auto &[o, p] : distribution(at_bob, MeasurementBasis::z({1, 2, 3}))) {
                if (p <= kTolerance) {
                    continue;
                }
                result.check_branch_mass += weight * eve.probability * p;
                if (!check_consistent(o.sub(0, 2), o.sub(2, 1))) {
                    errors += eve.probability * p;
                }
            }
        }
        result.conditional_error_rates[key] = errors;
        result.condition_weights[key] = weight;
        result.total_error_rate += weight * errors;

        // Message rounds: both bits equally likely.
        MessageTally conditional;
        for (int bit : {0, 1}) {
            const StateVector encoded = bit ? apply_1q(prepared, 3, Gate1Q::flip()) : prepared;
            for (const EveBranch &eve : present_eve_branches(attack, encoded)) {
                const StateVector at_bob = decode ? apply_1q(eve.state, 3, Gate1Q::hadamard()) : eve.state;
                std::vector<int> measured = {1, 2, 3};
                if (eve.has_ancilla) {
                    measured.push_back(4);
                }
                for (const auto &[o, p] : distribution(at_bob, MeasurementBasis::z(measured))) {
                    if (p <= kTolerance) {
                        continue;
                    }
                    const Outcome alice = o.sub(0, 2);
                    EveNote note{.kind = attack, .observed = eve.observed};
                    if (eve.has_ancilla) {
                        note.ancilla_qubit = 4;
                        note.ancilla_outcome = o.sub(3, 1);
                    }
                    const PublicTranscript transcript{
                        .scheme = Scheme::Present, .initial = initial, .alice_published = alice};
                    const double path = 0.5 * eve.probability * p;
                    const int recovered = recover_bit(alice, o.sub(2, 1));
                    const EveGuess guess = eve_guess(model, note, transcript);
                    conditional.add(path, bit, recovered, guess);
                    all_messages.add(weight * path, bit, recovered, guess);
                }
            }
        }
        result.conditional_leak_rates[key] =
            conditional.known > kTolerance ? std::optional<double>(conditional.correct / conditional.known)
                                           : std::nullopt;
    }
    finish_leak(result, all_messages);
    return result;
}

ExactResult analyze_cao(AttackKind attack) {
    const AttackModel model{attack};
    ExactResult result{.scheme = Scheme::Cao, .attack = attack};
    const std::vector<EveBranch> branches = cao_eve_branches(attack, build(StateLabel::W4));

    for (CheckBasis basis : {CheckBasis::Z, CheckBasis::X, CheckBasis::Bell}) {
        const std::string key(check_basis_name(basis));
        const double weight = 1.0 / 3.0;
        double errors = 0;
        for (const EveBranch &eve : branches) {
            for (const JointOutcome &j : cao_joint(eve.state, basis)) {
                result.check_branch_mass += weight * eve.probability * j.probability;
                if (cao_check_error(basis, j.alice, j.bob)) {
                    errors += eve.probability * j.probability;
                }
            }
        }
        result.conditional_error_rates[key] = errors;
        result.condition_weights[key] = weight;
        result.total_error_rate += weight * errors;
    }

    MessageTally messages;
    for (int bit : {0, 1}) {
        for (const EveBranch &eve : branches) {
            for (const JointOutcome &j : cao_joint(eve.state, CheckBasis::Bell)) {
                const int ciphertext = cao_alice_key(j.alice.bell_label()) ^ bit;
                const int recovered = cao_bob_key(j.bob.bell_label()) ^ ciphertext;
                EveNote note{.kind = attack, .measured_qubits = {3, 4}, .observed = eve.observed};
                const PublicTranscript transcript{.scheme = Scheme::Cao, .ciphertext = ciphertext};
                messages.add(0.5 * eve.probability * j.probability, bit, recovered,
                             eve_guess(model, note, transcript));
            }
        }
    }
    finish_leak(result, messages);
    return result;
}

}  // namespace

ExactResult exact_analyze(Scheme scheme, AttackKind attack) {
    if (!AttackModel{attack}.applies_to(scheme)) {
        throw Error(ErrorCode::UnsupportedPair, std::string(attack_kind_name(attack)) + " does not apply to the " +
                                                    std::string(scheme_name(scheme)) + " scheme");
    }
    return scheme == Scheme::Present ? analyze_present(attack) : analyze_cao(attack);
}

}  // namespace wqsc
