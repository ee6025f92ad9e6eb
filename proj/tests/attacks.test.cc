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

#include <array>
#include <cmath>
#include <map>

#include "gtest/gtest.h"
#include "oracle.h"
#include "wqsc/protocol.h"
#include "wqsc/states.h"

using namespace wqsc;

namespace {

constexpr std::array<int, 1> kTransit3 = {3};
constexpr std::array<int, 2> kTransit34 = {3, 4};

}  // namespace

TEST(attacks, kind_names_round_trip) {
    for (const char *name : {"none", "ir-z", "ir-x", "cnot", "cao-ir-z"}) {
        EXPECT_EQ(attack_kind_name(parse_attack_kind(name)), name);
    }
    EXPECT_THROW(parse_attack_kind("ir-bell"), Error);
}

TEST(attacks, applicability) {
    EXPECT_TRUE(AttackModel{AttackKind::None}.applies_to(Scheme::Cao));
    EXPECT_TRUE(AttackModel{AttackKind::CnotAncilla}.applies_to(Scheme::Present));
    EXPECT_FALSE(AttackModel{AttackKind::CnotAncilla}.applies_to(Scheme::Cao));
    EXPECT_FALSE(AttackModel{AttackKind::CaoInterceptResendZ34}.applies_to(Scheme::Present));
}

TEST(attacks, none_is_transparent) {
    RandomStream rng(3);
    const StateVector phi1 = build(StateLabel::Phi1);
    const AttackResult r = apply_attack({AttackKind::None}, phi1, kTransit3, rng);
    EXPECT_EQ(r.state, phi1);
    EXPECT_EQ(r.note.kind, AttackKind::None);
    EXPECT_FALSE(r.note.observed.has_value());
    EXPECT_FALSE(r.note.ancilla_qubit.has_value());
}

TEST(attacks, arity_mismatch) {
    RandomStream rng(3);
    try {
        apply_attack({AttackKind::InterceptResendZ}, build(StateLabel::W4), kTransit34, rng);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ArityMismatch);
    }
    try {
        apply_attack({AttackKind::CaoInterceptResendZ34}, build(StateLabel::Phi1), kTransit3, rng);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ArityMismatch);
    }
}

TEST(attacks, intercept_resend_z_on_phi2) {
    const StateVector phi2 = build(StateLabel::Phi2);
    const double a = 1.0 / std::sqrt(3.0);
    const StateVector branch0 = StateVector::make(3, {a, 0, a, 0, a, 0, 0, 0});
    const StateVector branch1 = StateVector::make(3, {0, -a, 0, a, 0, a, 0, 0});
    int zeros = 0;
    const int trials = 4000;
    for (int seed = 0; seed < trials; ++seed) {
        RandomStream rng(static_cast<std::uint64_t>(seed));
        const AttackResult r = apply_attack({AttackKind::InterceptResendZ}, phi2, kTransit3, rng);
        ASSERT_TRUE(r.note.observed.has_value());
        EXPECT_EQ(r.note.basis, BasisKind::Z);
        if (r.note.observed->value() == 0) {
            ++zeros;
            EXPECT_TRUE(states_equal(r.state, branch0));
        } else {
            EXPECT_TRUE(states_equal(r.state, branch1));
        }
    }
    // p = 1/2, sigma = sqrt(0.25/4000); 5 sigma band.
    EXPECT_NEAR(zeros / static_cast<double>(trials), 0.5, 5 * std::sqrt(0.25 / trials));
}

TEST(attacks, cao_intercept_resend) {
    const StateVector w4 = build(StateLabel::W4);
    const StateVector after_00 = StateVector::make(4, {0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0});
    const StateVector after_psi = tensor(product_ket("00"), bell_state(BellLabel::PsiPlus));
    std::map<std::string, int> counts;
    const int trials = 8000;
    for (int seed = 0; seed < trials; ++seed) {
        RandomStream rng(static_cast<std::uint64_t>(seed));
        const AttackResult r = apply_attack({AttackKind::CaoInterceptResendZ34}, w4, kTransit34, rng);
        const std::string seen = r.note.observed->to_string();
        ++counts[seen];
        EXPECT_TRUE(states_equal(r.state, seen == "00" ? after_00 : after_psi)) << seen;
    }
    EXPECT_EQ(counts.count("11"), 0u);
    const double tol = 5 * std::sqrt(0.25 / trials);
    EXPECT_NEAR(counts["00"] / static_cast<double>(trials), 0.5, tol);
    EXPECT_NEAR(counts["10"] / static_cast<double>(trials), 0.25, tol);
    EXPECT_NEAR(counts["01"] / static_cast<double>(trials), 0.25, tol);
}

TEST(attacks, cnot_ancilla_on_phi2) {
    RandomStream rng(5);
    AttackResult r = apply_attack({AttackKind::CnotAncilla}, build(StateLabel::Phi2), kTransit3, rng);
    ASSERT_EQ(r.state.num_qubits(), 4);
    ASSERT_EQ(r.note.ancilla_qubit, 4);
    using oracle::add;
    using oracle::ket;
    const oracle::Vec eq = oracle::scale(
        add(add(add(add(add(ket("1000"), ket("1011")), ket("0100")), ket("0111")), ket("0000")), ket("0011"), -1.0),
        1.0 / std::sqrt(6.0));
    for (std::size_t i = 0; i < 16; ++i) {
        EXPECT_NEAR(std::abs(r.state[i] - eq[i]), 0.0, 1e-12);
    }
    EXPECT_FALSE(r.note.ancilla_outcome.has_value());
    const StateVector after = read_ancilla(r.note, r.state, rng);
    ASSERT_TRUE(r.note.ancilla_outcome.has_value());
    // Ancilla Z equals qubit 3's Z value.
    const Distribution d = distribution(after, MeasurementBasis::z({3}));
    EXPECT_NEAR(d.at(*r.note.ancilla_outcome), 1.0, 1e-12);
}

TEST(attacks, read_ancilla_requires_cnot) {
    RandomStream rng(1);
    EveNote note;
    EXPECT_THROW(read_ancilla(note, build(StateLabel::Phi1), rng), Error);
}

// Collapse in place must equal discarding qubit 3 and preparing a fresh one in
// the observed eigenstate.
TEST(attacks, resend_equivalence) {
    for (StateLabel label : {StateLabel::Phi1, StateLabel::Phi2}) {
        for (BasisKind kind : {BasisKind::Z, BasisKind::X}) {
            const StateVector s = build(label);
            const MeasurementBasis basis{kind, {3}};
            for (const auto &[o, p] : distribution(s, basis)) {
                if (p <= kTolerance) {
                    continue;
                }
                const StateVector collapsed = project(s, basis, o).state;
                // Read the other qubits in the eigenbasis of the measured one.
                const StateVector rotated = kind == BasisKind::X ? apply_1q(collapsed, 3, Gate1Q::hadamard()) : collapsed;
                const StateVector rest = slice(rotated, std::array<int, 1>{3}, o);
                const char *fresh = kind == BasisKind::Z ? (o.value() ? "1" : "0") : (o.value() ? "-" : "+");
                const StateVector replaced = embed(rest, std::array<int, 1>{3}, product_ket(fresh));
                EXPECT_TRUE(states_equal(collapsed, replaced));

                for (bool hadamard : {false, true}) {
                    const StateVector a = hadamard ? apply_1q(collapsed, 3, Gate1Q::hadamard()) : collapsed;
                    const StateVector b = hadamard ? apply_1q(replaced, 3, Gate1Q::hadamard()) : replaced;
                    const Distribution da = distribution(a, MeasurementBasis::z({1, 2, 3}));
                    const Distribution db = distribution(b, MeasurementBasis::z({1, 2, 3}));
                    for (const auto &[k, v] : da) {
                        EXPECT_NEAR(v, db.at(k), 1e-12);
                    }
                }
            }
        }
    }
}

TEST(attacks, eve_guess_cao) {
    EveNote note{.kind = AttackKind::CaoInterceptResendZ34, .observed = Outcome::parse("00")};
    const PublicTranscript transcript{.scheme = Scheme::Cao, .ciphertext = 1};
    EXPECT_EQ(eve_guess({AttackKind::CaoInterceptResendZ34}, note, transcript), EveGuess::One);
    note.observed = Outcome::parse("10");
    EXPECT_EQ(eve_guess({AttackKind::CaoInterceptResendZ34}, note, transcript), EveGuess::Zero);
    try {
        eve_guess({AttackKind::CaoInterceptResendZ34}, note, PublicTranscript{.scheme = Scheme::Cao});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::MissingTranscript);
    }
}

TEST(attacks, eve_guess_present_none_is_unknown) {
    EXPECT_EQ(eve_guess({AttackKind::None}, EveNote{}, PublicTranscript{}), EveGuess::Unknown);
}

TEST(attacks, eve_guess_present_ir_z_phi1) {
    const EveNote note{.kind = AttackKind::InterceptResendZ, .measured_qubits = {3}, .observed = Outcome::parse("0")};
    PublicTranscript transcript{
        .scheme = Scheme::Present, .initial = InitialState::Phi1, .alice_published = Outcome::parse("10")};
    EXPECT_EQ(eve_guess({AttackKind::InterceptResendZ}, note, transcript), EveGuess::Zero);
    transcript.alice_published = Outcome::parse("00");
    EXPECT_EQ(eve_guess({AttackKind::InterceptResendZ}, note, transcript), EveGuess::One);
    transcript.initial = InitialState::Phi2;
    EXPECT_EQ(eve_guess({AttackKind::InterceptResendZ}, note, transcript), EveGuess::Unknown);
    transcript.alice_published.reset();
    EXPECT_THROW(eve_guess({AttackKind::InterceptResendZ}, note, transcript), Error);
}

// Enumerate every Phi1 branch under ir-z: whenever Eve guesses, she is right.
TEST(attacks, eve_guess_ir_z_phi1_enumerated) {
    const AttackModel model{AttackKind::InterceptResendZ};
    for (int bit : {0, 1}) {
        StateVector s = build(StateLabel::Phi1);
        if (bit) {
            s = apply_1q(s, 3, Gate1Q::flip());
        }
        for (const auto &[eve, pe] : distribution(s, MeasurementBasis::z({3}))) {
            if (pe <= kTolerance) {
                continue;
            }
            const StateVector after = project(s, MeasurementBasis::z({3}), eve).state;
            for (const auto &[alice, pa] : distribution(after, MeasurementBasis::z({1, 2}))) {
                if (pa <= kTolerance) {
                    continue;
                }
                const EveNote note{.kind = model.kind, .measured_qubits = {3}, .observed = eve};
                const PublicTranscript transcript{
                    .scheme = Scheme::Present, .initial = InitialState::Phi1, .alice_published = alice};
                EXPECT_EQ(eve_guess(model, note, transcript), guess_from_bit(bit));
            }
        }
    }
}

TEST(attacks, eve_guess_rejects_foreign_note) {
    const EveNote note{.kind = AttackKind::InterceptResendX, .observed = Outcome::parse("0")};
    const PublicTranscript transcript{
        .scheme = Scheme::Present, .initial = InitialState::Phi1, .alice_published = Outcome::parse("10")};
    EXPECT_THROW(eve_guess({AttackKind::InterceptResendZ}, note, transcript), Error);
}
