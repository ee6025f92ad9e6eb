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

#include <cmath>

#include "gtest/gtest.h"
#include "oracle.h"
#include "wqsc/states.h"

using namespace wqsc;

namespace {

Outcome o(const char *text) {
    return Outcome::parse(text);
}

PresentRoundConfig present_message(InitialPolicy initial, int bit, AttackKind attack = AttackKind::None) {
    return {.initial = initial, .mode = RoundMode::Message, .message_bit = bit, .attack = {attack}};
}

PresentRoundConfig present_check(InitialPolicy initial, AttackKind attack = AttackKind::None) {
    return {.initial = initial, .mode = RoundMode::Check, .attack = {attack}};
}

CaoRoundConfig cao_key(int bit, AttackKind attack = AttackKind::None) {
    return {.mode = RoundMode::Message, .attack = {attack}, .message_bit = bit};
}

CaoRoundConfig cao_check(CheckBasisPolicy basis, AttackKind attack = AttackKind::None) {
    return {.mode = RoundMode::Check, .check_basis = basis, .attack = {attack}};
}

}  // namespace

TEST(protocol, check_consistent_rules) {
    EXPECT_TRUE(check_consistent(o("10"), o("0")));
    EXPECT_TRUE(check_consistent(o("01"), o("0")));
    EXPECT_TRUE(check_consistent(o("00"), o("1")));
    EXPECT_FALSE(check_consistent(o("00"), o("0")));
    EXPECT_FALSE(check_consistent(o("10"), o("1")));
}

TEST(protocol, check_consistent_rejects_bad_outcomes) {
    try {
        check_consistent(o("11"), o("0"));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidOutcome);
    }
    EXPECT_THROW(check_consistent(o("1"), o("0")), Error);
    EXPECT_THROW(check_consistent(o("10"), o("01")), Error);
    EXPECT_THROW(check_consistent(o("psi+"), o("0")), Error);
}

TEST(protocol, recovery_table) {
    EXPECT_EQ(recover_bit(o("10"), o("0")), 0);
    EXPECT_EQ(recover_bit(o("01"), o("0")), 0);
    EXPECT_EQ(recover_bit(o("10"), o("1")), 1);
    EXPECT_EQ(recover_bit(o("01"), o("1")), 1);
    EXPECT_EQ(recover_bit(o("00"), o("0")), 1);
    EXPECT_EQ(recover_bit(o("00"), o("1")), 0);
    EXPECT_THROW(recover_bit(o("11"), o("1")), Error);
}

TEST(protocol, present_config_validation) {
    RandomStream rng(1);
    PresentRoundConfig bad = present_check(InitialPolicy::Phi1);
    bad.message_bit = 1;
    try {
        present_round(bad, rng);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidConfig);
    }
    PresentRoundConfig missing = present_message(InitialPolicy::Phi1, 0);
    missing.message_bit.reset();
    EXPECT_THROW(present_round(missing, rng), Error);
    EXPECT_THROW(present_round(present_message(InitialPolicy::Phi1, 2), rng), Error);
    EXPECT_THROW(present_round(present_check(InitialPolicy::Phi1, AttackKind::CaoInterceptResendZ34), rng), Error);
}

TEST(protocol, present_no_attack_recovers_every_bit) {
    for (InitialPolicy initial : {InitialPolicy::Phi1, InitialPolicy::Phi2, InitialPolicy::Random}) {
        for (int bit : {0, 1}) {
            for (std::uint64_t seed = 0; seed < 300; ++seed) {
                RandomStream rng(seed);
                const RoundRecord r = present_round(present_message(initial, bit), rng);
                ASSERT_EQ(r.recovered_bit, bit);
                EXPECT_EQ(r.eve_guess, EveGuess::Unknown);
                EXPECT_EQ(r.alice_encoding, bit ? Encoding::U : Encoding::I);
                EXPECT_FALSE(r.check_pass.has_value());
            }
        }
    }
}

TEST(protocol, present_phi1_bit1_alice_00_gives_bob_0) {
    int seen = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        RandomStream rng(seed);
        const RoundRecord r = present_round(present_message(InitialPolicy::Phi1, 1), rng);
        EXPECT_FALSE(r.bob_decoded);
        if (r.alice_outcome == o("00")) {
            ++seen;
            EXPECT_EQ(r.bob_outcome, o("0"));
            EXPECT_EQ(r.recovered_bit, 1);
        }
    }
    EXPECT_GT(seen, 0);
}

TEST(protocol, present_no_attack_checks_pass) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        RandomStream rng(seed);
        const RoundRecord r = present_round(present_check(InitialPolicy::Random), rng);
        ASSERT_TRUE(r.check_pass.has_value());
        EXPECT_TRUE(*r.check_pass);
        EXPECT_EQ(r.bob_decoded, r.initial_label == "Phi2");
        EXPECT_FALSE(r.recovered_bit.has_value());
    }
}

TEST(protocol, present_phi2_ir_z_fails_half_the_checks) {
    const int trials = 4000;
    int failures = 0;
    for (int seed = 0; seed < trials; ++seed) {
        RandomStream rng(static_cast<std::uint64_t>(seed));
        const RoundRecord r = present_round(present_check(InitialPolicy::Phi2, AttackKind::InterceptResendZ), rng);
        failures += !*r.check_pass;
        EXPECT_NE(r.alice_outcome, o("11"));
    }
    EXPECT_NEAR(failures / static_cast<double>(trials), 0.5, 5 * std::sqrt(0.25 / trials));
}

TEST(protocol, present_cnot_reads_ancilla) {
    RandomStream rng(9);
    const RoundRecord r = present_round(present_message(InitialPolicy::Phi1, 1, AttackKind::CnotAncilla), rng);
    ASSERT_TRUE(r.eve_note.ancilla_outcome.has_value());
    EXPECT_EQ(r.eve_guess, EveGuess::One);
}

TEST(protocol, hadamard_anticommutes_with_flip) {
    const Gate1Q h = Gate1Q::hadamard();
    const Gate1Q u = Gate1Q::flip();
    const Gate1Q hu = h * u;
    const Gate1Q uh = u * h;
    Gate1Q minus_uh = uh;
    for (auto &e : minus_uh.entries) {
        e = -e;
    }
    EXPECT_LE(hu.max_deviation(minus_uh), 1e-12);
    // Equivalently H U = X Z H: a Z-basis flip applied after Bob's Hadamard.
    EXPECT_LE(hu.max_deviation(Gate1Q::pauli_x() * Gate1Q::pauli_z() * h), 1e-12);
}

TEST(protocol, cao_key_maps) {
    EXPECT_EQ(cao_alice_key(BellLabel::PsiPlus), 0);
    EXPECT_EQ(cao_alice_key(BellLabel::PhiPlus), 1);
    EXPECT_EQ(cao_alice_key(BellLabel::PhiMinus), 1);
    EXPECT_EQ(cao_bob_key(BellLabel::PhiPlus), 0);
    EXPECT_EQ(cao_bob_key(BellLabel::PhiMinus), 0);
    EXPECT_EQ(cao_bob_key(BellLabel::PsiPlus), 1);
    EXPECT_THROW(cao_alice_key(BellLabel::PsiMinus), Error);
    EXPECT_THROW(cao_bob_key(BellLabel::PsiMinus), Error);
}

TEST(protocol, cao_no_attack_key_rounds) {
    int psi_rounds = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        RandomStream rng(seed);
        const RoundRecord r = cao_round(cao_key(1), rng);
        ASSERT_EQ(r.alice_key, r.bob_key);
        EXPECT_EQ(r.recovered_bit, 1);
        EXPECT_EQ(*r.ciphertext, *r.alice_key ^ 1);
        if (r.alice_outcome == Outcome::bell(BellLabel::PsiPlus)) {
            ++psi_rounds;
            EXPECT_EQ(r.alice_key, 0);
            EXPECT_TRUE(r.bob_outcome == Outcome::bell(BellLabel::PhiPlus) ||
                        r.bob_outcome == Outcome::bell(BellLabel::PhiMinus));
        }
    }
    EXPECT_GT(psi_rounds, 0);
}

// Brute-force Bell-pair amplitudes of W4: only (psi+, phi+-) and (phi+-, psi+)
// survive, and the key maps agree on each of them.
TEST(protocol, cao_key_agreement_enumerated) {
    using oracle::ket;
    const oracle::Vec w4 =
        oracle::scale(oracle::add(oracle::add(oracle::add(ket("1000"), ket("0100")), ket("0010")), ket("0001")), 0.5);
    double total = 0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const double p = std::norm(oracle::inner(oracle::kron(oracle::bell(a), oracle::bell(b)), w4));
            total += p;
            const bool allowed = (a == 0 && b >= 2) || (a >= 2 && b == 0);
            if (!allowed) {
                EXPECT_NEAR(p, 0.0, 1e-12) << a << "," << b;
                continue;
            }
            EXPECT_NEAR(p, 0.25, 1e-12);
            EXPECT_EQ(cao_alice_key(kAllBellLabels[a]), cao_bob_key(kAllBellLabels[b]));
        }
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(protocol, cao_check_error_examples) {
    EXPECT_FALSE(cao_check_error(CheckBasis::Z, o("10"), o("00")));
    EXPECT_TRUE(cao_check_error(CheckBasis::Z, o("10"), o("10")));
    EXPECT_TRUE(cao_check_error(CheckBasis::X, o("++"), o("--")));
    EXPECT_FALSE(cao_check_error(CheckBasis::X, o("++"), o("++")));
    const Outcome psi = Outcome::bell(BellLabel::PsiPlus);
    EXPECT_TRUE(cao_check_error(CheckBasis::Bell, psi, psi));
    EXPECT_FALSE(cao_check_error(CheckBasis::Bell, psi, Outcome::bell(BellLabel::PhiMinus)));
}

TEST(protocol, cao_bell_psi_psi_has_zero_amplitude) {
    using oracle::ket;
    const oracle::Vec w4 =
        oracle::scale(oracle::add(oracle::add(oracle::add(ket("1000"), ket("0100")), ket("0010")), ket("0001")), 0.5);
    EXPECT_NEAR(std::abs(oracle::inner(oracle::kron(oracle::bell(0), oracle::bell(0)), w4)), 0.0, 1e-12);
}

TEST(protocol, cao_check_error_basis_mismatch) {
    try {
        cao_check_error(CheckBasis::Bell, o("10"), o("00"));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::BasisMismatch);
    }
    EXPECT_THROW(cao_check_error(CheckBasis::Z, Outcome::bell(BellLabel::PsiPlus), o("00")), Error);
    EXPECT_THROW(cao_check_error(CheckBasis::X, o("1"), o("00")), Error);
}

TEST(protocol, cao_tables_rederive_identically) {
    for (CheckBasis basis : {CheckBasis::Z, CheckBasis::X, CheckBasis::Bell}) {
        const CaoCheckTable fresh = derive_cao_check_table(basis);
        EXPECT_TRUE(fresh == cao_check_table(basis));
        EXPECT_EQ(fresh.forbidden.size(), 16u);
        double total = 0;
        for (const auto &[key, p] : fresh.probability) {
            total += p;
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(protocol, cao_config_validation) {
    RandomStream rng(1);
    CaoRoundConfig missing_basis = cao_check(CheckBasisPolicy::Z);
    missing_basis.check_basis.reset();
    EXPECT_THROW(cao_round(missing_basis, rng), Error);
    CaoRoundConfig missing_bit = cao_key(0);
    missing_bit.message_bit.reset();
    EXPECT_THROW(cao_round(missing_bit, rng), Error);
    try {
        cao_round(cao_check(CheckBasisPolicy::Z, AttackKind::InterceptResendZ), rng);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidConfig);
    }
}

TEST(protocol, cao_no_attack_checks_pass_in_every_basis) {
    for (CheckBasisPolicy basis : {CheckBasisPolicy::Z, CheckBasisPolicy::X, CheckBasisPolicy::Bell,
                                   CheckBasisPolicy::Random}) {
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            RandomStream rng(seed);
            const RoundRecord r = cao_round(cao_check(basis), rng);
            EXPECT_TRUE(*r.check_pass);
            ASSERT_TRUE(r.check_basis.has_value());
        }
    }
}

TEST(protocol, cao_ir_x_check_error_rate) {
    const int trials = 6000;
    int failures = 0;
    for (int seed = 0; seed < trials; ++seed) {
        RandomStream rng(static_cast<std::uint64_t>(seed));
        const RoundRecord r = cao_round(cao_check(CheckBasisPolicy::X, AttackKind::CaoInterceptResendZ34), rng);
        failures += !*r.check_pass;
    }
    EXPECT_NEAR(failures / static_cast<double>(trials), 0.25, 5 * std::sqrt(0.1875 / trials));
}

TEST(protocol, cao_attack_leaks_every_key_bit) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        RandomStream rng(seed);
        const int bit = static_cast<int>(seed & 1);
        const RoundRecord r = cao_round(cao_key(bit, AttackKind::CaoInterceptResendZ34), rng);
        EXPECT_EQ(r.eve_guess, guess_from_bit(bit));
        EXPECT_EQ(r.recovered_bit, bit);
    }
}
