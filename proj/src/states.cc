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

#include "wqsc/states.h"

#include <cmath>
#include <numbers>
#include <utility>

namespace wqsc {

namespace {

/// Unnormalized ket used to write the decompositions term by term with
/// their prefactors.
struct Ket {
    int num_qubits;
    std::vector<Amplitude> amps;
};

Ket ket(std::string_view kets) {
    constexpr double r = 1.0 / std::numbers::sqrt2;
    std::vector<Amplitude> amps{1.0};
    for (char c : kets) {
        Amplitude a0, a1;
        switch (c) {
            case '0':
                a0 = 1, a1 = 0;
                break;
            case '1':
                a0 = 0, a1 = 1;
                break;
            case '+':
                a0 = r, a1 = r;
                break;
            case '-':
                a0 = r, a1 = -r;
                break;
            default:
                throw Error(ErrorCode::UnknownLabel, "ket symbol '" + std::string(1, c) + "'");
        }
        std::vector<Amplitude> next;
        next.reserve(amps.size() * 2);
        for (const auto &a : amps) {
            next.push_back(a * a0);
            next.push_back(a * a1);
        }
        amps = std::move(next);
    }
    return {static_cast<int>(kets.size()), std::move(amps)};
}

Ket from_state(const StateVector &s) {
    return {s.num_qubits(), {s.amplitudes().begin(), s.amplitudes().end()}};
}

Ket bell_ket(BellLabel label) {
    return from_state(bell_state(label));
}

Ket operator+(Ket a, const Ket &b) {
    if (a.num_qubits != b.num_qubits) {
        throw Error(ErrorCode::DimensionMismatch, "adding kets of different sizes");
    }
    for (std::size_t i = 0; i < a.amps.size(); ++i) {
        a.amps[i] += b.amps[i];
    }
    return a;
}

Ket operator*(double scale, Ket a) {
    for (auto &x : a.amps) {
        x *= scale;
    }
    return a;
}

Ket operator-(Ket a, const Ket &b) {
    return std::move(a) + (-1.0) * b;
}

Ket kron(const Ket &a, const Ket &b) {
    std::vector<Amplitude> out;
    out.reserve(a.amps.size() * b.amps.size());
    for (const auto &x : a.amps) {
        for (const auto &y : b.amps) {
            out.push_back(x * y);
        }
    }
    return {a.num_qubits + b.num_qubits, std::move(out)};
}

double norm_of(const Ket &k) {
    double total = 0;
    for (const auto &a : k.amps) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

StateVector to_state(const Ket &k) {
    return StateVector::make(k.num_qubits, k.amps);
}

IdentityReport compare(std::string id, std::string left_text, const Ket &left, std::string right_text,
                       const Ket &right) {
    IdentityReport report;
    report.id = std::move(id);
    report.left = std::move(left_text);
    report.right = std::move(right_text);
    report.right_norm = norm_of(right);
    report.max_deviation = phase_aligned_deviation(to_state(left).amplitudes(), to_state(right).amplitudes());
    report.pass = report.max_deviation <= kTolerance;
    return report;
}

}  // namespace

std::string_view state_label_name(StateLabel label) {
    switch (label) {
        case StateLabel::Phi1:
            return "Phi1";
        case StateLabel::Phi2:
            return "Phi2";
        case StateLabel::W4:
            return "W4";
        case StateLabel::BellPsiPlus:
            return "BellPsiPlus";
        case StateLabel::BellPsiMinus:
            return "BellPsiMinus";
        case StateLabel::BellPhiPlus:
            return "BellPhiPlus";
        case StateLabel::BellPhiMinus:
            return "BellPhiMinus";
    }
    return "?";
}

StateLabel parse_state_label(std::string_view name) {
    for (StateLabel label : {StateLabel::Phi1, StateLabel::Phi2, StateLabel::W4, StateLabel::BellPsiPlus,
                             StateLabel::BellPsiMinus, StateLabel::BellPhiPlus, StateLabel::BellPhiMinus}) {
        if (name == state_label_name(label)) {
            return label;
        }
    }
    throw Error(ErrorCode::UnknownLabel, "no state named '" + std::string(name) + "'");
}

StateVector build(StateLabel label) {
    switch (label) {
        case StateLabel::Phi1:
            return to_state(ket("100") + ket("010") + ket("001"));
        case StateLabel::Phi2:
            return to_state(ket("10+") + ket("01+") + ket("00-"));
        case StateLabel::W4:
            return to_state(ket("1000") + ket("0100") + ket("0010") + ket("0001"));
        case StateLabel::BellPsiPlus:
            return bell_state(BellLabel::PsiPlus);
        case StateLabel::BellPsiMinus:
            return bell_state(BellLabel::PsiMinus);
        case StateLabel::BellPhiPlus:
            return bell_state(BellLabel::PhiPlus);
        case StateLabel::BellPhiMinus:
            return bell_state(BellLabel::PhiMinus);
    }
    throw Error(ErrorCode::UnknownLabel, "state label " + std::to_string(static_cast<int>(label)));
}

NamedState named(StateLabel label) {
    return {label, build(label)};
}

StateVector product_ket(std::string_view kets) {
    const Ket k = ket(kets);
    return to_state(k);
}

std::vector<IdentityReport> verify_identities() {
    const double sqrt2 = std::numbers::sqrt2;
    const double sqrt3 = std::numbers::sqrt3;
    const double sqrt6 = sqrt2 * sqrt3;
    const Ket psi_plus = bell_ket(BellLabel::PsiPlus);
    const Ket phi_sum = bell_ket(BellLabel::PhiPlus) + bell_ket(BellLabel::PhiMinus);
    const Ket z_pair = ket("10") + ket("01");

    std::vector<IdentityReport> reports;

    // Four-qubit W state written in the Z, pair, Bell and X bases.
    const Ket w4 = 0.5 * (ket("1000") + ket("0100") + ket("0010") + ket("0001"));
    reports.push_back(compare("w4-pair-form", "1/2(|1000>+|0100>+|0010>+|0001>)", w4,
                              "1/2[(|10>+|01>)|00> + |00>(|10>+|01>)]",
                              0.5 * (kron(z_pair, ket("00")) + kron(ket("00"), z_pair))));
    reports.push_back(compare("w4-bell-form", "1/2(|1000>+|0100>+|0010>+|0001>)", w4,
                              "1/2[psi+(phi+ + phi-) + (phi+ + phi-)psi+]",
                              0.5 * (kron(psi_plus, phi_sum) + kron(phi_sum, psi_plus))));
    const Ket w4_x = 0.25 * (kron(ket("++"), 2.0 * ket("++") + ket("+-") + ket("-+")) -
                             kron(ket("--"), 2.0 * ket("--") + ket("+-") + ket("-+")) +
                             kron(ket("+-"), ket("++") - ket("--")) + kron(ket("-+"), ket("++") - ket("--")));
    reports.push_back(compare("w4-x-form", "1/2(|1000>+|0100>+|0010>+|0001>)", w4,
                              "1/4[|++>(2|++>+|+->+|-+>) - |-->(2|-->+|+->+|-+>) + |+->(|++>-|-->) + "
                              "|-+>(|++>-|-->)]",
                              w4_x));

    // Cao scheme after Eve's Z measurement of qubits 3,4 and resend.
    const Ket x_all = ket("++") + ket("+-") + ket("-+") + ket("--");
    const Ket x_pair = ket("++") - ket("--");
    const Ket resend_00 = (1.0 / sqrt2) * kron(z_pair, ket("00"));
    reports.push_back(compare("resend-00-bell-form", "1/sqrt2(|10>+|01>)|00>", resend_00,
                              "1/sqrt2 psi+(phi+ + phi-)", (1.0 / sqrt2) * kron(psi_plus, phi_sum)));
    reports.push_back(compare("resend-00-x-form", "1/sqrt2(|10>+|01>)|00>", resend_00,
                              "1/sqrt2(|++>-|-->)(|++>+|+->+|-+>+|-->)", (1.0 / sqrt2) * kron(x_pair, x_all)));
    const Ket resend_psi = (1.0 / sqrt2) * kron(ket("00"), z_pair);
    reports.push_back(compare("resend-psi-bell-form", "1/sqrt2|00>(|10>+|01>)", resend_psi,
                              "1/sqrt2(phi+ + phi-)psi+", (1.0 / sqrt2) * kron(phi_sum, psi_plus)));
    reports.push_back(compare("resend-psi-x-form", "1/sqrt2|00>(|10>+|01>)", resend_psi,
                              "1/sqrt2(|++>+|+->+|-+>+|-->)(|++>-|-->)", (1.0 / sqrt2) * kron(x_all, x_pair)));

    // Phi2 with Eve's ancilla after CNOT(3 -> e).
    const StateVector attacked = apply_cnot(tensor(build(StateLabel::Phi2), product_ket("0")), 3, 4);
    reports.push_back(compare("cnot-ancilla-phi2", "CNOT(3->e)(Phi2 (x) |0>e)", from_state(attacked),
                              "1/sqrt6[(|10>+|01>)(|00>+|11>) + |00>(|00>-|11>)]",
                              (1.0 / sqrt6) * (kron(z_pair, ket("00") + ket("11")) +
                                               kron(ket("00"), ket("00") - ket("11")))));

    // Splits of the three-qubit states along qubit 3.
    reports.push_back(compare("phi1-z-split", "Phi1", from_state(build(StateLabel::Phi1)),
                              "1/sqrt3[(|10>+|01>)|0> + |00>|1>]",
                              (1.0 / sqrt3) * (kron(z_pair, ket("0")) + kron(ket("00"), ket("1")))));
    const Ket x_split = (1.0 / sqrt3) * (kron(z_pair, ket("+")) + kron(ket("00"), ket("-")));
    IdentityReport x_report = compare("phi2-x-split", "Phi2", from_state(build(StateLabel::Phi2)),
                                      "1/sqrt3[(|10>+|01>)|+> + |00>|->]", x_split);
    // This form is printed under the name Phi1; keep the comparison against
    // Phi1 visible next to the one that holds.
    x_report.printed_label = "Phi1";
    x_report.printed_label_deviation =
        phase_aligned_deviation(build(StateLabel::Phi1).amplitudes(), to_state(x_split).amplitudes());
    reports.push_back(std::move(x_report));

    return reports;
}

}  // namespace wqsc
