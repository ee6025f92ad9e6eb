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

#include "wqsc/qstate.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace wqsc {

class StateAccess {
   public:
    static StateVector wrap(int num_qubits, std::vector<Amplitude> amplitudes) {
        return StateVector(num_qubits, std::move(amplitudes));
    }
    static std::vector<Amplitude> &raw(StateVector &state) {
        return state.amplitudes_;
    }
};

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

std::size_t bit_mask(int num_qubits, int qubit) {
    return std::size_t{1} << (num_qubits - qubit);
}

void check_qubit(int num_qubits, int qubit) {
    if (qubit < 1 || qubit > num_qubits) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "qubit " + std::to_string(qubit) + " outside 1.." + std::to_string(num_qubits));
    }
}

void check_distinct(std::span<const int> qubits, int num_qubits) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        check_qubit(num_qubits, qubits[i]);
        for (std::size_t j = 0; j < i; ++j) {
            if (qubits[i] == qubits[j]) {
                throw Error(ErrorCode::InvalidBasis, "qubit " + std::to_string(qubits[i]) + " listed twice");
            }
        }
    }
}

/// Reads the listed qubits of a basis index as an outcome value, first listed
/// qubit most significant.
std::uint32_t gather_bits(std::size_t index, int num_qubits, std::span<const int> qubits) {
    std::uint32_t value = 0;
    for (int q : qubits) {
        value = (value << 1) | ((index & bit_mask(num_qubits, q)) ? 1u : 0u);
    }
    return value;
}

std::vector<Amplitude> hadamard_all(std::vector<Amplitude> amps, int num_qubits, std::span<const int> qubits) {
    for (int q : qubits) {
        const std::size_t m = bit_mask(num_qubits, q);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if (i & m) {
                continue;
            }
            const Amplitude a0 = amps[i];
            const Amplitude a1 = amps[i | m];
            amps[i] = (a0 + a1) * kInvSqrt2;
            amps[i | m] = (a0 - a1) * kInvSqrt2;
        }
    }
    return amps;
}

double sum_norm_squared(std::span<const Amplitude> amps) {
    double total = 0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return total;
}

/// Overlap <bell|c> for the 2-qubit slice (c00, c01, c10, c11).
Amplitude bell_overlap(BellLabel label, Amplitude c00, Amplitude c01, Amplitude c10, Amplitude c11) {
    switch (label) {
        case BellLabel::PsiPlus:
            return (c10 + c01) * kInvSqrt2;
        case BellLabel::PsiMinus:
            return (c10 - c01) * kInvSqrt2;
        case BellLabel::PhiPlus:
            return (c00 + c11) * kInvSqrt2;
        case BellLabel::PhiMinus:
            return (c00 - c11) * kInvSqrt2;
    }
    return 0;
}

/// Bell projection of the pair (a, b); returns the unnormalized projected amplitudes.
std::vector<Amplitude> bell_project(const StateVector &state, int a, int b, BellLabel label) {
    const int n = state.num_qubits();
    const std::size_t ma = bit_mask(n, a);
    const std::size_t mb = bit_mask(n, b);
    const auto amps = state.amplitudes();
    std::vector<Amplitude> out(amps.size(), 0.0);
    for (std::size_t base = 0; base < amps.size(); ++base) {
        if (base & (ma | mb)) {
            continue;
        }
        const Amplitude ov =
            bell_overlap(label, amps[base], amps[base | mb], amps[base | ma], amps[base | ma | mb]);
        switch (label) {
            case BellLabel::PsiPlus:
            case BellLabel::PsiMinus: {
                const double sign = label == BellLabel::PsiPlus ? 1.0 : -1.0;
                out[base | ma] = ov * kInvSqrt2;
                out[base | mb] = sign * ov * kInvSqrt2;
                break;
            }
            case BellLabel::PhiPlus:
            case BellLabel::PhiMinus: {
                const double sign = label == BellLabel::PhiPlus ? 1.0 : -1.0;
                out[base] = ov * kInvSqrt2;
                out[base | ma | mb] = sign * ov * kInvSqrt2;
                break;
            }
        }
    }
    return out;
}

}  // namespace

StateVector::StateVector(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
}

StateVector StateVector::make(int num_qubits, std::span<const Amplitude> amplitudes) {
    if (num_qubits < 1) {
        throw Error(ErrorCode::DimensionMismatch, "a state needs at least one qubit");
    }
    if (num_qubits > kMaxQubits) {
        throw Error(ErrorCode::CapacityExceeded, std::to_string(num_qubits) + " qubits exceeds the limit of 8");
    }
    if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(amplitudes.size()) + " amplitudes for " + std::to_string(num_qubits) + " qubits");
    }
    const double norm = std::sqrt(sum_norm_squared(amplitudes));
    if (!(norm >= kDegenerateNorm) || !std::isfinite(norm)) {
        throw Error(ErrorCode::ZeroVector, "state has degenerate norm");
    }
    std::vector<Amplitude> scaled(amplitudes.begin(), amplitudes.end());
    for (auto &a : scaled) {
        a /= norm;
    }
    return StateVector(num_qubits, std::move(scaled));
}

StateVector StateVector::make(int num_qubits, std::initializer_list<Amplitude> amplitudes) {
    return make(num_qubits, std::span<const Amplitude>(amplitudes.begin(), amplitudes.size()));
}

StateVector StateVector::basis_state(int num_qubits, std::size_t index) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw Error(ErrorCode::CapacityExceeded, "qubit count must be in 1..8");
    }
    std::vector<Amplitude> amps(std::size_t{1} << num_qubits, 0.0);
    if (index >= amps.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(index));
    }
    amps[index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

double StateVector::norm_squared() const {
    return sum_norm_squared(amplitudes_);
}

Gate1Q Gate1Q::identity() {
    return {{1.0, 0.0, 0.0, 1.0}};
}

Gate1Q Gate1Q::hadamard() {
    return {{kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}};
}

Gate1Q Gate1Q::pauli_x() {
    return {{0.0, 1.0, 1.0, 0.0}};
}

Gate1Q Gate1Q::pauli_z() {
    return {{1.0, 0.0, 0.0, -1.0}};
}

Gate1Q Gate1Q::flip() {
    return {{0.0, 1.0, -1.0, 0.0}};
}

Gate1Q Gate1Q::adjoint() const {
    return {{std::conj(at(0, 0)), std::conj(at(1, 0)), std::conj(at(0, 1)), std::conj(at(1, 1))}};
}

Gate1Q Gate1Q::operator*(const Gate1Q &rhs) const {
    Gate1Q out{};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out.entries[static_cast<std::size_t>(r * 2 + c)] = at(r, 0) * rhs.at(0, c) + at(r, 1) * rhs.at(1, c);
        }
    }
    return out;
}

double Gate1Q::max_deviation(const Gate1Q &other) const {
    double worst = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(entries[i] - other.entries[i]));
    }
    return worst;
}

bool Gate1Q::is_unitary(double tol) const {
    return ((*this) * adjoint()).max_deviation(identity()) <= tol;
}

MeasurementBasis MeasurementBasis::z(std::vector<int> qubits) {
    return {BasisKind::Z, std::move(qubits)};
}

MeasurementBasis MeasurementBasis::x(std::vector<int> qubits) {
    return {BasisKind::X, std::move(qubits)};
}

MeasurementBasis MeasurementBasis::bell(int first, int second) {
    return {BasisKind::BellPair, {first, second}};
}

void MeasurementBasis::validate(int num_qubits) const {
    if (qubits.empty()) {
        throw Error(ErrorCode::InvalidBasis, "no qubits to measure");
    }
    if (kind == BasisKind::BellPair && qubits.size() != 2) {
        throw Error(ErrorCode::InvalidBasis, "Bell measurement takes exactly two qubits");
    }
    check_distinct(qubits, num_qubits);
}

std::string_view bell_label_name(BellLabel label) {
    switch (label) {
        case BellLabel::PsiPlus:
            return "psi+";
        case BellLabel::PsiMinus:
            return "psi-";
        case BellLabel::PhiPlus:
            return "phi+";
        case BellLabel::PhiMinus:
            return "phi-";
    }
    return "?";
}

StateVector bell_state(BellLabel label) {
    switch (label) {
        case BellLabel::PsiPlus:
            return StateVector::make(2, {0.0, 1.0, 1.0, 0.0});
        case BellLabel::PsiMinus:
            return StateVector::make(2, {0.0, -1.0, 1.0, 0.0});
        case BellLabel::PhiPlus:
            return StateVector::make(2, {1.0, 0.0, 0.0, 1.0});
        case BellLabel::PhiMinus:
            return StateVector::make(2, {1.0, 0.0, 0.0, -1.0});
    }
    throw Error(ErrorCode::UnknownLabel, "Bell label");
}

Outcome Outcome::bits(std::uint32_t value, int width) {
    if (width < 1 || width > kMaxQubits || (value >> width) != 0) {
        throw Error(ErrorCode::InvalidOutcome, "bit value does not fit width " + std::to_string(width));
    }
    return Outcome(false, value, width);
}

Outcome Outcome::bell(BellLabel label) {
    return Outcome(true, static_cast<std::uint32_t>(label), 2);
}

Outcome Outcome::parse(std::string_view text) {
    for (BellLabel label : kAllBellLabels) {
        if (text == bell_label_name(label)) {
            return bell(label);
        }
    }
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw Error(ErrorCode::InvalidOutcome, "cannot parse outcome '" + std::string(text) + "'");
    }
    std::uint32_t value = 0;
    for (char c : text) {
        std::uint32_t b;
        if (c == '0' || c == '+') {
            b = 0;
        } else if (c == '1' || c == '-') {
            b = 1;
        } else {
            throw Error(ErrorCode::InvalidOutcome, "cannot parse outcome '" + std::string(text) + "'");
        }
        value = (value << 1) | b;
    }
    return bits(value, static_cast<int>(text.size()));
}

int Outcome::bit(int position) const {
    if (is_bell_ || position < 0 || position >= width_) {
        throw Error(ErrorCode::InvalidOutcome, "bit position " + std::to_string(position));
    }
    return static_cast<int>((value_ >> (width_ - 1 - position)) & 1u);
}

BellLabel Outcome::bell_label() const {
    if (!is_bell_) {
        throw Error(ErrorCode::InvalidOutcome, "outcome " + to_string() + " is not a Bell label");
    }
    return static_cast<BellLabel>(value_);
}

Outcome Outcome::sub(int first, int count) const {
    if (is_bell_ || first < 0 || count < 1 || first + count > width_) {
        throw Error(ErrorCode::InvalidOutcome, "cannot take bits of " + to_string());
    }
    const std::uint32_t shifted = value_ >> (width_ - first - count);
    return bits(shifted & ((1u << count) - 1u), count);
}

std::string Outcome::to_string() const {
    if (is_bell_) {
        return std::string(bell_label_name(bell_label()));
    }
    std::string out;
    for (int i = 0; i < width_; ++i) {
        out.push_back(bit(i) ? '1' : '0');
    }
    return out;
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    const int n = a.num_qubits() + b.num_qubits();
    if (n > kMaxQubits) {
        throw Error(ErrorCode::CapacityExceeded, std::to_string(n) + " qubits exceeds the limit of 8");
    }
    std::vector<Amplitude> out;
    out.reserve(a.dimension() * b.dimension());
    for (const auto &x : a.amplitudes()) {
        for (const auto &y : b.amplitudes()) {
            out.push_back(x * y);
        }
    }
    return StateAccess::wrap(n, std::move(out));
}

StateVector apply_1q(const StateVector &state, int qubit, const Gate1Q &gate) {
    const int n = state.num_qubits();
    check_qubit(n, qubit);
    const std::size_t m = bit_mask(n, qubit);
    StateVector out = state;
    auto &amps = StateAccess::raw(out);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & m) {
            continue;
        }
        const Amplitude a0 = amps[i];
        const Amplitude a1 = amps[i | m];
        amps[i] = gate.at(0, 0) * a0 + gate.at(0, 1) * a1;
        amps[i | m] = gate.at(1, 0) * a0 + gate.at(1, 1) * a1;
    }
    return out;
}

StateVector apply_cnot(const StateVector &state, int control, int target) {
    const int n = state.num_qubits();
    check_qubit(n, control);
    check_qubit(n, target);
    if (control == target) {
        throw Error(ErrorCode::SameQubit, "CNOT control and target are both qubit " + std::to_string(control));
    }
    const std::size_t mc = bit_mask(n, control);
    const std::size_t mt = bit_mask(n, target);
    StateVector out = state;
    auto &amps = StateAccess::raw(out);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mc) && !(i & mt)) {
            std::swap(amps[i], amps[i | mt]);
        }
    }
    return out;
}

Distribution distribution(const StateVector &state, const MeasurementBasis &basis) {
    basis.validate(state.num_qubits());
    Distribution out;
    if (basis.kind == BasisKind::BellPair) {
        for (BellLabel label : kAllBellLabels) {
            out[Outcome::bell(label)] =
                sum_norm_squared(bell_project(state, basis.qubits[0], basis.qubits[1], label));
        }
        return out;
    }
    const int n = state.num_qubits();
    const int width = static_cast<int>(basis.qubits.size());
    std::vector<Amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());
    if (basis.kind == BasisKind::X) {
        amps = hadamard_all(std::move(amps), n, basis.qubits);
    }
    std::vector<double> probs(std::size_t{1} << width, 0.0);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        probs[gather_bits(i, n, basis.qubits)] += std::norm(amps[i]);
    }
    for (std::size_t v = 0; v < probs.size(); ++v) {
        out[Outcome::bits(static_cast<std::uint32_t>(v), width)] = probs[v];
    }
    return out;
}

Branch project(const StateVector &state, const MeasurementBasis &basis, const Outcome &outcome) {
    basis.validate(state.num_qubits());
    const int n = state.num_qubits();
    std::vector<Amplitude> amps;
    if (basis.kind == BasisKind::BellPair) {
        if (!outcome.is_bell()) {
            throw Error(ErrorCode::InvalidOutcome, "Bell measurement needs a Bell outcome");
        }
        amps = bell_project(state, basis.qubits[0], basis.qubits[1], outcome.bell_label());
    } else {
        if (outcome.is_bell() || outcome.width() != static_cast<int>(basis.qubits.size())) {
            throw Error(ErrorCode::InvalidOutcome,
                        "outcome " + outcome.to_string() + " does not match the measured qubits");
        }
        amps.assign(state.amplitudes().begin(), state.amplitudes().end());
        if (basis.kind == BasisKind::X) {
            amps = hadamard_all(std::move(amps), n, basis.qubits);
        }
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if (gather_bits(i, n, basis.qubits) != outcome.value()) {
                amps[i] = 0.0;
            }
        }
        if (basis.kind == BasisKind::X) {
            amps = hadamard_all(std::move(amps), n, basis.qubits);
        }
    }
    const double p = sum_norm_squared(amps);
    if (p <= kTolerance) {
        throw Error(ErrorCode::InvalidOutcome, "outcome " + outcome.to_string() + " has probability 0");
    }
    const double scale = 1.0 / std::sqrt(p);
    for (auto &a : amps) {
        a *= scale;
    }
    return Branch{outcome, StateAccess::wrap(n, std::move(amps)), p};
}

Branch measure(const StateVector &state, const MeasurementBasis &basis, RandomStream &rng) {
    const Distribution dist = distribution(state, basis);
    const double u = rng.uniform();
    double cumulative = 0;
    const Outcome *chosen = nullptr;
    for (const auto &[outcome, p] : dist) {
        if (p <= kTolerance) {
            continue;
        }
        chosen = &outcome;
        cumulative += p;
        if (u < cumulative) {
            break;
        }
    }
    return project(state, basis, *chosen);
}

StateVector slice(const StateVector &state, std::span<const int> qubits, const Outcome &bits) {
    const int n = state.num_qubits();
    check_distinct(qubits, n);
    const int k = static_cast<int>(qubits.size());
    if (bits.is_bell() || bits.width() != k) {
        throw Error(ErrorCode::InvalidOutcome, "slice needs one bit per fixed qubit");
    }
    if (k >= n) {
        throw Error(ErrorCode::DimensionMismatch, "slice must leave at least one qubit");
    }
    std::vector<int> rest;
    for (int q = 1; q <= n; ++q) {
        if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) {
            rest.push_back(q);
        }
    }
    std::vector<Amplitude> out(std::size_t{1} << (n - k), 0.0);
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (gather_bits(i, n, qubits) == bits.value()) {
            out[gather_bits(i, n, rest)] = amps[i];
        }
    }
    return StateVector::make(n - k, out);
}

StateVector embed(const StateVector &rest, std::span<const int> qubits, const StateVector &inserted) {
    const int n = rest.num_qubits() + inserted.num_qubits();
    if (n > kMaxQubits) {
        throw Error(ErrorCode::CapacityExceeded, std::to_string(n) + " qubits exceeds the limit of 8");
    }
    if (static_cast<int>(qubits.size()) != inserted.num_qubits()) {
        throw Error(ErrorCode::DimensionMismatch, "one position per inserted qubit required");
    }
    check_distinct(qubits, n);
    if (!std::is_sorted(qubits.begin(), qubits.end())) {
        throw Error(ErrorCode::InvalidBasis, "insert positions must be ascending");
    }
    std::vector<int> others;
    for (int q = 1; q <= n; ++q) {
        if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) {
            others.push_back(q);
        }
    }
    std::vector<Amplitude> out(std::size_t{1} << n);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = rest[gather_bits(i, n, others)] * inserted[gather_bits(i, n, qubits)];
    }
    return StateAccess::wrap(n, std::move(out));
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(ErrorCode::DimensionMismatch, "inner product of states with different qubit counts");
    }
    Amplitude total = 0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

double phase_aligned_deviation(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch, "amplitude arrays differ in length");
    }
    Amplitude overlap = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        overlap += std::conj(b[i]) * a[i];
    }
    const double magnitude = std::abs(overlap);
    const Amplitude phase = magnitude > 0 ? overlap / magnitude : Amplitude{1.0};
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - phase * b[i]));
    }
    return worst;
}

bool states_equal(const StateVector &a, const StateVector &b, double tol) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(ErrorCode::DimensionMismatch, "comparing states with different qubit counts");
    }
    return phase_aligned_deviation(a.amplitudes(), b.amplitudes()) <= tol;
}

}  // namespace wqsc
