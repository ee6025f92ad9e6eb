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

#ifndef WQSC_QSTATE_H
#define WQSC_QSTATE_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wqsc/error.h"
#include "wqsc/random.h"

namespace wqsc {

using Amplitude = std::complex<double>;

/// Tolerance for all exact amplitude and probability algebra.
inline constexpr double kTolerance = 1e-12;
/// Inputs whose norm falls below this are rejected instead of renormalized.
inline constexpr double kDegenerateNorm = 1e-9;
inline constexpr int kMaxQubits = 8;

/// Normalized dense state over 1..8 qubits.
///
/// Qubits are numbered from 1 at the interface. Qubit 1 is the most
/// significant bit of the amplitude index, so kets read left to right:
/// |100> on three qubits is index 4.
///
/// Values are immutable; every operation below returns a new state.
class StateVector {
   public:
    /// Normalized copy of `amplitudes`. Throws DimensionMismatch when the
    /// length is not 2^num_qubits and ZeroVector when the norm is degenerate.
    static StateVector make(int num_qubits, std::span<const Amplitude> amplitudes);
    static StateVector make(int num_qubits, std::initializer_list<Amplitude> amplitudes);
    static StateVector basis_state(int num_qubits, std::size_t index);

    int num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t dimension() const noexcept {
        return amplitudes_.size();
    }
    std::span<const Amplitude> amplitudes() const noexcept {
        return amplitudes_;
    }
    Amplitude operator[](std::size_t index) const {
        return amplitudes_.at(index);
    }
    double norm_squared() const;

    /// Exact componentwise equality. Use states_equal for tolerance and phase.
    bool operator==(const StateVector &other) const = default;

   private:
    friend class StateAccess;
    StateVector(int num_qubits, std::vector<Amplitude> amplitudes);

    int num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// 2x2 complex matrix, row-major.
struct Gate1Q {
    std::array<Amplitude, 4> entries;

    Amplitude at(int row, int col) const {
        return entries[static_cast<std::size_t>(row * 2 + col)];
    }

    static Gate1Q identity();
    static Gate1Q hadamard();
    static Gate1Q pauli_x();
    static Gate1Q pauli_z();
    /// i*sigma_y = |0><1| - |1><0|. Flips a qubit in both the Z and X bases.
    static Gate1Q flip();

    Gate1Q adjoint() const;
    Gate1Q operator*(const Gate1Q &rhs) const;
    bool is_unitary(double tol = kTolerance) const;
    /// Largest entrywise deviation between two matrices.
    double max_deviation(const Gate1Q &other) const;
};

enum class BasisKind { Z, X, BellPair };

/// Which qubits are measured and in which basis. For Z and X the outcome bits
/// follow the order of `qubits`; BellPair takes exactly two qubits (a, b) and
/// reads the Bell states as kets over |q_a q_b>.
struct MeasurementBasis {
    BasisKind kind = BasisKind::Z;
    std::vector<int> qubits;

    static MeasurementBasis z(std::vector<int> qubits);
    static MeasurementBasis x(std::vector<int> qubits);
    static MeasurementBasis bell(int first, int second);

    /// Throws InvalidBasis (empty, duplicates, wrong Bell arity) or
    /// IndexOutOfRange.
    void validate(int num_qubits) const;
};

enum class BellLabel : std::uint8_t { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

inline constexpr std::array<BellLabel, 4> kAllBellLabels = {
    BellLabel::PsiPlus, BellLabel::PsiMinus, BellLabel::PhiPlus, BellLabel::PhiMinus};

std::string_view bell_label_name(BellLabel label);
/// psi+- = (|10> +- |01>)/sqrt2, phi+- = (|00> +- |11>)/sqrt2.
StateVector bell_state(BellLabel label);

/// Result of one measurement: either a bit string (Z, or X with 0 for |+> and
/// 1 for |->) or a Bell label.
class Outcome {
   public:
    /// `value` holds the bits with the first measured qubit most significant.
    static Outcome bits(std::uint32_t value, int width);
    static Outcome bell(BellLabel label);
    /// Parses "10", "+-" (X notation, mapped to bits) or a Bell name "psi+".
    static Outcome parse(std::string_view text);

    bool is_bell() const noexcept {
        return is_bell_;
    }
    /// Number of measured qubits.
    int width() const noexcept {
        return width_;
    }
    std::uint32_t value() const noexcept {
        return value_;
    }
    /// Bit at `position`, counted from the left starting at 0.
    int bit(int position) const;
    BellLabel bell_label() const;
    /// The `count` bits starting at `first` (from the left).
    Outcome sub(int first, int count) const;
    std::string to_string() const;

    auto operator<=>(const Outcome &other) const = default;

   private:
    Outcome(bool is_bell, std::uint32_t value, int width) : is_bell_(is_bell), value_(value), width_(width) {
    }

    bool is_bell_;
    std::uint32_t value_;
    int width_;
};

/// Exact outcome probabilities. Every outcome of the basis is present,
/// including those with probability 0.
using Distribution = std::map<Outcome, double>;

/// One measurement branch: the outcome, the renormalized post-measurement
/// state and the exact branch probability.
struct Branch {
    Outcome outcome;
    StateVector state;
    double probability;
};

StateVector tensor(const StateVector &a, const StateVector &b);
StateVector apply_1q(const StateVector &state, int qubit, const Gate1Q &gate);
StateVector apply_cnot(const StateVector &state, int control, int target);

Distribution distribution(const StateVector &state, const MeasurementBasis &basis);
/// Projects onto one outcome. Throws InvalidOutcome for zero-probability or
/// mismatched outcomes.
Branch project(const StateVector &state, const MeasurementBasis &basis, const Outcome &outcome);
/// Samples an outcome from distribution(state, basis) and collapses onto it.
Branch measure(const StateVector &state, const MeasurementBasis &basis, RandomStream &rng);

/// Given that `qubits` hold the computational-basis values in `bits`, returns
/// the normalized state of the remaining qubits (in their original order).
/// Throws ZeroVector when that slice is empty.
StateVector slice(const StateVector &state, std::span<const int> qubits, const Outcome &bits);
/// Inverse of slice for product states: places `inserted` on the positions
/// `qubits` (1-based, ascending, in the result) and `rest` on the others.
StateVector embed(const StateVector &rest, std::span<const int> qubits, const StateVector &inserted);

Amplitude inner_product(const StateVector &a, const StateVector &b);
/// min over theta of max_i |a_i - e^{i theta} b_i|, evaluated at the phase that
/// aligns b with a. Works on unnormalized amplitude arrays.
double phase_aligned_deviation(std::span<const Amplitude> a, std::span<const Amplitude> b);
/// True when a = e^{i theta} b up to `tol` per amplitude.
bool states_equal(const StateVector &a, const StateVector &b, double tol = kTolerance);

}  // namespace wqsc

#endif
