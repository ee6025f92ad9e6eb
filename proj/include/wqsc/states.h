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

#ifndef WQSC_STATES_H
#define WQSC_STATES_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wqsc/qstate.h"

namespace wqsc {

enum class StateLabel { Phi1, Phi2, W4, BellPsiPlus, BellPsiMinus, BellPhiPlus, BellPhiMinus };

std::string_view state_label_name(StateLabel label);
/// Accepts the names produced by state_label_name. Throws UnknownLabel.
StateLabel parse_state_label(std::string_view name);

struct NamedState {
    StateLabel label;
    StateVector value;
};

/// Canonical amplitudes (exact, not up to phase):
///   Phi1 = (|100> + |010> + |001>)/sqrt3
///   Phi2 = (|10+> + |01+> + |00->)/sqrt3
///   W4   = (|1000> + |0100> + |0010> + |0001>)/2
/// and the four Bell states as in bell_state().
StateVector build(StateLabel label);
NamedState named(StateLabel label);

/// Product state from a string over {0, 1, +, -}, e.g. product_ket("10+").
StateVector product_ket(std::string_view kets);

/// Outcome of checking that two written forms of a state agree.
struct IdentityReport {
    std::string id;
    std::string left;
    std::string right;
    /// Phase-aligned max amplitude deviation between the normalized sides.
    double max_deviation = 0;
    /// Norm of the right-hand side with its prefactor taken as written.
    double right_norm = 1;
    bool pass = false;
    /// Set when the right-hand side is printed under a different state name
    /// than the one it actually equals; holds the comparison against that name.
    std::optional<std::string> printed_label;
    std::optional<double> printed_label_deviation;
};

/// Every decomposition identity used by the two schemes. pass is
/// max_deviation <= kTolerance.
std::vector<IdentityReport> verify_identities();

}  // namespace wqsc

#endif
