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

#ifndef WQSC_REPORT_H
#define WQSC_REPORT_H

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wqsc/harness.h"
#include "wqsc/protocol.h"
#include "wqsc/states.h"

namespace wqsc {

/// All reported numbers carry 12 significant digits.
inline constexpr int kReportDigits = 12;

double round_significant(double value, int digits = kReportDigits);

/// Flat object; field names are stable:
///   scheme mode initial alice_encoding eve_attack eve_basis eve_observed
///   eve_ancilla bob_decoded check_basis alice_outcome bob_outcome check_pass
///   message_bit alice_key bob_key ciphertext recovered_bit eve_guess
/// Absent values are null. Outcomes are bit strings ("10") or Bell names.
nlohmann::json to_json(const RoundRecord &record);
nlohmann::json to_json(const RunStats &stats, const RunConfig &config);
nlohmann::json to_json(const ExactResult &result);
nlohmann::json to_json(const std::vector<IdentityReport> &reports);

/// Frozen CSV layouts; the header row lists the columns below.
extern const std::vector<std::string> kRunCsvColumns;
extern const std::vector<std::string> kExactCsvColumns;
extern const std::vector<std::string> kIdentityCsvColumns;

void write_csv(std::ostream &out, const RunStats &stats, const RunConfig &config);
/// One row per condition followed by a "total" row.
void write_csv(std::ostream &out, const ExactResult &result);
void write_csv(std::ostream &out, const std::vector<IdentityReport> &reports);

}  // namespace wqsc

#endif
