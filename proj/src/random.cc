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

#include "wqsc/random.h"

#include <array>
#include <limits>

namespace wqsc {

RandomStream::RandomStream(std::uint64_t seed) : engine_(seed) {
}

RandomStream::RandomStream(std::seed_seq &seq) : engine_(seq) {
}

RandomStream RandomStream::for_round(std::uint64_t master_seed, std::uint64_t round_index) {
    // seed_seq mixes all four words into the full engine state, so neighbouring
    // round indices give unrelated streams.
    std::seed_seq seq{
        static_cast<std::uint32_t>(master_seed),
        static_cast<std::uint32_t>(master_seed >> 32),
        static_cast<std::uint32_t>(round_index),
        static_cast<std::uint32_t>(round_index >> 32),
    };
    return RandomStream(seq);
}

std::uint64_t RandomStream::next_u64() {
    return engine_();
}

double RandomStream::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::below(std::uint64_t bound) {
    // Rejection sampling removes the modulo bias.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return draw % bound;
}

int RandomStream::bit() {
    return static_cast<int>(engine_() >> 63);
}

}  // namespace wqsc
