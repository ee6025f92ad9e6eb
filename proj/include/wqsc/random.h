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

#ifndef WQSC_RANDOM_H
#define WQSC_RANDOM_H

#include <cstdint>
#include <random>

namespace wqsc {

/// A caller-owned stream of random numbers.
///
/// Streams are built on std::mt19937_64, whose output sequence is fixed by the
/// standard, and all derived values (uniform doubles, bounded integers) are
/// computed here rather than through the implementation-defined standard
/// distributions. The same seed therefore yields the same draws on every
/// platform.
class RandomStream {
   public:
    explicit RandomStream(std::uint64_t seed);

    /// Independent stream for one round, keyed by (master seed, round index).
    static RandomStream for_round(std::uint64_t master_seed, std::uint64_t round_index);

    std::uint64_t next_u64();
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform integer in [0, bound). `bound` must be positive.
    std::uint64_t below(std::uint64_t bound);
    int bit();

   private:
    explicit RandomStream(std::seed_seq &seq);

    std::mt19937_64 engine_;
};

}  // namespace wqsc

#endif
