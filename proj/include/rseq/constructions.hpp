/*
   Copyright 2026 The rseq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RSEQ_CONSTRUCTIONS_HPP
#define RSEQ_CONSTRUCTIONS_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "rseq/recurrence.hpp"
#include "rseq/verdict.hpp"
#include "rseq/window.hpp"

// A dense-orbit sequence that is not piecewise syndetic, assembled from
// finite IP blocks: A = union of (FS(G_i) + t_i + o_i), where FS(G) is the
// set of finite sums of G, t_i runs through every natural infinitely often
// and the origins o_i push each block past the previous one with at least
// twice the previous empty gap.

namespace rseq {

/// 1, 2, 1, 2, 3, 1, 2, 3, 4, ... truncated to `count` terms.
std::vector<Natural> default_shift_sequence(std::size_t count);

struct IPBlockSchedule {
    std::vector<Natural> shifts;                   // t_i
    std::vector<std::vector<Natural>> generators;  // G_i
    /// Round each origin up to a multiple of lcm(1, ..., |G_i|) so that the
    /// origin vanishes modulo every period a block can certify.
    bool align_origins = true;

    std::size_t block_count() const noexcept { return shifts.size(); }

    /// Block i (1-based) has |G_i| = i + 1 generators (10 + i) * {1, ..., i + 1}.
    static IPBlockSchedule standard(std::size_t blocks);

    /// Block i has k_i generators (base + i) * {1, ..., k_i}.
    static IPBlockSchedule from_counts(std::vector<Natural> shifts, std::vector<Natural> counts,
                                       Natural base, bool align = true);

    /// {"t": [...], "k": [...], "base": b} or {"t": [...], "generators": [[...], ...]},
    /// optional "align" (default true). Missing "t" means the default
    /// enumeration; `blocks` truncates when nonzero.
    static IPBlockSchedule from_json(std::string_view json, std::size_t blocks = 0);

    /// Throws InvalidArgument unless counts are strictly increasing,
    /// generators positive and shifts present for every block.
    void validate() const;
};

struct IPBlock {
    std::vector<Natural> generators;
    Natural shift = 0;
    Natural origin = 0;
    Natural lo = 0;  // min(FS(G) + shift + origin)
    Natural hi = 0;  // max(FS(G) + shift + origin)
};

struct ExampleSequence {
    Window window;  // horizon = last element
    std::vector<IPBlock> blocks;
};

ExampleSequence build_example_sequence(const IPBlockSchedule& schedule);

/// Holds iff no piecewise-syndetic certificate exists for these parameters.
Verdict verify_not_pws(const Window& a, Natural gap_bound, Natural block_length);

/// Holds iff every shift of a covers every residue class modulo every
/// m <= max_period. Fails with (shift, m, residue).
Verdict verify_shifted_recurrence(const Window& a, Natural max_period, ShiftRange shifts);

}  // namespace rseq

#endif  // RSEQ_CONSTRUCTIONS_HPP
