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

#ifndef RSEQ_INTSETS_HPP
#define RSEQ_INTSETS_HPP

#include <cstdint>
#include <span>

#include "rseq/verdict.hpp"
#include "rseq/window.hpp"

// Window-bounded combinatorics of subsets of the naturals. "Interval of
// length L" always means L consecutive integers {s, ..., s+L-1} lying inside
// [0, horizon]. Every witness is the least one in natural order.

namespace rseq {

/// Reduced fraction num/den.
struct Ratio {
    Natural num = 0;
    Natural den = 1;

    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Holds iff every interval of length `gap_bound` meets w. Fails with the
/// left endpoint of the first empty such interval.
Verdict is_syndetic(const Window& w, Natural gap_bound);

/// Holds iff w contains `run_length` consecutive integers; the witness is the
/// start of the first such run. Fails with the longest run length seen.
Verdict is_thick(const Window& w, Natural run_length);

/// Holds iff some interval I of length `block_length` exists on which w is
/// `gap_bound`-syndetic relative to I (witness: start of I). A failure only
/// speaks for these parameters; its witness is the length of the longest
/// stretch on which w is `gap_bound`-syndetic.
Verdict piecewise_syndetic_certificate(const Window& w, Natural gap_bound, Natural block_length);

/// Positive differences {s - s' : s > s'}. Zero is never included.
Window difference_set(const Window& w);

/// Least element of a ∩ (shift + d) on the range both windows observe.
/// Fails with min(a.horizon, d.horizon) when the intersection is empty.
Verdict shifted_hit(const Window& a, const Window& d, std::int64_t shift);

/// Sums of all nonempty subsets of `generators` (repeats allowed), observed
/// up to the sum of all generators.
Window finite_ip(std::span<const Natural> generators);

/// max over intervals I of length `interval_length` of |w ∩ I| / interval_length.
Ratio banach_density_estimate(const Window& w, Natural interval_length);

}  // namespace rseq

#endif  // RSEQ_INTSETS_HPP
