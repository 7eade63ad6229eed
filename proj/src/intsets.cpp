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

#include "rseq/intsets.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rseq/errors.hpp"

namespace rseq {
namespace {

// Calls f(start, length) for every maximal run of non-elements in [0, horizon].
template <class F>
void for_each_gap(const Window& w, F&& f) {
    Natural next = 0;
    for (Natural e : w) {
        if (e > next) f(next, e - next);
        next = e + 1;
    }
    if (w.empty() || w.elements().back() < w.horizon()) f(next, w.horizon() - next + 1);
}

// Observed positions fit in a bitset of this many bits before the
// difference set falls back to pairwise enumeration.
constexpr Natural kBitsetLimit = Natural{1} << 27;

Window difference_set_bitset(const Window& w) {
    const std::size_t words = static_cast<std::size_t>(w.horizon() / 64 + 1);
    std::vector<std::uint64_t> bits(words, 0), diff(words, 0);
    for (Natural e : w) bits[e / 64] |= std::uint64_t{1} << (e % 64);
    for (Natural s : w) {
        const std::size_t ws = static_cast<std::size_t>(s / 64);
        const unsigned bs = static_cast<unsigned>(s % 64);
        for (std::size_t i = 0; i + ws < words; ++i) {
            std::uint64_t v = bits[i + ws] >> bs;
            if (bs != 0 && i + ws + 1 < words) v |= bits[i + ws + 1] << (64 - bs);
            diff[i] |= v;
        }
    }
    diff[0] &= ~std::uint64_t{1};
    std::vector<Natural> out;
    for (std::size_t i = 0; i < words; ++i) {
        for (std::uint64_t v = diff[i]; v != 0; v &= v - 1) {
            out.push_back(Natural{i} * 64 + static_cast<Natural>(__builtin_ctzll(v)));
        }
    }
    return Window(std::move(out), w.horizon());
}

Window difference_set_pairwise(const Window& w) {
    const auto& e = w.elements();
    std::vector<Natural> out;
    out.reserve(e.size() * (e.size() - (e.empty() ? 0 : 1)) / 2);
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) out.push_back(e[i] - e[j]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Window(std::move(out), w.horizon());
}

}  // namespace

Verdict is_syndetic(const Window& w, Natural gap_bound) {
    if (gap_bound == 0) throw InvalidArgument("gap_bound must be >= 1");
    if (w.horizon() < gap_bound - 1) {
        return Verdict::inconclusive("no interval of length " + std::to_string(gap_bound) +
                                     " fits in [0, " + std::to_string(w.horizon()) + "]");
    }
    std::optional<Natural> witness;
    for_each_gap(w, [&](Natural start, Natural length) {
        if (!witness && length >= gap_bound) witness = start;
    });
    if (witness) {
        return Verdict::fails({static_cast<std::int64_t>(*witness)},
                              "empty interval of length " + std::to_string(gap_bound));
    }
    return Verdict::holds({}, "gaps bounded by " + std::to_string(gap_bound) + " on [0, " +
                                  std::to_string(w.horizon()) + "]");
}

Verdict is_thick(const Window& w, Natural run_length) {
    if (run_length == 0) throw InvalidArgument("run_length must be >= 1");
    Natural longest = 0;
    const auto& e = w.elements();
    std::size_t i = 0;
    while (i < e.size()) {
        std::size_t j = i;
        while (j + 1 < e.size() && e[j + 1] == e[j] + 1) ++j;
        const Natural len = j - i + 1;
        if (len >= run_length) {
            return Verdict::holds({static_cast<std::int64_t>(e[i])},
                                  "run of " + std::to_string(len) + " consecutive integers");
        }
        longest = std::max(longest, len);
        i = j + 1;
    }
    return Verdict::fails({static_cast<std::int64_t>(longest)}, "longest run");
}

Verdict piecewise_syndetic_certificate(const Window& w, Natural gap_bound, Natural block_length) {
    if (gap_bound == 0) throw InvalidArgument("gap_bound must be >= 1");
    if (block_length < gap_bound) throw InvalidArgument("block_length must be >= gap_bound");
    if (w.horizon() < block_length - 1) {
        return Verdict::inconclusive("no interval of length " + std::to_string(block_length) +
                                     " fits in [0, " + std::to_string(w.horizon()) + "]");
    }
    // An interval starting at s is certified iff none of the empty
    // gap_bound-intervals starts in [s, s + block_length - gap_bound].
    Natural s = 0;
    Natural longest = 0;
    std::optional<Natural> found;
    for_each_gap(w, [&](Natural u, Natural len) {
        if (found || len < gap_bound) return;
        const Natural bad_lo = u;
        const Natural bad_hi = u + len - gap_bound;
        if (s + block_length - gap_bound < bad_lo) {
            found = s;
            return;
        }
        longest = std::max(longest, bad_lo + gap_bound - 1 - s);
        s = bad_hi + 1;
    });
    if (!found && s <= w.horizon() && w.horizon() - s + 1 >= block_length) found = s;
    if (found) {
        return Verdict::holds({static_cast<std::int64_t>(*found)},
                              "gap_bound-syndetic on an interval of length " +
                                  std::to_string(block_length));
    }
    if (s <= w.horizon()) longest = std::max(longest, w.horizon() - s + 1);
    return Verdict::fails({static_cast<std::int64_t>(longest)},
                          "longest gap_bound-syndetic stretch");
}

Window difference_set(const Window& w) {
    if (w.empty()) return Window({}, w.horizon());
    const Natural words = w.horizon() / 64 + 1;
    if (w.horizon() < kBitsetLimit && words <= Natural{64} * w.size()) {
        return difference_set_bitset(w);
    }
    return difference_set_pairwise(w);
}

Verdict shifted_hit(const Window& a, const Window& d, std::int64_t shift) {
    const Natural searched = std::min(a.horizon(), d.horizon());
    // x in a and x - shift in d.
    auto in_d = [&](Natural x) {
        if (shift >= 0) {
            const auto up = static_cast<Natural>(shift);
            return x >= up && d.contains(x - up);
        }
        const Natural y = x + static_cast<Natural>(-(shift + 1)) + 1;
        return y >= x && d.contains(y);
    };
    auto in_a = [&](Natural y) -> std::optional<Natural> {
        Natural x;
        if (shift >= 0) {
            x = y + static_cast<Natural>(shift);
            if (x < y) return std::nullopt;
        } else {
            const Natural down = static_cast<Natural>(-(shift + 1)) + 1;
            if (y < down) return std::nullopt;
            x = y - down;
        }
        if (x > a.horizon() || !a.contains(x)) return std::nullopt;
        return x;
    };
    if (a.size() <= d.size()) {
        for (Natural x : a) {
            if (in_d(x)) return Verdict::holds({static_cast<std::int64_t>(x)});
        }
    } else {
        for (Natural y : d) {
            if (auto x = in_a(y)) return Verdict::holds({static_cast<std::int64_t>(*x)});
        }
    }
    return Verdict::fails({static_cast<std::int64_t>(searched)}, "empty intersection");
}

Window finite_ip(std::span<const Natural> generators) {
    if (generators.empty()) throw InvalidArgument("finite_ip needs at least one generator");
    constexpr std::size_t kMaxSums = std::size_t{1} << 26;
    Natural total = 0;
    std::vector<Natural> sums;
    std::vector<Natural> shifted, merged;
    for (Natural g : generators) {
        if (g == 0) throw InvalidArgument("finite_ip generators must be >= 1");
        if (total + g < total) throw OverflowError("finite_ip: sum of generators overflows");
        total += g;
        shifted.clear();
        shifted.push_back(g);
        for (Natural s : sums) shifted.push_back(s + g);
        std::sort(shifted.begin(), shifted.end());
        merged.clear();
        std::set_union(sums.begin(), sums.end(), shifted.begin(), shifted.end(),
                       std::back_inserter(merged));
        sums.swap(merged);
        if (sums.size() > kMaxSums) throw CapExceeded("finite_ip: too many distinct sums");
    }
    return Window(std::move(sums), total);
}

Ratio banach_density_estimate(const Window& w, Natural interval_length) {
    if (interval_length == 0 || interval_length > w.horizon()) {
        throw InvalidArgument("interval_length must lie in [1, horizon]");
    }
    // Sliding an interval right until its left end meets an element never
    // lowers its count, so element starts (clamped to the last admissible
    // start) are the only candidates.
    const Natural last_start = w.horizon() - interval_length + 1;
    const auto& e = w.elements();
    Natural best = 0;
    for (Natural x : e) {
        const Natural s = std::min(x, last_start);
        auto lo = std::lower_bound(e.begin(), e.end(), s);
        auto hi = std::upper_bound(lo, e.end(), s + interval_length - 1);
        best = std::max<Natural>(best, static_cast<Natural>(hi - lo));
        if (x >= last_start) break;
    }
    const Natural g = std::gcd(best, interval_length);
    return best == 0 ? Ratio{0, 1} : Ratio{best / g, interval_length / g};
}

}  // namespace rseq
