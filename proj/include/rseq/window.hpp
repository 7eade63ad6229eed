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

#ifndef RSEQ_WINDOW_HPP
#define RSEQ_WINDOW_HPP

#include <cstdint>
#include <vector>

namespace rseq {

using Natural = std::uint64_t;

/// Finite observation of a subset of the naturals: the elements that lie in
/// [0, horizon]. The horizon is the declared observation bound and may exceed
/// the largest element.
class Window {
public:
    Window() = default;

    /// Throws InvalidArgument unless `elements` is strictly increasing and
    /// bounded by `horizon`.
    Window(std::vector<Natural> elements, Natural horizon);

    /// All integers of [lo, hi] observed up to `horizon`.
    static Window interval(Natural lo, Natural hi, Natural horizon);

    template <class Pred>
    static Window from_predicate(Natural horizon, Pred&& pred) {
        std::vector<Natural> out;
        for (Natural n = 0;; ++n) {
            if (pred(n)) out.push_back(n);
            if (n == horizon) break;
        }
        return Window(std::move(out), horizon);
    }

    const std::vector<Natural>& elements() const noexcept { return elements_; }
    Natural horizon() const noexcept { return horizon_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    bool contains(Natural x) const;

    /// (w + n) ∩ [0, horizon]; elements pushed below 0 or above the horizon are dropped.
    Window shifted(std::int64_t n) const;

    /// w ∩ [0, h] observed up to h.
    Window truncated(Natural h) const;

    friend bool operator==(const Window&, const Window&) = default;

private:
    std::vector<Natural> elements_;
    Natural horizon_ = 0;
};

}  // namespace rseq

#endif  // RSEQ_WINDOW_HPP
