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

#include "rseq/window.hpp"

#include <algorithm>
#include <string>

#include "rseq/errors.hpp"
#include "rseq/verdict.hpp"

namespace rseq {

std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::HoldsOnWindow: return "holds";
        case Status::FailsWithWitness: return "fails";
        case Status::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Verdict Verdict::holds(std::vector<std::int64_t> witness, std::string note) {
    return {Status::HoldsOnWindow, std::move(witness), std::move(note)};
}

Verdict Verdict::fails(std::vector<std::int64_t> witness, std::string note) {
    return {Status::FailsWithWitness, std::move(witness), std::move(note)};
}

Verdict Verdict::inconclusive(std::string note) {
    return {Status::Inconclusive, {}, std::move(note)};
}

Window::Window(std::vector<Natural> elements, Natural horizon)
    : elements_(std::move(elements)), horizon_(horizon) {
    for (std::size_t i = 1; i < elements_.size(); ++i) {
        if (elements_[i - 1] >= elements_[i]) {
            throw InvalidArgument("window elements not strictly increasing: " +
                                  std::to_string(elements_[i - 1]) + " then " +
                                  std::to_string(elements_[i]));
        }
    }
    if (!elements_.empty() && elements_.back() > horizon_) {
        throw InvalidArgument("window element " + std::to_string(elements_.back()) +
                              " exceeds horizon " + std::to_string(horizon_));
    }
}

Window Window::interval(Natural lo, Natural hi, Natural horizon) {
    std::vector<Natural> out;
    if (lo <= hi) {
        out.reserve(hi - lo + 1);
        for (Natural n = lo;; ++n) {
            out.push_back(n);
            if (n == hi) break;
        }
    }
    return Window(std::move(out), horizon);
}

bool Window::contains(Natural x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

Window Window::shifted(std::int64_t n) const {
    Window out;
    out.horizon_ = horizon_;
    out.elements_.reserve(elements_.size());
    for (Natural e : elements_) {
        if (n < 0) {
            auto down = static_cast<Natural>(-(n + 1)) + 1;
            if (e < down) continue;
            out.elements_.push_back(e - down);
        } else {
            auto up = static_cast<Natural>(n);
            if (e > horizon_ - std::min(up, horizon_) || up > horizon_) break;
            out.elements_.push_back(e + up);
        }
    }
    return out;
}

Window Window::truncated(Natural h) const {
    Window out;
    out.horizon_ = h;
    auto last = std::upper_bound(elements_.begin(), elements_.end(), h);
    out.elements_.assign(elements_.begin(), last);
    return out;
}

}  // namespace rseq
