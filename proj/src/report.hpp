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

#ifndef RSEQ_REPORT_HPP
#define RSEQ_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "rseq/recurrence.hpp"
#include "rseq/window.hpp"

// JSON report builders behind the C API. Every report embeds the caller's
// configuration object under "config"; parameters missing from it take the
// per-report defaults below.

namespace rseq::report {

using nlohmann::json;

inline constexpr std::uint64_t kDefaultSeed = 20260417;

/// Parses "a..b" (either bound may be negative).
ShiftRange parse_shifts(const std::string& text);

json verdict_json(const Verdict& v);
json sequence_json(const Window& w, const std::string& source);

json classify(const Window& w, const std::string& source, const json& config);
json recurrence(const Window& w, const std::string& source, const std::string& family,
                const json& config);
json permpoly_check(const std::string& poly, std::uint64_t p, const json& config);
json find_prime(const std::string& poly, std::uint64_t cap, const json& config);
json construct(const std::optional<std::string>& schedule_json, std::uint64_t blocks,
               const json& config, std::optional<Window>* built);
json product(const std::string& left, const std::string& right, const json& config);
json crosscheck(const Window* w, const std::string& source, const json& config);

}  // namespace rseq::report

#endif  // RSEQ_REPORT_HPP
