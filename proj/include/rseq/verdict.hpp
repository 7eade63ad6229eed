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

#ifndef RSEQ_VERDICT_HPP
#define RSEQ_VERDICT_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace rseq {

enum class Status { HoldsOnWindow, FailsWithWitness, Inconclusive };

std::string_view to_string(Status s) noexcept;

/// Window-bounded answer. A verdict never claims the asymptotic property:
/// HoldsOnWindow and FailsWithWitness are statements about the observed
/// window only. Failures always carry a witness that can be replayed
/// against the definition of the tested property.
struct Verdict {
    Status status = Status::Inconclusive;
    std::vector<std::int64_t> witness;
    std::string note;

    static Verdict holds(std::vector<std::int64_t> witness = {}, std::string note = {});
    static Verdict fails(std::vector<std::int64_t> witness, std::string note = {});
    static Verdict inconclusive(std::string note);

    bool is_holds() const noexcept { return status == Status::HoldsOnWindow; }
    bool is_fails() const noexcept { return status == Status::FailsWithWitness; }
    bool is_inconclusive() const noexcept { return status == Status::Inconclusive; }
};

}  // namespace rseq

#endif  // RSEQ_VERDICT_HPP
