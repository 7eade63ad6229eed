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

#include "rseq/constructions.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "rseq/errors.hpp"
#include "rseq/intsets.hpp"

namespace rseq {
namespace {

Natural checked_add(Natural a, Natural b) {
    Natural r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("construction exceeds 64-bit naturals");
    return r;
}

Natural checked_mul(Natural a, Natural b) {
    Natural r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("construction exceeds 64-bit naturals");
    return r;
}

Natural lcm_upto(Natural k) {
    Natural l = 1;
    for (Natural j = 2; j <= k; ++j) l = checked_mul(l / std::gcd(l, j), j);
    return l;
}

std::vector<Natural> progression(Natural step, Natural count) {
    std::vector<Natural> g;
    for (Natural j = 1; j <= count; ++j) g.push_back(checked_mul(step, j));
    return g;
}

// nlohmann converts -1 to 2^64 - 1 without complaint.
std::vector<Natural> natural_array(const nlohmann::json& v, const std::string& what) {
    if (!v.is_array()) throw ParseError("schedule: \"" + what + "\" must be an array");
    std::vector<Natural> out;
    for (const auto& x : v) {
        if (!x.is_number_unsigned()) {
            throw ParseError("schedule: \"" + what + "\" entries must be non-negative integers, got " + x.dump());
        }
        out.push_back(x.get<Natural>());
    }
    return out;
}

}  // namespace

std::vector<Natural> default_shift_sequence(std::size_t count) {
    std::vector<Natural> t;
    for (Natural top = 2; t.size() < count; ++top) {
        for (Natural v = 1; v <= top && t.size() < count; ++v) t.push_back(v);
    }
    return t;
}

IPBlockSchedule IPBlockSchedule::standard(std::size_t blocks) {
    std::vector<Natural> counts;
    for (std::size_t i = 1; i <= blocks; ++i) counts.push_back(i + 1);
    return from_counts(default_shift_sequence(blocks), std::move(counts), 10);
}

IPBlockSchedule IPBlockSchedule::from_counts(std::vector<Natural> shifts, std::vector<Natural> counts,
                                             Natural base, bool align) {
    if (shifts.size() != counts.size()) {
        throw InvalidArgument("schedule has " + std::to_string(shifts.size()) + " shifts but " +
                              std::to_string(counts.size()) + " generator counts");
    }
    IPBlockSchedule s;
    s.shifts = std::move(shifts);
    s.align_origins = align;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        s.generators.push_back(progression(checked_add(base, i + 1), counts[i]));
    }
    s.validate();
    return s;
}

IPBlockSchedule IPBlockSchedule::from_json(std::string_view text, std::size_t blocks) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("schedule: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("schedule must be a JSON object");
    try {
        const bool align = j.value("align", true);
        std::vector<std::vector<Natural>> generators;
        if (j.contains("generators")) {
            const auto& g = j.at("generators");
            if (!g.is_array()) throw ParseError("schedule: \"generators\" must be an array");
            for (const auto& block : g) generators.push_back(natural_array(block, "generators"));
        } else if (j.contains("k")) {
            const auto counts = natural_array(j.at("k"), "k");
            const Natural base = j.value("base", Natural{10});
            for (std::size_t i = 0; i < counts.size(); ++i) {
                generators.push_back(progression(checked_add(base, i + 1), counts[i]));
            }
        } else {
            throw ParseError("schedule needs \"k\" or \"generators\"");
        }
        if (blocks != 0) {
            if (blocks > generators.size()) {
                throw InvalidArgument("schedule defines " + std::to_string(generators.size()) +
                                      " blocks, " + std::to_string(blocks) + " requested");
            }
            generators.resize(blocks);
        }
        std::vector<Natural> shifts = j.contains("t") ? natural_array(j.at("t"), "t")
                                                      : default_shift_sequence(generators.size());
        if (shifts.size() > generators.size()) shifts.resize(generators.size());
        IPBlockSchedule s;
        s.shifts = std::move(shifts);
        s.generators = std::move(generators);
        s.align_origins = align;
        s.validate();
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("schedule: ") + e.what());
    }
}

void IPBlockSchedule::validate() const {
    if (generators.empty()) throw InvalidArgument("schedule needs at least one block");
    if (shifts.size() != generators.size()) {
        throw InvalidArgument("schedule has " + std::to_string(shifts.size()) + " shifts for " +
                              std::to_string(generators.size()) + " blocks");
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& g = generators[i];
        if (g.empty()) throw InvalidArgument("block " + std::to_string(i + 1) + " has no generators");
        if (std::find(g.begin(), g.end(), Natural{0}) != g.end()) {
            throw InvalidArgument("block " + std::to_string(i + 1) + " has a zero generator");
        }
        if (i > 0 && g.size() <= generators[i - 1].size()) {
            throw InvalidArgument("generator counts must increase strictly (block " +
                                  std::to_string(i + 1) + ")");
        }
    }
}

ExampleSequence build_example_sequence(const IPBlockSchedule& schedule) {
    schedule.validate();
    ExampleSequence out{Window({}, 0), {}};
    std::vector<Natural> all;
    Natural gap = 0;
    for (std::size_t i = 0; i < schedule.block_count(); ++i) {
        IPBlock block;
        block.generators = schedule.generators[i];
        block.shift = schedule.shifts[i];
        const Window fs = finite_ip(block.generators);
        const Natural base = checked_add(fs.elements().front(), block.shift);
        if (i == 0) {
            block.origin = 0;
            gap = base;
        } else {
            // The empty stretch before this block at least doubles the previous one.
            const Natural need = std::max<Natural>(1, checked_mul(2, gap));
            const Natural lo = checked_add(checked_add(out.blocks.back().hi, 1), need);
            Natural origin = lo > base ? lo - base : 0;
            if (schedule.align_origins) {
                const Natural l = lcm_upto(block.generators.size());
                origin = checked_mul((origin + l - 1) / l, l);
            }
            block.origin = origin;
            gap = checked_add(base, origin) - out.blocks.back().hi - 1;
        }
        const Natural offset = checked_add(block.shift, block.origin);
        for (Natural x : fs) all.push_back(checked_add(x, offset));
        block.lo = checked_add(fs.elements().front(), offset);
        block.hi = checked_add(fs.elements().back(), offset);
        out.blocks.push_back(std::move(block));
    }
    const Natural horizon = all.back();
    out.window = Window(std::move(all), horizon);
    return out;
}

Verdict verify_not_pws(const Window& a, Natural gap_bound, Natural block_length) {
    const Verdict v = piecewise_syndetic_certificate(a, gap_bound, block_length);
    if (v.is_holds()) {
        return Verdict::fails(v.witness, "piecewise-syndetic certificate found: " + v.note);
    }
    if (v.is_fails()) {
        return Verdict::holds(v.witness, "no piecewise-syndetic certificate with gap " +
                                             std::to_string(gap_bound) + " and block " +
                                             std::to_string(block_length));
    }
    return v;
}

Verdict verify_shifted_recurrence(const Window& a, Natural max_period, ShiftRange shifts) {
    return shift_family_test(a, shifts, [max_period](const Window& w) {
        return r_sequence_cyclic(w, max_period).verdict;
    });
}

}  // namespace rseq
