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

#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rseq/constructions.hpp"
#include "rseq/errors.hpp"
#include "rseq/intsets.hpp"
#include "rseq/permpoly.hpp"
#include "rseq/seqfile.hpp"
#include "rseq/systems.hpp"

namespace rseq::report {
namespace {

template <typename T>
T param(const json& config, const char* key, T fallback) {
    if (!config.is_object() || !config.contains(key)) return fallback;
    const json& v = config.at(key);
    if constexpr (std::is_floating_point_v<T>) {
        if (!v.is_number()) throw InvalidArgument(std::string(key) + " must be a number");
    } else {
        if (!v.is_number_unsigned()) throw InvalidArgument(std::string(key) + " must be a natural number");
    }
    return v.get<T>();
}

std::uint64_t positive(const json& config, const char* key, std::uint64_t fallback) {
    const auto v = param<std::uint64_t>(config, key, fallback);
    if (v == 0) throw InvalidArgument(std::string(key) + " must be positive");
    return v;
}

double unit_interval(const json& config, const char* key, double fallback) {
    const auto v = param<double>(config, key, fallback);
    if (!(v > 0.0 && v <= 1.0)) throw InvalidArgument(std::string(key) + " must lie in (0, 1]");
    return v;
}

ShiftRange shifts_param(const json& config, const char* fallback) {
    if (config.is_object() && config.contains("shifts")) {
        if (!config.at("shifts").is_string()) throw InvalidArgument("shifts must be a string a..b");
        return parse_shifts(config.at("shifts").get<std::string>());
    }
    return parse_shifts(fallback);
}

json state_json(const State& s) {
    return {{"discrete", s.discrete}, {"continuous", s.continuous}};
}

// Intervals longer than the window are shortened to the horizon; a window
// of horizon 0 has no estimate.
json density_json(const Window& w, std::uint64_t length) {
    length = std::min<std::uint64_t>(length, w.horizon());
    if (length == 0) return nullptr;
    const Ratio r = banach_density_estimate(w, length);
    return {{"interval_length", length}, {"num", r.num}, {"den", r.den}, {"value", r.value()}};
}

json with_config(json report, const json& config) {
    report["config"] = config.is_null() ? json::object() : config;
    return report;
}

json hermite_json(const HermiteEvidence& ev) {
    const char* failure = ev.failure == HermiteEvidence::Failure::None ? "none"
                          : ev.failure == HermiteEvidence::Failure::NotMonicTopPower
                              ? "top power not monic of degree p-1"
                              : "low power of degree above p-2";
    return {{"permutes", ev.permutes}, {"failure", failure}, {"k", ev.k}, {"degree", ev.degree},
            {"leading", ev.leading}};
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

ShiftRange parse_shifts(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw InvalidArgument("shift range must look like a..b, got " + text);
    auto read = [&](const std::string& s) -> std::int64_t {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) throw InvalidArgument("bad shift bound \"" + s + "\"");
        return v;
    };
    ShiftRange r{read(text.substr(0, dots)), read(text.substr(dots + 2))};
    if (r.lo > r.hi) throw InvalidArgument("empty shift range " + text);
    if (r.hi - r.lo > 1'000'000) throw InvalidArgument("shift range too wide: " + text);
    return r;
}

json verdict_json(const Verdict& v) {
    return {{"verdict", to_string(v.status)}, {"witness", v.witness}, {"note", v.note}};
}

json sequence_json(const Window& w, const std::string& source) {
    return {{"source", source}, {"horizon", w.horizon()}, {"count", w.size()}};
}

json classify(const Window& w, const std::string& source, const json& config) {
    const auto gap = positive(config, "gap", 10);
    const auto run = positive(config, "run", 10);
    const auto block = positive(config, "block", 100);
    const auto length = positive(config, "density_length", 1000);
    json r;
    r["sequence"] = sequence_json(w, source);
    r["syndetic"] = verdict_json(is_syndetic(w, gap));
    r["syndetic"]["gap_bound"] = gap;
    r["thick"] = verdict_json(is_thick(w, run));
    r["thick"]["run_length"] = run;
    r["piecewise_syndetic"] = verdict_json(piecewise_syndetic_certificate(w, gap, block));
    r["piecewise_syndetic"]["gap_bound"] = gap;
    r["piecewise_syndetic"]["block_length"] = block;
    r["banach_density"] = density_json(w, length);
    return with_config(std::move(r), config);
}

json recurrence(const Window& w, const std::string& source, const std::string& family,
                const json& config) {
    json r;
    r["sequence"] = sequence_json(w, source);
    constexpr std::string_view kCyclic = "cyclic:<=";
    if (family.rfind(kCyclic, 0) == 0) {
        const std::string bound = family.substr(kCyclic.size());
        std::size_t used = 0;
        unsigned long long m = 0;
        try {
            m = std::stoull(bound, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (bound.empty() || used != bound.size() || m == 0) {
            throw InvalidArgument("bad cyclic family bound in \"" + family + "\"");
        }
        if (m > 1'000'000) throw CapExceeded("cyclic family bound above 10^6");
        const auto rep = r_sequence_cyclic(w, m);
        r.update(verdict_json(rep.verdict));
        r["family"] = rep.family;
        r["test"] = "r-sequence";
        json per = json::array();
        for (const auto& s : rep.per_system) {
            json e = verdict_json(s.verdict);
            e["system"] = s.system;
            e["cells_total"] = s.cells_total;
            e["cells_hit"] = s.cells_hit;
            per.push_back(std::move(e));
        }
        r["per_system"] = std::move(per);
        r["params"] = {{"max_period", m}};
        return with_config(std::move(r), config);
    }

    const auto sys = parse_system(family);
    const double eps = unit_interval(config, "eps", 0.05);
    const double grid = unit_interval(config, "grid", eps);
    const std::string test = config.is_object() ? config.value("test", std::string("r-sequence"))
                                                : std::string("r-sequence");
    r["params"] = {{"eps", eps}, {"grid", grid}};
    r["test"] = test;
    if (test == "birkhoff") {
        r.update(verdict_json(birkhoff_window_test(w, *sys, eps, grid)));
        r["family"] = sys->spec() + " eps=" + std::to_string(eps);
        r["per_system"] = json::array();
        return with_config(std::move(r), config);
    }
    if (test != "r-sequence") throw InvalidArgument("unknown test \"" + test + "\" (r-sequence, birkhoff)");
    const auto rep = r_sequence_metric(w, *sys, eps, grid);
    r.update(verdict_json(rep.verdict));
    r["family"] = rep.family;
    json per = json::array();
    for (const auto& s : rep.per_system) {
        json e = verdict_json(s.verdict);
        e["system"] = s.system;
        e["cells_total"] = s.cells_total;
        e["cells_hit"] = s.cells_hit;
        if (s.start) e["start"] = state_json(*s.start);
        per.push_back(std::move(e));
    }
    r["per_system"] = std::move(per);
    return with_config(std::move(r), config);
}

json permpoly_check(const std::string& poly, std::uint64_t p, const json& config) {
    const PrimeField field(p);
    const IntPoly f = IntPoly::parse(poly);
    const PolyModP g = f.mod(field);
    const auto hermite = hermite_check(g);
    const auto brute = brute_permutation_check(g);
    json r;
    r["poly"] = f.str();
    r["p"] = p;
    r["permutes"] = brute.permutes;
    r["hermite"] = hermite_json(hermite);
    r["brute"] = {{"permutes", brute.permutes}, {"image_size", brute.image.size()}};
    r["agree"] = hermite.permutes == brute.permutes;
    return with_config(std::move(r), config);
}

json find_prime(const std::string& poly, std::uint64_t cap, const json& config) {
    const IntPoly f = IntPoly::parse(poly);
    const auto found = find_non_surjective_prime(f, cap);
    json r;
    r["poly"] = f.str();
    r["cap"] = cap;
    r["p"] = found.p;
    r["missing"] = found.missing;
    r["image_size"] = found.image.size();
    r["candidates"] = found.candidates;
    return with_config(std::move(r), config);
}

json construct(const std::optional<std::string>& schedule_json, std::uint64_t blocks,
               const json& config, std::optional<Window>* built) {
    const IPBlockSchedule schedule = schedule_json ? IPBlockSchedule::from_json(*schedule_json, blocks)
                                                   : IPBlockSchedule::standard(blocks);
    const auto example = build_example_sequence(schedule);
    const Window& w = example.window;
    const auto gap = positive(config, "gap", 10);
    const auto block = positive(config, "block", 100);
    const auto max_period = positive(config, "max_period", 20);
    const auto shifts = shifts_param(config, "-10..10");
    const auto length = positive(config, "density_length", 1000);

    json r;
    r["sequence"] = sequence_json(w, "construct");
    json blocks_json = json::array();
    for (const auto& b : example.blocks) {
        blocks_json.push_back({{"generators", b.generators},
                               {"shift", b.shift},
                               {"origin", b.origin},
                               {"lo", b.lo},
                               {"hi", b.hi}});
    }
    r["blocks"] = std::move(blocks_json);

    json per_gap = json::array();
    std::optional<Verdict> not_pws;
    for (std::uint64_t g = 1; g <= gap; ++g) {
        Verdict v = verify_not_pws(w, g, block);
        json e = verdict_json(v);
        e["gap_bound"] = g;
        per_gap.push_back(std::move(e));
        if (!not_pws && !v.is_holds()) not_pws = std::move(v);
    }
    json np = verdict_json(not_pws ? *not_pws
                                   : Verdict::holds({}, "no piecewise-syndetic certificate for any gap <= " +
                                                            std::to_string(gap)));
    np["block_length"] = block;
    np["per_gap"] = std::move(per_gap);
    r["not_pws"] = std::move(np);

    json sr = verdict_json(verify_shifted_recurrence(w, max_period, shifts));
    sr["max_period"] = max_period;
    sr["shifts"] = std::to_string(shifts.lo) + ".." + std::to_string(shifts.hi);
    r["shifted_recurrence"] = std::move(sr);
    r["banach_density"] = density_json(w, length);
    if (built != nullptr) *built = w;
    return with_config(std::move(r), config);
}

json product(const std::string& left, const std::string& right, const json& config) {
    const auto a = parse_system(left);
    const auto b = parse_system(right);
    auto cycle_length = [](const System& s) {
        if (s.kind() != SystemKind::Cyclic && s.kind() != SystemKind::Odometer) {
            throw InvalidArgument("product transitivity is enumerated for cyclic and odometer systems, got " +
                                  s.spec());
        }
        return finite_size(s);
    };
    const Natural m = cycle_length(*a), n = cycle_length(*b);
    if (m > 0 && n > 100'000'000 / m) throw CapExceeded("product has more than 10^8 points");
    const auto t = product_transitive_finite(m, n);
    json r;
    r["left"] = a->spec();
    r["right"] = b->spec();
    r["sizes"] = {m, n};
    r["gcd"] = std::gcd(m, n);
    r["transitive"] = t.coprime;
    r["orbit_size"] = t.orbit_size;
    r["consistent"] = t.consistent;
    r["totally_minimal"] = verdict_json(is_totally_minimal(*rseq::product(a, b)));
    return with_config(std::move(r), config);
}

json crosscheck(const Window* w, const std::string& source, const json& config) {
    const auto max_period = positive(config, "max_period", 12);
    const auto shifts = shifts_param(config, "-6..6");
    json r;
    r["params"] = {{"max_period", max_period},
                   {"shifts", std::to_string(shifts.lo) + ".." + std::to_string(shifts.hi)}};
    auto entry = [&](const Window& win, const CrosscheckReport& rep) {
        json e = verdict_json(rep.verdict);
        e["count"] = win.size();
        e["instances"] = rep.instances;
        if (rep.first_failure) {
            e["first_failure"] = {{"m", rep.first_failure->first}, {"shift", rep.first_failure->second}};
        } else {
            e["first_failure"] = nullptr;
        }
        return e;
    };
    if (w != nullptr) {
        const auto rep = equivalence_crosscheck(*w, max_period, shifts);
        r["sequence"] = sequence_json(*w, source);
        r.update(verdict_json(rep.verdict));
        r["windows"] = json::array({entry(*w, rep)});
        r["disagreements"] = rep.verdict.is_fails() ? 1 : 0;
        return with_config(std::move(r), config);
    }

    const auto seed = param<std::uint64_t>(config, "seed", kDefaultSeed);
    const auto count = positive(config, "count", 500);
    const auto horizon = positive(config, "horizon", 10000);
    const double dmin = unit_interval(config, "density_min", 0.0005);
    const double dmax = unit_interval(config, "density_max", 0.5);
    if (dmin > dmax) throw InvalidArgument("density_min exceeds density_max");
    if (count > 100'000) throw CapExceeded("more than 10^5 crosscheck windows");

    json windows = json::array();
    std::uint64_t disagreements = 0, instances = 0;
    std::optional<Verdict> first_bad;
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t wseed = splitmix(seed + i);
        const double u = static_cast<double>(splitmix(wseed) >> 11) * 0x1.0p-53;
        const double density = dmin * std::pow(dmax / dmin, u);
        const Window win = random_window(wseed, horizon, density);
        const auto rep = equivalence_crosscheck(win, max_period, shifts);
        instances += rep.instances;
        json e = entry(win, rep);
        e["seed"] = wseed;
        e["density"] = density;
        windows.push_back(std::move(e));
        if (rep.verdict.is_fails()) {
            ++disagreements;
            if (!first_bad) {
                std::vector<std::int64_t> wit{static_cast<std::int64_t>(i)};
                wit.insert(wit.end(), rep.verdict.witness.begin(), rep.verdict.witness.end());
                first_bad = Verdict::fails(std::move(wit), "window " + std::to_string(i) + ": " + rep.verdict.note);
            }
        }
    }
    r["sequence"] = {{"source", "random"}, {"horizon", horizon}, {"count", count}, {"seed", seed}};
    r.update(verdict_json(first_bad ? *first_bad
                                    : Verdict::holds({}, "three characterizations agree on " +
                                                             std::to_string(instances) + " instances over " +
                                                             std::to_string(count) + " windows")));
    r["windows"] = std::move(windows);
    r["disagreements"] = disagreements;
    return with_config(std::move(r), config);
}

}  // namespace rseq::report
