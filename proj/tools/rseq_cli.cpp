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

// rseq: command-line front-end over the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rseq/rseq.h"

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20260417;
constexpr const char* kBuiltins[] = {"naturals", "evens", "odds", "squares", "cubes"};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(rseq_status s) {
    if (s != RSEQ_OK) {
        std::string msg = rseq_status_string(s);
        if (const char* detail = rseq_last_error(); detail && *detail) msg += ": " + std::string(detail);
        throw Failure(msg);
    }
}

struct WindowDeleter {
    void operator()(rseq_window* w) const { rseq_window_destroy(w); }
};
using WindowHandle = std::unique_ptr<rseq_window, WindowDeleter>;

std::string take(char* s) {
    std::string out(s);
    rseq_string_free(s);
    return out;
}

struct Common {
    std::string format = "json";
    std::string out;
    std::uint64_t seed = kDefaultSeed;
};

void add_common(CLI::App* app, Common& c, bool with_out = true) {
    app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    if (with_out) app->add_option("--out", c.out, "Write the report to this file instead of stdout");
    app->add_option("--seed", c.seed, "Seed recorded in the report and used by randomized sweeps");
}

// Loads a sequence file, or a builtin name observed up to `horizon`. A
// horizon given for a file truncates it.
WindowHandle load_input(const std::string& input, std::uint64_t horizon, bool horizon_given) {
    rseq_window* w = nullptr;
    if (!std::filesystem::exists(input)) {
        for (const char* name : kBuiltins) {
            if (input == name) {
                check(rseq_window_builtin(name, horizon, &w));
                return WindowHandle(w);
            }
        }
    }
    check(rseq_window_load(input.c_str(), &w));
    WindowHandle h(w);
    if (horizon_given) {
        rseq_window* t = nullptr;
        check(rseq_window_truncate(h.get(), horizon, &t));
        h.reset(t);
    }
    return h;
}

void render_text(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        if (j.size() > 40) {
            os << prefix << ": [" << j.size() << " entries]\n";
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else if (j.is_array() && j.size() > 40) {
        os << prefix << ": [" << j.size() << " values]\n";
    } else if (j.is_string()) {
        os << prefix << ": " << j.get<std::string>() << '\n';
    } else {
        os << prefix << ": " << j.dump() << '\n';
    }
}

void deliver(const std::string& report, const Common& c) {
    std::string body = report;
    if (c.format == "text") {
        std::ostringstream os;
        render_text(json::parse(report), "", os);
        body = os.str();
    }
    if (c.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(c.out);
    if (!f || !(f << body)) throw Failure("cannot write " + c.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Window-bounded recurrence and R-sequence checks"};
    app.require_subcommand(1);

    Common common;
    std::string input;
    std::uint64_t horizon = 10000;
    std::uint64_t gap = 10, run = 10, block = 100, density_length = 1000;

    auto* classify = app.add_subcommand("classify", "Syndetic, thick, piecewise-syndetic and density verdicts");
    classify->add_option("input", input, "Sequence file or builtin name")->required();
    classify->add_option("--horizon", horizon, "Builtin horizon, or truncation for files")->check(CLI::PositiveNumber);
    classify->add_option("--gap", gap, "Gap bound")->check(CLI::PositiveNumber);
    classify->add_option("--run", run, "Run length for thickness")->check(CLI::PositiveNumber);
    classify->add_option("--block", block, "Block length for the piecewise-syndetic certificate")->check(CLI::PositiveNumber);
    classify->add_option("--density-length", density_length, "Interval length for the Banach density estimate")
        ->check(CLI::PositiveNumber);
    add_common(classify, common);

    std::string family;
    double eps = 0.05, grid = 0.0;
    std::string test = "r-sequence";
    auto* recurrence = app.add_subcommand("recurrence", "R-sequence or Birkhoff test against a family of systems");
    recurrence->add_option("input", input, "Sequence file or builtin name")->required();
    recurrence->add_option("family", family, "cyclic:<=M or a system spec (cyclic:m, rot:a, odo:p^d, skew:a, prod(X,Y))")
        ->required();
    recurrence->add_option("--horizon", horizon, "Builtin horizon, or truncation for files")->check(CLI::PositiveNumber);
    recurrence->add_option("--eps", eps, "Cover mesh for metric systems")->check(CLI::Range(1e-9, 1.0));
    recurrence->add_option("--grid", grid, "Start grid resolution (defaults to eps)")->check(CLI::Range(1e-9, 1.0));
    recurrence->add_option("--test", test, "r-sequence or birkhoff")->check(CLI::IsMember({"r-sequence", "birkhoff"}));
    add_common(recurrence, common);

    auto* permpoly = app.add_subcommand("permpoly", "Permutation polynomials over prime fields");
    permpoly->require_subcommand(1);
    std::string poly;
    std::uint64_t p = 0, cap = 10000;
    auto* pcheck = permpoly->add_subcommand("check", "Hermite's criterion against brute-force evaluation");
    pcheck->add_option("poly", poly, "Integer polynomial, e.g. x^2+3x+1")->required();
    pcheck->add_option("--p", p, "Prime modulus")->required()->check(CLI::PositiveNumber);
    add_common(pcheck, common);
    auto* pfind = permpoly->add_subcommand("find-prime", "Least prime p = 1 mod deg f where f misses a residue");
    pfind->add_option("poly", poly, "Integer polynomial of degree >= 2")->required();
    pfind->add_option("--cap", cap, "Largest prime to try")->check(CLI::PositiveNumber);
    add_common(pfind, common);

    auto* construct = app.add_subcommand("construct", "Build the IP-block sequence and verify it");
    construct->require_subcommand(1);
    auto* example = construct->add_subcommand("example", "Dense-orbit sequence that is not piecewise syndetic");
    std::uint64_t blocks = 30, max_period = 20;
    std::string schedule_path, seq_out, report_out, shifts = "-10..10";
    example->add_option("--blocks", blocks, "Number of blocks")->check(CLI::PositiveNumber);
    example->add_option("--schedule", schedule_path, "JSON schedule {\"t\":[...],\"k\":[...],\"base\":b}")
        ->check(CLI::ExistingFile);
    example->add_option("--out", seq_out, "Write the sequence file here");
    example->add_option("--report", report_out, "Write the report here instead of stdout");
    example->add_option("--gap", gap, "Largest gap bound checked")->check(CLI::PositiveNumber);
    example->add_option("--block", block, "Block length for the piecewise-syndetic check")->check(CLI::PositiveNumber);
    example->add_option("--max-period", max_period, "Largest cyclic period")->check(CLI::PositiveNumber);
    example->add_option("--shifts", shifts, "Shift range a..b");
    example->add_option("--density-length", density_length, "Interval length for the Banach density estimate")
        ->check(CLI::PositiveNumber);
    add_common(example, common, false);

    std::string left, right;
    auto* prod = app.add_subcommand("product", "Transitivity of a product of two cycles");
    prod->add_option("left", left, "cyclic:m or odo:p^d")->required();
    prod->add_option("right", right, "cyclic:n or odo:q^e")->required();
    add_common(prod, common);

    std::uint64_t count = 500;
    double density_min = 0.0005, density_max = 0.5;
    std::string cross_shifts = "-6..6";
    std::uint64_t cross_period = 12;
    auto* cross = app.add_subcommand("crosscheck",
                                     "Compare three characterizations of cyclic R-sequences on windows");
    cross->add_option("input", input, "Sequence file or builtin name; random windows when omitted");
    cross->add_option("--horizon", horizon, "Horizon of random windows or builtins")->check(CLI::PositiveNumber);
    cross->add_option("--max-period", cross_period, "Largest cyclic period")->check(CLI::PositiveNumber);
    cross->add_option("--shifts", cross_shifts, "Shift range a..b");
    cross->add_option("--count", count, "Number of random windows")->check(CLI::PositiveNumber);
    cross->add_option("--density-min", density_min, "Least random density")->check(CLI::Range(1e-9, 1.0));
    cross->add_option("--density-max", density_max, "Largest random density")->check(CLI::Range(1e-9, 1.0));
    add_common(cross, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        char* raw = nullptr;
        json config{{"seed", common.seed}};
        if (classify->parsed()) {
            const bool given = classify->count("--horizon") > 0;
            auto w = load_input(input, horizon, given);
            config.update({{"subcommand", "classify"}, {"input", input}, {"gap", gap}, {"run", run},
                           {"block", block}, {"density_length", density_length}});
            if (given) config["horizon"] = horizon;
            check(rseq_report_classify(w.get(), input.c_str(), config.dump().c_str(), &raw));
        } else if (recurrence->parsed()) {
            const bool given = recurrence->count("--horizon") > 0;
            auto w = load_input(input, horizon, given);
            config.update({{"subcommand", "recurrence"}, {"input", input}, {"family", family}, {"eps", eps},
                           {"grid", grid > 0 ? grid : eps}, {"test", test}});
            if (given) config["horizon"] = horizon;
            check(rseq_report_recurrence(w.get(), input.c_str(), family.c_str(), config.dump().c_str(), &raw));
        } else if (pcheck->parsed()) {
            config.update({{"subcommand", "permpoly check"}, {"poly", poly}, {"p", p}});
            check(rseq_report_permpoly_check(poly.c_str(), p, config.dump().c_str(), &raw));
        } else if (pfind->parsed()) {
            config.update({{"subcommand", "permpoly find-prime"}, {"poly", poly}, {"cap", cap}});
            check(rseq_report_find_prime(poly.c_str(), cap, config.dump().c_str(), &raw));
        } else if (example->parsed()) {
            std::string schedule;
            if (!schedule_path.empty()) {
                std::ifstream f(schedule_path);
                std::stringstream ss;
                ss << f.rdbuf();
                schedule = ss.str();
            }
            config.update({{"subcommand", "construct example"}, {"blocks", blocks}, {"gap", gap},
                           {"block", block}, {"max_period", max_period}, {"shifts", shifts},
                           {"density_length", density_length}});
            if (!schedule_path.empty()) config["schedule"] = schedule_path;
            rseq_window* built = nullptr;
            check(rseq_report_construct(schedule_path.empty() ? nullptr : schedule.c_str(),
                                        example->count("--blocks") > 0 || schedule_path.empty() ? blocks : 0,
                                        config.dump().c_str(), &built, &raw));
            WindowHandle w(built);
            if (!seq_out.empty()) {
                check(rseq_window_save(w.get(), seq_out.c_str(), "IP-block sequence built by rseq construct example"));
            }
            common.out = report_out;
        } else if (prod->parsed()) {
            config.update({{"subcommand", "product"}, {"left", left}, {"right", right}});
            check(rseq_report_product(left.c_str(), right.c_str(), config.dump().c_str(), &raw));
        } else if (cross->parsed()) {
            config.update({{"subcommand", "crosscheck"}, {"max_period", cross_period}, {"shifts", cross_shifts}});
            WindowHandle w;
            if (!input.empty()) {
                const bool given = cross->count("--horizon") > 0;
                w = load_input(input, horizon, given);
                config["input"] = input;
                if (given) config["horizon"] = horizon;
            } else {
                config.update({{"count", count}, {"horizon", horizon}, {"density_min", density_min},
                               {"density_max", density_max}});
            }
            check(rseq_report_crosscheck(w.get(), input.c_str(), config.dump().c_str(), &raw));
        }
        deliver(take(raw), common);
        return 0;
    } catch (const Failure& e) {
        std::cerr << "rseq: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "rseq: " << e.what() << '\n';
        return 1;
    }
}
