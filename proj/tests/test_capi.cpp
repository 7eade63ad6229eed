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

// Exercises the shared library strictly through its C interface.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "rseq/rseq.h"

using nlohmann::json;

namespace {

struct Window {
    rseq_window* h = nullptr;
    ~Window() { rseq_window_destroy(h); }
};

json report(rseq_status s, char** out) {
    char* text = *out;
    EXPECT_EQ(s, RSEQ_OK) << rseq_last_error();
    if (s != RSEQ_OK) return {};
    json j = json::parse(text);
    rseq_string_free(text);
    return j;
}

}  // namespace

TEST(CApi, WindowLifecycle) {
    const uint64_t elems[] = {1, 4, 9};
    Window w;
    ASSERT_EQ(rseq_window_create(elems, 3, 10, &w.h), RSEQ_OK);
    uint64_t horizon = 0;
    size_t count = 0;
    ASSERT_EQ(rseq_window_info(w.h, &horizon, &count), RSEQ_OK);
    EXPECT_EQ(horizon, 10u);
    EXPECT_EQ(count, 3u);
    uint64_t buf[2];
    size_t written = 0;
    ASSERT_EQ(rseq_window_elements(w.h, buf, 2, &written), RSEQ_OK);
    EXPECT_EQ(written, 2u);
    EXPECT_EQ(buf[1], 4u);

    Window t;
    ASSERT_EQ(rseq_window_truncate(w.h, 5, &t.h), RSEQ_OK);
    ASSERT_EQ(rseq_window_info(t.h, &horizon, &count), RSEQ_OK);
    EXPECT_EQ(horizon, 5u);
    EXPECT_EQ(count, 2u);
}

TEST(CApi, ErrorsMapToStatusCodes) {
    const uint64_t bad[] = {4, 1};
    rseq_window* w = nullptr;
    EXPECT_EQ(rseq_window_create(bad, 2, 10, &w), RSEQ_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(w, nullptr);
    EXPECT_NE(std::string(rseq_last_error()), "");
    EXPECT_EQ(rseq_window_builtin("primes", 10, &w), RSEQ_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(rseq_window_load("/nonexistent/rseq.txt", &w), RSEQ_ERR_IO);

    const auto path = std::filesystem::temp_directory_path() / "rseq_capi_bad.txt";
    std::FILE* f = std::fopen(path.c_str(), "w");
    std::fputs("!horizon 10\n3\n2\n", f);
    std::fclose(f);
    EXPECT_EQ(rseq_window_load(path.c_str(), &w), RSEQ_ERR_PARSE);
    EXPECT_NE(std::string(rseq_last_error()).find("line 3"), std::string::npos) << rseq_last_error();
    std::filesystem::remove(path);

    rseq_verdict v;
    EXPECT_EQ(rseq_is_syndetic(nullptr, 2, &v), RSEQ_ERR_INVALID_HANDLE);
    rseq_system* sys = nullptr;
    EXPECT_EQ(rseq_system_parse("torus:3", &sys), RSEQ_ERR_PARSE);
    char* out = nullptr;
    EXPECT_EQ(rseq_report_find_prime("100x^2", 50, nullptr, &out), RSEQ_ERR_CAP_EXCEEDED);
    EXPECT_EQ(rseq_report_find_prime("x^2", 100, "[1]", &out), RSEQ_ERR_PARSE);
    EXPECT_EQ(rseq_report_find_prime("x^2", 100, "{not json", &out), RSEQ_ERR_PARSE);
    EXPECT_EQ(rseq_report_permpoly_check("x^2", 9, nullptr, &out), RSEQ_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(out, nullptr);

    // Success clears the message.
    ASSERT_EQ(rseq_window_builtin("evens", 10, &w), RSEQ_OK);
    EXPECT_STREQ(rseq_last_error(), "");
    rseq_window_destroy(w);
    EXPECT_STREQ(rseq_status_string(RSEQ_ERR_CAP_EXCEEDED), "cap exceeded");
}

TEST(CApi, LastErrorIsPerThread) {
    rseq_window* w = nullptr;
    EXPECT_EQ(rseq_window_builtin("primes", 10, &w), RSEQ_ERR_INVALID_ARGUMENT);
    std::string other = "unset";
    std::thread([&] { other = rseq_last_error(); }).join();
    EXPECT_EQ(other, "");
    EXPECT_NE(std::string(rseq_last_error()), "");
}

TEST(CApi, VerdictStructs) {
    Window sq;
    ASSERT_EQ(rseq_window_builtin("squares", 10000, &sq.h), RSEQ_OK);
    rseq_verdict v;
    ASSERT_EQ(rseq_r_sequence_cyclic(sq.h, 3, &v), RSEQ_OK);
    EXPECT_EQ(v.status, RSEQ_FAILS);
    ASSERT_EQ(v.witness_len, 2u);
    EXPECT_EQ(v.witness[0], 3);
    EXPECT_EQ(v.witness[1], 2);

    Window ev;
    ASSERT_EQ(rseq_window_builtin("evens", 1000, &ev.h), RSEQ_OK);
    ASSERT_EQ(rseq_is_syndetic(ev.h, 2, &v), RSEQ_OK);
    EXPECT_EQ(v.status, RSEQ_HOLDS);
    ASSERT_EQ(rseq_is_thick(ev.h, 2, &v), RSEQ_OK);
    EXPECT_EQ(v.status, RSEQ_FAILS);
    ASSERT_EQ(rseq_pws_certificate(ev.h, 2, 100, &v), RSEQ_OK);
    EXPECT_EQ(v.status, RSEQ_HOLDS);
    uint64_t num = 0, den = 0;
    ASSERT_EQ(rseq_banach_density(ev.h, 100, &num, &den), RSEQ_OK);
    EXPECT_EQ(num, 1u);
    EXPECT_EQ(den, 2u);

    rseq_system* sys = nullptr;
    ASSERT_EQ(rseq_system_parse("rot:1/2", &sys), RSEQ_OK);
    ASSERT_EQ(rseq_is_totally_minimal(sys, &v), RSEQ_OK);
    EXPECT_EQ(v.status, RSEQ_FAILS);
    EXPECT_EQ(v.witness[0], 2);
    char* spec = nullptr;
    ASSERT_EQ(rseq_system_spec(sys, &spec), RSEQ_OK);
    EXPECT_STREQ(spec, "rot:1/2");
    rseq_string_free(spec);
    rseq_system_destroy(sys);
}

TEST(CApi, ReportsAreDeterministicAndEmbedConfig) {
    Window sq;
    ASSERT_EQ(rseq_window_builtin("squares", 10000, &sq.h), RSEQ_OK);
    const char* cfg = R"({"seed": 7, "eps": 0.05})";
    char* a = nullptr;
    char* b = nullptr;
    ASSERT_EQ(rseq_report_recurrence(sq.h, "squares", "rot:golden", cfg, &a), RSEQ_OK);
    ASSERT_EQ(rseq_report_recurrence(sq.h, "squares", "rot:golden", cfg, &b), RSEQ_OK);
    EXPECT_STREQ(a, b);
    rseq_string_free(b);
    const json j = report(RSEQ_OK, &a);
    EXPECT_EQ(j["verdict"], "holds");
    EXPECT_EQ(j["config"]["seed"], 7);
    EXPECT_EQ(j["sequence"]["count"], 101);
    for (const char* key : {"sequence", "family", "verdict", "witness", "per_system", "params"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }

    char* c = nullptr;
    const json cyc = report(rseq_report_recurrence(sq.h, "squares", "cyclic:<=3", nullptr, &c), &c);
    EXPECT_EQ(cyc["verdict"], "fails");
    EXPECT_EQ(cyc["witness"], json::array({3, 2}));
    EXPECT_EQ(cyc["per_system"].size(), 3u);
    EXPECT_EQ(rseq_report_recurrence(sq.h, "squares", "cyclic:<=x", nullptr, &c), RSEQ_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(rseq_report_recurrence(sq.h, "squares", "sphere:2", nullptr, &c), RSEQ_ERR_PARSE);
}

TEST(CApi, ClassifyReport) {
    Window ev;
    ASSERT_EQ(rseq_window_builtin("evens", 1000, &ev.h), RSEQ_OK);
    char* out = nullptr;
    const json j = report(rseq_report_classify(ev.h, "evens", R"({"gap": 2})", &out), &out);
    EXPECT_EQ(j["syndetic"]["verdict"], "holds");
    EXPECT_EQ(j["thick"]["verdict"], "fails");
    EXPECT_EQ(j["piecewise_syndetic"]["verdict"], "holds");
    EXPECT_EQ(j["banach_density"]["num"], 1);
    EXPECT_EQ(j["banach_density"]["den"], 2);
    EXPECT_EQ(rseq_report_classify(ev.h, "evens", R"({"gap": -2})", &out), RSEQ_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(rseq_report_classify(ev.h, "evens", R"({"gap": 0})", &out), RSEQ_ERR_INVALID_ARGUMENT);
}

TEST(CApi, PermpolyProductConstructCrosscheck) {
    char* out = nullptr;
    const json chk = report(rseq_report_permpoly_check("x^3", 5, nullptr, &out), &out);
    EXPECT_EQ(chk["permutes"], true);
    EXPECT_EQ(chk["agree"], true);

    const json fp = report(rseq_report_find_prime("x^2", 100, nullptr, &out), &out);
    EXPECT_EQ(fp["p"], 3);
    EXPECT_EQ(fp["missing"], 2);
    EXPECT_EQ(fp["image_size"], 2);

    const json pr = report(rseq_report_product("cyclic:2", "cyclic:3", nullptr, &out), &out);
    EXPECT_EQ(pr["transitive"], true);
    EXPECT_EQ(pr["orbit_size"], 6);
    const json pr2 = report(rseq_report_product("cyclic:2", "odo:2^2", nullptr, &out), &out);
    EXPECT_EQ(pr2["transitive"], false);
    EXPECT_EQ(pr2["orbit_size"], 4);
    EXPECT_EQ(rseq_report_product("rot:golden", "cyclic:3", nullptr, &out), RSEQ_ERR_INVALID_ARGUMENT);

    Window built;
    const json con = report(rseq_report_construct(nullptr, 30, nullptr, &built.h, &out), &out);
    EXPECT_EQ(con["not_pws"]["verdict"], "holds");
    EXPECT_EQ(con["shifted_recurrence"]["verdict"], "holds");
    EXPECT_EQ(con["blocks"].size(), 30u);
    size_t count = 0;
    ASSERT_EQ(rseq_window_info(built.h, nullptr, &count), RSEQ_OK);
    EXPECT_EQ(count, con["sequence"]["count"].get<size_t>());

    const json cc = report(rseq_report_crosscheck(nullptr, "", R"({"count": 5, "horizon": 2000})", &out), &out);
    EXPECT_EQ(cc["verdict"], "holds");
    EXPECT_EQ(cc["disagreements"], 0);
    EXPECT_EQ(cc["windows"].size(), 5u);
    EXPECT_EQ(cc["sequence"]["seed"], 20260417);
}
