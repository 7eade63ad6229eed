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

#include "rseq/rseq.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "report.hpp"
#include "rseq/errors.hpp"
#include "rseq/intsets.hpp"
#include "rseq/recurrence.hpp"
#include "rseq/seqfile.hpp"
#include "rseq/systems.hpp"

struct rseq_window {
    rseq::Window value;
};

struct rseq_system {
    rseq::SystemPtr value;
};

namespace {

thread_local std::string g_last_error;

rseq_status fail(rseq_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

rseq_status from_code(rseq::ErrorCode code) {
    switch (code) {
        case rseq::ErrorCode::InvalidArgument: return RSEQ_ERR_INVALID_ARGUMENT;
        case rseq::ErrorCode::Parse: return RSEQ_ERR_PARSE;
        case rseq::ErrorCode::Io: return RSEQ_ERR_IO;
        case rseq::ErrorCode::CapExceeded: return RSEQ_ERR_CAP_EXCEEDED;
        case rseq::ErrorCode::SpaceMismatch: return RSEQ_ERR_SPACE_MISMATCH;
        case rseq::ErrorCode::Overflow: return RSEQ_ERR_OVERFLOW;
    }
    return RSEQ_ERR_UNKNOWN;
}

template <typename F>
rseq_status guarded(F&& body) {
    try {
        g_last_error.clear();
        body();
        return RSEQ_OK;
    } catch (const rseq::Error& e) {
        return fail(from_code(e.code()), e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(RSEQ_ERR_PARSE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(RSEQ_ERR_CAP_EXCEEDED, "out of memory");
    } catch (const std::exception& e) {
        return fail(RSEQ_ERR_UNKNOWN, e.what());
    } catch (...) {
        return fail(RSEQ_ERR_UNKNOWN, "unknown error");
    }
}

void require(const void* p, const char* what) {
    if (p == nullptr) throw rseq::InvalidArgument(std::string(what) + " is NULL");
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void store_verdict(const rseq::Verdict& v, rseq_verdict* out) {
    out->status = v.is_holds() ? RSEQ_HOLDS : v.is_fails() ? RSEQ_FAILS : RSEQ_INCONCLUSIVE;
    out->witness_len = std::min<std::size_t>(v.witness.size(), RSEQ_MAX_WITNESS);
    std::fill(std::begin(out->witness), std::end(out->witness), 0);
    std::copy_n(v.witness.begin(), out->witness_len, out->witness);
}

nlohmann::json parse_config(const char* config_json) {
    if (config_json == nullptr || *config_json == '\0') return nlohmann::json::object();
    auto j = nlohmann::json::parse(config_json);
    if (!j.is_object()) throw rseq::ParseError("config must be a JSON object");
    return j;
}

rseq_status emit(const nlohmann::json& report, char** out) {
    *out = dup_string(report.dump(2) + "\n");
    return RSEQ_OK;
}

rseq_window* wrap(rseq::Window w) { return new rseq_window{std::move(w)}; }

}  // namespace

extern "C" {

const char* rseq_status_string(rseq_status status) {
    switch (status) {
        case RSEQ_OK: return "ok";
        case RSEQ_ERR_INVALID_ARGUMENT: return "invalid argument";
        case RSEQ_ERR_PARSE: return "parse error";
        case RSEQ_ERR_IO: return "i/o error";
        case RSEQ_ERR_CAP_EXCEEDED: return "cap exceeded";
        case RSEQ_ERR_SPACE_MISMATCH: return "space mismatch";
        case RSEQ_ERR_OVERFLOW: return "overflow";
        case RSEQ_ERR_INVALID_HANDLE: return "invalid handle";
        case RSEQ_ERR_UNKNOWN: return "unknown error";
    }
    return "unknown status";
}

const char* rseq_last_error(void) { return g_last_error.c_str(); }

void rseq_string_free(char* s) { delete[] s; }

rseq_status rseq_window_create(const uint64_t* elements, size_t count, uint64_t horizon,
                               rseq_window** out) {
    return guarded([&] {
        require(out, "out");
        if (count > 0) require(elements, "elements");
        *out = wrap(rseq::Window(std::vector<rseq::Natural>(elements, elements + count), horizon));
    });
}

rseq_status rseq_window_load(const char* path, rseq_window** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = wrap(rseq::read_sequence_file(path));
    });
}

rseq_status rseq_window_builtin(const char* name, uint64_t horizon, rseq_window** out) {
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        *out = wrap(rseq::builtin_sequence(name, horizon));
    });
}

rseq_status rseq_window_random(uint64_t seed, uint64_t horizon, double density, rseq_window** out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(rseq::random_window(seed, horizon, density));
    });
}

rseq_status rseq_window_truncate(const rseq_window* w, uint64_t horizon, rseq_window** out) {
    if (w == nullptr) return fail(RSEQ_ERR_INVALID_HANDLE, "window handle is NULL");
    return guarded([&] {
        require(out, "out");
        *out = wrap(w->value.truncated(horizon));
    });
}

rseq_status rseq_window_save(const rseq_window* w, const char* path, const char* comment) {
    if (w == nullptr) return fail(RSEQ_ERR_INVALID_HANDLE, "window handle is NULL");
    return guarded([&] {
        require(path, "path");
        rseq::write_sequence_file(path, w->value, comment ? comment : "");
    });
}

rseq_status rseq_window_info(const rseq_window* w, uint64_t* horizon, size_t* count) {
    if (w == nullptr) return fail(RSEQ_ERR_INVALID_HANDLE, "window handle is NULL");
    return guarded([&] {
        if (horizon) *horizon = w->value.horizon();
        if (count) *count = w->value.size();
    });
}

rseq_status rseq_window_elements(const rseq_window* w, uint64_t* buffer, size_t capacity,
                                 size_t* written) {
    if (w == nullptr) return fail(RSEQ_ERR_INVALID_HANDLE, "window handle is NULL");
    return guarded([&] {
        if (capacity > 0) require(buffer, "buffer");
        const auto& e = w->value.elements();
        const std::size_t n = std::min(capacity, e.size());
        std::copy_n(e.begin(), n, buffer);
        if (written) *written = n;
    });
}

void rseq_window_destroy(rseq_window* w) { delete w; }

rseq_status rseq_is_syndetic(const rseq_window* w, uint64_t gap_bound, rseq_verdict* out) {
    if (w == nullptr) return fail(RSEQ_ERR_INVALID_HANDLE, "window handle is NULL");
    return guarded([&] {
        require(out, "out");
        store_verdict(rseq::is_syndetic(w->value, gap_bound), out);
    });
}

rseq_status rseq_is_thick(const rseq_window* w, uint64_t run_length, rseq_verdict* out) {
    if (w == nullptr) return fail(RSEQ_ERR_INVALID_HANDLE, "window handle is NULL");
    return guarded([&] {
        require(out, "out");
        store_verdict(rseq::is_thick(w->value, run_length), out);
    });
}

rseq_status rseq_pws_certificate(const rseq_window* w, uint64_t gap_bound, uint64_t block_length,
                                 rseq_verdict* out) {
    if (w == nullptr) return fail(RSEQ_ERR_INVALID_HANDLE, "window handle is NULL");
    return guarded([&] {
        require(out, "out");
        store_verdict(rseq::piecewise_syndetic_certificate(w->value, gap_bound, block_length), out);
    });
}

rseq_status rseq_banach_density(const rseq_window* w, uint64_t interval_length, uint64_t* num,
                                uint64_t* den) {
    if (w == nullptr) return fail(RSEQ_ERR_INVALID_HANDLE, "window handle is NULL");
    return guarded([&] {
        require(num, "num");
        require(den, "den");
        const auto r = rseq::banach_density_estimate(w->value, interval_length);
        *num = r.num;
        *den = r.den;
    });
}

rseq_status rseq_r_sequence_cyclic(const rseq_window* w, uint64_t max_period, rseq_verdict* out) {
    if (w == nullptr) return fail(RSEQ_ERR_INVALID_HANDLE, "window handle is NULL");
    return guarded([&] {
        require(out, "out");
        store_verdict(rseq::r_sequence_cyclic(w->value, max_period).verdict, out);
    });
}

rseq_status rseq_system_parse(const char* spec, rseq_system** out) {
    return guarded([&] {
        require(spec, "spec");
        require(out, "out");
        *out = new rseq_system{rseq::parse_system(spec)};
    });
}

rseq_status rseq_system_spec(const rseq_system* sys, char** out) {
    if (sys == nullptr) return fail(RSEQ_ERR_INVALID_HANDLE, "system handle is NULL");
    return guarded([&] {
        require(out, "out");
        *out = dup_string(sys->value->spec());
    });
}

rseq_status rseq_is_totally_minimal(const rseq_system* sys, rseq_verdict* out) {
    if (sys == nullptr) return fail(RSEQ_ERR_INVALID_HANDLE, "system handle is NULL");
    return guarded([&] {
        require(out, "out");
        store_verdict(rseq::is_totally_minimal(*sys->value), out);
    });
}

void rseq_system_destroy(rseq_system* sys) { delete sys; }

rseq_status rseq_report_classify(const rseq_window* w, const char* source, const char* config_json,
                                 char** out) {
    if (w == nullptr) return fail(RSEQ_ERR_INVALID_HANDLE, "window handle is NULL");
    return guarded([&] {
        require(out, "out");
        emit(rseq::report::classify(w->value, source ? source : "", parse_config(config_json)), out);
    });
}

rseq_status rseq_report_recurrence(const rseq_window* w, const char* source, const char* family,
                                   const char* config_json, char** out) {
    if (w == nullptr) return fail(RSEQ_ERR_INVALID_HANDLE, "window handle is NULL");
    return guarded([&] {
        require(family, "family");
        require(out, "out");
        emit(rseq::report::recurrence(w->value, source ? source : "", family, parse_config(config_json)),
             out);
    });
}

rseq_status rseq_report_permpoly_check(const char* poly, uint64_t p, const char* config_json,
                                       char** out) {
    return guarded([&] {
        require(poly, "poly");
        require(out, "out");
        emit(rseq::report::permpoly_check(poly, p, parse_config(config_json)), out);
    });
}

rseq_status rseq_report_find_prime(const char* poly, uint64_t cap, const char* config_json,
                                   char** out) {
    return guarded([&] {
        require(poly, "poly");
        require(out, "out");
        emit(rseq::report::find_prime(poly, cap, parse_config(config_json)), out);
    });
}

rseq_status rseq_report_construct(const char* schedule_json, uint64_t blocks,
                                  const char* config_json, rseq_window** out_window, char** out) {
    return guarded([&] {
        require(out, "out");
        std::optional<std::string> schedule;
        if (schedule_json != nullptr) schedule = schedule_json;
        if (!schedule && blocks == 0) throw rseq::InvalidArgument("blocks must be positive");
        std::optional<rseq::Window> built;
        const auto report = rseq::report::construct(schedule, blocks, parse_config(config_json),
                                                    out_window ? &built : nullptr);
        emit(report, out);
        if (out_window) *out_window = wrap(std::move(*built));
    });
}

rseq_status rseq_report_product(const char* left_spec, const char* right_spec,
                                const char* config_json, char** out) {
    return guarded([&] {
        require(left_spec, "left_spec");
        require(right_spec, "right_spec");
        require(out, "out");
        emit(rseq::report::product(left_spec, right_spec, parse_config(config_json)), out);
    });
}

rseq_status rseq_report_crosscheck(const rseq_window* w, const char* source, const char* config_json,
                                   char** out) {
    return guarded([&] {
        require(out, "out");
        emit(rseq::report::crosscheck(w ? &w->value : nullptr, source ? source : "",
                                      parse_config(config_json)),
             out);
    });
}

}  // extern "C"
