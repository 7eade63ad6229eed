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

#include "rseq/seqfile.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "rseq/errors.hpp"

namespace rseq {
namespace {

std::string_view strip(std::string_view s) {
    const auto issp = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && issp(s.front())) s.remove_prefix(1);
    while (!s.empty() && issp(s.back())) s.remove_suffix(1);
    return s;
}

Natural parse_natural(std::string_view s, std::size_t line, const char* what) {
    Natural v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec == std::errc::invalid_argument || ptr != end) {
        throw ParseError(std::string("expected ") + what + ", got \"" + std::string(s) + "\"", line);
    }
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(std::string(what) + " out of range: " + std::string(s), line);
    }
    return v;
}

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

}  // namespace

Window parse_sequence(std::istream& in) {
    std::optional<Natural> horizon;
    std::vector<Natural> elements;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto text = strip(raw);
        if (text.empty() || text.front() == '#') continue;
        if (text.front() == '!') {
            constexpr std::string_view kDirective = "!horizon";
            if (text.substr(0, kDirective.size()) != kDirective) {
                throw ParseError("unknown directive " + std::string(text), line);
            }
            if (horizon) throw ParseError("duplicate !horizon directive", line);
            if (!elements.empty()) throw ParseError("!horizon must precede the elements", line);
            horizon = parse_natural(strip(text.substr(kDirective.size())), line, "horizon");
            continue;
        }
        if (!horizon) throw ParseError("missing !horizon directive before the first element", line);
        const Natural v = parse_natural(text, line, "a natural number");
        if (!elements.empty() && v <= elements.back()) {
            throw ParseError("not strictly ascending: " + std::to_string(elements.back()) +
                                 " followed by " + std::to_string(v),
                             line);
        }
        if (v > *horizon) {
            throw ParseError(std::to_string(v) + " exceeds horizon " + std::to_string(*horizon), line);
        }
        elements.push_back(v);
    }
    if (in.bad()) throw IoError("read failed");
    if (!horizon) throw ParseError("missing !horizon directive", line == 0 ? 1 : line);
    return Window(std::move(elements), *horizon);
}

Window read_sequence_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_sequence(in);
}

void write_sequence(std::ostream& out, const Window& w, std::string_view comment) {
    if (!comment.empty()) {
        std::size_t pos = 0;
        while (pos <= comment.size()) {
            const auto nl = comment.find('\n', pos);
            const auto piece = comment.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            out << "# " << piece << '\n';
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
    }
    out << "!horizon " << w.horizon() << '\n';
    for (Natural x : w) out << x << '\n';
}

void write_sequence_file(const std::filesystem::path& path, const Window& w, std::string_view comment) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    write_sequence(out, w, comment);
    out.flush();
    if (!out) throw IoError("write to " + path.string() + " failed");
}

Window builtin_sequence(std::string_view name, Natural horizon) {
    if (name == "naturals") return Window::interval(0, horizon, horizon);
    if (name == "evens") return Window::from_predicate(horizon, [](Natural x) { return x % 2 == 0; });
    if (name == "odds") return Window::from_predicate(horizon, [](Natural x) { return x % 2 == 1; });
    if (name == "squares" || name == "cubes") {
        const unsigned power = name == "squares" ? 2 : 3;
        std::vector<Natural> out;
        for (Natural n = 0;; ++n) {
            unsigned __int128 v = n;
            for (unsigned i = 1; i < power; ++i) v *= n;
            if (v > horizon) break;
            out.push_back(static_cast<Natural>(v));
        }
        return Window(std::move(out), horizon);
    }
    throw InvalidArgument("unknown builtin sequence \"" + std::string(name) +
                          "\" (naturals, evens, odds, squares, cubes)");
}

Window random_window(std::uint64_t seed, Natural horizon, double density) {
    if (!(density >= 0.0 && density <= 1.0)) throw InvalidArgument("density must lie in [0, 1]");
    SplitMix64 rng{seed};
    std::vector<Natural> out;
    for (Natural x = 0;; ++x) {
        const double u = static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
        if (u < density) out.push_back(x);
        if (x == horizon) break;
    }
    return Window(std::move(out), horizon);
}

}  // namespace rseq
