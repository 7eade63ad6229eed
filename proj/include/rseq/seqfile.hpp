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

#ifndef RSEQ_SEQFILE_HPP
#define RSEQ_SEQFILE_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "rseq/window.hpp"

// Sequence files: UTF-8 text, a mandatory `!horizon N` directive before the
// first element, then one decimal natural per line in strictly ascending
// order. Lines starting with '#' and blank lines are ignored.

namespace rseq {

Window parse_sequence(std::istream& in);
Window read_sequence_file(const std::filesystem::path& path);

void write_sequence(std::ostream& out, const Window& w, std::string_view comment = {});
void write_sequence_file(const std::filesystem::path& path, const Window& w,
                         std::string_view comment = {});

/// Named sequences observed up to `horizon`: naturals, evens, odds,
/// squares, cubes. Throws InvalidArgument for other names.
Window builtin_sequence(std::string_view name, Natural horizon);

/// Bernoulli(density) subset of [0, horizon] from a SplitMix-style stream;
/// identical on every platform for the same seed.
Window random_window(std::uint64_t seed, Natural horizon, double density);

}  // namespace rseq

#endif  // RSEQ_SEQFILE_HPP
