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

#include <gtest/gtest.h>

#include <filesystem>
#include <numeric>
#include <sstream>

#include "rseq/errors.hpp"
#include "rseq/seqfile.hpp"

using namespace rseq;

namespace {

Window parse(const std::string& text) {
    std::istringstream in(text);
    return parse_sequence(in);
}

std::size_t parse_error_line(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST(SequenceFile, ParsesDirectiveCommentsAndBlankLines) {
    const Window w = parse("# header\n!horizon 20\n\n0\n3\n# mid\n  7 \n20\n");
    EXPECT_EQ(w.horizon(), 20u);
    EXPECT_EQ(w.elements(), (std::vector<Natural>{0, 3, 7, 20}));
    EXPECT_TRUE(parse("!horizon 5\n").empty());
}

TEST(SequenceFile, ErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line("1\n2\n"), 1u);
    EXPECT_EQ(parse_error_line(""), 1u);
    EXPECT_EQ(parse_error_line("!horizon 10\n1\n5\n5\n"), 4u);
    EXPECT_EQ(parse_error_line("!horizon 10\n1\n5\n3\n"), 4u);
    EXPECT_EQ(parse_error_line("!horizon 10\n11\n"), 2u);
    EXPECT_EQ(parse_error_line("!horizon 10\n1\nx\n"), 3u);
    EXPECT_EQ(parse_error_line("!horizon 10\n-1\n"), 2u);
    EXPECT_EQ(parse_error_line("!horizon ten\n"), 1u);
    EXPECT_EQ(parse_error_line("!horizon 10\n!horizon 10\n"), 2u);
    EXPECT_EQ(parse_error_line("!width 10\n"), 1u);
    EXPECT_EQ(parse_error_line("!horizon 99999999999999999999999\n"), 1u);
}

TEST(SequenceFile, NonAscendingMessageNamesThePair) {
    try {
        parse("!horizon 10\n1\n5\n3\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("5 followed by 3"), std::string::npos) << e.what();
    }
}

TEST(SequenceFile, RoundTripsThroughDisk) {
    const auto dir = std::filesystem::temp_directory_path() / "rseq_seqfile_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "w.txt";
    const Window w({0, 1, 17, 1000000}, 1000001);
    write_sequence_file(path, w, "two\nlines");
    EXPECT_EQ(read_sequence_file(path), w);
    std::filesystem::remove_all(dir);
    EXPECT_THROW(read_sequence_file(dir / "missing.txt"), IoError);
}

TEST(Builtins, Contents) {
    EXPECT_EQ(builtin_sequence("squares", 50).elements(), (std::vector<Natural>{0, 1, 4, 9, 16, 25, 36, 49}));
    EXPECT_EQ(builtin_sequence("cubes", 64).elements(), (std::vector<Natural>{0, 1, 8, 27, 64}));
    EXPECT_EQ(builtin_sequence("evens", 5).elements(), (std::vector<Natural>{0, 2, 4}));
    EXPECT_EQ(builtin_sequence("odds", 5).elements(), (std::vector<Natural>{1, 3, 5}));
    EXPECT_EQ(builtin_sequence("naturals", 3).elements(), (std::vector<Natural>{0, 1, 2, 3}));
    EXPECT_EQ(builtin_sequence("squares", 10000).size(), 101u);
    EXPECT_THROW(builtin_sequence("primes", 10), InvalidArgument);
}

// Frozen from an independent reimplementation of the SplitMix64 stream.
TEST(RandomWindow, FrozenStream) {
    EXPECT_EQ(random_window(1, 20, 0.5).elements(), (std::vector<Natural>{3, 4, 8, 10, 12, 14, 15, 20}));
    const Window w = random_window(42, 10000, 0.3);
    EXPECT_EQ(w.size(), 2964u);
    EXPECT_EQ(std::accumulate(w.begin(), w.end(), Natural{0}), 14751804u);
    EXPECT_EQ(random_window(9, 100, 0.0).size(), 0u);
    EXPECT_EQ(random_window(9, 100, 1.0).size(), 101u);
    EXPECT_THROW(random_window(9, 100, 1.5), InvalidArgument);
}
