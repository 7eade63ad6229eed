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

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rseq/errors.hpp"
#include "rseq/intsets.hpp"
#include "rseq/recurrence.hpp"
#include "rseq/seqfile.hpp"

using namespace rseq;

namespace {

using W = std::vector<std::int64_t>;

State point(double x) { return {{}, {x}}; }
State residue(Natural r) { return {{r}, {}}; }

}  // namespace

TEST(ReturnTimes, Examples) {
    const auto c4 = cyclic(4);
    const auto rt = return_times(*c4, residue(0), GridCover(*c4, 0.5), 2, 20);
    EXPECT_EQ(rt.times.elements(), (std::vector<Natural>{2, 6, 10, 14, 18}));
    EXPECT_EQ(rt.times.horizon(), 20u);

    const auto third = rotation(Angle::rational(1, 3));
    const GridCover cover(*third, 1.0 / 3);
    const auto r3 = return_times(*third, point(0.0), cover, cover.cell_of(point(0.0)), 9);
    EXPECT_EQ(r3.times.elements(), (std::vector<Natural>{3, 6, 9}));

    const auto skew = parse_system("skew:golden");
    const GridCover box(*skew, 0.1);
    const auto weyl = return_times(*skew, State{{}, {0.0, 0.0}}, box, 0, 10000);
    EXPECT_FALSE(weyl.times.empty());
    for (Natural n : weyl.times) {
        const State s = skew->advance(State{{}, {0.0, 0.0}}, n);
        EXPECT_LT(s.continuous[0], 0.1 + 1e-12);
        EXPECT_LT(s.continuous[1], 0.1 + 1e-12);
    }

    EXPECT_THROW(return_times(*c4, residue(0), GridCover(*c4, 0.5), 2, 0), InvalidArgument);
    EXPECT_THROW(return_times(*c4, residue(0), box, 2, 5), SpaceMismatch);
}

TEST(RSequenceCyclic, Examples) {
    const auto sq = r_sequence_cyclic(builtin_sequence("squares", 100000000), 3);
    ASSERT_TRUE(sq.verdict.is_fails());
    EXPECT_EQ(sq.verdict.witness, (W{3, 2}));
    ASSERT_EQ(sq.per_system.size(), 3u);
    EXPECT_TRUE(sq.per_system[2].verdict.is_fails());
    EXPECT_EQ(sq.per_system[2].cells_hit, 2u);

    EXPECT_TRUE(r_sequence_cyclic(Window::interval(0, 100, 100), 50).verdict.is_holds());
    EXPECT_THROW(r_sequence_cyclic(Window::interval(0, 1, 1), 0), InvalidArgument);

    const auto ev = r_sequence_cyclic(builtin_sequence("evens", 1000), 10);
    EXPECT_EQ(ev.verdict.witness, (W{2, 1}));
}

// Two independent code paths for the same truth: residue coverage and the
// singleton cover of the cyclic system.
TEST(RSequenceCyclic, AgreesWithEpsDenseOnCycles) {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        const Window a = oracle::random_subset(rng, 50 + rng() % 400, std::pow(10.0, -2.5 * (rng() % 1000) / 1000.0));
        const auto rep = r_sequence_cyclic(a, 20);
        for (Natural m = 1; m <= 20; ++m) {
            const auto sys = cyclic(m);
            const auto dense = eps_dense(*sys, orbit_along(*sys, residue(0), a), GridCover(*sys, 1.0));
            ASSERT_EQ(rep.per_system[m - 1].verdict.is_holds(), dense.is_holds());
            const auto missed = oracle::missed_residues(a, m);
            ASSERT_EQ(dense.is_holds(), missed.empty());
            if (!missed.empty()) {
                EXPECT_EQ(rep.per_system[m - 1].verdict.witness, (W{static_cast<std::int64_t>(missed[0])}));
            }
        }
    }
}

TEST(RSequenceCyclic, MonotoneUnderSupersets) {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 200; ++it) {
        const Window a = oracle::random_subset(rng, 300, 0.05);
        const auto extra = oracle::random_subset(rng, 300, 0.05);
        std::vector<Natural> u;
        std::set_union(a.begin(), a.end(), extra.begin(), extra.end(), std::back_inserter(u));
        if (r_sequence_cyclic(a, 8).verdict.is_holds()) {
            EXPECT_TRUE(r_sequence_cyclic(Window(u, 300), 8).verdict.is_holds());
        }
    }
}

TEST(RSequenceCyclic, ResidueCoverageSurvivesShiftsByMultiples) {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 100; ++it) {
        const Window a = oracle::random_subset(rng, 400, 0.1);
        if (!r_sequence_cyclic(a, 10).verdict.is_holds()) continue;
        for (Natural m = 1; m <= 10; ++m) {
            std::vector<Natural> moved;
            for (Natural x : a) moved.push_back(x + m * (rng() % 5));
            std::sort(moved.begin(), moved.end());
            moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
            const auto rep = r_sequence_cyclic(Window(moved, 400 + 5 * m), m);
            EXPECT_TRUE(rep.per_system[m - 1].verdict.is_holds());
        }
    }
}

TEST(RSequenceMetric, Examples) {
    const auto golden = parse_system("rot:golden");
    const auto interval = r_sequence_metric(Window::interval(0, 1000, 1000), *golden, 0.02, 0.02);
    ASSERT_TRUE(interval.verdict.is_holds());
    EXPECT_EQ(interval.verdict.witness, (W{0}));
    ASSERT_EQ(interval.per_system.size(), 1u);
    EXPECT_EQ(interval.per_system[0].start, point(0.0));
    EXPECT_NE(interval.verdict.note.find("window [0, 1000]"), std::string::npos);
    EXPECT_NE(interval.family.find("eps=0.02"), std::string::npos);

    const auto half = parse_system("rot:1/2");
    const auto ev = r_sequence_metric(builtin_sequence("evens", 1000), *half, 0.1, 0.1);
    ASSERT_TRUE(ev.verdict.is_fails());
    EXPECT_EQ(ev.per_system[0].cells_hit, 1u);

    const auto sq = r_sequence_metric(builtin_sequence("squares", 10000), *golden, 0.05, 0.05);
    EXPECT_TRUE(sq.verdict.is_holds());
}

TEST(RSequenceMetric, InconclusiveWhenErrorBudgetIsExceeded) {
    const auto golden = parse_system("rot:golden");
    const Natural huge = Natural{1} << 50;
    const auto rep = r_sequence_metric(Window({1, huge}, huge), *golden, 0.01, 0.5);
    EXPECT_TRUE(rep.verdict.is_inconclusive());
    EXPECT_TRUE(birkhoff_window_test(Window({1, huge}, huge), *golden, 0.01, 0.5).is_inconclusive());
    // Rational angles are exact, so the same horizon stays decidable.
    const auto third = parse_system("rot:1/3");
    EXPECT_FALSE(r_sequence_metric(Window({1, huge}, huge), *third, 0.01, 0.5).verdict.is_inconclusive());
}

TEST(Birkhoff, Examples) {
    const auto c2 = cyclic(2);
    EXPECT_TRUE(birkhoff_window_test(builtin_sequence("odds", 1000), *c2, 0.5, 0.5).is_fails());

    for (Natural m = 1; m <= 9; ++m) {
        const Window mult = Window::from_predicate(200, [m](Natural x) { return x % m == 0; });
        const auto v = birkhoff_window_test(mult, *cyclic(m), 0.5, 0.5);
        ASSERT_TRUE(v.is_holds());
        EXPECT_EQ(v.witness, (W{0, static_cast<std::int64_t>(m)}));
    }

    std::vector<Natural> powers;
    for (int k = 0; k <= 12; ++k) powers.push_back(Natural{1} << k);
    const Window ip = finite_ip(powers);
    for (const char* spec : {"rot:golden", "rot:sqrt2", "rot:0.1234567", "rot:2/7"}) {
        EXPECT_TRUE(birkhoff_window_test(ip, *parse_system(spec), 0.1, 0.5).is_holds()) << spec;
    }
}

TEST(ShiftFamily, OrderAndExamples) {
    EXPECT_EQ((ShiftRange{-2, 2}.ordered()), (std::vector<std::int64_t>{0, -1, 1, -2, 2}));
    EXPECT_EQ((ShiftRange{1, 3}.ordered()), (std::vector<std::int64_t>{1, 2, 3}));
    EXPECT_THROW((ShiftRange{2, 1}.ordered()), InvalidArgument);

    auto cyc = [](Natural m) {
        return [m](const Window& w) { return r_sequence_cyclic(w, m).verdict; };
    };
    const auto sq = shift_family_test(builtin_sequence("squares", 10000), {-2, 2}, cyc(3));
    ASSERT_TRUE(sq.is_fails());
    EXPECT_EQ(sq.witness, (W{0, 3, 2}));

    EXPECT_TRUE(shift_family_test(Window::interval(0, 100, 100), {-5, 5}, cyc(20)).is_holds());

    // Shifting {0, 1} down by one leaves {0}, which misses residue 1 mod 2.
    const auto one = shift_family_test(Window({0, 1}, 1), {-1, 1}, cyc(2));
    ASSERT_TRUE(one.is_fails());
    EXPECT_EQ(one.witness, (W{-1, 2, 1}));
}

TEST(Crosscheck, Examples) {
    const auto odd = equivalence_crosscheck(builtin_sequence("odds", 1000), 12, {-6, 6});
    EXPECT_TRUE(odd.verdict.is_holds());
    ASSERT_TRUE(odd.first_failure.has_value());
    EXPECT_EQ(*odd.first_failure, (std::pair<Natural, std::int64_t>{2, 0}));
    EXPECT_EQ(odd.instances, 12u * 13u);

    const auto full = equivalence_crosscheck(Window::interval(0, 100, 100), 12, {-6, 6});
    EXPECT_TRUE(full.verdict.is_holds());
    EXPECT_FALSE(full.first_failure.has_value());
}

TEST(Crosscheck, AgreesWithDirectCoverageOnRandomWindows) {
    std::mt19937_64 rng(6);
    for (int it = 0; it < 40; ++it) {
        const double density = std::pow(10.0, -3.0 * (rng() % 1000) / 1000.0);
        const Window a = oracle::random_subset(rng, 600, density);
        const auto rep = equivalence_crosscheck(a, 8, {-3, 3});
        ASSERT_TRUE(rep.verdict.is_holds()) << rep.verdict.note;
        std::optional<std::pair<Natural, std::int64_t>> first;
        for (Natural m = 1; m <= 8 && !first; ++m) {
            for (std::int64_t n : ShiftRange{-3, 3}.ordered()) {
                if (!oracle::missed_residues(oracle::shift(a, n), m).empty()) {
                    first = {m, n};
                    break;
                }
            }
        }
        EXPECT_EQ(rep.first_failure, first);
    }
}

TEST(FiniteSubcover, Examples) {
    for (Natural m = 1; m <= 15; ++m) {
        const auto sub = finite_subcover(Window::interval(0, 40, 40), m);
        ASSERT_TRUE(sub.cover.has_value());
        EXPECT_EQ(sub.cover->elements(), Window::interval(0, m - 1, 40).elements());
    }
    std::vector<Natural> sq;
    for (Natural n = 0; n <= 100; ++n) sq.push_back(n * n);
    const auto miss = finite_subcover(Window(sq, 10000), 5);
    EXPECT_FALSE(miss.cover.has_value());
    EXPECT_EQ(miss.missing_residue, 2u);

    std::mt19937_64 rng(8);
    for (int it = 0; it < 100; ++it) {
        const Window a = oracle::random_subset(rng, 500, 0.05);
        for (Natural m = 1; m <= 12; ++m) {
            const auto sub = finite_subcover(a, m);
            const auto missed = oracle::missed_residues(a, m);
            ASSERT_EQ(sub.cover.has_value(), missed.empty());
            if (!sub.cover) continue;
            EXPECT_EQ(sub.cover->size(), m);
            EXPECT_TRUE(oracle::missed_residues(*sub.cover, m).empty());
            for (Natural x : *sub.cover) EXPECT_TRUE(a.contains(x));
        }
    }
}

TEST(ProductTransitivity, AllSmallPairs) {
    const auto two_three = product_transitive_finite(2, 3);
    EXPECT_TRUE(two_three.coprime);
    EXPECT_EQ(two_three.orbit_size, 6u);
    const auto two_two = product_transitive_finite(2, 2);
    EXPECT_FALSE(two_two.coprime);
    EXPECT_EQ(two_two.orbit_size, 2u);
    for (Natural m = 1; m <= 30; ++m) {
        for (Natural n = 1; n <= 30; ++n) {
            const auto t = product_transitive_finite(m, n);
            EXPECT_TRUE(t.consistent);
            EXPECT_EQ(t.orbit_size, std::lcm(m, n));
            EXPECT_EQ(t.coprime, std::gcd(m, n) == 1);
        }
    }
    EXPECT_THROW(product_transitive_finite(0, 3), InvalidArgument);
}

TEST(Cesaro, Examples) {
    const auto golden = parse_system("rot:golden");
    const double alpha = single_rotation_angle(*golden)->value;
    const auto tr = cesaro_average_along(Window::interval(1, 10000, 10000), *golden, 1, point(0.0));
    ASSERT_EQ(tr.magnitudes.size(), 10000u);
    ASSERT_TRUE(tr.closed_form_max_rel_error.has_value());
    EXPECT_LT(*tr.closed_form_max_rel_error, 1e-9);
    const double bound = 2.0 / std::abs(1.0 - std::polar(1.0, 2 * std::numbers::pi * alpha));
    for (std::size_t i = 0; i < tr.magnitudes.size(); ++i) {
        ASSERT_LE(tr.magnitudes[i], bound / static_cast<double>(i + 1) + 1e-12);
    }
    EXPECT_LT(tr.magnitudes.back(), 0.05);

    const auto still = cesaro_average_along(Window::interval(1, 500, 500), *parse_system("rot:0/1"), 3, point(0.2));
    for (double m : still.magnitudes) EXPECT_NEAR(m, 1.0, 1e-15);

    const auto ev = cesaro_average_along(builtin_sequence("evens", 1000), *parse_system("rot:1/2"), 1, point(0.0));
    for (double m : ev.magnitudes) EXPECT_NEAR(m, 1.0, 1e-15);
    EXPECT_FALSE(ev.closed_form_max_rel_error.has_value());

    EXPECT_THROW(cesaro_average_along(Window({1}, 1), *golden, 0, point(0.0)), InvalidArgument);
    EXPECT_THROW(cesaro_average_along(Window({1}, 1), *cyclic(3), 1, residue(0)), InvalidArgument);
}

// Direct O(N) complex summation as the oracle for non-interval windows.
TEST(Cesaro, MatchesDirectSummation) {
    const auto rot = parse_system("rot:sqrt2");
    const double alpha = single_rotation_angle(*rot)->value;
    const Window sq = builtin_sequence("squares", 100000);
    for (std::int64_t k : {1, -2, 5}) {
        const auto tr = cesaro_average_along(sq, *rot, k, point(0.3));
        std::complex<long double> sum = 0;
        std::size_t i = 0;
        for (Natural n : sq) {
            long double ph = k * (0.3L + static_cast<long double>(n) * alpha);
            ph -= std::floor(ph);
            sum += std::polar(1.0L, 2 * std::numbers::pi_v<long double> * ph);
            ++i;
            ASSERT_NEAR(tr.magnitudes[i - 1], static_cast<double>(std::abs(sum) / i), 1e-9);
        }
    }
}
