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

#ifndef RSEQ_RECURRENCE_HPP
#define RSEQ_RECURRENCE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rseq/systems.hpp"
#include "rseq/verdict.hpp"
#include "rseq/window.hpp"

namespace rseq {

/// Positive return times n in [1, horizon] with T^n(start) in `cell`.
struct ReturnTimes {
    Window times;
    std::uint64_t cell = 0;
    State start;
};

ReturnTimes return_times(const System& sys, const State& start, const GridCover& cover,
                         std::uint64_t cell, Natural horizon);

struct SystemOutcome {
    std::string system;
    Verdict verdict;
    std::uint64_t cells_total = 0;
    std::uint64_t cells_hit = 0;
    std::optional<State> start;
};

struct RSequenceReport {
    std::string family;
    Verdict verdict;
    std::vector<SystemOutcome> per_system;
};

/// Exact dense-orbit test over the periods 1..max_period: for each m the
/// residues {n mod m : n in a} must be all of Z/m. Fails with
/// (m, least missing residue) for the least failing m.
RSequenceReport r_sequence_cyclic(const Window& a, Natural max_period);

/// Searches start points on a grid of mesh 1/ceil(1/resolution) in
/// lexicographic order; holds at the first start whose orbit along `a` is
/// eps-dense. Otherwise reports the start with the most cells hit and that
/// start's least empty cell. Inconclusive when the floating-point error of
/// the orbit exceeds eps/10.
RSequenceReport r_sequence_metric(const Window& a, const System& sys, double eps,
                                  double start_grid_resolution);

/// Holds iff some grid start x has some n in a, n >= 1, with
/// distance(T^n x, x) < eps. Witness (start index, n). Fails with the
/// number of starts searched.
Verdict birkhoff_window_test(const Window& a, const System& sys, double eps,
                             double start_grid_resolution);

/// Closed integer range [lo, hi] of window shifts.
struct ShiftRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    /// Search order: increasing |n|, the negative shift first on ties.
    std::vector<std::int64_t> ordered() const;
};

using WindowTester = std::function<Verdict(const Window&)>;

/// Applies `tester` to (a + n) ∩ [0, horizon] for every shift. Fails with
/// (shift, tester witness...) for the first failing shift in search order.
Verdict shift_family_test(const Window& a, ShiftRange shifts, const WindowTester& tester);

/// Outcome of computing three equivalent characterizations of the
/// dense-orbit property on every cyclic system independently: residue
/// coverage, shifted hits of N(U,U) = mN, and shifted hits of S - S for the
/// syndetic sets S = mN + r.
struct CrosscheckReport {
    /// Holds iff the three predicates agree everywhere; fails with
    /// (m, shift, coverage, return-set hit, difference-set hit).
    Verdict verdict;
    /// First (m, shift) in search order at which all three predicates are false.
    std::optional<std::pair<Natural, std::int64_t>> first_failure;
    std::uint64_t instances = 0;
};

CrosscheckReport equivalence_crosscheck(const Window& a, Natural max_period, ShiftRange shifts);

/// Smallest B ⊆ a whose residues cover Z/m: the least element of each class.
struct Subcover {
    std::optional<Window> cover;
    std::optional<Natural> missing_residue;
};

Subcover finite_subcover(const Window& a, Natural m);

struct ProductTransitivity {
    bool coprime = false;
    Natural orbit_size = 0;
    /// Formula and enumeration agree: orbit_size == m*n exactly when coprime.
    bool consistent = false;
};

/// gcd(m, n) == 1, checked against the orbit of (0, 0) in Z/m x Z/n.
ProductTransitivity product_transitive_finite(Natural m, Natural n);

struct CesaroTrace {
    /// |1/N sum_{i<=N} e^{2 pi i k (start + a_i alpha)}| for N = 1..|a|.
    std::vector<double> magnitudes;
    /// Max relative deviation from the geometric-sum closed form, set when
    /// the elements of a are consecutive integers.
    std::optional<double> closed_form_max_rel_error;
};

/// Throws InvalidArgument for k == 0 or for a system that is not a
/// one-dimensional rotation.
CesaroTrace cesaro_average_along(const Window& a, const System& rotation, std::int64_t k,
                                 const State& start);

/// |sin(pi k N alpha)| / (N |sin(pi k alpha)|), or 1 when k alpha is an integer.
double geometric_average_magnitude(double alpha, std::int64_t k, Natural count);

}  // namespace rseq

#endif  // RSEQ_RECURRENCE_HPP
