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

#include "rseq/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "rseq/errors.hpp"
#include "rseq/intsets.hpp"

namespace rseq {
namespace {

constexpr std::uint64_t kMaxStarts = 1'000'000;

std::string describe(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::string window_text(const Window& a) { return "window [0, " + std::to_string(a.horizon()) + "]"; }

struct Coverage {
    std::uint64_t hit = 0;
    std::optional<std::uint64_t> first_empty;
};

Coverage coverage(const std::vector<State>& states, const GridCover& cover) {
    std::vector<char> seen(cover.cell_count(), 0);
    Coverage c;
    for (const auto& s : states) {
        auto& slot = seen[cover.cell_of(s)];
        if (!slot) {
            slot = 1;
            ++c.hit;
        }
    }
    if (auto it = std::find(seen.begin(), seen.end(), 0); it != seen.end()) {
        c.first_empty = static_cast<std::uint64_t>(it - seen.begin());
    }
    return c;
}

// Inconclusive when the orbit may drift by more than a tenth of eps.
std::optional<std::string> budget_violation(const Window& a, const System& sys, double eps) {
    if (a.empty()) return std::nullopt;
    const double err = sys.orbit_error_bound(a.elements().back());
    if (err > eps / 10) {
        return "floating-point error bound " + describe(err) + " exceeds eps/10 at time " +
               std::to_string(a.elements().back());
    }
    return std::nullopt;
}

GridCover start_grid(const System& sys, double resolution) {
    GridCover grid(sys, resolution);
    if (grid.cell_count() > kMaxStarts) {
        throw CapExceeded("start grid of " + std::to_string(grid.cell_count()) + " points");
    }
    return grid;
}

std::vector<bool> residues_hit(const Window& a, Natural m) {
    std::vector<bool> hit(m, false);
    Natural count = 0;
    for (Natural x : a) {
        if (!hit[x % m]) {
            hit[x % m] = true;
            if (++count == m) break;
        }
    }
    return hit;
}

}  // namespace

ReturnTimes return_times(const System& sys, const State& start, const GridCover& cover,
                         std::uint64_t cell, Natural horizon) {
    if (horizon == 0) throw InvalidArgument("horizon must be >= 1");
    if (!cover.matches(sys)) throw SpaceMismatch("cover was not built for " + sys.spec());
    if (cell >= cover.cell_count()) throw InvalidArgument("cell index out of range");
    sys.validate(start);
    std::vector<Natural> times;
    for (Natural n = 1; n <= horizon; ++n) {
        if (cover.cell_of(sys.advance(start, n)) == cell) times.push_back(n);
    }
    return {Window(std::move(times), horizon), cell, start};
}

RSequenceReport r_sequence_cyclic(const Window& a, Natural max_period) {
    if (max_period == 0) throw InvalidArgument("max_period must be >= 1");
    RSequenceReport report;
    report.family = "cyclic m <= " + std::to_string(max_period) + ", " + window_text(a);
    std::optional<Verdict> failure;
    for (Natural m = 1; m <= max_period; ++m) {
        const auto hit = residues_hit(a, m);
        SystemOutcome outcome;
        outcome.system = "cyclic:" + std::to_string(m);
        outcome.cells_total = m;
        outcome.cells_hit = static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), true));
        auto missing = std::find(hit.begin(), hit.end(), false);
        if (missing == hit.end()) {
            outcome.verdict = Verdict::holds({}, "every residue class is hit");
        } else {
            const auto r = static_cast<std::int64_t>(missing - hit.begin());
            outcome.verdict = Verdict::fails({r}, "residue " + std::to_string(r) + " is never hit");
            if (!failure) {
                failure = Verdict::fails({static_cast<std::int64_t>(m), r},
                                         "no point of Z/" + std::to_string(m) +
                                             " has a dense orbit along the window");
            }
        }
        report.per_system.push_back(std::move(outcome));
    }
    report.verdict = failure ? *failure
                             : Verdict::holds({}, "every residue class mod every m <= " +
                                                      std::to_string(max_period) + " is hit on the " +
                                                      window_text(a));
    return report;
}

RSequenceReport r_sequence_metric(const Window& a, const System& sys, double eps,
                                  double start_grid_resolution) {
    RSequenceReport report;
    report.family = sys.spec() + " eps=" + describe(eps) + ", " + window_text(a);
    const GridCover cover(sys, eps);
    const GridCover grid = start_grid(sys, start_grid_resolution);
    if (auto why = budget_violation(a, sys, eps)) {
        report.verdict = Verdict::inconclusive(*why);
        report.per_system.push_back({sys.spec(), report.verdict, cover.cell_count(), 0, {}});
        return report;
    }
    SystemOutcome best;
    best.system = sys.spec();
    best.cells_total = cover.cell_count();
    std::uint64_t best_index = 0, best_empty = 0;
    bool have_best = false;
    for (std::uint64_t i = 0; i < grid.cell_count(); ++i) {
        const State start = grid.anchor(i);
        const Coverage c = coverage(orbit_along(sys, start, a), cover);
        if (!c.first_empty) {
            best.cells_hit = c.hit;
            best.start = start;
            best.verdict = Verdict::holds({static_cast<std::int64_t>(i)},
                                          "orbit along the window is eps-dense from start " +
                                              std::to_string(i));
            report.verdict = Verdict::holds(
                {static_cast<std::int64_t>(i)},
                "eps-dense orbit from grid start " + std::to_string(i) + " (eps=" + describe(eps) +
                    ", " + window_text(a) + "); not a claim about the infinite sequence");
            report.per_system.push_back(std::move(best));
            return report;
        }
        if (!have_best || c.hit > best.cells_hit) {
            have_best = true;
            best.cells_hit = c.hit;
            best.start = start;
            best_index = i;
            best_empty = *c.first_empty;
        }
    }
    const std::vector<std::int64_t> witness{static_cast<std::int64_t>(best_index),
                                            static_cast<std::int64_t>(best_empty)};
    best.verdict = Verdict::fails(witness, "best start and its least empty cell");
    report.verdict = Verdict::fails(
        witness, "no grid start has an eps-dense orbit (eps=" + describe(eps) + ", " +
                     window_text(a) + ")");
    report.per_system.push_back(std::move(best));
    return report;
}

Verdict birkhoff_window_test(const Window& a, const System& sys, double eps,
                             double start_grid_resolution) {
    if (!(eps > 0.0)) throw InvalidArgument("eps must be positive");
    const GridCover grid = start_grid(sys, start_grid_resolution);
    if (auto why = budget_violation(a, sys, eps)) return Verdict::inconclusive(*why);
    for (std::uint64_t i = 0; i < grid.cell_count(); ++i) {
        const State x = grid.anchor(i);
        for (Natural n : a) {
            if (n == 0) continue;
            if (distance(sys, sys.advance(x, n), x) < eps) {
                return Verdict::holds({static_cast<std::int64_t>(i), static_cast<std::int64_t>(n)},
                                      "grid start " + std::to_string(i) + " returns within eps=" +
                                          describe(eps) + " at time " + std::to_string(n));
            }
        }
    }
    return Verdict::fails({static_cast<std::int64_t>(grid.cell_count())},
                          "no grid start returns within eps=" + describe(eps) + " on the " +
                              window_text(a));
}

std::vector<std::int64_t> ShiftRange::ordered() const {
    if (lo > hi) throw InvalidArgument("empty shift range");
    std::vector<std::int64_t> out;
    for (std::int64_t n = lo;; ++n) {
        out.push_back(n);
        if (n == hi) break;
    }
    std::stable_sort(out.begin(), out.end(), [](std::int64_t x, std::int64_t y) {
        const auto ax = x < 0 ? -x : x, ay = y < 0 ? -y : y;
        return ax != ay ? ax < ay : x < y;
    });
    return out;
}

Verdict shift_family_test(const Window& a, ShiftRange shifts, const WindowTester& tester) {
    std::optional<Verdict> unsure;
    for (std::int64_t n : shifts.ordered()) {
        Verdict v = tester(a.shifted(n));
        if (v.is_fails()) {
            std::vector<std::int64_t> witness{n};
            witness.insert(witness.end(), v.witness.begin(), v.witness.end());
            return Verdict::fails(std::move(witness), "shift " + std::to_string(n) + ": " + v.note);
        }
        if (v.is_inconclusive() && !unsure) {
            unsure = Verdict::inconclusive("shift " + std::to_string(n) + ": " + v.note);
        }
    }
    if (unsure) return *unsure;
    return Verdict::holds({}, "every shift in [" + std::to_string(shifts.lo) + ", " +
                                  std::to_string(shifts.hi) + "] passes");
}

CrosscheckReport equivalence_crosscheck(const Window& a, Natural max_period, ShiftRange shifts) {
    if (max_period == 0) throw InvalidArgument("max_period must be >= 1");
    const auto order = shifts.ordered();
    std::vector<Window> shifted;
    shifted.reserve(order.size());
    for (auto n : order) shifted.push_back(a.shifted(n));

    CrosscheckReport out;
    for (Natural m = 1; m <= max_period; ++m) {
        // S = mN + r is syndetic; its positive differences are the positive
        // multiples of m, observed far enough that every a + j below is covered.
        const Natural h = a.horizon() + 4 * m;
        std::vector<Window> diffs;
        for (Natural r = 0; r < m; ++r) {
            diffs.push_back(difference_set(Window::from_predicate(
                h, [&](Natural x) { return x >= r && (x - r) % m == 0; })));
        }
        for (std::size_t si = 0; si < order.size(); ++si) {
            const Window& w = shifted[si];
            ++out.instances;

            const auto hit = residues_hit(w, m);
            const bool coverage = std::find(hit.begin(), hit.end(), false) == hit.end();

            // (w + j) meets N(U, U) = mN for every shift class; j in [m, 2m)
            // keeps every candidate positive.
            bool returns = true;
            for (Natural j = m; j < 2 * m && returns; ++j) {
                returns = std::any_of(w.begin(), w.end(), [&](Natural x) { return (x + j) % m == 0; });
            }

            bool differences = true;
            for (Natural j = m; j < 2 * m && differences; ++j) {
                for (const auto& d : diffs) {
                    if (!shifted_hit(w, d, -static_cast<std::int64_t>(j)).is_holds()) {
                        differences = false;
                        break;
                    }
                }
            }

            if (coverage != returns || coverage != differences) {
                out.verdict = Verdict::fails(
                    {static_cast<std::int64_t>(m), order[si], coverage, returns, differences},
                    "characterizations disagree at m=" + std::to_string(m) +
                        ", shift=" + std::to_string(order[si]));
                return out;
            }
            if (!coverage && !out.first_failure) out.first_failure = {m, order[si]};
        }
    }
    std::string note = "three characterizations agree on " + std::to_string(out.instances) +
                       " (m, shift) instances";
    if (out.first_failure) {
        note += "; all fail first at m=" + std::to_string(out.first_failure->first) +
                ", shift=" + std::to_string(out.first_failure->second);
    } else {
        note += "; all hold everywhere";
    }
    out.verdict = Verdict::holds({}, std::move(note));
    return out;
}

Subcover finite_subcover(const Window& a, Natural m) {
    if (m == 0) throw InvalidArgument("m must be >= 1");
    std::vector<std::optional<Natural>> first(m);
    Natural filled = 0;
    for (Natural x : a) {
        auto& slot = first[x % m];
        if (!slot) {
            slot = x;
            if (++filled == m) break;
        }
    }
    Subcover out;
    std::vector<Natural> chosen;
    for (Natural r = 0; r < m; ++r) {
        if (!first[r]) {
            out.missing_residue = r;
            return out;
        }
        chosen.push_back(*first[r]);
    }
    std::sort(chosen.begin(), chosen.end());
    out.cover = Window(std::move(chosen), a.horizon());
    return out;
}

ProductTransitivity product_transitive_finite(Natural m, Natural n) {
    if (m == 0 || n == 0) throw InvalidArgument("periods must be >= 1");
    const auto sys = product(cyclic(m), cyclic(n));
    const State origin = sys->origin();
    State s = origin;
    Natural size = 0;
    do {
        s = sys->step(s);
        ++size;
    } while (!(s == origin));
    ProductTransitivity out;
    out.coprime = std::gcd(m, n) == 1;
    out.orbit_size = size;
    out.consistent = (size == m * n) == out.coprime;
    return out;
}

double geometric_average_magnitude(double alpha, std::int64_t k, Natural count) {
    if (count == 0) throw InvalidArgument("count must be >= 1");
    auto frac = [](long double x) { return x - std::floor(x); };
    const long double pi = std::numbers::pi_v<long double>;
    const long double ka = frac(static_cast<long double>(k) * alpha);
    const long double den = std::fabs(std::sin(pi * ka));
    if (den < 1e-300L) return 1.0;
    const long double kna =
        frac(static_cast<long double>(k) * static_cast<long double>(count) * alpha);
    return static_cast<double>(std::fabs(std::sin(pi * kna)) /
                               (static_cast<long double>(count) * den));
}

CesaroTrace cesaro_average_along(const Window& a, const System& rotation, std::int64_t k,
                                 const State& start) {
    if (k == 0) throw InvalidArgument("frequency k must be nonzero");
    const Angle* angle = single_rotation_angle(rotation);
    if (angle == nullptr) throw InvalidArgument("Cesaro averages need a one-dimensional rotation");
    rotation.validate(start);
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    const long double x0 = start.continuous[0];
    std::complex<long double> sum{0, 0};
    CesaroTrace out;
    out.magnitudes.reserve(a.size());
    std::size_t count = 0;
    for (Natural n : a) {
        long double phase = static_cast<long double>(k) * (x0 + frac_multiple(*angle, n));
        phase -= std::floor(phase);
        sum += std::polar(1.0L, two_pi * phase);
        ++count;
        out.magnitudes.push_back(static_cast<double>(std::abs(sum) / static_cast<long double>(count)));
    }
    if (!a.empty() && a.elements().back() - a.elements().front() + 1 == a.size()) {
        double worst = 0.0;
        for (std::size_t i = 0; i < out.magnitudes.size(); ++i) {
            const double closed = geometric_average_magnitude(angle->value, k, i + 1);
            const double diff = std::fabs(out.magnitudes[i] - closed);
            worst = std::max(worst, closed > 0 ? diff / closed : diff);
        }
        out.closed_form_max_rel_error = worst;
    }
    return out;
}

}  // namespace rseq
