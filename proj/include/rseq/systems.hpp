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

#ifndef RSEQ_SYSTEMS_HPP
#define RSEQ_SYSTEMS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rseq/verdict.hpp"
#include "rseq/window.hpp"

namespace rseq {

/// A point of a catalog system. Finite coordinates (residues, odometer
/// digits) live in `discrete`; torus coordinates in [0,1) live in
/// `continuous`. Products concatenate the left layout before the right one.
struct State {
    std::vector<Natural> discrete;
    std::vector<double> continuous;

    friend bool operator==(const State&, const State&) = default;
};

/// Exact rational angle num/den with 0 <= num < den.
struct Fraction {
    Natural num = 0;
    Natural den = 1;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// One coordinate of a rotation angle. `exact` is set for rational angles;
/// `label` is the spelling used in spec strings ("golden", "1/3", ...).
struct Angle {
    double value = 0.0;
    std::optional<Fraction> exact;
    std::string label;
    /// Continued-fraction convergents of `value` (numerator, denominator).
    std::vector<std::pair<Natural, Natural>> convergents;

    static Angle rational(Natural num, Natural den);
    static Angle real(double value, std::string label = {});
    /// Half an ulp for irrational angles, 0 for exact ones.
    double representation_error() const;
};

enum class SystemKind { Cyclic, Rotation, Odometer, SkewProduct, Product };

class System;
using SystemPtr = std::shared_ptr<const System>;

/// Immutable catalog system. `advance` evaluates T^n through a closed form
/// (modular arithmetic, mod-1 arithmetic, the skew-product polynomial) and
/// must agree with n-fold `step`.
class System {
public:
    virtual ~System() = default;

    virtual SystemKind kind() const noexcept = 0;
    virtual std::string spec() const = 0;
    virtual bool is_finite() const noexcept = 0;

    /// Size of each discrete axis, in layout order.
    virtual std::vector<Natural> discrete_radices() const = 0;
    virtual std::size_t continuous_dims() const noexcept = 0;

    virtual State step(const State& s) const = 0;
    virtual State advance(const State& s, Natural n) const = 0;

    /// Upper bound on the absolute error of any coordinate of advance(s, n)
    /// for n <= max_time, from angle representation and long double rounding.
    virtual double orbit_error_bound(Natural max_time) const = 0;

    virtual Verdict total_minimality() const = 0;

    /// The point with every coordinate zero.
    State origin() const;
    void validate(const State& s) const;
};

SystemPtr cyclic(Natural period);
SystemPtr rotation(std::vector<Angle> angles);
SystemPtr rotation(Angle angle);
SystemPtr odometer(Natural base, Natural depth);
SystemPtr skew_product(Angle angle);
SystemPtr product(SystemPtr left, SystemPtr right);

/// Parses `cyclic:m`, `rot:<angle>[,<angle>...]`, `odo:p^d`, `skew:<angle>`,
/// `prod(<spec>,<spec>)`. An angle is `golden`, `sqrt2`, `p/q` or a decimal.
SystemPtr parse_system(std::string_view spec);

/// Number of points of a finite system; throws for metric systems.
Natural finite_size(const System& sys);

/// Max over coordinates: discrete metric on finite axes, circular distance on torus axes.
double distance(const System& sys, const State& a, const State& b);

State step(const System& sys, const State& s);

/// T^n(start) for n in a, in order.
std::vector<State> orbit_along(const System& sys, const State& start, const Window& a);

/// Partition of a system's space into cells. Finite axes use singletons;
/// torus axes use half-open boxes of mesh 1/ceil(1/eps). A torus coordinate
/// within `kBoundarySnap` below a cell boundary belongs to the upper cell,
/// which absorbs mod-1 rounding of exact rational orbits.
class GridCover {
public:
    static constexpr double kBoundarySnap = 1e-12;
    static constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 32;

    GridCover(const System& sys, double eps);

    double eps() const noexcept { return eps_; }
    double mesh() const noexcept { return 1.0 / static_cast<double>(per_axis_); }
    Natural cells_per_torus_axis() const noexcept { return per_axis_; }
    std::uint64_t cell_count() const noexcept { return cells_; }

    std::uint64_t cell_of(const State& s) const;
    /// Lower corner of the cell.
    State anchor(std::uint64_t cell) const;

    bool matches(const System& sys) const;

private:
    double eps_;
    Natural per_axis_;
    std::vector<Natural> discrete_;
    std::size_t continuous_;
    std::uint64_t cells_;
};

/// Holds iff every cell of `cover` holds one of `states`; fails with the
/// least empty cell. Throws SpaceMismatch when the cover was built for a
/// different space.
Verdict eps_dense(const System& sys, const std::vector<State>& states, const GridCover& cover);

Verdict is_totally_minimal(const System& sys);

/// The angle of a one-dimensional rotation, nullptr for any other system.
const Angle* single_rotation_angle(const System& sys);

/// frac(n * angle) in long double, exact for rational angles.
long double frac_multiple(const Angle& angle, Natural n);

}  // namespace rseq

#endif  // RSEQ_SYSTEMS_HPP
