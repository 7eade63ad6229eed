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

#include "rseq/systems.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "rseq/errors.hpp"

namespace rseq {
namespace {

long double frac_ld(long double x) {
    x -= std::floor(x);
    return x >= 1.0L ? 0.0L : x;
}

double mod1(double x) {
    double r = x - std::floor(x);
    return r >= 1.0 ? 0.0 : r;
}

double circular(double a, double b) {
    double d = std::fabs(a - b);
    return std::min(d, 1.0 - d);
}

Natural smallest_prime_factor(Natural n) {
    for (Natural d = 2; d * d <= n; ++d) {
        if (n % d == 0) return d;
    }
    return n;
}

Natural mulmod(Natural a, Natural b, Natural m) {
    return static_cast<Natural>((static_cast<unsigned __int128>(a) * b) % m);
}

// frac(n * alpha) for one angle, exact for rational angles.
long double angle_times(const Angle& a, unsigned __int128 n) {
    if (a.exact) {
        const Natural den = a.exact->den;
        const Natural r = static_cast<Natural>(n % den);
        return static_cast<long double>(mulmod(r, a.exact->num, den)) /
               static_cast<long double>(den);
    }
    return frac_ld(static_cast<long double>(n) * static_cast<long double>(a.value));
}

// Error of frac(t * alpha) for t <= max_t.
double angle_error(const Angle& a, long double max_t) {
    if (a.exact) return 4 * std::numeric_limits<double>::epsilon();
    const long double rounding = max_t * std::ldexp(1.0L, -62);
    return static_cast<double>(max_t * a.representation_error() + rounding) +
           4 * std::numeric_limits<double>::epsilon();
}

class CyclicSystem final : public System {
public:
    explicit CyclicSystem(Natural m) : m_(m) {
        if (m == 0) throw InvalidArgument("cyclic period must be >= 1");
    }
    SystemKind kind() const noexcept override { return SystemKind::Cyclic; }
    std::string spec() const override { return "cyclic:" + std::to_string(m_); }
    bool is_finite() const noexcept override { return true; }
    std::vector<Natural> discrete_radices() const override { return {m_}; }
    std::size_t continuous_dims() const noexcept override { return 0; }
    State step(const State& s) const override {
        return {{(s.discrete[0] + 1) % m_}, {}};
    }
    State advance(const State& s, Natural n) const override {
        return {{(s.discrete[0] + n % m_) % m_}, {}};
    }
    double orbit_error_bound(Natural) const override { return 0.0; }
    Verdict total_minimality() const override {
        if (m_ == 1) return Verdict::holds({}, "single point");
        const Natural p = smallest_prime_factor(m_);
        return Verdict::fails({static_cast<std::int64_t>(p)},
                              "T^" + std::to_string(p) + " splits Z/" + std::to_string(m_) +
                                  " into " + std::to_string(p) + " cycles");
    }

private:
    Natural m_;
};

class OdometerSystem final : public System {
public:
    OdometerSystem(Natural base, Natural depth) : base_(base), depth_(depth) {
        if (base < 2) throw InvalidArgument("odometer base must be >= 2");
        if (depth < 1) throw InvalidArgument("odometer depth must be >= 1");
        period_ = 1;
        for (Natural i = 0; i < depth; ++i) {
            if (period_ > std::numeric_limits<Natural>::max() / base) {
                throw OverflowError("odometer period p^d overflows 64 bits");
            }
            period_ *= base;
        }
    }
    SystemKind kind() const noexcept override { return SystemKind::Odometer; }
    std::string spec() const override {
        return "odo:" + std::to_string(base_) + "^" + std::to_string(depth_);
    }
    bool is_finite() const noexcept override { return true; }
    std::vector<Natural> discrete_radices() const override {
        return std::vector<Natural>(depth_, base_);
    }
    std::size_t continuous_dims() const noexcept override { return 0; }
    State step(const State& s) const override {
        State out = s;
        for (auto& digit : out.discrete) {
            if (++digit < base_) break;
            digit = 0;
        }
        return out;
    }
    State advance(const State& s, Natural n) const override {
        Natural v = 0;
        for (std::size_t i = s.discrete.size(); i-- > 0;) v = v * base_ + s.discrete[i];
        v = static_cast<Natural>((static_cast<unsigned __int128>(v) + n % period_) % period_);
        State out;
        out.discrete.resize(depth_);
        for (auto& digit : out.discrete) {
            digit = v % base_;
            v /= base_;
        }
        return out;
    }
    double orbit_error_bound(Natural) const override { return 0.0; }
    Verdict total_minimality() const override {
        const Natural p = smallest_prime_factor(base_);
        return Verdict::fails({static_cast<std::int64_t>(p)},
                              "truncated odometer is a cycle of length " + std::to_string(period_));
    }

private:
    Natural base_;
    Natural depth_;
    Natural period_;
};

class RotationSystem final : public System {
public:
    explicit RotationSystem(std::vector<Angle> angles) : angles_(std::move(angles)) {
        if (angles_.empty()) throw InvalidArgument("rotation needs at least one angle");
    }
    SystemKind kind() const noexcept override { return SystemKind::Rotation; }
    std::string spec() const override {
        std::string s = "rot:";
        for (std::size_t i = 0; i < angles_.size(); ++i) {
            if (i) s += ',';
            s += angles_[i].label;
        }
        return s;
    }
    bool is_finite() const noexcept override { return false; }
    std::vector<Natural> discrete_radices() const override { return {}; }
    std::size_t continuous_dims() const noexcept override { return angles_.size(); }
    State step(const State& s) const override {
        State out = s;
        for (std::size_t i = 0; i < angles_.size(); ++i) {
            out.continuous[i] = mod1(s.continuous[i] + angles_[i].value);
        }
        return out;
    }
    State advance(const State& s, Natural n) const override {
        State out = s;
        for (std::size_t i = 0; i < angles_.size(); ++i) {
            out.continuous[i] = static_cast<double>(
                frac_ld(static_cast<long double>(s.continuous[i]) + angle_times(angles_[i], n)));
        }
        return out;
    }
    double orbit_error_bound(Natural max_time) const override {
        double e = 0.0;
        for (const auto& a : angles_) {
            e = std::max(e, angle_error(a, static_cast<long double>(max_time)));
        }
        return e;
    }
    Verdict total_minimality() const override {
        Natural q = 1;
        bool any_irrational = false;
        for (const auto& a : angles_) {
            if (a.exact) {
                q = std::lcm(q, a.exact->den);
            } else {
                any_irrational = true;
            }
        }
        if (q > 1) {
            const Natural p = smallest_prime_factor(q);
            return Verdict::fails({static_cast<std::int64_t>(p)},
                                  "rational coordinates make orbit closures cycles of length " +
                                      std::to_string(q));
        }
        if (!any_irrational) return Verdict::holds({}, "zero angle: every orbit is a point");
        return Verdict::holds(
            {}, angles_.size() == 1
                    ? "assumes the angle is irrational; only its double approximation is known"
                    : "assumes 1 and the angles are rationally independent; only double "
                      "approximations are known");
    }
    const Angle& angle(std::size_t i) const { return angles_[i]; }

private:
    std::vector<Angle> angles_;
};

class SkewProductSystem final : public System {
public:
    explicit SkewProductSystem(Angle angle) : angle_(std::move(angle)) {}
    SystemKind kind() const noexcept override { return SystemKind::SkewProduct; }
    std::string spec() const override { return "skew:" + angle_.label; }
    bool is_finite() const noexcept override { return false; }
    std::vector<Natural> discrete_radices() const override { return {}; }
    std::size_t continuous_dims() const noexcept override { return 2; }
    State step(const State& s) const override {
        const double x = s.continuous[0], y = s.continuous[1];
        return {{}, {mod1(x + angle_.value), mod1(y + x)}};
    }
    // (x, y) -> (x + n a, y + n x + n(n-1)/2 a) mod 1
    State advance(const State& s, Natural n) const override {
        const long double x = s.continuous[0], y = s.continuous[1];
        const unsigned __int128 tri =
            (static_cast<unsigned __int128>(n) * (n == 0 ? 0 : n - 1)) / 2;
        const long double xn = frac_ld(x + angle_times(angle_, n));
        const long double nx = frac_ld(static_cast<long double>(n) * x);
        const long double yn = frac_ld(y + nx + angle_times(angle_, tri));
        return {{}, {static_cast<double>(xn), static_cast<double>(yn)}};
    }
    double orbit_error_bound(Natural max_time) const override {
        const long double t = static_cast<long double>(max_time);
        const long double tri = t * t / 2;
        return angle_error(angle_, tri) + static_cast<double>(t * std::ldexp(1.0L, -62)) +
               4 * std::numeric_limits<double>::epsilon();
    }
    Verdict total_minimality() const override {
        if (angle_.exact) {
            return Verdict::fails({1}, "rational angle: the first coordinate is periodic, so the "
                                       "torus is not minimal");
        }
        return Verdict::holds({}, "assumes the angle is irrational; only its double "
                                  "approximation is known");
    }

private:
    Angle angle_;
};

class ProductSystem final : public System {
public:
    ProductSystem(SystemPtr left, SystemPtr right) : left_(std::move(left)), right_(std::move(right)) {
        if (!left_ || !right_) throw InvalidArgument("product of a null system");
    }
    SystemKind kind() const noexcept override { return SystemKind::Product; }
    std::string spec() const override { return "prod(" + left_->spec() + "," + right_->spec() + ")"; }
    bool is_finite() const noexcept override { return left_->is_finite() && right_->is_finite(); }
    std::vector<Natural> discrete_radices() const override {
        auto r = left_->discrete_radices();
        auto rr = right_->discrete_radices();
        r.insert(r.end(), rr.begin(), rr.end());
        return r;
    }
    std::size_t continuous_dims() const noexcept override {
        return left_->continuous_dims() + right_->continuous_dims();
    }
    State step(const State& s) const override {
        auto [l, r] = split(s);
        return join(left_->step(l), right_->step(r));
    }
    State advance(const State& s, Natural n) const override {
        auto [l, r] = split(s);
        return join(left_->advance(l, n), right_->advance(r, n));
    }
    double orbit_error_bound(Natural max_time) const override {
        return std::max(left_->orbit_error_bound(max_time), right_->orbit_error_bound(max_time));
    }
    Verdict total_minimality() const override {
        if (is_finite()) {
            const Natural m = finite_size(*left_), n = finite_size(*right_);
            if (std::gcd(m, n) != 1) {
                return Verdict::fails({1}, "gcd of the factor sizes exceeds 1: not minimal");
            }
            if (m * n == 1) return Verdict::holds({}, "single point");
            const Natural p = smallest_prime_factor(m * n);
            return Verdict::fails({static_cast<std::int64_t>(p)},
                                  "product is a cycle of length " + std::to_string(m * n));
        }
        const Verdict l = left_->total_minimality(), r = right_->total_minimality();
        if (l.is_fails() || r.is_fails()) {
            const Verdict& v = (l.is_fails() && (!r.is_fails() || l.witness <= r.witness)) ? l : r;
            return Verdict::fails(v.witness, "a factor is not totally minimal: " + v.note);
        }
        return Verdict::inconclusive("products of totally minimal systems need not be minimal");
    }
    const SystemPtr& left() const noexcept { return left_; }
    const SystemPtr& right() const noexcept { return right_; }

private:
    std::pair<State, State> split(const State& s) const {
        const std::size_t ld = left_->discrete_radices().size();
        const std::size_t lc = left_->continuous_dims();
        State l, r;
        l.discrete.assign(s.discrete.begin(), s.discrete.begin() + static_cast<std::ptrdiff_t>(ld));
        r.discrete.assign(s.discrete.begin() + static_cast<std::ptrdiff_t>(ld), s.discrete.end());
        l.continuous.assign(s.continuous.begin(),
                            s.continuous.begin() + static_cast<std::ptrdiff_t>(lc));
        r.continuous.assign(s.continuous.begin() + static_cast<std::ptrdiff_t>(lc),
                            s.continuous.end());
        return {std::move(l), std::move(r)};
    }
    static State join(State l, const State& r) {
        l.discrete.insert(l.discrete.end(), r.discrete.begin(), r.discrete.end());
        l.continuous.insert(l.continuous.end(), r.continuous.begin(), r.continuous.end());
        return l;
    }

    SystemPtr left_;
    SystemPtr right_;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Natural parse_natural(std::string_view s, std::string_view what) {
    s = trim(s);
    Natural v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError("invalid " + std::string(what) + " '" + std::string(s) + "'");
    }
    return v;
}

Angle parse_angle(std::string_view s) {
    s = trim(s);
    if (s == "golden") return Angle::real((std::sqrt(5.0) - 1.0) / 2.0, "golden");
    if (s == "sqrt2") return Angle::real(std::sqrt(2.0) - 1.0, "sqrt2");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        const Natural num = parse_natural(s.substr(0, slash), "angle numerator");
        const Natural den = parse_natural(s.substr(slash + 1), "angle denominator");
        if (den == 0) throw ParseError("angle denominator must be nonzero");
        return Angle::rational(num, den);
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
        throw ParseError("invalid angle '" + std::string(s) + "'");
    }
    return Angle::real(mod1(v), std::string(s));
}

}  // namespace

Angle Angle::rational(Natural num, Natural den) {
    if (den == 0) throw InvalidArgument("angle denominator must be nonzero");
    num %= den;
    const Natural g = std::gcd(num, den);
    const Natural n = g ? num / g : 0, d = g ? den / g : 1;
    Angle a;
    a.exact = Fraction{n, d};
    a.value = static_cast<double>(n) / static_cast<double>(d);
    a.label = std::to_string(n) + "/" + std::to_string(d);
    a.convergents = {{n, d}};
    return a;
}

Angle Angle::real(double value, std::string label) {
    if (!(value >= 0.0 && value < 1.0)) throw InvalidArgument("angle must lie in [0, 1)");
    Angle a;
    a.value = value;
    if (label.empty()) {
        std::ostringstream os;
        os.precision(17);
        os << value;
        label = os.str();
    }
    a.label = std::move(label);
    // p_k / q_k from the continued fraction of the double.
    long double x = value;
    Natural p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int i = 0; i < 16; ++i) {
        const long double fl = std::floor(x);
        const auto term = static_cast<Natural>(fl);
        const Natural p2 = term * p1 + p0, q2 = term * q1 + q0;
        if (q2 > (Natural{1} << 40)) break;
        a.convergents.emplace_back(p2, q2);
        p0 = p1, q0 = q1, p1 = p2, q1 = q2;
        const long double rest = x - fl;
        if (rest < 1e-15L) break;
        x = 1.0L / rest;
    }
    return a;
}

double Angle::representation_error() const {
    if (exact) return 0.0;
    const double next = std::nextafter(value, 1.0);
    return (next - value) / 2.0;
}

State System::origin() const {
    State s;
    s.discrete.assign(discrete_radices().size(), 0);
    s.continuous.assign(continuous_dims(), 0.0);
    return s;
}

void System::validate(const State& s) const {
    const auto radices = discrete_radices();
    if (s.discrete.size() != radices.size() || s.continuous.size() != continuous_dims()) {
        throw InvalidArgument("state does not match the layout of " + spec());
    }
    for (std::size_t i = 0; i < radices.size(); ++i) {
        if (s.discrete[i] >= radices[i]) throw InvalidArgument("state outside the space of " + spec());
    }
    for (double x : s.continuous) {
        if (!(x >= 0.0 && x < 1.0)) throw InvalidArgument("torus coordinate outside [0, 1)");
    }
}

SystemPtr cyclic(Natural period) { return std::make_shared<CyclicSystem>(period); }
SystemPtr rotation(std::vector<Angle> angles) {
    return std::make_shared<RotationSystem>(std::move(angles));
}
SystemPtr rotation(Angle angle) { return rotation(std::vector<Angle>{std::move(angle)}); }
SystemPtr odometer(Natural base, Natural depth) {
    return std::make_shared<OdometerSystem>(base, depth);
}
SystemPtr skew_product(Angle angle) { return std::make_shared<SkewProductSystem>(std::move(angle)); }
SystemPtr product(SystemPtr left, SystemPtr right) {
    return std::make_shared<ProductSystem>(std::move(left), std::move(right));
}

SystemPtr parse_system(std::string_view spec) {
    spec = trim(spec);
    auto starts = [&](std::string_view p) { return spec.substr(0, p.size()) == p; };
    if (starts("prod(")) {
        if (spec.back() != ')') throw ParseError("unbalanced parentheses in '" + std::string(spec) + "'");
        const std::string_view body = spec.substr(5, spec.size() - 6);
        int depth = 0;
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (body[i] == '(') ++depth;
            if (body[i] == ')') --depth;
            if (depth < 0) break;
            if (body[i] == ',' && depth == 0) {
                // rot:a,b has commas of its own; the first split where both sides parse wins.
                try {
                    auto left = parse_system(body.substr(0, i));
                    auto right = parse_system(body.substr(i + 1));
                    return product(std::move(left), std::move(right));
                } catch (const ParseError&) {
                    continue;
                }
            }
        }
        throw ParseError("product needs two system specs: '" + std::string(spec) + "'");
    }
    if (starts("cyclic:")) return cyclic(parse_natural(spec.substr(7), "cyclic period"));
    if (starts("odo:")) {
        const std::string_view body = spec.substr(4);
        const auto caret = body.find('^');
        if (caret == std::string_view::npos) throw ParseError("odometer spec must be odo:p^d");
        return odometer(parse_natural(body.substr(0, caret), "odometer base"),
                        parse_natural(body.substr(caret + 1), "odometer depth"));
    }
    if (starts("rot:")) {
        std::vector<Angle> angles;
        std::string_view body = spec.substr(4);
        while (true) {
            const auto comma = body.find(',');
            angles.push_back(parse_angle(body.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        return rotation(std::move(angles));
    }
    if (starts("skew:")) return skew_product(parse_angle(spec.substr(5)));
    throw ParseError("unknown system spec '" + std::string(spec) + "'");
}

Natural finite_size(const System& sys) {
    if (!sys.is_finite()) throw InvalidArgument(sys.spec() + " is not a finite system");
    Natural n = 1;
    for (Natural r : sys.discrete_radices()) {
        if (n > std::numeric_limits<Natural>::max() / r) throw OverflowError("space size overflows");
        n *= r;
    }
    return n;
}

double distance(const System& sys, const State& a, const State& b) {
    sys.validate(a);
    sys.validate(b);
    double d = 0.0;
    for (std::size_t i = 0; i < a.discrete.size(); ++i) {
        if (a.discrete[i] != b.discrete[i]) d = 1.0;
    }
    for (std::size_t i = 0; i < a.continuous.size(); ++i) {
        d = std::max(d, circular(a.continuous[i], b.continuous[i]));
    }
    return d;
}

State step(const System& sys, const State& s) {
    sys.validate(s);
    return sys.step(s);
}

std::vector<State> orbit_along(const System& sys, const State& start, const Window& a) {
    sys.validate(start);
    std::vector<State> out;
    out.reserve(a.size());
    for (Natural n : a) out.push_back(sys.advance(start, n));
    return out;
}

GridCover::GridCover(const System& sys, double eps)
    : eps_(eps), discrete_(sys.discrete_radices()), continuous_(sys.continuous_dims()) {
    if (!(eps > 0.0)) throw InvalidArgument("cover resolution must be positive");
    const double inv = std::ceil(1.0 / eps - 1e-9);
    if (inv > 1e9) throw CapExceeded("cover resolution too fine");
    per_axis_ = std::max<Natural>(1, static_cast<Natural>(inv));
    long double cells = 1;
    for (Natural r : discrete_) cells *= r;
    for (std::size_t i = 0; i < continuous_; ++i) cells *= per_axis_;
    if (cells > static_cast<long double>(kMaxCells)) {
        throw CapExceeded("cover of " + sys.spec() + " would have more than 2^32 cells");
    }
    cells_ = static_cast<std::uint64_t>(cells);
}

std::uint64_t GridCover::cell_of(const State& s) const {
    if (s.discrete.size() != discrete_.size() || s.continuous.size() != continuous_) {
        throw SpaceMismatch("state does not match the cover's space");
    }
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < discrete_.size(); ++i) idx = idx * discrete_[i] + s.discrete[i];
    const auto c = static_cast<long double>(per_axis_);
    for (double x : s.continuous) {
        auto k = static_cast<Natural>(std::floor((static_cast<long double>(x) + kBoundarySnap) * c));
        if (k >= per_axis_) k -= per_axis_;
        idx = idx * per_axis_ + k;
    }
    return idx;
}

State GridCover::anchor(std::uint64_t cell) const {
    if (cell >= cells_) throw InvalidArgument("cell index out of range");
    State s;
    s.discrete.resize(discrete_.size());
    s.continuous.resize(continuous_);
    for (std::size_t i = continuous_; i-- > 0;) {
        s.continuous[i] = static_cast<double>(cell % per_axis_) / static_cast<double>(per_axis_);
        cell /= per_axis_;
    }
    for (std::size_t i = discrete_.size(); i-- > 0;) {
        s.discrete[i] = cell % discrete_[i];
        cell /= discrete_[i];
    }
    return s;
}

bool GridCover::matches(const System& sys) const {
    return sys.discrete_radices() == discrete_ && sys.continuous_dims() == continuous_;
}

Verdict eps_dense(const System& sys, const std::vector<State>& states, const GridCover& cover) {
    if (!cover.matches(sys)) throw SpaceMismatch("cover was not built for " + sys.spec());
    std::vector<char> hit(cover.cell_count(), 0);
    std::uint64_t count = 0;
    for (const auto& s : states) {
        const auto c = cover.cell_of(s);
        if (!hit[c]) {
            hit[c] = 1;
            ++count;
        }
    }
    const auto it = std::find(hit.begin(), hit.end(), 0);
    if (it != hit.end()) {
        return Verdict::fails({static_cast<std::int64_t>(it - hit.begin())},
                              std::to_string(count) + " of " + std::to_string(cover.cell_count()) +
                                  " cells hit");
    }
    return Verdict::holds({}, "all " + std::to_string(cover.cell_count()) + " cells hit");
}

Verdict is_totally_minimal(const System& sys) { return sys.total_minimality(); }

const Angle* single_rotation_angle(const System& sys) {
    const auto* rot = dynamic_cast<const RotationSystem*>(&sys);
    if (rot == nullptr || rot->continuous_dims() != 1) return nullptr;
    return &rot->angle(0);
}

long double frac_multiple(const Angle& angle, Natural n) { return angle_times(angle, n); }

}  // namespace rseq
