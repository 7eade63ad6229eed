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

#include "rseq/permpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rseq/errors.hpp"

namespace rseq {

bool is_prime(Natural n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (Natural d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(Natural p) : p_(p) {
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
}

namespace {

void trim(std::vector<Natural>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

PolyModP::PolyModP(PrimeField field, std::vector<Natural> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_) c %= field_.p();
    trim(coeffs_);
}

PolyModP PolyModP::monomial(PrimeField field, Natural exponent, Natural coefficient) {
    std::vector<Natural> c(exponent + 1, 0);
    c[exponent] = coefficient;
    return PolyModP(field, std::move(c));
}

Natural PolyModP::evaluate(Natural x) const {
    x %= field_.p();
    Natural acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = field_.add(field_.mul(acc, x), *it);
    }
    return acc;
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
    if (!(a.field_ == b.field_)) throw SpaceMismatch("polynomials over different fields");
    if (a.is_zero() || b.is_zero()) return PolyModP(a.field_, {});
    const auto& f = a.field_;
    std::vector<Natural> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    return PolyModP(f, std::move(c));
}

PolyModP operator+(const PolyModP& a, const PolyModP& b) {
    if (!(a.field_ == b.field_)) throw SpaceMismatch("polynomials over different fields");
    std::vector<Natural> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Natural x = i < a.coeffs_.size() ? a.coeffs_[i] : 0;
        const Natural y = i < b.coeffs_.size() ? b.coeffs_[i] : 0;
        c[i] = a.field_.add(x, y);
    }
    return PolyModP(a.field_, std::move(c));
}

PolyModP reduce_mod_field_poly(const PolyModP& f) {
    const auto& field = f.field();
    const Natural p = field.p();
    const auto& c = f.coefficients();
    if (c.size() <= p) return f;
    std::vector<Natural> r(p, 0);
    r[0] = c[0];
    for (std::size_t e = 1; e < c.size(); ++e) {
        const Natural to = 1 + (e - 1) % (p - 1);
        r[to] = field.add(r[to], c[e]);
    }
    return PolyModP(field, std::move(r));
}

PolyModP power_reduced(const PolyModP& f, Natural k) {
    PolyModP result(f.field(), {1});
    PolyModP base = reduce_mod_field_poly(f);
    while (k > 0) {
        if (k & 1) result = reduce_mod_field_poly(result * base);
        k >>= 1;
        if (k > 0) base = reduce_mod_field_poly(base * base);
    }
    return result;
}

HermiteEvidence hermite_check(const PolyModP& f) {
    const Natural p = f.field().p();
    HermiteEvidence ev;
    const PolyModP top = power_reduced(f, p - 1);
    ev.k = p - 1;
    ev.degree = top.degree();
    ev.leading = top.leading();
    if (top.degree() != static_cast<std::int64_t>(p - 1) || top.leading() != 1) {
        ev.failure = HermiteEvidence::Failure::NotMonicTopPower;
        return ev;
    }
    const PolyModP g = reduce_mod_field_poly(f);
    PolyModP power(f.field(), {1});
    for (Natural k = 1; k + 2 <= p; ++k) {
        power = reduce_mod_field_poly(power * g);
        if (k % p == 0) continue;
        if (power.degree() > static_cast<std::int64_t>(p - 2)) {
            ev.failure = HermiteEvidence::Failure::LowPowerTooLarge;
            ev.k = k;
            ev.degree = power.degree();
            ev.leading = power.leading();
            return ev;
        }
    }
    ev.permutes = true;
    return ev;
}

PermutationImage brute_permutation_check(const PolyModP& f) {
    const Natural p = f.field().p();
    std::vector<bool> seen(p, false);
    for (Natural x = 0; x < p; ++x) seen[f.evaluate(x)] = true;
    PermutationImage out;
    for (Natural v = 0; v < p; ++v) {
        if (seen[v]) out.image.push_back(v);
    }
    out.permutes = out.image.size() == p;
    return out;
}

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::parse(std::string_view text) {
    std::string s;
    for (std::size_t k = 0; k < text.size(); ++k) {
        const char ch = text[k];
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
            continue;
        }
        // Blanks may separate terms and signs, never two parts of one term.
        std::size_t next = k;
        while (next < text.size() && std::isspace(static_cast<unsigned char>(text[next]))) ++next;
        auto operand = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '^' || c == '*'; };
        if (!s.empty() && next < text.size() && operand(s.back()) && operand(text[next])) {
            throw ParseError("unexpected blank at offset " + std::to_string(k) + " in \"" + std::string(text) + "\"");
        }
        k = next - 1;
    }
    if (s.empty()) throw ParseError("empty polynomial");
    std::vector<BigInt> coeffs;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw ParseError(why + " at offset " + std::to_string(i) + " in \"" + std::string(text) + "\"");
    };
    auto read_digits = [&]() {
        const std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(start, i - start);
    };
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        BigInt coeff = 1;
        bool has_coeff = false;
        if (const auto digits = read_digits(); !digits.empty()) {
            coeff = BigInt(digits);
            has_coeff = true;
            if (i < s.size() && s[i] == '*') {
                ++i;
                if (i >= s.size() || s[i] != 'x') fail("expected 'x' after '*'");
            }
        }
        Natural exponent = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                const auto digits = read_digits();
                if (digits.empty()) fail("expected exponent");
                if (digits.size() > 6) fail("exponent too large");
                exponent = std::stoull(digits);
            }
        } else if (!has_coeff) {
            fail("expected a term");
        }
        if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
        coeffs[exponent] += sign * coeff;
    }
    return IntPoly(std::move(coeffs));
}

const BigInt& IntPoly::leading() const {
    if (coeffs_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

PolyModP IntPoly::mod(const PrimeField& field) const {
    const BigInt p = field.p();
    std::vector<Natural> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) {
        BigInt r = a % p;
        if (r < 0) r += p;
        c.push_back(r.convert_to<Natural>());
    }
    return PolyModP(field, std::move(c));
}

std::string IntPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t e = coeffs_.size(); e-- > 0;) {
        const BigInt& c = coeffs_[e];
        if (c == 0) continue;
        const BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || e == 0) os << mag;
        if (e >= 1) os << 'x';
        if (e >= 2) os << '^' << e;
    }
    return os.str();
}

NonSurjectivePrime find_non_surjective_prime(const IntPoly& f, Natural prime_cap) {
    const auto a = f.degree();
    if (a < 2) throw InvalidArgument("polynomial degree must be at least 2, got " + std::to_string(a));
    const auto deg = static_cast<Natural>(a);
    if (prime_cap < deg + 2) {
        throw InvalidArgument("prime cap must be at least deg + 2 = " + std::to_string(deg + 2));
    }
    const BigInt lead = abs(f.leading());
    NonSurjectivePrime out;
    for (Natural p = deg + 1; p <= prime_cap; p += deg) {
        if (BigInt(p) <= lead || !is_prime(p)) continue;
        ++out.candidates;
        const PolyModP g = f.mod(PrimeField(p));
        std::vector<bool> seen(p, false);
        for (Natural x = 0; x < p; ++x) seen[g.evaluate(x)] = true;
        const auto miss = std::find(seen.begin(), seen.end(), false);
        if (miss == seen.end()) continue;
        out.p = p;
        out.missing = static_cast<Natural>(miss - seen.begin());
        for (Natural v = 0; v < p; ++v) {
            if (seen[v]) out.image.push_back(v);
        }
        return out;
    }
    throw CapExceeded("no prime p = 1 mod " + std::to_string(deg) + " up to " +
                      std::to_string(prime_cap) + " leaves a residue uncovered by " + f.str());
}

}  // namespace rseq
