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

#ifndef RSEQ_PERMPOLY_HPP
#define RSEQ_PERMPOLY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rseq/window.hpp"

namespace rseq {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(Natural n);

/// Z/p for a prime p (checked by trial division).
class PrimeField {
public:
    explicit PrimeField(Natural p);

    Natural p() const noexcept { return p_; }
    Natural add(Natural a, Natural b) const noexcept { return (a + b) % p_; }
    Natural mul(Natural a, Natural b) const noexcept {
        return static_cast<Natural>((static_cast<unsigned __int128>(a) * b) % p_);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    Natural p_;
};

/// Polynomial over a prime field. coefficients()[i] is the coefficient of
/// x^i; trailing zeros are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class PolyModP {
public:
    PolyModP(PrimeField field, std::vector<Natural> coefficients);
    static PolyModP monomial(PrimeField field, Natural exponent, Natural coefficient = 1);

    const PrimeField& field() const noexcept { return field_; }
    const std::vector<Natural>& coefficients() const noexcept { return coeffs_; }
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Natural leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    Natural evaluate(Natural x) const;

    friend PolyModP operator*(const PolyModP& a, const PolyModP& b);
    friend PolyModP operator+(const PolyModP& a, const PolyModP& b);
    friend bool operator==(const PolyModP&, const PolyModP&) = default;

private:
    PrimeField field_;
    std::vector<Natural> coeffs_;
};

/// Remainder modulo x^p - x: x^e with e >= 1 becomes x^r, r in [1, p-1],
/// r = e mod (p-1).
PolyModP reduce_mod_field_poly(const PolyModP& f);

/// f^k mod (x^p - x) by square-and-multiply, reducing after every product.
PolyModP power_reduced(const PolyModP& f, Natural k);

struct HermiteEvidence {
    enum class Failure { None, NotMonicTopPower, LowPowerTooLarge };

    bool permutes = false;
    Failure failure = Failure::None;
    /// The exponent whose reduced power broke a condition (p-1 for the
    /// monic condition).
    Natural k = 0;
    std::int64_t degree = 0;
    Natural leading = 0;
};

/// Hermite's criterion over F_p: the reduced f^(p-1) is monic of degree
/// p-1, and for 1 <= k <= p-2 with k != 0 mod p the reduced f^k has degree
/// at most p-2.
HermiteEvidence hermite_check(const PolyModP& f);

struct PermutationImage {
    bool permutes = false;
    std::vector<Natural> image;  // sorted, distinct
};

/// Evaluates f at every element of F_p.
PermutationImage brute_permutation_check(const PolyModP& f);

/// Polynomial with arbitrary-precision integer coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coefficients);

    /// Accepts sums of terms such as "x^2+3x+1", "-2*x^3 + x - 7".
    static IntPoly parse(std::string_view text);

    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const BigInt& leading() const;
    PolyModP mod(const PrimeField& field) const;
    std::string str() const;

private:
    std::vector<BigInt> coeffs_;
};

struct NonSurjectivePrime {
    Natural p = 0;
    Natural missing = 0;
    std::vector<Natural> image;
    /// Primes examined, the successful one included.
    Natural candidates = 0;
};

/// Scans primes p = 1 mod deg f with p > |leading coefficient| and
/// p <= prime_cap in increasing order, returning the first whose image
/// {f(n) mod p} is a proper subset of Z/p together with its least missing
/// residue. Throws CapExceeded if the scan runs past the cap.
NonSurjectivePrime find_non_surjective_prime(const IntPoly& f, Natural prime_cap);

}  // namespace rseq

#endif  // RSEQ_PERMPOLY_HPP
