/*
 * Copyright 2026 The fqt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fqt/field.hpp"
#include "fqt/intfactor.hpp"

namespace fqt {

/// Element of F_q[t], stored as coefficients low-to-high in canonical
/// form (no trailing zeros; empty vector = the zero polynomial).
/// Pure value type; all arithmetic lives in free functions taking the
/// FieldCtx of the coefficient field.
struct Poly {
    std::vector<Elem> c;

    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly{}; }
    static Poly one() { return constant(1); }
    static Poly t() { return Poly{{0, 1}}; }
    static Poly constant(Elem v) { return v == 0 ? Poly{} : Poly{{v}}; }

    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    /// Degree; -1 is the sentinel for the zero polynomial.
    int deg() const { return static_cast<int>(c.size()) - 1; }
    Elem lead() const { return c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    Elem coeff(size_t i) const { return i < c.size() ? c[i] : Elem{0}; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    friend bool operator==(const Poly&, const Poly&) = default;
};

// --- ring operations ---------------------------------------------------

Poly add(const FieldCtx& F, const Poly& a, const Poly& b);
Poly sub(const FieldCtx& F, const Poly& a, const Poly& b);
Poly neg(const FieldCtx& F, const Poly& a);
Poly mul(const FieldCtx& F, const Poly& a, const Poly& b);
Poly mul_scalar(const FieldCtx& F, const Poly& a, Elem s);
/// Quotient and remainder with deg(rem) < deg(divisor). Throws on zero
/// divisor.
std::pair<Poly, Poly> divmod(const FieldCtx& F, const Poly& a, const Poly& b);
Poly rem(const FieldCtx& F, const Poly& a, const Poly& b);
/// Division known to be exact; asserts a zero remainder.
Poly divexact(const FieldCtx& F, const Poly& a, const Poly& b);
bool divides(const FieldCtx& F, const Poly& d, const Poly& a);

Poly make_monic(const FieldCtx& F, const Poly& a);
Poly derivative(const FieldCtx& F, const Poly& a);

/// Monic gcd; gcd(0, 0) throws.
Poly gcd(const FieldCtx& F, Poly a, Poly b);
bool coprime(const FieldCtx& F, const Poly& a, const Poly& b);
Poly lcm(const FieldCtx& F, const Poly& a, const Poly& b);

struct XgcdResult {
    Poly g, u, v;  // u*a + v*b = g, g monic
};
XgcdResult xgcd(const FieldCtx& F, const Poly& a, const Poly& b);

/// a^n mod m by square-and-multiply; n may be astronomically large.
Poly powmod(const FieldCtx& F, const Poly& a, const Int& n, const Poly& m);
Poly powmod(const FieldCtx& F, const Poly& a, std::uint64_t n, const Poly& m);

/// |f| = q^deg(f). Throws on the zero polynomial (the norm of 0 is never
/// taken).
Int norm(const FieldCtx& F, const Poly& f);

/// Chinese remaindering over pairwise coprime moduli; returns the
/// minimal-degree representative. Throws on non-coprime moduli.
Poly crt(const FieldCtx& F, std::span<const std::pair<Poly, Poly>> pairs);

struct Congruence {
    Poly residue, modulus;
};
/// General merge of two congruences (moduli need not be coprime);
/// nullopt when inconsistent.
std::optional<Congruence> crt_merge(const FieldCtx& F, const Congruence& a, const Congruence& b);

// --- canonical order and enumeration -----------------------------------

/// Total order: by degree, then coefficient-wise from the leading end
/// using FieldCtx::rank (zero first, then generator powers). Defines
/// "consecutive" for gap statistics and "first" for bounded searches.
bool canonical_less(const FieldCtx& F, const Poly& a, const Poly& b);

/// Injective integer key (base-q encoding); throws if it would overflow
/// 64 bits.
std::uint64_t encode(const FieldCtx& F, const Poly& f);

/// Visit all monic polynomials of exact degree d in canonical order.
/// Fn: bool(const Poly&); returning false stops early. Returns false if
/// stopped.
template <typename Fn>
bool for_each_monic(const FieldCtx& F, unsigned d, Fn&& fn) {
    const unsigned q = F.q();
    std::vector<unsigned> ranks(d, 0);
    Poly f;
    for (;;) {
        f.c.assign(d + 1, 0);
        f.c[d] = 1;
        for (unsigned i = 0; i < d; ++i) f.c[i] = F.elem_of_rank(ranks[i]);
        if (!fn(static_cast<const Poly&>(f))) return false;
        // odometer: low coefficients change fastest
        unsigned i = 0;
        while (i < d && ++ranks[i] == q) ranks[i++] = 0;
        if (i == d) return true;
    }
}

/// Visit 0 and all polynomials of degree < D (any leading coefficient)
/// in canonical order.
template <typename Fn>
bool for_each_poly_below(const FieldCtx& F, unsigned D, Fn&& fn) {
    if (!fn(Poly::zero())) return false;
    const unsigned q = F.q();
    for (unsigned d = 0; d < D; ++d) {
        for (unsigned lead_rank = 1; lead_rank < q; ++lead_rank) {
            std::vector<unsigned> ranks(d, 0);
            Poly f;
            for (;;) {
                f.c.assign(d + 1, 0);
                f.c[d] = F.elem_of_rank(lead_rank);
                for (unsigned i = 0; i < d; ++i) f.c[i] = F.elem_of_rank(ranks[i]);
                if (!fn(static_cast<const Poly&>(f))) return false;
                unsigned i = 0;
                while (i < d && ++ranks[i] == q) ranks[i++] = 0;
                if (i == d) break;
            }
        }
    }
    return true;
}

// --- text form ----------------------------------------------------------

/// Canonical ASCII form, e.g. "t^3+2t+1"; coefficients are element
/// encodings. "0" for the zero polynomial.
std::string to_string(const FieldCtx& F, const Poly& f);
/// Compact bitmask form for F_2, e.g. t^3+t+1 -> "0xb". Throws unless
/// q = 2.
std::string to_hex(const FieldCtx& F, const Poly& f);
/// Parses both forms ("-" negates the following coefficient; "0x..."
/// accepted when q = 2). Round-trips with the printers exactly.
Poly parse_poly(const FieldCtx& F, const std::string& text);

}  // namespace fqt
