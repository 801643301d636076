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

#include "fqt/symbols.hpp"

#include <numeric>
#include <stdexcept>

#include "fqt/errors.hpp"

namespace fqt::symbols {

namespace {

void require_d(const FieldCtx& F, unsigned d) {
    if (d == 0 || (F.q() - 1) % d != 0)
        throw std::invalid_argument("power residue symbol: d must divide q - 1");
}

}  // namespace

SymbolValue make_symbol(const FieldCtx& F, Elem v) {
    if (v == 0) throw std::invalid_argument("symbol value must be a nonzero constant");
    return {v, F.dlog(v)};
}

unsigned order(const FieldCtx& F, const SymbolValue& s) {
    unsigned m = F.q() - 1;
    return m / std::gcd(m, s.dlog);
}

bool generates_units(const FieldCtx& F, const SymbolValue& s) {
    return std::gcd(s.dlog, F.q() - 1) == 1;
}

SymbolValue sym_mul(const FieldCtx& F, const SymbolValue& a, const SymbolValue& b) {
    unsigned m = F.q() - 1;
    unsigned dl = (a.dlog + b.dlog) % m;
    return {F.gen_pow(dl), dl};
}

SymbolValue sym_pow(const FieldCtx& F, const SymbolValue& a, long long k) {
    long long m = F.q() - 1;
    long long dl = (static_cast<long long>(a.dlog) * (k % m)) % m;
    if (dl < 0) dl += m;
    return {F.gen_pow(dl), static_cast<unsigned>(dl)};
}

std::optional<SymbolValue> symbol_prime(const FieldCtx& F, const Poly& a, const Poly& P,
                                        unsigned d) {
    require_d(F, d);
    if (!P.is_monic() || !factorizer::is_irreducible(F, P))
        throw std::invalid_argument("symbol_prime: modulus must be monic irreducible");
    if (divides(F, P, a)) return std::nullopt;  // ramified
    Int exponent = (norm(F, P) - 1) / d;
    Poly r = powmod(F, a, exponent, P);
    if (r.deg() != 0)
        throw CrossCheckError("symbol_prime: residue power was not a constant");
    return make_symbol(F, r.c[0]);
}

SymbolValue symbol_composite(const FieldCtx& F, const Poly& a, const Poly& b, unsigned d) {
    require_d(F, d);
    if (!b.is_monic()) throw std::invalid_argument("symbol_composite: modulus must be monic");
    if (!coprime(F, a, b))
        throw std::invalid_argument("symbol_composite: arguments must be coprime");
    SymbolValue acc = make_symbol(F, 1);
    for (const auto& [P, e] : factorizer::factorize(F, b).parts) {
        auto s = symbol_prime(F, a, P, d);
        acc = sym_mul(F, acc, sym_pow(F, *s, e));
    }
    return acc;
}

SymbolValue constant_symbol(const FieldCtx& F, Elem c, int deg_b, unsigned d) {
    require_d(F, d);
    if (c == 0) throw std::invalid_argument("constant_symbol: constant must be nonzero");
    // (c/P)_d = c^((|P|-1)/d) and (q^n - 1)/(q - 1) = n (mod q - 1), so the
    // contribution per prime P | b collapses to (c^((q-1)/d))^deg P; taking
    // the product over b's factorization gives the exponent deg b.
    long long k = static_cast<long long>((F.q() - 1) / d) * deg_b;
    return sym_pow(F, make_symbol(F, c), k);
}

SymbolValue symbol_reciprocal(const FieldCtx& F, const Poly& a0, const Poly& b0, unsigned d) {
    require_d(F, d);
    if (a0.is_zero() || b0.is_zero() || !a0.is_monic() || !b0.is_monic())
        throw std::invalid_argument("symbol_reciprocal: arguments must be monic and nonzero");
    const unsigned m = F.q() - 1;
    const unsigned qd = m / d;
    SymbolValue acc = make_symbol(F, 1);
    Poly a = a0, b = b0;
    // Invariant: answer = acc * (a/b)_d with b monic.
    while (b.deg() > 0) {
        a = rem(F, a, b);
        if (a.is_zero())
            throw std::invalid_argument("symbol_reciprocal: arguments must be coprime");
        if (a.deg() == 0) {
            acc = sym_mul(F, acc, constant_symbol(F, a.c[0], b.deg(), d));
            return acc;
        }
        // split off the leading unit: a = c * a', a' monic
        Elem c = a.lead();
        if (c != 1) {
            acc = sym_mul(F, acc, constant_symbol(F, c, b.deg(), d));
            a = make_monic(F, a);
        }
        // flip: (a/b) = (b/a) * (-1)^(((q-1)/d) deg a deg b); only the
        // exponent's parity matters
        if (F.p() != 2 && (qd & 1) && (a.deg() & 1) && (b.deg() & 1))
            acc = sym_mul(F, acc, make_symbol(F, F.minus_one()));
        std::swap(a, b);
    }
    // b is the constant 1: empty product
    return acc;
}

std::optional<SymbolValue> symbol_prime(const FieldCtx& F, const Poly& a, const Poly& P) {
    return symbol_prime(F, a, P, F.q() - 1);
}

SymbolValue symbol_composite(const FieldCtx& F, const Poly& a, const Poly& b) {
    return symbol_composite(F, a, b, F.q() - 1);
}

SymbolValue symbol_reciprocal(const FieldCtx& F, const Poly& a, const Poly& b) {
    return symbol_reciprocal(F, a, b, F.q() - 1);
}

Poly find_preimage(const FieldCtx& F, const Poly& P, Elem zeta, unsigned d) {
    require_d(F, d);
    SymbolValue target = make_symbol(F, zeta);
    if (d % order(F, target) != 0)
        throw std::invalid_argument("find_preimage: target order must divide d");
    Poly result;
    bool found = false;
    for_each_poly_below(F, static_cast<unsigned>(P.deg()), [&](const Poly& a) {
        if (a.is_zero()) return true;
        auto s = symbol_prime(F, a, P, d);
        if (s && s->value == zeta) {
            result = a;
            found = true;
            return false;
        }
        return true;
    });
    if (!found)
        throw CrossCheckError("find_preimage: exhausted residues without a match");
    return result;
}

}  // namespace fqt::symbols
