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

#include <optional>

#include "fqt/factorizer.hpp"
#include "fqt/poly.hpp"

namespace fqt::symbols {

/// A d-th power residue symbol value: a nonzero constant, carried with
/// its discrete log so order and generation checks are O(1).
struct SymbolValue {
    Elem value = 1;
    unsigned dlog = 0;  // value = generator^dlog, in [0, q-1)

    friend bool operator==(const SymbolValue&, const SymbolValue&) = default;
};

SymbolValue make_symbol(const FieldCtx& F, Elem v);

/// Multiplicative order of the value (divides q - 1).
unsigned order(const FieldCtx& F, const SymbolValue& s);
/// True iff the value generates all of F_q^*.
bool generates_units(const FieldCtx& F, const SymbolValue& s);
SymbolValue sym_mul(const FieldCtx& F, const SymbolValue& a, const SymbolValue& b);
SymbolValue sym_pow(const FieldCtx& F, const SymbolValue& a, long long k);

/// (a/P)_d for P monic irreducible, d | q - 1: the unique constant
/// congruent to a^((|P|-1)/d) mod P. Returns nullopt when P | a (the
/// ramified case). Throws when d does not divide q - 1 or P is not
/// irreducible.
std::optional<SymbolValue> symbol_prime(const FieldCtx& F, const Poly& a, const Poly& P,
                                        unsigned d);

/// (a/b)_d for monic b, extended multiplicatively over b's factorization.
/// Requires gcd(a, b) = 1.
SymbolValue symbol_composite(const FieldCtx& F, const Poly& a, const Poly& b, unsigned d);

/// (a/b)_d by repeated reciprocity flips and reductions, Jacobi style —
/// no factorization of either argument. Requires a, b monic, nonzero,
/// coprime.
SymbolValue symbol_reciprocal(const FieldCtx& F, const Poly& a, const Poly& b, unsigned d);

// d = q - 1 is the privileged case; these default to it.
std::optional<SymbolValue> symbol_prime(const FieldCtx& F, const Poly& a, const Poly& P);
SymbolValue symbol_composite(const FieldCtx& F, const Poly& a, const Poly& b);
SymbolValue symbol_reciprocal(const FieldCtx& F, const Poly& a, const Poly& b);

/// (c/b)_d for a constant c != 0 and monic b: equals c^(((q-1)/d) deg b).
/// Validated against the exponentiation route in tests, not assumed.
SymbolValue constant_symbol(const FieldCtx& F, Elem c, int deg_b, unsigned d);

/// First residue a mod P (canonical order) with (a/P)_d = zeta. Requires
/// the order of zeta to divide d; existence is then guaranteed, so an
/// exhausted search throws CrossCheckError.
Poly find_preimage(const FieldCtx& F, const Poly& P, Elem zeta, unsigned d);

}  // namespace fqt::symbols
