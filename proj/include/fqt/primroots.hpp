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

namespace fqt::primroots {

/// True iff g is not a v-th power for any prime v | q - 1; equivalently
/// the exponents of g's factorization and q - 1 have gcd 1. This is the
/// hypothesis under which primes with g as a primitive root exist in
/// abundance.
bool is_eligible(const FieldCtx& F, const Poly& g);

/// Exact order of g in (F_q[t]/P)^*. P irreducible, P does not divide g.
/// Needs q^deg(P) - 1 to fit 64 bits (BudgetError otherwise).
std::uint64_t multiplicative_order(const FieldCtx& F, const Poly& g, const Poly& P);

/// True iff g generates (F_q[t]/P)^*. Indicator semantics: returns false
/// when P | g. Fields with |P| = 2 have a trivial unit group; every g
/// coprime to P counts as a primitive root there.
bool is_primitive_root(const FieldCtx& F, const Poly& g, const Poly& P);

/// Same with the prime divisors of q^deg(P) - 1 precomputed (hot loops).
bool is_primitive_root_with(const FieldCtx& F, const Poly& g, const Poly& P,
                            const std::vector<std::uint64_t>& rs, const Int& group_order);

/// t is a primitive root mod P. Throws on reducible input.
bool is_primitive_polynomial(const FieldCtx& F, const Poly& P);

/// Indicator of the r-th power obstruction set: p irreducible of degree
/// ell with g^((q^ell - 1)/r) = 1 mod p. Requires r | q^ell - 1 and
/// p not dividing g.
bool in_Pr(const FieldCtx& F, const Poly& p, const Poly& g, std::uint64_t r, unsigned ell);

/// All degree-ell primes with g as a primitive root, canonical order.
std::vector<Poly> enumerate_Pg(const FieldCtx& F, const Poly& g, unsigned ell,
                               std::uint64_t budget = kDefaultBudget);

struct GapEntry {
    Poly lo, hi;
    Int norm_diff;  // |hi - lo| as an integer
};

struct ShiftHit {
    Poly f;
    std::vector<size_t> indices;  // which shifts f + h_i landed in P_g
};

/// Sorted scan of P_g over a degree range, with norm gaps between
/// consecutive members; optionally scans shifts of a supplied tuple and
/// reports every f for which at least m of the f + h_i lie in P_g.
struct GapReport {
    unsigned deg_min = 0, deg_max = 0;
    std::vector<Poly> primes;
    std::vector<GapEntry> gaps;
    std::vector<ShiftHit> shift_hits;
};

GapReport gap_report(const FieldCtx& F, const Poly& g, unsigned deg_min, unsigned deg_max,
                     std::uint64_t budget = kDefaultBudget,
                     const std::vector<Poly>* tuple = nullptr, unsigned m = 2);

}  // namespace fqt::primroots
