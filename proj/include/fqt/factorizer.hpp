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

#include <vector>

#include "fqt/errors.hpp"
#include "fqt/poly.hpp"

namespace fqt::factorizer {

/// Seed for the equal-degree splitting PRNG; fixed so factorizations are
/// reproducible run to run. Recorded in CLI manifests.
inline constexpr std::uint64_t kEdfSeed = 0x5eedf00dULL;

enum class Kind { Zero, Unit, Irreducible, Reducible };

/// Classifies f; constants are Kind::Unit (never irreducible).
Kind classify(const FieldCtx& F, const Poly& f);

/// Rabin's criterion (iterated Frobenius + gcd checks). Monicity is not
/// required: associates classify identically. False for constants;
/// throws on zero.
bool is_irreducible(const FieldCtx& F, const Poly& f);

/// Multiset of (monic irreducible, exponent) pairs plus the leading unit;
/// parts are sorted in canonical order and reconstruct the input exactly.
struct Factorization {
    std::vector<std::pair<Poly, unsigned>> parts;
    Elem unit = 1;

    Poly reconstruct(const FieldCtx& F) const;
};

/// Complete factorization: squarefree split, then distinct-degree, then
/// equal-degree splitting with a deterministic seed.
Factorization factorize(const FieldCtx& F, const Poly& f);

/// #(F_q[t]/f)^*. Multiplicative; Phi(P^a) = q^(d(a-1)) (q^d - 1).
Int euler_phi(const FieldCtx& F, const Poly& f);

/// 0 unless squarefree, else (-1)^(number of prime factors).
int moebius(const FieldCtx& F, const Poly& f);

/// Number of monic irreducibles of degree n: (1/n) sum_{d|n} mu(d) q^(n/d).
Int count_irreducibles(const FieldCtx& F, unsigned n);

/// All monic irreducibles of degree n in canonical order. Refuses to scan
/// more than `budget` polynomials.
std::vector<Poly> enumerate_irreducibles(const FieldCtx& F, unsigned n,
                                         std::uint64_t budget = kDefaultBudget);

/// Throws BudgetError unless q^n <= budget; returns q^n.
std::uint64_t check_enum_budget(const FieldCtx& F, unsigned n, std::uint64_t budget);

}  // namespace fqt::factorizer
