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

#include <map>
#include <optional>

#include "fqt/mpoly.hpp"
#include "fqt/poly.hpp"
#include "fqt/primroots.hpp"

namespace fqt::sieve {

/// Admissibility means: for every prime p, the residues {h_i mod p} miss
/// at least one class. Only primes with |p| <= k can be covered by k
/// residues, so the check is finite; the certificate records an omitted
/// class for each such prime.
struct AdmissibilityCert {
    bool admissible = false;
    std::vector<std::pair<Poly, Poly>> omitted;  // (prime, omitted residue)
    std::optional<Poly> witness;                 // a covering prime, when inadmissible
};

AdmissibilityCert is_admissible(const FieldCtx& Fq, const std::vector<Poly>& H);

/// An ordered admissible tuple of distinct shifts, with its certificate.
struct TupleH {
    std::vector<Poly> elements;
    bool g_multiple = false;  // every element divisible by the intended g
    AdmissibilityCert cert;

    unsigned k() const { return static_cast<unsigned>(elements.size()); }
    int max_deg() const;
};

/// Validates distinctness and admissibility (throws on failure).
TupleH certified_tuple(const FieldCtx& Fq, std::vector<Poly> elements, const Poly& g);

/// The first k irreducibles (canonical order) of norm > k, each
/// multiplied by g. Multiplying an admissible tuple by a fixed monic g
/// keeps it admissible; the result is certified anyway.
TupleH build_admissible_tuple(const FieldCtx& Fq, unsigned k, const Poly& g,
                              std::uint64_t budget = kDefaultBudget);

/// lcm(g, product of all monic irreducibles of norm < log log log(q^ell)),
/// natural logarithms. At desk scale the triple log is almost always
/// below 2 and W = g.
Poly compute_W(const FieldCtx& Fq, unsigned ell, const Poly& g);

/// Finds a residue class alpha mod W such that every n = alpha (mod W)
/// of odd degree exceeding the tuple's degrees has gcd(n + h_i, W) = 1
/// and (g/(n + h_i))_{q-1} a generator of F_q^*. With
/// require_symbol = false only the coprimality condition is arranged
/// (the unrestricted variant).
Poly find_residue_class(const FieldCtx& Fq, const Poly& g, const TupleH& H, const Poly& W,
                        bool require_symbol = true);

struct Violation {
    Poly n;
    size_t index;  // which shift failed
    std::string reason;
};

struct VerifyReport {
    bool ok = true;  // no violations among applicable degrees
    std::uint64_t checked = 0;
    std::vector<unsigned> applicable;
    std::vector<unsigned> inapplicable;  // even, too small, or class empty
    std::vector<Violation> violations;   // capped
};

/// Exhaustively checks both conditions over all n = alpha (mod W) of the
/// given degrees. Degrees that are even or not above the tuple's degrees
/// are reported as inapplicable rather than failed.
VerifyReport verify_residue_class(const FieldCtx& Fq, const Poly& alpha, const Poly& W,
                                  const TupleH& H, const Poly& g,
                                  const std::vector<unsigned>& degrees,
                                  std::uint64_t budget = kDefaultBudget);

/// Parameter bundle for the weighted sums. R is stored as the degree
/// threshold deg_R = ceil(theta * ell), so log|r|/log R = deg(r)/deg_R is
/// an exact rational and every weight is an exact rational.
struct SieveConfig {
    unsigned k = 1;
    unsigned ell = 3;
    Rat theta;
    unsigned deg_R = 1;
    Poly W;
    Poly alpha;
    MPoly cutoff{1};
};

/// Validates 0 < theta < 1/4, ell prime, W monic nonzero, cutoff arity.
SieveConfig make_sieve_config(const FieldCtx& Fq, unsigned k, unsigned ell, const Rat& theta,
                              Poly W, Poly alpha, std::optional<MPoly> cutoff = std::nullopt);

/// Exact sieve weights indexed by tuples (d_1, ..., d_k) of monic
/// squarefree W-coprime polynomials with sum deg(d_i) < deg_R; every
/// other tuple has weight 0 and is absent.
class WeightTable {
   public:
    struct Entry {
        std::vector<Poly> d;
        Rat lambda;
    };

    unsigned k = 0;
    unsigned deg_R = 0;
    std::vector<Entry> entries;

    /// 0 for tuples outside the support.
    Rat lookup(const FieldCtx& Fq, const std::vector<Poly>& d) const;
    Rat max_abs() const;

   private:
    friend WeightTable lambda_weights(const FieldCtx&, const SieveConfig&, std::uint64_t);
    std::map<std::vector<std::uint64_t>, size_t> index_;
};

WeightTable lambda_weights(const FieldCtx& Fq, const SieveConfig& cfg,
                           std::uint64_t budget = kDefaultBudget);

struct SieveSums {
    Rat s1;                        // sum of omega(n) over the class
    Rat s2;                        // shifts weighted by membership in P_g
    std::vector<Rat> s2_per_shift; // breakdown of s2 by shift index
    Rat s2_all_primes;             // plain-prime variant (P instead of P_g)
    std::uint64_t n_scanned = 0;
};

/// Direct enumeration of n in A(q^ell), n = alpha (mod W), with
/// omega(n) = (sum of weights over divisor tuples)^2.
SieveSums sieve_sums(const FieldCtx& Fq, const SieveConfig& cfg, const TupleH& H, const Poly& g,
                     const WeightTable& table, std::uint64_t budget = kDefaultBudget);

/// The same s1 through the expanded double sum over weight pairs with an
/// exact residue-class count; equality with the direct route is an
/// algebraic identity and is enforced in tests.
Rat s1_by_expansion(const FieldCtx& Fq, const SieveConfig& cfg, const TupleH& H,
                    const WeightTable& table);

struct SimplexIntegrals {
    Rat I;
    std::vector<Rat> J;  // one per coordinate
    Rat J_total() const;
};

/// I = integral of cutoff^2 over the simplex; J[m] integrates out x_m
/// over its fiber first, squares, then integrates the rest.
SimplexIntegrals simplex_integrals(const MPoly& cutoff, unsigned k);

struct MkBound {
    double asymptotic = 0;        // log k - 2 log log k - 2
    std::optional<Rat> ratio;     // sum(J)/I for the supplied cutoff
};

/// k >= 3. With a cutoff supplied, also returns the certified ratio
/// sum_m J_m / I, a lower bound for the sieve's detection constant.
MkBound mk_lower_bound(unsigned k, const MPoly* cutoff = nullptr);

}  // namespace fqt::sieve
