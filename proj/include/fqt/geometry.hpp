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

#include <string>

#include "fqt/factorizer.hpp"
#include "fqt/poly.hpp"

namespace fqt::geometry {

struct GenusEstimate {
    Int genus;
    bool exact = true;  // false when only an upper bound
    std::string provenance;
};

/// Genus of the function field obtained by adjoining an r-th root of a,
/// for prime r different from the characteristic and a monic, not an
/// r-th power: 2g - 2 = -2r + R_a (r - 1), where R_a sums the degrees of
/// the places whose order in a is not divisible by r. The place at
/// infinity (degree 1, order -deg a) is included when r does not divide
/// deg a; without it the formula would contradict the genus-0 case of a
/// single linear factor.
GenusEstimate kummer_genus(const FieldCtx& Fq, const Poly& a, std::uint64_t r);

/// Genus of the extension generated by the M-torsion of the Carlitz
/// module, M monic nonconstant:
/// 2g - 2 = -2 Phi(M) + sum d_i s_i Phi(M)/Phi(P_i^a_i) + (q-2) Phi(M)/(q-1)
/// with s_i = a_i Phi(P_i^a_i) - q^(d_i (a_i - 1)).
GenusEstimate cyclotomic_genus(const FieldCtx& Fq, const Poly& M);

/// Genus bound for a compositum: g <= n1 g1 + n2 g2 + (n1 - 1)(n2 - 1).
Int castelnuovo_bound(const Int& n1, const Int& g1, const Int& n2, const Int& g2);

struct ChebotarevPrediction {
    Rat main_term;       // (#C / m) q^ell / ell, exact
    double error_scale;  // (#C / m) q^(ell/2) (m + g_L) / ell
    unsigned ell = 0;
    Int class_size;
    Int m;
    Int g_L;
};

/// Main term and error scale of the prime-counting formula for a degree,
/// a conjugacy class size, the geometric degree m, and a genus bound.
ChebotarevPrediction chebotarev_predict(const FieldCtx& Fq, unsigned ell, const Int& class_size,
                                        const Int& m, const Int& g_L);

struct DensityResult {
    std::uint64_t observed = 0;
    Rat predicted;  // q^ell / (r Phi(M) ell)
    double abs_error = 0;
    double sqrt_scale = 0;  // q^(ell/2)
    std::uint64_t primes_scanned = 0;
};

/// Exhaustive count of degree-ell primes p in the class alpha_class mod M
/// with g an r-th power residue obstruction (g^((q^ell-1)/r) = 1 mod p),
/// against the density prediction. Primes r dividing q - 1 are rejected:
/// they cannot occur in the residue class the sieve uses.
DensityResult density_check(const FieldCtx& Fq, const Poly& g, std::uint64_t r, const Poly& M,
                            const Poly& alpha_class, unsigned ell,
                            std::uint64_t budget = kDefaultBudget);

struct RSumDiagnostic {
    Rat sum;    // sum of 1/r over prime r | q^ell - 1, r not dividing q - 1
    Rat bound;  // (number of distinct primes of q^ell - 1) / ell
    std::vector<std::uint64_t> rs;
};

/// The obstruction-set density diagnostic; ell must be prime. Also checks
/// r = 1 (mod ell) for every listed r, which the divisibility structure
/// forces; violations raise CrossCheckError.
RSumDiagnostic r_sum_diagnostic(const FieldCtx& Fq, unsigned ell);

}  // namespace fqt::geometry
