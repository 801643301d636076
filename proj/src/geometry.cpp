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

#include "fqt/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "fqt/errors.hpp"
#include "fqt/primroots.hpp"

namespace fqt::geometry {

GenusEstimate kummer_genus(const FieldCtx& Fq, const Poly& a, std::uint64_t r) {
    if (!intfactor::is_prime_u64(r)) throw std::invalid_argument("kummer_genus: r must be prime");
    if (r == Fq.p()) throw std::invalid_argument("kummer_genus: r equals the characteristic");
    if (a.is_zero() || !a.is_monic())
        throw std::invalid_argument("kummer_genus: a must be monic and nonzero");
    auto fac = factorizer::factorize(Fq, a);
    bool rth_power = true;
    Int R_a = 0;
    for (const auto& [p, e] : fac.parts) {
        if (e % r != 0) {
            rth_power = false;
            R_a += p.deg();
        }
    }
    if (rth_power) throw std::invalid_argument("kummer_genus: a is an r-th power");
    if (static_cast<std::uint64_t>(a.deg()) % r != 0) R_a += 1;  // place at infinity
    Int two_g = -2 * Int(static_cast<unsigned long>(r)) + R_a * Int(static_cast<unsigned long>(r - 1)) + 2;
    if (two_g % 2 != 0) throw CrossCheckError("kummer_genus: odd 2g value");
    Int g = two_g / 2;
    if (g < 0) throw CrossCheckError("kummer_genus: negative genus");
    return {g, true, "kummer"};
}

GenusEstimate cyclotomic_genus(const FieldCtx& Fq, const Poly& M) {
    if (M.deg() < 1 || !M.is_monic())
        throw std::invalid_argument("cyclotomic_genus: M must be monic and nonconstant");
    const unsigned q = Fq.q();
    Int phiM = factorizer::euler_phi(Fq, M);
    Int middle = 0;
    for (const auto& [P, alpha] : factorizer::factorize(Fq, M).parts) {
        unsigned long d = static_cast<unsigned long>(P.deg());
        Int qd;
        mpz_ui_pow_ui(qd.get_mpz_t(), q, d);
        Int phi_pa;  // Phi(P^alpha) = q^(d(alpha-1)) (q^d - 1)
        mpz_ui_pow_ui(phi_pa.get_mpz_t(), q, d * (alpha - 1));
        Int q_pow = phi_pa;  // q^(d(alpha-1))
        phi_pa *= qd - 1;
        Int s = Int(alpha) * phi_pa - q_pow;
        Int quot = phiM / phi_pa;
        if (quot * phi_pa != phiM) throw CrossCheckError("cyclotomic_genus: Phi divisibility");
        middle += Int(d) * s * quot;
    }
    Int last = Int(q - 2) * phiM;
    if (last % (q - 1) != 0) throw CrossCheckError("cyclotomic_genus: (q-1) divisibility");
    last /= q - 1;
    Int two_g = -2 * phiM + middle + last + 2;
    if (two_g % 2 != 0) throw CrossCheckError("cyclotomic_genus: odd 2g value");
    Int g = two_g / 2;
    if (g < 0) throw CrossCheckError("cyclotomic_genus: negative genus");
    return {g, true, "cyclotomic"};
}

Int castelnuovo_bound(const Int& n1, const Int& g1, const Int& n2, const Int& g2) {
    if (n1 < 1 || n2 < 1 || g1 < 0 || g2 < 0)
        throw std::invalid_argument("castelnuovo_bound: need n_i >= 1 and g_i >= 0");
    return n1 * g1 + n2 * g2 + (n1 - 1) * (n2 - 1);
}

ChebotarevPrediction chebotarev_predict(const FieldCtx& Fq, unsigned ell, const Int& class_size,
                                        const Int& m, const Int& g_L) {
    if (ell == 0 || m < 1 || class_size < 0 || g_L < 0)
        throw std::invalid_argument("chebotarev_predict: invalid parameters");
    ChebotarevPrediction pred;
    pred.ell = ell;
    pred.class_size = class_size;
    pred.m = m;
    pred.g_L = g_L;
    Int qell;
    mpz_ui_pow_ui(qell.get_mpz_t(), Fq.q(), ell);
    pred.main_term = Rat(class_size * qell, m * Int(static_cast<unsigned long>(ell)));
    pred.main_term.canonicalize();
    double half_pow = std::pow(static_cast<double>(Fq.q()), ell / 2.0);
    pred.error_scale = class_size.get_d() / m.get_d() * half_pow *
                       (m.get_d() + g_L.get_d()) / static_cast<double>(ell);
    return pred;
}

DensityResult density_check(const FieldCtx& Fq, const Poly& g, std::uint64_t r, const Poly& M,
                            const Poly& alpha_class, unsigned ell, std::uint64_t budget) {
    const unsigned q = Fq.q();
    if (!intfactor::is_prime_u64(r)) throw std::invalid_argument("density_check: r must be prime");
    if ((q - 1) % r == 0)
        throw std::invalid_argument(
            "density_check: primes r dividing q - 1 contribute nothing to the obstruction sum");
    Int qell_m1;
    mpz_ui_pow_ui(qell_m1.get_mpz_t(), q, ell);
    qell_m1 -= 1;
    if (!mpz_divisible_ui_p(qell_m1.get_mpz_t(), static_cast<unsigned long>(r)))
        throw std::invalid_argument("density_check: r must divide q^ell - 1");
    if (M.is_zero() || !M.is_monic())
        throw std::invalid_argument("density_check: M must be monic and nonzero");
    if (M.deg() > 0 && !coprime(Fq, alpha_class, M))
        throw std::invalid_argument("density_check: class must be coprime to M");
    factorizer::check_enum_budget(Fq, ell, budget);

    Int exponent = qell_m1 / static_cast<unsigned long>(r);
    DensityResult res;
    Poly class_red = M.deg() > 0 ? rem(Fq, alpha_class, M) : Poly::zero();
    for_each_monic(Fq, ell, [&](const Poly& p) {
        if (!factorizer::is_irreducible(Fq, p)) return true;
        ++res.primes_scanned;
        if (M.deg() > 0 && rem(Fq, p, M) != class_red) return true;
        if (divides(Fq, p, g)) return true;
        if (powmod(Fq, g, exponent, p).is_one()) ++res.observed;
        return true;
    });
    Int qell = qell_m1 + 1;
    res.predicted = Rat(qell, Int(static_cast<unsigned long>(r)) *
                                  factorizer::euler_phi(Fq, M) *
                                  Int(static_cast<unsigned long>(ell)));
    res.predicted.canonicalize();
    res.abs_error = std::abs(static_cast<double>(res.observed) - res.predicted.get_d());
    res.sqrt_scale = std::pow(static_cast<double>(q), ell / 2.0);
    return res;
}

RSumDiagnostic r_sum_diagnostic(const FieldCtx& Fq, unsigned ell) {
    if (!intfactor::is_prime_u64(ell))
        throw std::invalid_argument("r_sum_diagnostic: ell must be prime");
    Int qell_m1;
    mpz_ui_pow_ui(qell_m1.get_mpz_t(), Fq.q(), ell);
    qell_m1 -= 1;
    auto fac = intfactor::factorize(qell_m1);
    RSumDiagnostic diag;
    diag.sum = 0;
    unsigned total_primes = static_cast<unsigned>(fac.parts.size());
    for (const auto& [r, e] : fac.parts) {
        if ((Fq.q() - 1) % r == 0) continue;
        diag.rs.push_back(r);
        diag.sum += Rat(1, static_cast<unsigned long>(r));
        // the order of q mod r divides ell and is not 1, so it is ell
        // and r = 1 (mod ell)
        if (r % ell != 1)
            throw CrossCheckError("r_sum_diagnostic: r = 1 (mod ell) violated");
        if (intfactor::order_mod_u64(Fq.q(), r) != ell)
            throw CrossCheckError("r_sum_diagnostic: order of q mod r is not ell");
    }
    diag.sum.canonicalize();
    diag.bound = Rat(total_primes, ell);
    diag.bound.canonicalize();
    if (diag.sum > diag.bound)
        throw CrossCheckError("r_sum_diagnostic: sum exceeds its bound");
    return diag;
}

}  // namespace fqt::geometry
