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

#include "fqt/factorizer.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fqt::factorizer {

namespace {

// t^(q^j) mod f for j = 1..n, visiting checkpoints. One Frobenius step is
// a single powmod with exponent q.
Poly frobenius_step(const FieldCtx& F, const Poly& x, const Poly& f) {
    return powmod(F, x, static_cast<std::uint64_t>(F.q()), f);
}

bool is_irreducible_monic(const FieldCtx& F, const Poly& f) {
    const unsigned n = static_cast<unsigned>(f.deg());
    if (n == 1) return true;
    std::vector<unsigned> checkpoints;
    for (auto r : intfactor::prime_divisors_u64(n)) checkpoints.push_back(n / static_cast<unsigned>(r));
    std::sort(checkpoints.begin(), checkpoints.end());

    Poly x = rem(F, Poly::t(), f);
    Poly h = x;
    unsigned j = 0;
    for (unsigned cp : checkpoints) {
        while (j < cp) {
            h = frobenius_step(F, h, f);
            ++j;
        }
        if (!gcd(F, sub(F, h, x), f).is_one()) return false;
    }
    while (j < n) {
        h = frobenius_step(F, h, f);
        ++j;
    }
    return h == x;
}

// a^((q^d - 1) / p^(e-1) ... ) helpers for equal-degree splitting.

// Random polynomial of degree < bound (uniform over coefficient ranks).
Poly random_poly(const FieldCtx& F, unsigned bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> dist(0, F.q() - 1);
    Poly f;
    f.c.resize(bound);
    for (auto& c : f.c) c = F.elem_of_rank(dist(rng));
    f.trim();
    return f;
}

// Splits a monic squarefree product of irreducibles of equal degree d.
void edf(const FieldCtx& F, const Poly& f, unsigned d, std::mt19937_64& rng,
         std::vector<Poly>& out) {
    if (static_cast<unsigned>(f.deg()) == d) {
        out.push_back(f);
        return;
    }
    const unsigned q = F.q();
    Poly split;
    for (;;) {
        Poly a = random_poly(F, static_cast<unsigned>(f.deg()), rng);
        if (a.is_zero()) continue;
        Poly g = gcd(F, a, f);
        if (!g.is_one()) {
            split = g;  // lucky: a shares a factor
            break;
        }
        if (F.p() != 2) {
            Int m;
            mpz_ui_pow_ui(m.get_mpz_t(), q, d);
            m = (m - 1) / 2;
            Poly s = powmod(F, a, m, f);
            g = gcd(F, sub(F, s, Poly::one()), f);
        } else {
            // char 2: absolute trace map a + a^2 + a^4 + ... into F_2
            unsigned steps = d * F.e();
            Poly tr = a, sq = a;
            for (unsigned i = 1; i < steps; ++i) {
                sq = rem(F, mul(F, sq, sq), f);
                tr = add(F, tr, sq);
            }
            g = gcd(F, tr.is_zero() ? f : tr, f);
        }
        if (!g.is_one() && g.deg() < f.deg()) {
            split = g;
            break;
        }
    }
    edf(F, split, d, rng, out);
    edf(F, divexact(F, f, split), d, rng, out);
}

// Distinct-degree stage on a monic squarefree input.
void ddf(const FieldCtx& F, Poly f, unsigned mult, std::mt19937_64& rng,
         std::vector<std::pair<Poly, unsigned>>& found) {
    Poly x = rem(F, Poly::t(), f);
    Poly h = x;
    unsigned d = 0;
    while (f.deg() > 0 && 2 * (d + 1) <= static_cast<unsigned>(f.deg())) {
        ++d;
        h = frobenius_step(F, h, f);
        Poly g = gcd(F, sub(F, h, x), f);
        if (!g.is_one()) {
            std::vector<Poly> primes;
            edf(F, g, d, rng, primes);
            for (auto& p : primes) found.emplace_back(std::move(p), mult);
            f = divexact(F, f, g);
            h = rem(F, h, f);
            x = rem(F, Poly::t(), f);
        }
    }
    if (f.deg() > 0) found.emplace_back(std::move(f), mult);
}

// f monic nonconstant; p-th root exists exactly when the derivative
// vanishes (all exponents divisible by p).
Poly pth_root(const FieldCtx& F, const Poly& f) {
    const unsigned p = F.p();
    Poly r;
    r.c.assign(f.deg() / p + 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        if (i % p != 0) throw std::logic_error("pth_root: input is not a p-th power");
        // the p-th root of a coefficient is its (q/p)-th power
        r.c[i / p] = F.pow(f.c[i], F.q() / p);
    }
    r.trim();
    return r;
}

void factor_monic(const FieldCtx& F, const Poly& f, unsigned mult, std::mt19937_64& rng,
                  std::vector<std::pair<Poly, unsigned>>& found) {
    if (f.deg() <= 0) return;
    Poly fp = derivative(F, f);
    if (fp.is_zero()) {
        factor_monic(F, pth_root(F, f), mult * F.p(), rng, found);
        return;
    }
    Poly d = gcd(F, f, fp);
    if (d.is_one()) {
        ddf(F, f, mult, rng, found);
        return;
    }
    factor_monic(F, divexact(F, f, d), mult, rng, found);  // squarefree part
    factor_monic(F, d, mult, rng, found);
}

}  // namespace

Kind classify(const FieldCtx& F, const Poly& f) {
    if (f.is_zero()) return Kind::Zero;
    if (f.deg() == 0) return Kind::Unit;
    return is_irreducible_monic(F, make_monic(F, f)) ? Kind::Irreducible : Kind::Reducible;
}

bool is_irreducible(const FieldCtx& F, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_irreducible: zero polynomial");
    return classify(F, f) == Kind::Irreducible;
}

Poly Factorization::reconstruct(const FieldCtx& F) const {
    Poly r = Poly::constant(unit);
    for (const auto& [p, e] : parts)
        for (unsigned i = 0; i < e; ++i) r = mul(F, r, p);
    return r;
}

Factorization factorize(const FieldCtx& F, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("factorize: zero polynomial");
    Factorization out;
    out.unit = f.lead();
    std::mt19937_64 rng(kEdfSeed);
    std::vector<std::pair<Poly, unsigned>> found;
    factor_monic(F, make_monic(F, f), 1, rng, found);
    // merge duplicates (the squarefree split can emit a prime twice)
    std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
        return canonical_less(F, a.first, b.first);
    });
    for (auto& [p, e] : found) {
        if (!out.parts.empty() && out.parts.back().first == p)
            out.parts.back().second += e;
        else
            out.parts.emplace_back(std::move(p), e);
    }
    return out;
}

Int euler_phi(const FieldCtx& F, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("euler_phi: zero polynomial");
    Int phi = 1;
    for (const auto& [p, a] : factorize(F, f).parts) {
        Int qd;
        mpz_ui_pow_ui(qd.get_mpz_t(), F.q(), static_cast<unsigned long>(p.deg()));
        Int pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), F.q(), static_cast<unsigned long>(p.deg()) * (a - 1));
        phi *= pk * (qd - 1);
    }
    return phi;
}

int moebius(const FieldCtx& F, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("moebius: zero polynomial");
    auto fac = factorize(F, f);
    for (const auto& [p, e] : fac.parts)
        if (e > 1) return 0;
    return fac.parts.size() % 2 == 0 ? 1 : -1;
}

Int count_irreducibles(const FieldCtx& F, unsigned n) {
    if (n == 0) throw std::invalid_argument("count_irreducibles: degree must be >= 1");
    Int total = 0;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        auto fac = intfactor::factorize_u64(d);
        int mu = 1;
        for (const auto& [p, e] : fac.parts) {
            if (e > 1) {
                mu = 0;
                break;
            }
            mu = -mu;
        }
        if (mu == 0) continue;
        Int qp;
        mpz_ui_pow_ui(qp.get_mpz_t(), F.q(), n / d);
        total += mu * qp;
    }
    Int count = total / n;
    if (count * n != total) throw std::logic_error("count_irreducibles: divisibility failure");
    return count;
}

std::uint64_t check_enum_budget(const FieldCtx& F, unsigned n, std::uint64_t budget) {
    Int size;
    mpz_ui_pow_ui(size.get_mpz_t(), F.q(), n);
    if (size > Int(static_cast<unsigned long>(budget))) {
        std::ostringstream os;
        os << "enumeration of q^" << n << " = " << size.get_str()
           << " objects exceeds the budget of " << budget << " (raise FQ_BUDGET or --budget)";
        throw BudgetError(os.str());
    }
    return mpz_get_ui(size.get_mpz_t());
}

std::vector<Poly> enumerate_irreducibles(const FieldCtx& F, unsigned n, std::uint64_t budget) {
    if (n == 0) throw std::invalid_argument("enumerate_irreducibles: degree must be >= 1");
    check_enum_budget(F, n, budget);
    std::vector<Poly> out;
    for_each_monic(F, n, [&](const Poly& f) {
        if (is_irreducible_monic(F, f)) out.push_back(f);
        return true;
    });
    return out;
}

}  // namespace fqt::factorizer
