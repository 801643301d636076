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

#include "fqt/primroots.hpp"

#include <numeric>
#include <stdexcept>

namespace fqt::primroots {

namespace {

// q^n - 1 as a u64, or BudgetError when it does not fit.
std::uint64_t group_order_u64(const FieldCtx& F, unsigned n) {
    Int v;
    mpz_ui_pow_ui(v.get_mpz_t(), F.q(), n);
    v -= 1;
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 63)
        throw BudgetError("unit group order q^n - 1 exceeds 64 bits");
    return mpz_get_ui(v.get_mpz_t());
}

}  // namespace

bool is_eligible(const FieldCtx& F, const Poly& g) {
    if (g.is_zero() || !g.is_monic())
        throw std::invalid_argument("is_eligible: g must be monic and nonzero");
    unsigned long long d = F.q() - 1;
    for (const auto& [p, e] : factorizer::factorize(F, g).parts) d = std::gcd(d, static_cast<unsigned long long>(e));
    return d == 1;
}

std::uint64_t multiplicative_order(const FieldCtx& F, const Poly& g, const Poly& P) {
    if (!factorizer::is_irreducible(F, P) || !P.is_monic())
        throw std::invalid_argument("multiplicative_order: P must be monic irreducible");
    if (divides(F, P, g))
        throw std::invalid_argument("multiplicative_order: P divides g");
    std::uint64_t order = group_order_u64(F, static_cast<unsigned>(P.deg()));
    for (auto r : intfactor::prime_divisors_u64(order)) {
        while (order % r == 0 && powmod(F, g, order / r, P).is_one()) order /= r;
    }
    return order;
}

bool is_primitive_root_with(const FieldCtx& F, const Poly& g, const Poly& P,
                            const std::vector<std::uint64_t>& rs, const Int& group_order) {
    if (divides(F, P, g)) return false;
    for (auto r : rs) {
        if (powmod(F, g, group_order / static_cast<unsigned long>(r), P).is_one()) return false;
    }
    return true;
}

bool is_primitive_root(const FieldCtx& F, const Poly& g, const Poly& P) {
    if (!factorizer::is_irreducible(F, P) || !P.is_monic())
        throw std::invalid_argument("is_primitive_root: P must be monic irreducible");
    std::uint64_t order = group_order_u64(F, static_cast<unsigned>(P.deg()));
    auto rs = intfactor::prime_divisors_u64(order);
    return is_primitive_root_with(F, g, P, rs, Int(static_cast<unsigned long>(order)));
}

bool is_primitive_polynomial(const FieldCtx& F, const Poly& P) {
    return is_primitive_root(F, Poly::t(), P);
}

bool in_Pr(const FieldCtx& F, const Poly& p, const Poly& g, std::uint64_t r, unsigned ell) {
    if (static_cast<unsigned>(p.deg()) != ell)
        throw std::invalid_argument("in_Pr: degree of p must equal ell");
    Int order;
    mpz_ui_pow_ui(order.get_mpz_t(), F.q(), ell);
    order -= 1;
    if (r == 0 || !mpz_divisible_ui_p(order.get_mpz_t(), static_cast<unsigned long>(r)))
        throw std::invalid_argument("in_Pr: r must divide q^ell - 1");
    if (divides(F, p, g)) throw std::invalid_argument("in_Pr: p divides g");
    return powmod(F, g, order / static_cast<unsigned long>(r), p).is_one();
}

std::vector<Poly> enumerate_Pg(const FieldCtx& F, const Poly& g, unsigned ell,
                               std::uint64_t budget) {
    factorizer::check_enum_budget(F, ell, budget);
    std::uint64_t order = group_order_u64(F, ell);
    auto rs = intfactor::prime_divisors_u64(order);
    Int order_z(static_cast<unsigned long>(order));
    std::vector<Poly> out;
    for_each_monic(F, ell, [&](const Poly& p) {
        if (factorizer::is_irreducible(F, p) && is_primitive_root_with(F, g, p, rs, order_z))
            out.push_back(p);
        return true;
    });
    return out;
}

GapReport gap_report(const FieldCtx& F, const Poly& g, unsigned deg_min, unsigned deg_max,
                     std::uint64_t budget, const std::vector<Poly>* tuple, unsigned m) {
    if (deg_min == 0) deg_min = 1;  // degree 0 holds no primes
    if (deg_min > deg_max) {
        GapReport empty;
        empty.deg_min = deg_min;
        empty.deg_max = deg_max;
        return empty;
    }
    GapReport rep;
    rep.deg_min = deg_min;
    rep.deg_max = deg_max;
    for (unsigned d = deg_min; d <= deg_max; ++d) {
        auto batch = enumerate_Pg(F, g, d, budget);
        rep.primes.insert(rep.primes.end(), batch.begin(), batch.end());
    }
    for (size_t i = 1; i < rep.primes.size(); ++i) {
        Poly diff = sub(F, rep.primes[i], rep.primes[i - 1]);
        rep.gaps.push_back({rep.primes[i - 1], rep.primes[i], norm(F, diff)});
    }
    if (tuple && !tuple->empty()) {
        // membership test per candidate shift; cache the per-degree prime
        // divisor data
        for (unsigned d = deg_min; d <= deg_max; ++d) {
            factorizer::check_enum_budget(F, d, budget);
            for_each_monic(F, d, [&](const Poly& f) {
                std::vector<size_t> hits;
                for (size_t i = 0; i < tuple->size(); ++i) {
                    Poly shifted = add(F, f, (*tuple)[i]);
                    if (shifted.is_zero() || !shifted.is_monic()) continue;
                    if (!factorizer::is_irreducible(F, shifted)) continue;
                    if (divides(F, shifted, g)) continue;
                    if (is_primitive_root(F, g, shifted)) hits.push_back(i);
                }
                if (hits.size() >= m) rep.shift_hits.push_back({f, std::move(hits)});
                return true;
            });
        }
    }
    return rep;
}

}  // namespace fqt::primroots
