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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fqt/primroots.hpp"
#include "helpers.hpp"

using namespace fqt;
using namespace fqt::primroots;

namespace {
Poly P(const FieldCtx& F, const char* s) { return parse_poly(F, s); }
}  // namespace

TEST_CASE("eligibility") {
    const FieldCtx& f3 = field_for(3);
    const FieldCtx& f7 = field_for(7);
    const FieldCtx& f2 = field_for(2);

    CHECK(is_eligible(f3, P(f3, "t")));
    CHECK(is_eligible(f7, P(f7, "t")));
    CHECK(!is_eligible(f3, P(f3, "t^2")));             // square, 2 | q-1
    CHECK(is_eligible(f7, P(f7, "t^5+2t^4+t^3")));     // t^3 (t+1)^2: gcd(3,2,6) = 1
    CHECK(is_eligible(f2, Poly::one()));               // q-1 = 1
    CHECK(!is_eligible(f3, Poly::one()));
    CHECK_THROWS_AS(is_eligible(f3, Poly::zero()), std::invalid_argument);
}

TEST_CASE("multiplicative order examples") {
    const FieldCtx& f2 = field_for(2);
    const FieldCtx& f3 = field_for(3);

    CHECK(multiplicative_order(f2, Poly::one(), P(f2, "t^2+t+1")) == 1);
    CHECK(multiplicative_order(f3, P(f3, "t"), P(f3, "t^2+1")) == 4);
    CHECK(multiplicative_order(f2, P(f2, "t"), P(f2, "t^2+t+1")) == 3);
    CHECK_THROWS_AS(multiplicative_order(f2, P(f2, "t^2+t"), P(f2, "t")),
                    std::invalid_argument);

    // order divides the group order, and matches a brute-force count
    std::mt19937_64 rng(53);
    for (unsigned q : {2u, 3u, 4u}) {
        const FieldCtx& F = field_for(q);
        for (unsigned d = 1; d <= 3; ++d) {
            for (const auto& Pm : factorizer::enumerate_irreducibles(F, d)) {
                for (int trial = 0; trial < 10; ++trial) {
                    Poly g = fqt::testing::random_poly(F, d + 1, rng);
                    if (g.is_zero() || divides(F, Pm, g)) continue;
                    std::uint64_t ord = multiplicative_order(F, g, Pm);
                    Int group;
                    mpz_ui_pow_ui(group.get_mpz_t(), q, d);
                    group -= 1;
                    CHECK(mpz_divisible_ui_p(group.get_mpz_t(),
                                             static_cast<unsigned long>(ord)));
                    CHECK(powmod(F, g, ord, Pm).is_one());
                    for (auto rr : intfactor::prime_divisors_u64(ord))
                        CHECK(!powmod(F, g, ord / rr, Pm).is_one());
                }
            }
        }
    }
}

TEST_CASE("primitive roots and primitive polynomials") {
    const FieldCtx& f2 = field_for(2);
    const FieldCtx& f3 = field_for(3);

    CHECK(is_primitive_root(f2, P(f2, "t"), P(f2, "t^2+t+1")));
    CHECK(!is_primitive_root(f3, P(f3, "t"), P(f3, "t^2+1")));  // order 4 of 8
    CHECK(!is_primitive_root(f3, Poly::one(), P(f3, "t^2+1")));

    CHECK(is_primitive_polynomial(f2, P(f2, "t^4+t+1")));
    CHECK(!is_primitive_polynomial(f2, P(f2, "t^4+t^3+t^2+t+1")));  // t^5 = 1
    // trivial unit group: primitive by convention
    CHECK(is_primitive_polynomial(f2, P(f2, "t+1")));
    // indicator semantics when P | g
    CHECK(!is_primitive_polynomial(f2, P(f2, "t")));
    CHECK_THROWS_AS(is_primitive_polynomial(f2, P(f2, "t^2+1")), std::invalid_argument);
}

TEST_CASE("obstruction set membership") {
    const FieldCtx& f3 = field_for(3);
    CHECK(in_Pr(f3, P(f3, "t^2+1"), P(f3, "t"), 2, 2));  // t^4 = 1
    // a primitive root is in no obstruction set
    auto quads = factorizer::enumerate_irreducibles(f3, 2);
    for (const auto& p : quads) {
        if (divides(f3, p, P(f3, "t"))) continue;
        bool prim = is_primitive_root(f3, P(f3, "t"), p);
        bool obstructed = false;
        for (std::uint64_t r : intfactor::prime_divisors_u64(8))
            obstructed = obstructed || in_Pr(f3, p, P(f3, "t"), r, 2);
        CHECK(prim == !obstructed);
    }
    CHECK_THROWS_AS(in_Pr(f3, P(f3, "t^2+1"), P(f3, "t"), 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(in_Pr(f3, P(f3, "t+1"), P(f3, "t"), 2, 2), std::invalid_argument);
}

TEST_CASE("pointwise equivalence of primitivity and the obstruction sets") {
    // for eligible g and p of degree ell: primitive <=> no obstruction
    for (unsigned q : {2u, 3u}) {
        const FieldCtx& F = field_for(q);
        Poly g = P(F, "t");
        for (unsigned ell : {2u, 3u, 4u}) {
            Int group;
            mpz_ui_pow_ui(group.get_mpz_t(), q, ell);
            group -= 1;
            auto rs = intfactor::prime_divisors_u64(mpz_get_ui(group.get_mpz_t()));
            for (const auto& p : factorizer::enumerate_irreducibles(F, ell)) {
                if (divides(F, p, g)) continue;
                bool prim = is_primitive_root(F, g, p);
                bool obstructed = false;
                for (auto r : rs) obstructed = obstructed || in_Pr(F, p, g, r, ell);
                CHECK(prim == !obstructed);
            }
        }
    }
}

TEST_CASE("enumerating the primes with a fixed primitive root") {
    const FieldCtx& f2 = field_for(2);
    auto pg2 = enumerate_Pg(f2, P(f2, "t"), 2);
    REQUIRE(pg2.size() == 1);
    CHECK(pg2[0] == P(f2, "t^2+t+1"));

    CHECK(enumerate_Pg(f2, P(f2, "t"), 4).size() == 2);

    // classical count: phi(q^ell - 1) / ell
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        const FieldCtx& F = field_for(q);
        for (unsigned ell = 1; ell <= 4; ++ell) {
            Int qe;
            mpz_ui_pow_ui(qe.get_mpz_t(), q, ell);
            if (qe > 4096) continue;
            std::uint64_t group = mpz_get_ui(qe.get_mpz_t()) - 1;
            std::uint64_t expected = intfactor::euler_phi_u64(group) / ell;
            CHECK(enumerate_Pg(F, Poly::t(), ell).size() == expected);
        }
    }

    // ineligible g over F_3: squares can never generate (order divides 4)
    const FieldCtx& f3 = field_for(3);
    CHECK(enumerate_Pg(f3, P(f3, "t^2"), 2).empty());

    CHECK_THROWS_AS(enumerate_Pg(f2, P(f2, "t"), 30, 1 << 20), BudgetError);
}

TEST_CASE("large-degree moduli exercise the big-exponent paths") {
    const FieldCtx& f2 = field_for(2);
    // a degree-40 modulus from the standard primitive-polynomial tables
    Poly m = parse_poly(f2, "t^40+t^5+t^4+t^3+1");
    REQUIRE(factorizer::is_irreducible(f2, m));
    std::uint64_t ord = multiplicative_order(f2, Poly::t(), m);
    CHECK(ord == (std::uint64_t{1} << 40) - 1);
    CHECK(is_primitive_polynomial(f2, m));
    // membership in the obstruction set only needs a powmod, no budget
    CHECK(!in_Pr(f2, m, Poly::t(), 3, 40));
    CHECK(!in_Pr(f2, m, Poly::t(), 5, 40));
}

TEST_CASE("gap report") {
    const FieldCtx& f2 = field_for(2);
    Poly g = P(f2, "t");
    auto rep = gap_report(f2, g, 2, 4);
    // {t^2+t+1} + two cubics + two quartics
    CHECK(rep.primes.size() == 5);
    CHECK(rep.gaps.size() == 4);
    for (size_t i = 0; i + 1 < rep.primes.size(); ++i)
        CHECK(canonical_less(f2, rep.primes[i], rep.primes[i + 1]));
    for (const auto& e : rep.gaps) {
        CHECK(e.norm_diff > 0);
        CHECK(e.norm_diff == norm(f2, sub(f2, e.hi, e.lo)));
    }

    auto empty = gap_report(f2, g, 5, 4);
    CHECK(empty.primes.empty());
    CHECK(empty.gaps.empty());

    // shift hits: f with both f + t*u_i primitive, small exhaustive scan
    std::vector<Poly> tuple{P(f2, "t^2"), P(f2, "t^2+t")};  // t*t, t*(t+1)
    auto shifted = gap_report(f2, g, 3, 5, kDefaultBudget, &tuple, 2);
    for (const auto& hit : shifted.shift_hits) {
        CHECK(hit.indices.size() >= 2);
        for (auto i : hit.indices) {
            Poly s = add(f2, hit.f, tuple[i]);
            CHECK(factorizer::is_irreducible(f2, s));
            CHECK(is_primitive_root(f2, g, s));
        }
    }
    // cross-check hit count against a direct scan at degree 5
    unsigned direct = 0;
    for_each_monic(f2, 5, [&](const Poly& f) {
        unsigned c = 0;
        for (const auto& h : tuple) {
            Poly s = add(f2, f, h);
            if (s.is_monic() && factorizer::is_irreducible(f2, s) &&
                is_primitive_root(f2, g, s))
                ++c;
        }
        if (c >= 2) ++direct;
        return true;
    });
    unsigned reported = 0;
    for (const auto& hit : shifted.shift_hits)
        if (hit.f.deg() == 5) ++reported;
    CHECK(direct == reported);
}
