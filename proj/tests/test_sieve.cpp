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

#include "fqt/sieve.hpp"
#include "fqt/symbols.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace fqt;
using namespace fqt::sieve;

namespace {
Poly P(const FieldCtx& F, const char* s) { return parse_poly(F, s); }
}  // namespace

TEST_CASE("admissibility examples") {
    const FieldCtx& f2 = field_for(2);
    auto cert = is_admissible(f2, {P(f2, "t"), P(f2, "t^2")});
    CHECK(cert.admissible);  // both 0 mod t, both 1 mod t+1

    cert = is_admissible(f2, {P(f2, "t"), P(f2, "t+1")});
    CHECK(!cert.admissible);
    CHECK(*cert.witness == P(f2, "t"));

    cert = is_admissible(f2, {P(f2, "t^5+t^3")});
    CHECK(cert.admissible);  // singletons always

    CHECK_THROWS_AS(is_admissible(f2, {P(f2, "t"), P(f2, "t")}), std::invalid_argument);

    // certificate entries really are omitted residues
    const FieldCtx& f3 = field_for(3);
    auto c3 = is_admissible(f3, {P(f3, "t"), P(f3, "t^2"), P(f3, "2t")});
    REQUIRE(c3.admissible);
    for (const auto& [p, omitted] : c3.omitted) {
        for (const auto& h : {P(f3, "t"), P(f3, "t^2"), P(f3, "2t")})
            CHECK(rem(f3, h, p) != omitted);
    }
}

TEST_CASE("multiplying an admissible tuple by monic g preserves admissibility") {
    std::mt19937_64 rng(59);
    for (unsigned q : {2u, 3u}) {
        const FieldCtx& F = field_for(q);
        int found = 0;
        while (found < 20) {
            std::vector<Poly> H;
            std::set<std::vector<Elem>> seen;
            unsigned k = 2 + rng() % 3;
            while (H.size() < k) {
                Poly h = fqt::testing::random_poly(F, 4, rng);
                if (seen.insert(h.c).second) H.push_back(h);
            }
            auto cert = is_admissible(F, H);
            if (!cert.admissible) continue;
            ++found;
            Poly g = rng() % 2 ? P(F, "t") : P(F, "t+1");
            std::vector<Poly> gh;
            for (const auto& h : H) gh.push_back(mul(F, g, h));
            CHECK(is_admissible(F, gh).admissible);
        }
    }
}

TEST_CASE("first-k tuple construction") {
    for (unsigned q : {2u, 3u, 4u}) {
        const FieldCtx& F = field_for(q);
        for (unsigned k : {2u, 5u, 20u, 105u}) {
            auto tuple = build_admissible_tuple(F, k, Poly::t());
            CHECK(tuple.k() == k);
            CHECK(tuple.cert.admissible);
            CHECK(tuple.g_multiple);
            for (const auto& h : tuple.elements) {
                CHECK(h.is_monic());
                CHECK(norm(F, divexact(F, h, Poly::t())) > k);
            }
        }
    }

    // the worked construction: 105 shifts over F_2, degrees 8..11,
    // max pairwise norm difference exactly 2^11
    const FieldCtx& f2 = field_for(2);
    auto tuple = build_admissible_tuple(f2, 105, P(f2, "t"));
    CHECK(tuple.elements.front().deg() == 8);
    CHECK(tuple.elements.back().deg() == 11);
    Int max_diff = 0;
    for (size_t i = 0; i < tuple.elements.size(); ++i)
        for (size_t j = i + 1; j < tuple.elements.size(); ++j) {
            Int nd = norm(f2, sub(f2, tuple.elements[i], tuple.elements[j]));
            if (nd > max_diff) max_diff = nd;
        }
    CHECK(max_diff == 2048);

    // general bound shape q^(deg g + 10), checked against the actual gap
    auto tuple2 = build_admissible_tuple(f2, 105, P(f2, "t^2+t"));
    Int max2 = 0;
    for (size_t i = 0; i < tuple2.elements.size(); ++i)
        for (size_t j = i + 1; j < tuple2.elements.size(); ++j) {
            Int nd = norm(f2, sub(f2, tuple2.elements[i], tuple2.elements[j]));
            if (nd > max2) max2 = nd;
        }
    CHECK(max2 == 4096);  // 2^(2+10)
}

TEST_CASE("sieve modulus W") {
    const FieldCtx& f2 = field_for(2);
    // triple log of 2^20 is about 0.967: below every prime norm
    CHECK(compute_W(f2, 20, P(f2, "t")) == P(f2, "t"));
    CHECK(compute_W(f2, 5, Poly::one()).is_one());
    // threshold crosses 2 near l = 2336 over F_2
    Poly W = compute_W(f2, 2400, P(f2, "t"));
    CHECK(divides(f2, P(f2, "t"), W));
    CHECK(divides(f2, P(f2, "t+1"), W));
    CHECK(W == P(f2, "t^2+t"));
    CHECK(compute_W(f2, 2300, P(f2, "t")) == P(f2, "t"));
}

TEST_CASE("residue class construction over F_3") {
    const FieldCtx& f3 = field_for(3);
    Poly g = P(f3, "t");
    auto H = certified_tuple(f3, {P(f3, "t^2"), P(f3, "t^2+t")}, g);
    Poly W = g;
    Poly alpha = find_residue_class(f3, g, H, W);
    CHECK(alpha.is_one());  // a = 1 mod t

    // every odd-degree n = 1 (mod t) has symbol -1, the generator of F_3^*
    for (unsigned ell : {3u, 5u}) {
        for_each_monic(f3, ell - 1, [&](const Poly& s) {
            Poly n = add(f3, alpha, mul(f3, W, s));
            for (const auto& h : H.elements) {
                Poly shifted = add(f3, n, h);
                CHECK(coprime(f3, shifted, W));
                auto val = symbols::symbol_reciprocal(f3, g, shifted, 2);
                CHECK(val.value == 2);  // -1
                CHECK(symbols::generates_units(f3, val));
            }
            return true;
        });
    }

    auto rep = verify_residue_class(f3, alpha, W, H, g, {3, 5, 7});
    CHECK(rep.ok);
    CHECK(rep.applicable == std::vector<unsigned>{3, 5, 7});
    CHECK(rep.violations.empty());

    // degrees at or below the tuple's degree, or even, are inapplicable
    auto rep2 = verify_residue_class(f3, alpha, W, H, g, {1, 2, 4});
    CHECK(rep2.applicable.empty());
    CHECK(rep2.inapplicable == std::vector<unsigned>{1, 2, 4});

    // a class violating coprimality is reported with a witness
    auto bad = verify_residue_class(f3, Poly::zero(), W, H, g, {3});
    CHECK(!bad.ok);
    REQUIRE(!bad.violations.empty());
    CHECK(bad.violations.front().reason == "shift not coprime to W");
}

TEST_CASE("residue class construction: more fields and the unrestricted variant") {
    // q = 2: the unit group is trivial, only coprimality matters
    const FieldCtx& f2 = field_for(2);
    Poly g2 = P(f2, "t");
    auto H2 = certified_tuple(f2, {P(f2, "t^2")}, g2);
    Poly alpha2 = find_residue_class(f2, g2, H2, g2);
    CHECK(alpha2.is_one());
    CHECK(verify_residue_class(f2, alpha2, g2, H2, g2, {3, 5, 7}).ok);

    // q = 4 exercises the even-characteristic symbol path
    const FieldCtx& f4 = field_for(4);
    Poly g4 = P(f4, "t");
    auto H4 = certified_tuple(f4, {P(f4, "t^2"), P(f4, "t^2+t")}, g4);
    Poly alpha4 = find_residue_class(f4, g4, H4, g4);
    auto rep4 = verify_residue_class(f4, alpha4, g4, H4, g4, {3, 5});
    CHECK(rep4.ok);
    CHECK(rep4.applicable.size() == 2);

    // q = 5 with composite g = t^2 (t+1)^3: eligible since gcd(2,3,4) = 1
    const FieldCtx& f5 = field_for(5);
    Poly g5 = P(f5, "t^5+3t^4+3t^3+t^2");
    REQUIRE(primroots::is_eligible(f5, g5));
    std::vector<Poly> shifts;
    for (const auto& p : factorizer::enumerate_irreducibles(f5, 2)) {
        shifts.push_back(mul(f5, g5, p));
        if (shifts.size() == 2) break;
    }
    auto H5 = certified_tuple(f5, shifts, g5);
    Poly alpha5 = find_residue_class(f5, g5, H5, g5);
    auto rep5 = verify_residue_class(f5, alpha5, g5, H5, g5, {9});
    CHECK(rep5.ok);
    CHECK(rep5.applicable.size() == 1);

    // q = 7 and the extension field q = 9 (odd characteristic, e = 2)
    for (unsigned q : {7u, 9u}) {
        const FieldCtx& F = field_for(q);
        Poly g = Poly::t();
        std::vector<Poly> shifts;
        for (const auto& p : factorizer::enumerate_irreducibles(F, 2)) {
            shifts.push_back(mul(F, g, p));
            if (shifts.size() == 2) break;
        }
        auto H = certified_tuple(F, shifts, g);
        Poly alpha = find_residue_class(F, g, H, g);
        auto rep = verify_residue_class(F, alpha, g, H, g, {5});
        CHECK(rep.ok);
        CHECK(rep.applicable.size() == 1);
        CHECK(rep.checked > 0);
    }

    // ineligible g is rejected
    const FieldCtx& f3 = field_for(3);
    auto Hsq = certified_tuple(f3, {P(f3, "t^2"), P(f3, "t^2+t^4")}, P(f3, "t^2"));
    CHECK_THROWS_AS(find_residue_class(f3, P(f3, "t^2"), Hsq, P(f3, "t^2")),
                    std::invalid_argument);

    // the unrestricted variant only arranges coprimality
    Poly beta = find_residue_class(f3, P(f3, "t"),
                                   certified_tuple(f3, {P(f3, "t^2"), P(f3, "t^2+t")}, P(f3, "t")),
                                   P(f3, "t"), /*require_symbol=*/false);
    for (const auto& h : {P(f3, "t^2"), P(f3, "t^2+t")})
        CHECK(coprime(f3, add(f3, beta, h), P(f3, "t")));
}

TEST_CASE("sieve config validation") {
    const FieldCtx& f2 = field_for(2);
    CHECK_THROWS_AS(make_sieve_config(f2, 1, 6, Rat(1, 5), P(f2, "t"), Poly::one()),
                    std::invalid_argument);  // 6 not prime
    CHECK_THROWS_AS(make_sieve_config(f2, 1, 5, Rat(3, 10), P(f2, "t"), Poly::one()),
                    std::invalid_argument);  // theta = 0.3 >= 1/4
    CHECK_THROWS_AS(make_sieve_config(f2, 1, 5, Rat(0), P(f2, "t"), Poly::one()),
                    std::invalid_argument);
    auto cfg = make_sieve_config(f2, 1, 5, Rat(1, 5), P(f2, "t"), Poly::one());
    CHECK(cfg.deg_R == 1);
    cfg = make_sieve_config(f2, 2, 7, Rat(6, 25), P(f2, "t"), Poly::one());
    CHECK(cfg.deg_R == 2);  // ceil(42/25)
}

TEST_CASE("lambda weights: frozen value and oracle equality on small grids") {
    const FieldCtx& f2 = field_for(2);

    // k=1, deg_R=4, W=1, cutoff 1-x: the weight at d = (t) is -8/3,
    // computed independently by the literal double-sum oracle
    auto cfg = make_sieve_config(f2, 1, 17, Rat(2, 10), Poly::one(), Poly::zero());
    REQUIRE(cfg.deg_R == 4);
    auto table = lambda_weights(f2, cfg);
    std::vector<Poly> key{P(f2, "t")};
    Rat expected(-8, 3);
    expected.canonicalize();
    CHECK(table.lookup(f2, key) == expected);
    CHECK(fqt::testing::slow_lambda(f2, cfg, key) == expected);

    // support gates
    CHECK(table.lookup(f2, {P(f2, "t^4+t")}) == 0);   // degree too big
    CHECK(table.lookup(f2, {P(f2, "t^2")}) == 0);     // not squarefree

    // full-support equality against the oracle on a grid of configs
    for (unsigned q : {2u, 3u}) {
        const FieldCtx& F = field_for(q);
        for (unsigned k : {1u, 2u}) {
            for (unsigned deg_R : {1u, 2u, 3u}) {
                for (const char* wtxt : {"1", "t"}) {
                    Poly W = P(F, wtxt);
                    auto c = make_sieve_config(F, k, 13, Rat(deg_R, 13), W, Poly::zero());
                    REQUIRE(c.deg_R == deg_R);
                    auto tab = lambda_weights(F, c);
                    fqt::testing::for_each_tuple_below(
                        F, k, c.deg_R, [&](const std::vector<Poly>& d) {
                            CHECK(tab.lookup(F, d) == fqt::testing::slow_lambda(F, c, d));
                        });
                }
            }
        }
    }
}

TEST_CASE("sums: the k=1 worked example and route equality") {
    const FieldCtx& f2 = field_for(2);
    Poly g = P(f2, "t");
    auto H = certified_tuple(f2, {P(f2, "t")}, g);
    auto cfg = make_sieve_config(f2, 1, 5, Rat(1, 5), g, Poly::one());
    REQUIRE(cfg.deg_R == 1);
    auto table = lambda_weights(f2, cfg);
    // single weight lambda_1 = 1 (only r = 1 and r = t+1 qualify; the
    // cutoff vanishes at x = 1)
    REQUIRE(table.entries.size() == 1);
    CHECK(table.entries[0].d[0].is_one());
    CHECK(table.entries[0].lambda == 1);

    auto sums = sieve_sums(f2, cfg, H, g, table);
    CHECK(sums.n_scanned == 16);
    CHECK(sums.s1 == 16);

    // direct recount of s2: n = 1 mod t of degree 5 with n + t primitive
    Rat direct = 0;
    for_each_monic(f2, 4, [&](const Poly& s) {
        Poly n = add(f2, Poly::one(), mul(f2, g, s));
        Poly shifted = add(f2, n, P(f2, "t"));
        if (factorizer::is_irreducible(f2, shifted) &&
            primroots::is_primitive_root(f2, g, shifted))
            direct += 1;
        return true;
    });
    CHECK(sums.s2 == direct);
    CHECK(sums.s2_per_shift[0] == sums.s2);
    CHECK(sums.s2_all_primes >= sums.s2);  // P_g inside P

    CHECK(s1_by_expansion(f2, cfg, H, table) == sums.s1);
}

TEST_CASE("sums: zero cutoff gives zero sums") {
    const FieldCtx& f2 = field_for(2);
    Poly g = P(f2, "t");
    auto H = certified_tuple(f2, {P(f2, "t^2")}, g);
    auto cfg = make_sieve_config(f2, 1, 5, Rat(1, 5), g, Poly::one(), MPoly(1));
    auto table = lambda_weights(f2, cfg);
    CHECK(table.entries.empty());
    auto sums = sieve_sums(f2, cfg, H, g, table);
    CHECK(sums.s1 == 0);
    CHECK(sums.s2 == 0);
}

TEST_CASE("sums: expansion equals enumeration across configs") {
    for (unsigned ell : {5u, 7u}) {
        const FieldCtx& f2 = field_for(2);
        Poly g = P(f2, "t");
        for (unsigned k : {1u, 2u}) {
            auto H = build_admissible_tuple(f2, k, g);
            Poly W = compute_W(f2, ell, g);
            Poly alpha = find_residue_class(f2, g, H, W);
            auto cfg = make_sieve_config(f2, k, ell, Rat(6, 25), W, alpha);
            auto table = lambda_weights(f2, cfg);
            auto sums = sieve_sums(f2, cfg, H, g, table);
            CHECK(s1_by_expansion(f2, cfg, H, table) == sums.s1);
            CHECK(sums.s2_all_primes >= sums.s2);
            for (const auto& part : sums.s2_per_shift) CHECK(part >= 0);
        }
    }
}

TEST_CASE("simplex integrals") {
    // I_k(1) = 1/k!
    for (unsigned k = 1; k <= 6; ++k) {
        auto si = simplex_integrals(MPoly::constant(k, 1), k);
        Int fact;
        mpz_fac_ui(fact.get_mpz_t(), k);
        CHECK(si.I == Rat(1, fact));
    }
    // I_1(1-x) = 1/3, J_1 = 1/4 (the inner integral runs over the full fiber)
    auto si1 = simplex_integrals(MPoly::one_minus_sum(1), 1);
    CHECK(si1.I == Rat(1, 3));
    REQUIRE(si1.J.size() == 1);
    CHECK(si1.J[0] == Rat(1, 4));

    // monomial identity spot checks
    std::vector<unsigned> e{1, 1};
    CHECK(monomial_simplex_integral(e, 2) == Rat(1, 24));
    e = {2, 0};
    CHECK(monomial_simplex_integral(e, 2) == Rat(1, 12));
    e = {4};
    CHECK(monomial_simplex_integral(e, 1) == Rat(1, 5));
    e = {2, 2};
    CHECK(monomial_simplex_integral(e, 2) == Rat(1, 180));

    // hand-integrated pair for the default cutoff at k = 2
    auto si2 = simplex_integrals(MPoly::one_minus_sum(2), 2);
    CHECK(si2.I == Rat(1, 12));
    CHECK(si2.J[0] == Rat(1, 20));
    CHECK(si2.J[1] == Rat(1, 20));
    CHECK(si2.J_total() / si2.I == Rat(6, 5));

    // I is a square integral: nonnegative always
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        MPoly f(2);
        for (int terms = 0; terms < 3; ++terms) {
            std::vector<unsigned> exps{static_cast<unsigned>(rng() % 3),
                                       static_cast<unsigned>(rng() % 3)};
            f.add_term(exps, Rat(static_cast<long>(rng() % 7) - 3));
        }
        CHECK(simplex_integrals(f, 2).I >= 0);
    }
}

TEST_CASE("detection-constant lower bound") {
    CHECK_THROWS_AS(mk_lower_bound(2), std::invalid_argument);
    auto b = mk_lower_bound(1000000);
    CHECK(b.asymptotic == doctest::Approx(6.564).epsilon(0.01));
    auto b15 = mk_lower_bound(15);
    CHECK(b15.asymptotic == doctest::Approx(-1.284).epsilon(0.01));

    MPoly cut = MPoly::one_minus_sum(3);
    auto br = mk_lower_bound(3, &cut);
    REQUIRE(br.ratio.has_value());
    auto si = simplex_integrals(cut, 3);
    CHECK(*br.ratio == si.J_total() / si.I);
}
