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

#include <set>

#include "fqt/field.hpp"
#include "fqt/poly.hpp"
#include "helpers.hpp"

using namespace fqt;
using fqt::testing::random_nonzero;
using fqt::testing::random_poly;

namespace {
Poly P(const FieldCtx& F, const char* s) { return parse_poly(F, s); }
}  // namespace

TEST_CASE("field construction picks the expected moduli and generators") {
    const FieldCtx& f4 = field_for(4);
    CHECK(f4.p() == 2);
    CHECK(f4.e() == 2);
    CHECK(f4.modulus() == std::vector<Elem>{1, 1, 1});  // t^2+t+1

    const FieldCtx& f9 = field_for(9);
    CHECK(f9.p() == 3);
    CHECK(f9.modulus() == std::vector<Elem>{1, 0, 1});  // t^2+1

    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 9u, 16u, 25u}) {
        const FieldCtx& F = field_for(q);
        Elem g = F.generator();
        // order of the generator is exactly q-1
        Elem x = 1;
        for (unsigned i = 1; i < q - 1; ++i) {
            x = F.mul(x, g);
            CHECK(x != 1);
        }
        CHECK(F.mul(x, g) == 1);
    }
}

TEST_CASE("field arithmetic identities") {
    for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
        const FieldCtx& F = field_for(q);
        for (unsigned a = 0; a < q; ++a) {
            Elem ea = static_cast<Elem>(a);
            CHECK(F.add(ea, F.neg(ea)) == 0);
            if (a != 0) {
                CHECK(F.mul(ea, F.inv(ea)) == 1);
                CHECK(F.pow(ea, static_cast<long long>(q - 1)) == 1);
            }
            for (unsigned b = 0; b < q; ++b) {
                Elem eb = static_cast<Elem>(b);
                CHECK(F.add(ea, eb) == F.add(eb, ea));
                CHECK(F.mul(ea, eb) == F.mul(eb, ea));
            }
        }
    }
}

TEST_CASE("ring op examples") {
    const FieldCtx& f2 = field_for(2);
    const FieldCtx& f3 = field_for(3);

    CHECK(mul(f2, P(f2, "t+1"), P(f2, "t+1")) == P(f2, "t^2+1"));

    auto [q, r] = divmod(f3, P(f3, "t^3"), P(f3, "t^2"));
    CHECK(q == P(f3, "t"));
    CHECK(r.is_zero());

    CHECK(rem(f3, P(f3, "t^2-1"), P(f3, "t^2+t")) == P(f3, "2t+2"));

    CHECK_THROWS_AS(divmod(f2, P(f2, "t"), Poly::zero()), std::invalid_argument);
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937_64 rng(11);
    for (unsigned q : {2u, 3u, 5u, 9u}) {
        const FieldCtx& F = field_for(q);
        for (int trial = 0; trial < 200; ++trial) {
            Poly a = random_poly(F, 6, rng);
            Poly b = random_poly(F, 6, rng);
            Poly c = random_poly(F, 6, rng);
            CHECK(add(F, add(F, a, b), c) == add(F, a, add(F, b, c)));
            CHECK(mul(F, a, add(F, b, c)) == add(F, mul(F, a, b), mul(F, a, c)));
            if (!b.is_zero()) {
                auto [quot, rest] = divmod(F, a, b);
                CHECK(add(F, mul(F, quot, b), rest) == a);
                CHECK(rest.deg() < b.deg());
            }
        }
    }
}

TEST_CASE("norm") {
    const FieldCtx& f2 = field_for(2);
    const FieldCtx& f3 = field_for(3);
    const FieldCtx& f9 = field_for(9);
    CHECK(norm(f2, P(f2, "t^3+t")) == 8);
    CHECK(norm(f9, Poly::one()) == 1);
    CHECK(norm(f3, P(f3, "t^2+1")) == 9);
    CHECK_THROWS_AS(norm(f2, Poly::zero()), std::invalid_argument);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        Poly a = random_nonzero(f3, 5, rng);
        Poly b = random_nonzero(f3, 5, rng);
        CHECK(norm(f3, mul(f3, a, b)) == norm(f3, a) * norm(f3, b));
    }
}

TEST_CASE("gcd and xgcd") {
    const FieldCtx& f2 = field_for(2);
    const FieldCtx& f3 = field_for(3);

    CHECK(gcd(f3, P(f3, "2t^2+2t"), Poly::zero()) == P(f3, "t^2+t"));  // monic normalization
    CHECK(gcd(f3, P(f3, "t^2-1"), P(f3, "t^2+t")) == P(f3, "t+1"));
    CHECK(gcd(f2, P(f2, "t^2+t+1"), P(f2, "t^2+1")).is_one());
    CHECK_THROWS_AS(gcd(f2, Poly::zero(), Poly::zero()), std::invalid_argument);

    std::mt19937_64 rng(17);
    for (unsigned q : {2u, 3u, 9u}) {
        const FieldCtx& F = field_for(q);
        for (int trial = 0; trial < 100; ++trial) {
            Poly a = random_poly(F, 6, rng);
            Poly b = random_poly(F, 6, rng);
            if (a.is_zero() && b.is_zero()) continue;
            auto res = xgcd(F, a, b);
            CHECK(res.g == gcd(F, a, b));
            CHECK(add(F, mul(F, res.u, a), mul(F, res.v, b)) == res.g);
        }
    }
}

TEST_CASE("powmod examples and oracle agreement") {
    const FieldCtx& f2 = field_for(2);
    const FieldCtx& f3 = field_for(3);

    // t^8 = t^2 = t+1 mod t^2+t+1 (t^3 = 1)
    CHECK(powmod(f2, P(f2, "t"), std::uint64_t{8}, P(f2, "t^2+t+1")) == P(f2, "t+1"));
    CHECK(powmod(f2, P(f2, "t+1"), std::uint64_t{0}, P(f2, "t^2+t+1")).is_one());
    CHECK(powmod(f3, P(f3, "t"), std::uint64_t{4}, P(f3, "t^2+1")).is_one());
    CHECK_THROWS_AS(powmod(f2, P(f2, "t"), std::uint64_t{3}, Poly::zero()),
                    std::invalid_argument);

    // big-integer exponent: 2^80 = 1 mod 3, so t^(2^80) = t mod t^2+t+1
    Int big = 1;
    big <<= 80;
    CHECK(powmod(f2, P(f2, "t"), big, P(f2, "t^2+t+1")) == P(f2, "t"));

    std::mt19937_64 rng(19);
    for (unsigned q : {2u, 3u, 5u}) {
        const FieldCtx& F = field_for(q);
        for (int trial = 0; trial < 40; ++trial) {
            Poly a = random_poly(F, 4, rng);
            Poly m = random_nonzero(F, 4, rng);
            if (m.deg() < 1) continue;
            std::uniform_int_distribution<std::uint64_t> ndist(0, 1u << 12);
            std::uint64_t n = ndist(rng);
            CHECK(powmod(F, a, n, m) == fqt::testing::slow_powmod(F, a, n, m));
        }
    }
}

TEST_CASE("crt") {
    const FieldCtx& f2 = field_for(2);
    const FieldCtx& f3 = field_for(3);

    std::vector<std::pair<Poly, Poly>> sys{{Poly::one(), P(f2, "t")},
                                           {Poly::zero(), P(f2, "t+1")}};
    CHECK(crt(f2, sys) == P(f2, "t+1"));

    std::vector<std::pair<Poly, Poly>> single{{P(f3, "t+2"), P(f3, "t^2+1")}};
    CHECK(crt(f3, single) == P(f3, "t+2"));

    std::vector<std::pair<Poly, Poly>> constant{{Poly::one(), P(f3, "t")},
                                                {Poly::one(), P(f3, "t+1")}};
    CHECK(crt(f3, constant).is_one());

    std::vector<std::pair<Poly, Poly>> bad{{Poly::one(), P(f2, "t^2+t")},
                                           {Poly::zero(), P(f2, "t")}};
    CHECK_THROWS_AS(crt(f2, bad), std::invalid_argument);

    // prime-power moduli are fine as long as they stay coprime
    std::vector<std::pair<Poly, Poly>> pp{{P(f2, "t"), P(f2, "t^2")},
                                          {Poly::zero(), P(f2, "t+1")}};
    CHECK(crt(f2, pp) == P(f2, "t^2+t"));

    // random systems: result satisfies every congruence, minimal degree
    std::mt19937_64 rng(23);
    const FieldCtx& F = field_for(3);
    for (int trial = 0; trial < 60; ++trial) {
        Poly m1 = P(F, "t"), m2 = P(F, "t+1"), m3 = P(F, "t^2+1");
        Poly r1 = random_poly(F, 0, rng), r2 = random_poly(F, 0, rng),
             r3 = random_poly(F, 1, rng);
        std::vector<std::pair<Poly, Poly>> s{{r1, m1}, {r2, m2}, {r3, m3}};
        Poly x = crt(F, s);
        CHECK(rem(F, sub(F, x, r1), m1).is_zero());
        CHECK(rem(F, sub(F, x, r2), m2).is_zero());
        CHECK(rem(F, sub(F, x, r3), m3).is_zero());
        CHECK(x.deg() < 4);  // below deg of the product
    }
}

TEST_CASE("canonical order and enumeration") {
    const FieldCtx& f2 = field_for(2);
    // degree dominates, then leading coefficients downward
    CHECK(canonical_less(f2, P(f2, "t+1"), P(f2, "t^2")));
    CHECK(canonical_less(f2, P(f2, "t^2"), P(f2, "t^2+1")));
    CHECK(canonical_less(f2, P(f2, "t^2+1"), P(f2, "t^2+t")));
    CHECK(!canonical_less(f2, P(f2, "t"), P(f2, "t")));

    std::vector<Poly> monics;
    for_each_monic(f2, 3, [&](const Poly& f) {
        monics.push_back(f);
        return true;
    });
    CHECK(monics.size() == 8);
    for (size_t i = 1; i < monics.size(); ++i)
        CHECK(canonical_less(f2, monics[i - 1], monics[i]));

    std::vector<Poly> below;
    const FieldCtx& f3 = field_for(3);
    for_each_poly_below(f3, 2, [&](const Poly& f) {
        below.push_back(f);
        return true;
    });
    CHECK(below.size() == 9);  // 0, 2 constants, 6 linear
    CHECK(below[0].is_zero());
    for (size_t i = 1; i < below.size(); ++i)
        CHECK(canonical_less(f3, below[i - 1], below[i]));
}

TEST_CASE("text round trips") {
    std::mt19937_64 rng(29);
    for (unsigned q : {2u, 3u, 9u}) {
        const FieldCtx& F = field_for(q);
        for (int trial = 0; trial < 150; ++trial) {
            Poly f = random_poly(F, 8, rng);
            CHECK(parse_poly(F, to_string(F, f)) == f);
        }
    }
    const FieldCtx& f2 = field_for(2);
    CHECK(to_hex(f2, P(f2, "t^3+t+1")) == "0xb");
    CHECK(parse_poly(f2, "0xb") == P(f2, "t^3+t+1"));
    for (int trial = 0; trial < 100; ++trial) {
        std::mt19937_64 r2(trial);
        Poly f = random_poly(f2, 70, r2);
        CHECK(parse_poly(f2, to_hex(f2, f)) == f);
    }
    CHECK(to_string(f2, Poly::zero()) == "0");
    CHECK(parse_poly(f2, "0").is_zero());
    const FieldCtx& f9 = field_for(9);
    CHECK(to_string(f9, parse_poly(f9, "7t^2 + 3t + 8")) == "7t^2+3t+8");
    CHECK_THROWS_AS(parse_poly(f9, "0x1b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly(f2, "t^2+?"), std::invalid_argument);
}

TEST_CASE("encode is injective on small polynomials") {
    const FieldCtx& f3 = field_for(3);
    std::set<std::uint64_t> seen;
    for_each_poly_below(f3, 4, [&](const Poly& f) {
        CHECK(seen.insert(encode(f3, f)).second);
        return true;
    });
}
