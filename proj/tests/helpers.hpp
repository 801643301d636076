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

#include <random>

#include "fqt/poly.hpp"

namespace fqt::testing {

inline Poly random_poly(const FieldCtx& F, unsigned max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> deg_dist(0, max_deg);
    std::uniform_int_distribution<unsigned> coeff(0, F.q() - 1);
    Poly f;
    f.c.resize(deg_dist(rng) + 1);
    for (auto& c : f.c) c = static_cast<Elem>(coeff(rng));
    f.trim();
    return f;
}

inline Poly random_monic(const FieldCtx& F, unsigned deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> coeff(0, F.q() - 1);
    Poly f;
    f.c.assign(deg + 1, 0);
    f.c[deg] = 1;
    for (unsigned i = 0; i < deg; ++i) f.c[i] = static_cast<Elem>(coeff(rng));
    return f;
}

inline Poly random_nonzero(const FieldCtx& F, unsigned max_deg, std::mt19937_64& rng) {
    for (;;) {
        Poly f = random_poly(F, max_deg, rng);
        if (!f.is_zero()) return f;
    }
}

// Reference exponentiation by repeated multiplication; the oracle for
// powmod.
inline Poly slow_powmod(const FieldCtx& F, const Poly& a, std::uint64_t n, const Poly& m) {
    Poly r = rem(F, Poly::one(), m);
    Poly base = rem(F, a, m);
    for (std::uint64_t i = 0; i < n; ++i) r = rem(F, mul(F, r, base), m);
    return r;
}

}  // namespace fqt::testing
