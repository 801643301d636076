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

#include "fqt/intfactor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fqt::intfactor {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 addmod(u64 a, u64 b, u64 m) {
    a %= m;
    b %= m;
    u64 s = a + b;
    if (s < a || s >= m) s -= m;
    return s;
}

// One Miller-Rabin round; n - 1 = d * 2^s with d odd.
bool mr_round(u64 n, u64 a, u64 d, unsigned s) {
    a %= n;
    if (a == 0) return true;
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Brent's cycle-finding variant of Pollard rho. n is an odd composite
// with no prime factor <= 47.
u64 pollard_brent(u64 n) {
    for (u64 c = 1;; ++c) {
        auto step = [&](u64 v) { return addmod(mulmod(v, v, n), c, n); };
        u64 x = 2, y = 2, ys = 2, d = 1, q = 1, r = 1;
        const u64 m = 128;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = step(y);
            u64 k = 0;
            while (k < r && d == 1) {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            // The batched gcd overshot; replay one step at a time.
            d = 1;
            while (d == 1) {
                ys = step(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::map<u64, unsigned>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    u64 d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

u64 powmod_u64(u64 a, u64 k, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (k) {
        if (k & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        k >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set decides primality for every n < 2^64.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!mr_round(n, a, d, s)) return false;
    }
    return true;
}

u64 IntFactorization::reconstruct() const {
    u64 n = 1;
    for (const auto& [p, e] : parts) {
        for (unsigned i = 0; i < e; ++i) n *= p;
    }
    return n;
}

IntFactorization factorize_u64(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize_u64: input must be >= 1");
    std::map<u64, unsigned> acc;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        while (n % p == 0) {
            ++acc[p];
            n /= p;
        }
    }
    factor_rec(n, acc);
    IntFactorization f;
    f.parts.assign(acc.begin(), acc.end());
    return f;
}

IntFactorization factorize(const Int& n) {
    if (n <= 0) throw std::invalid_argument("factorize: input must be >= 1");
    if (!n.fits_ulong_p() && mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
        throw std::invalid_argument("factorize: inputs above 2^64 are not supported");
    return factorize_u64(mpz_get_ui(n.get_mpz_t()));
}

std::vector<u64> prime_divisors_u64(u64 n) {
    std::vector<u64> ps;
    for (const auto& [p, e] : factorize_u64(n).parts) ps.push_back(p);
    return ps;
}

u64 euler_phi_u64(u64 n) {
    u64 phi = n;
    for (const auto& [p, e] : factorize_u64(n).parts) phi -= phi / p;
    return phi;
}

u64 order_mod_u64(u64 a, u64 r) {
    if (r < 2 || std::gcd(a % r, r) != 1)
        throw std::invalid_argument("order_mod_u64: need gcd(a, r) = 1, r >= 2");
    u64 order = euler_phi_u64(r);
    for (u64 p : prime_divisors_u64(order)) {
        while (order % p == 0 && powmod_u64(a, order / p, r) == 1) order /= p;
    }
    return order;
}

}  // namespace fqt::intfactor
