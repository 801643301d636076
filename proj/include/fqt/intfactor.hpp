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

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace fqt {

using Int = mpz_class;
using Rat = mpq_class;

namespace intfactor {

/// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

/// Sorted (prime, exponent) pairs whose product reconstructs the input.
struct IntFactorization {
    std::vector<std::pair<std::uint64_t, unsigned>> parts;

    std::uint64_t reconstruct() const;
};

/// Trial division for small factors, then Pollard-Brent rho with
/// Miller-Rabin certification. n >= 1.
IntFactorization factorize_u64(std::uint64_t n);

/// Same, for big-integer inputs. Inputs above 2^64 - 1 are a hard error
/// (std::invalid_argument): nothing at desk scale needs more.
IntFactorization factorize(const Int& n);

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors_u64(std::uint64_t n);

std::uint64_t euler_phi_u64(std::uint64_t n);

/// a^k mod m without overflow (m < 2^64).
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t k, std::uint64_t m);

/// Multiplicative order of a modulo prime r. Requires gcd(a, r) = 1.
std::uint64_t order_mod_u64(std::uint64_t a, std::uint64_t r);

}  // namespace intfactor
}  // namespace fqt
