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
#include <string>
#include <vector>

namespace fqt {

/// A field element of F_q, q = p^e, encoded as an integer in [0, q):
/// the base-p digits of the encoding are the coordinates with respect to
/// the power basis 1, t, ..., t^(e-1) of the defining modulus. For prime
/// fields this is just the residue.
using Elem = std::uint16_t;

/// Description of F_q: characteristic, extension degree, defining modulus
/// (the encoding-order-first monic irreducible of degree e over F_p),
/// a fixed generator of F_q^*, and exp/log tables for O(1) arithmetic.
///
/// Immutable after construction; safe to share across threads.
class FieldCtx {
   public:
    /// q must be a prime power <= 2^16.
    explicit FieldCtx(unsigned q);
    FieldCtx(unsigned p, unsigned e);

    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned q() const { return q_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[mod_order(log_[a] + log_[b])];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long n) const;

    /// Generator of the cyclic group F_q^* (order q - 1); smallest
    /// encoding with full order.
    Elem generator() const { return gen_; }
    /// Discrete log base the generator; a must be nonzero.
    unsigned dlog(Elem a) const;
    /// generator^k for any integer k (negative allowed).
    Elem gen_pow(long long k) const;
    Elem minus_one() const { return p_ == 2 ? Elem{1} : exp_[(q_ - 1) / 2]; }

    /// The element order used by all canonical orderings: 0 first, then
    /// the powers of the generator by exponent.
    unsigned rank(Elem a) const { return a == 0 ? 0u : log_[a] + 1; }
    Elem elem_of_rank(unsigned r) const { return r == 0 ? Elem{0} : exp_[r - 1]; }

    /// Defining modulus as F_p coefficients (low to high, monic); empty
    /// for prime fields.
    const std::vector<Elem>& modulus() const { return modulus_; }

    /// Validates an element encoding from external input.
    Elem check(unsigned long v) const;

    /// The scalar n * 1 in F_q.
    Elem from_int(unsigned long n) const { return static_cast<Elem>(n % p_); }

    std::string describe() const;

   private:
    unsigned p_ = 0, e_ = 0, q_ = 0;
    std::vector<Elem> modulus_;
    Elem gen_ = 0;
    std::vector<Elem> exp_;           // exp_[i] = generator^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;  // inverse of exp_; log_[0] unused

    unsigned mod_order(unsigned s) const { return s >= q_ - 1 ? s - (q_ - 1) : s; }
    void build();
};

/// Process-wide cache of contexts keyed by q. Thread-safe.
const FieldCtx& field_for(unsigned q);

}  // namespace fqt
