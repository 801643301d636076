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

#include "fqt/field.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "fqt/intfactor.hpp"

namespace fqt {

namespace {

// --- bootstrap arithmetic on F_p[x] coefficient vectors ---------------
// Used only during construction (modulus search, generator search, table
// build), before the exp/log tables exist. Coefficients are residues mod p.

using FpPoly = std::vector<unsigned>;

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, unsigned p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    // reduce by monic m
    while (r.size() >= m.size()) {
        unsigned c = r.back();
        if (c != 0) {
            size_t off = r.size() - m.size();
            for (size_t j = 0; j < m.size(); ++j) r[off + j] = (r[off + j] + (p - c % p) * m[j]) % p;
        }
        r.pop_back();
        fp_trim(r);
        if (r.size() < m.size()) break;
    }
    fp_trim(r);
    return r;
}

FpPoly fp_powmod(FpPoly a, unsigned long long n, const FpPoly& m, unsigned p) {
    FpPoly r{1};
    while (n) {
        if (n & 1) r = fp_mulmod(r, a, m, p);
        a = fp_mulmod(a, a, m, p);
        n >>= 1;
    }
    return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, unsigned p) {
    FpPoly one{1};
    return fp_mulmod(a, one, m, p);
}

FpPoly fp_make_monic(FpPoly f, unsigned p) {
    fp_trim(f);
    if (f.empty()) return f;
    unsigned lc = f.back();
    if (lc == 1) return f;
    // invert lc mod p by Fermat
    unsigned inv = 1, base = lc, k = p - 2;
    while (k) {
        if (k & 1) inv = inv * base % p;
        base = base * base % p;
        k >>= 1;
    }
    for (auto& c : f) c = c * inv % p;
    return f;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, unsigned p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly bm = fp_make_monic(b, p);
        FpPoly r = fp_mod(a, bm, p);
        a = std::move(bm);
        b = std::move(r);
    }
    return fp_make_monic(a, p);
}

// Rabin's criterion over the prime field; f monic of degree n >= 1.
bool fp_irreducible(const FpPoly& f, unsigned p) {
    unsigned n = static_cast<unsigned>(f.size()) - 1;
    FpPoly x{0, 1};
    for (auto r : intfactor::prime_divisors_u64(n)) {
        FpPoly h = x;
        for (unsigned j = 0; j < n / r; ++j) h = fp_powmod(h, p, f, p);
        // gcd(h - x, f) must be 1
        FpPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        fp_trim(diff);
        FpPoly g = fp_gcd(diff, f, p);
        if (!(g.size() == 1 && g[0] == 1)) return false;
    }
    FpPoly h = x;
    for (unsigned j = 0; j < n; ++j) h = fp_powmod(h, p, f, p);
    return h == fp_mod(x, f, p);
}

FpPoly digits_of(unsigned v, unsigned p, unsigned e) {
    FpPoly d(e, 0);
    for (unsigned i = 0; i < e; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

unsigned encode_digits(const FpPoly& d, unsigned p) {
    unsigned v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

}  // namespace

FieldCtx::FieldCtx(unsigned q) {
    if (q < 2) throw std::invalid_argument("FieldCtx: q must be a prime power >= 2");
    auto f = intfactor::factorize_u64(q);
    if (f.parts.size() != 1) throw std::invalid_argument("FieldCtx: q is not a prime power");
    p_ = static_cast<unsigned>(f.parts[0].first);
    e_ = f.parts[0].second;
    q_ = q;
    build();
}

FieldCtx::FieldCtx(unsigned p, unsigned e) : p_(p), e_(e) {
    if (e == 0 || !intfactor::is_prime_u64(p))
        throw std::invalid_argument("FieldCtx: need prime p and e >= 1");
    unsigned long long q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    if (q > 0x10000ULL) throw std::invalid_argument("FieldCtx: q must be <= 2^16");
    q_ = static_cast<unsigned>(q);
    build();
}

void FieldCtx::build() {
    if (q_ > 0x10000u) throw std::invalid_argument("FieldCtx: q must be <= 2^16");

    FpPoly mod;  // monic degree-e modulus over F_p (only used when e > 1)
    if (e_ > 1) {
        // First irreducible in coefficient-encoding order: constant part
        // runs v = 0, 1, ..., leading coefficient fixed to 1.
        bool found = false;
        for (unsigned v = 0; v < q_ && !found; ++v) {
            FpPoly cand = digits_of(v, p_, e_);
            cand.push_back(1);
            if (fp_irreducible(cand, p_)) {
                mod = cand;
                found = true;
            }
        }
        if (!found) throw std::logic_error("FieldCtx: no irreducible modulus found");
        modulus_.assign(mod.begin(), mod.end());
    }

    auto raw_mul = [&](unsigned a, unsigned b) -> unsigned {
        if (e_ == 1) return a * b % p_;
        FpPoly r = fp_mulmod(digits_of(a, p_, e_), digits_of(b, p_, e_), mod, p_);
        return encode_digits(r, p_);
    };
    auto raw_pow = [&](unsigned a, unsigned n) -> unsigned {
        unsigned r = 1;
        while (n) {
            if (n & 1) r = raw_mul(r, a);
            a = raw_mul(a, a);
            n >>= 1;
        }
        return r;
    };

    // Smallest encoding generating F_q^*.
    if (q_ == 2) {
        gen_ = 1;
    } else {
        auto rs = intfactor::prime_divisors_u64(q_ - 1);
        for (unsigned c = 2; c < q_; ++c) {
            bool ok = true;
            for (auto r : rs) {
                if (raw_pow(c, (q_ - 1) / static_cast<unsigned>(r)) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen_ = static_cast<Elem>(c);
                break;
            }
        }
        if (gen_ == 0) throw std::logic_error("FieldCtx: no generator found");
    }

    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    unsigned x = 1;
    for (unsigned i = 0; i < q_ - 1; ++i) {
        exp_[i] = static_cast<Elem>(x);
        log_[x] = i;
        x = raw_mul(x, gen_);
    }
    if (x != 1) throw std::logic_error("FieldCtx: generator order mismatch");
}

Elem FieldCtx::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) {
        unsigned s = a + b;
        return static_cast<Elem>(s >= p_ ? s - p_ : s);
    }
    unsigned r = 0, mul = 1, x = a, y = b;
    for (unsigned i = 0; i < e_; ++i) {
        r += (x % p_ + y % p_) % p_ * mul;
        mul *= p_;
        x /= p_;
        y /= p_;
    }
    return static_cast<Elem>(r);
}

Elem FieldCtx::neg(Elem a) const {
    if (p_ == 2 || a == 0) return a;
    return exp_[mod_order(log_[a] + (q_ - 1) / 2)];
}

Elem FieldCtx::inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("FieldCtx::inv: division by zero");
    return exp_[mod_order(q_ - 1 - log_[a])];
}

Elem FieldCtx::pow(Elem a, long long n) const {
    if (a == 0) {
        if (n == 0) return 1;
        if (n < 0) throw std::invalid_argument("FieldCtx::pow: 0 to a negative power");
        return 0;
    }
    long long ord = q_ - 1;
    long long k = (static_cast<long long>(log_[a]) * (n % ord)) % ord;
    if (k < 0) k += ord;
    return exp_[static_cast<unsigned>(k)];
}

unsigned FieldCtx::dlog(Elem a) const {
    if (a == 0) throw std::invalid_argument("FieldCtx::dlog: zero has no discrete log");
    return log_[a];
}

Elem FieldCtx::gen_pow(long long k) const {
    long long ord = q_ - 1;
    k %= ord;
    if (k < 0) k += ord;
    return exp_[static_cast<unsigned>(k)];
}

Elem FieldCtx::check(unsigned long v) const {
    if (v >= q_) throw std::invalid_argument("element encoding out of range for this field");
    return static_cast<Elem>(v);
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "F_" << q_ << " (p=" << p_ << ", e=" << e_;
    if (e_ > 1) {
        os << ", modulus=";
        bool first = true;
        for (size_t i = modulus_.size(); i-- > 0;) {
            if (modulus_[i] == 0) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0 || modulus_[i] != 1) os << modulus_[i];
            if (i == 1)
                os << "t";
            else if (i > 1)
                os << "t^" << i;
        }
    }
    os << ", generator=" << gen_ << ")";
    return os.str();
}

const FieldCtx& field_for(unsigned q) {
    static std::mutex mu;
    static std::map<unsigned, FieldCtx> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, FieldCtx(q)).first;
    return it->second;
}

}  // namespace fqt
