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

#include "fqt/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fqt {

Poly add(const FieldCtx& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

Poly neg(const FieldCtx& F, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = F.neg(x);
    return r;
}

Poly sub(const FieldCtx& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.sub(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

Poly mul(const FieldCtx& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    r.trim();
    return r;
}

Poly mul_scalar(const FieldCtx& F, const Poly& a, Elem s) {
    if (s == 0) return Poly::zero();
    Poly r = a;
    for (auto& x : r.c) x = F.mul(x, s);
    return r;
}

std::pair<Poly, Poly> divmod(const FieldCtx& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: division by the zero polynomial");
    if (a.deg() < b.deg()) return {Poly::zero(), a};
    Poly q, r = a;
    q.c.assign(a.deg() - b.deg() + 1, 0);
    const Elem lead_inv = F.inv(b.lead());
    for (int i = a.deg() - b.deg(); i >= 0; --i) {
        Elem cur = r.coeff(b.deg() + i);
        if (cur == 0) continue;
        Elem f = F.mul(cur, lead_inv);
        q.c[i] = f;
        for (int j = 0; j <= b.deg(); ++j)
            r.c[i + j] = F.sub(r.c[i + j], F.mul(f, b.c[j]));
    }
    q.trim();
    r.trim();
    return {q, r};
}

Poly rem(const FieldCtx& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly divexact(const FieldCtx& F, const Poly& a, const Poly& b) {
    auto [q, r] = divmod(F, a, b);
    if (!r.is_zero()) throw std::logic_error("divexact: division was not exact");
    return q;
}

bool divides(const FieldCtx& F, const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return rem(F, a, d).is_zero();
}

Poly make_monic(const FieldCtx& F, const Poly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return mul_scalar(F, a, F.inv(a.lead()));
}

Poly derivative(const FieldCtx& F, const Poly& a) {
    Poly r;
    if (a.c.size() < 2) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = F.mul(a.c[i], F.from_int(i));
    r.trim();
    return r;
}

Poly gcd(const FieldCtx& F, Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly r = rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(F, a);
}

bool coprime(const FieldCtx& F, const Poly& a, const Poly& b) {
    return gcd(F, a, b).is_one();
}

Poly lcm(const FieldCtx& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    return make_monic(F, divexact(F, mul(F, a, b), gcd(F, a, b)));
}

XgcdResult xgcd(const FieldCtx& F, const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("xgcd(0, 0) is undefined");
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(), s1 = Poly::zero();
    Poly t0 = Poly::zero(), t1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, r] = divmod(F, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = sub(F, s0, mul(F, q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = sub(F, t0, mul(F, q, t1));
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Elem scale = F.inv(r0.lead());
    return {mul_scalar(F, r0, scale), mul_scalar(F, s0, scale), mul_scalar(F, t0, scale)};
}

Poly powmod(const FieldCtx& F, const Poly& a, const Int& n, const Poly& m) {
    if (m.is_zero()) throw std::invalid_argument("powmod: zero modulus");
    if (n < 0) throw std::invalid_argument("powmod: negative exponent");
    if (m.deg() == 0) return Poly::zero();
    Poly base = rem(F, a, m);
    Poly r = Poly::one();
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    if (n == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = rem(F, mul(F, r, r), m);
        if (mpz_tstbit(n.get_mpz_t(), i)) r = rem(F, mul(F, r, base), m);
    }
    return r;
}

Poly powmod(const FieldCtx& F, const Poly& a, std::uint64_t n, const Poly& m) {
    return powmod(F, a, Int(static_cast<unsigned long>(n)), m);
}

Int norm(const FieldCtx& F, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("norm: the zero polynomial has no norm");
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), F.q(), static_cast<unsigned long>(f.deg()));
    return r;
}

std::optional<Congruence> crt_merge(const FieldCtx& F, const Congruence& a, const Congruence& b) {
    // x = a.residue (mod a.modulus), x = b.residue (mod b.modulus)
    auto [g, u, v] = xgcd(F, a.modulus, b.modulus);
    Poly diff = sub(F, b.residue, a.residue);
    auto [q, r] = divmod(F, diff, g);
    if (!r.is_zero()) return std::nullopt;
    Poly l = divexact(F, mul(F, a.modulus, b.modulus), g);
    l = make_monic(F, l);
    // x = a.residue + a.modulus * u * (diff / g)  (mod lcm)
    Poly x = add(F, a.residue, mul(F, a.modulus, mul(F, u, q)));
    return Congruence{rem(F, x, l), l};
}

Poly crt(const FieldCtx& F, std::span<const std::pair<Poly, Poly>> pairs) {
    if (pairs.empty()) throw std::invalid_argument("crt: no congruences");
    Congruence acc{rem(F, pairs[0].first, pairs[0].second), make_monic(F, pairs[0].second)};
    for (size_t i = 1; i < pairs.size(); ++i) {
        const auto& [ri, mi] = pairs[i];
        if (!coprime(F, acc.modulus, mi))
            throw std::invalid_argument("crt: moduli are not pairwise coprime");
        auto merged = crt_merge(F, acc, Congruence{rem(F, ri, mi), make_monic(F, mi)});
        acc = std::move(*merged);  // coprime moduli are always consistent
    }
    return acc.residue;
}

bool canonical_less(const FieldCtx& F, const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i) {
        unsigned ra = F.rank(a.c[i]), rb = F.rank(b.c[i]);
        if (ra != rb) return ra < rb;
    }
    return false;
}

std::uint64_t encode(const FieldCtx& F, const Poly& f) {
    const std::uint64_t q = F.q();
    std::uint64_t v = 0;
    for (size_t i = f.c.size(); i-- > 0;) {
        if (v > (UINT64_MAX - f.c[i]) / q)
            throw std::invalid_argument("encode: polynomial too large for a 64-bit key");
        v = v * q + f.c[i];
    }
    return v;
}

std::string to_string(const FieldCtx&, const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.deg(); i >= 0; --i) {
        Elem c = f.c[i];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c != 1) os << static_cast<unsigned>(c);
        if (i == 1)
            os << "t";
        else if (i > 1)
            os << "t^" << i;
    }
    return os.str();
}

std::string to_hex(const FieldCtx& F, const Poly& f) {
    if (F.q() != 2) throw std::invalid_argument("to_hex: bitmask form is only defined over F_2");
    Int v = 0;
    for (size_t i = 0; i < f.c.size(); ++i)
        if (f.c[i]) mpz_setbit(v.get_mpz_t(), i);
    return "0x" + v.get_str(16);
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, const char* why) {
    throw std::invalid_argument("cannot parse polynomial \"" + text + "\": " + why);
}

}  // namespace

Poly parse_poly(const FieldCtx& F, const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) parse_fail(text, "empty input");

    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        if (F.q() != 2) parse_fail(text, "hex form is only defined over F_2");
        Int v;
        if (mpz_set_str(v.get_mpz_t(), s.c_str() + 2, 16) != 0 || v < 0)
            parse_fail(text, "bad hex digits");
        Poly f;
        size_t nbits = mpz_sizeinbase(v.get_mpz_t(), 2);
        f.c.assign(v == 0 ? 0 : nbits, 0);
        for (size_t i = 0; i < f.c.size(); ++i)
            if (mpz_tstbit(v.get_mpz_t(), i)) f.c[i] = 1;
        f.trim();
        return f;
    }

    Poly acc = Poly::zero();
    size_t i = 0;
    bool negate = false;
    if (s[0] == '+' || s[0] == '-') {
        negate = s[0] == '-';
        i = 1;
    }
    while (i < s.size()) {
        // one term: [coeff]['*']['t'['^'power]]
        unsigned long coeff_val = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff_val = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coeff_val = coeff_val * 10 + (s[i] - '0');
                if (coeff_val > 0xFFFFu) parse_fail(text, "coefficient encoding too large");
                ++i;
            }
            saw_coeff = true;
        }
        if (i < s.size() && s[i] == '*') ++i;
        unsigned long power = 0;
        bool saw_t = false;
        if (i < s.size() && s[i] == 't') {
            saw_t = true;
            power = 1;
            ++i;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    parse_fail(text, "missing exponent after '^'");
                power = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    power = power * 10 + (s[i] - '0');
                    if (power > 1000000) parse_fail(text, "exponent too large");
                    ++i;
                }
            }
        }
        if (!saw_coeff && !saw_t) parse_fail(text, "expected a coefficient or 't'");
        Elem c = F.check(coeff_val);
        if (negate) c = F.neg(c);
        if (c != 0) {
            Poly term;
            term.c.assign(power + 1, 0);
            term.c[power] = c;
            acc = add(F, acc, term);
        }
        if (i == s.size()) break;
        if (s[i] == '+' || s[i] == '-') {
            negate = s[i] == '-';
            ++i;
            if (i == s.size()) parse_fail(text, "dangling sign");
        } else {
            parse_fail(text, "unexpected character");
        }
    }
    return acc;
}

}  // namespace fqt
