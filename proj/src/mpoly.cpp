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

#include "fqt/mpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fqt {

namespace {

Rat rat_pow(const Rat& x, unsigned n) {
    Rat r = 1;
    Rat base = x;
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

}  // namespace

void MPoly::add_term(const std::vector<unsigned>& exps, const Rat& c) {
    if (exps.size() != nvars_) throw std::invalid_argument("MPoly: exponent arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::constant(unsigned nvars, const Rat& c) {
    MPoly p(nvars);
    p.add_term(std::vector<unsigned>(nvars, 0), c);
    return p;
}

MPoly MPoly::var(unsigned nvars, unsigned i) {
    if (i >= nvars) throw std::invalid_argument("MPoly::var: index out of range");
    MPoly p(nvars);
    std::vector<unsigned> e(nvars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

MPoly MPoly::one_minus_sum(unsigned nvars) {
    MPoly p = constant(nvars, 1);
    for (unsigned i = 0; i < nvars; ++i) p = p - var(nvars, i);
    return p;
}

MPoly MPoly::operator+(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MPoly: arity mismatch");
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MPoly: arity mismatch");
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MPoly: arity mismatch");
    MPoly r(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<unsigned> e(nvars_);
            for (unsigned i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, cc] : terms_) r.add_term(e, cc * c);
    return r;
}

Rat MPoly::eval(std::span<const Rat> x) const {
    if (x.size() != nvars_) throw std::invalid_argument("MPoly::eval: arity mismatch");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (unsigned i = 0; i < nvars_; ++i)
            if (e[i]) term *= rat_pow(x[i], e[i]);
        total += term;
    }
    return total;
}

Rat MPoly::eval_on_simplex(std::span<const Rat> x) const {
    Rat sum = 0;
    for (const Rat& xi : x) {
        if (xi < 0) return 0;
        sum += xi;
    }
    if (sum > 1) return 0;
    return eval(x);
}

MPoly MPoly::antiderivative(unsigned m) const {
    if (m >= nvars_) throw std::invalid_argument("MPoly::antiderivative: index out of range");
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<unsigned> e2 = e;
        e2[m] += 1;
        r.add_term(e2, c / Rat(e2[m]));
    }
    return r;
}

MPoly MPoly::substituted(unsigned m, const MPoly& val) const {
    if (m >= nvars_) throw std::invalid_argument("MPoly::substituted: index out of range");
    if (val.nvars_ != nvars_) throw std::invalid_argument("MPoly: arity mismatch");
    // Horner in x_m: group terms by the exponent of x_m.
    std::map<unsigned, MPoly> layers;
    for (const auto& [e, c] : terms_) {
        std::vector<unsigned> e2 = e;
        unsigned k = e2[m];
        e2[m] = 0;
        auto it = layers.try_emplace(k, nvars_).first;
        it->second.add_term(e2, c);
    }
    MPoly result(nvars_);
    MPoly power = constant(nvars_, 1);
    unsigned cur = 0;
    for (const auto& [k, layer] : layers) {
        while (cur < k) {
            power = power * val;
            ++cur;
        }
        result = result + layer * power;
    }
    return result;
}

MPoly MPoly::dropped_var(unsigned m) const {
    if (m >= nvars_) throw std::invalid_argument("MPoly::dropped_var: index out of range");
    MPoly r(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[m] != 0) throw std::logic_error("MPoly::dropped_var: variable still in use");
        std::vector<unsigned> e2;
        e2.reserve(nvars_ - 1);
        for (unsigned i = 0; i < nvars_; ++i)
            if (i != m) e2.push_back(e[i]);
        r.add_term(e2, c);
    }
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat cc = c;
        if (!first) {
            if (cc < 0) {
                os << " - ";
                cc = -cc;
            } else {
                os << " + ";
            }
        } else if (cc < 0) {
            os << "-";
            cc = -cc;
        }
        first = false;
        bool has_vars = false;
        for (unsigned i = 0; i < nvars_; ++i) has_vars = has_vars || e[i] > 0;
        if (cc != 1 || !has_vars) os << cc.get_str();
        bool printed = cc != 1 || !has_vars;
        for (unsigned i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (printed) os << " ";
            printed = true;
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

MPoly MPoly::parse(unsigned nvars, const std::string& text) {
    MPoly result(nvars);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("MPoly::parse: empty input");
    bool negate = false;
    if (text[i] == '+' || text[i] == '-') {
        negate = text[i] == '-';
        ++i;
    }
    while (true) {
        skip_ws();
        // term: [rational] [x<i>[^e]]*
        Rat coeff = 1;
        bool saw_anything = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t j = i;
            while (j < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
                ++j;
            coeff = Rat(text.substr(i, j - i));
            coeff.canonicalize();
            i = j;
            saw_anything = true;
        }
        std::vector<unsigned> exps(nvars, 0);
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
            if (i >= text.size() || text[i] != 'x') break;
            ++i;
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw std::invalid_argument("MPoly::parse: missing variable index");
            unsigned idx = static_cast<unsigned>(std::stoul(text.substr(i, j - i)));
            if (idx == 0 || idx > nvars)
                throw std::invalid_argument("MPoly::parse: variable index out of range");
            i = j;
            unsigned power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                if (j == i) throw std::invalid_argument("MPoly::parse: missing exponent");
                power = static_cast<unsigned>(std::stoul(text.substr(i, j - i)));
                i = j;
            }
            exps[idx - 1] += power;
            saw_anything = true;
        }
        if (!saw_anything) throw std::invalid_argument("MPoly::parse: expected a term");
        result.add_term(exps, negate ? Rat(-coeff) : coeff);
        skip_ws();
        if (i == text.size()) break;
        if (text[i] == '+' || text[i] == '-') {
            negate = text[i] == '-';
            ++i;
        } else {
            throw std::invalid_argument("MPoly::parse: unexpected character");
        }
    }
    return result;
}

Rat monomial_simplex_integral(std::span<const unsigned> exps, unsigned k) {
    if (exps.size() != k) throw std::invalid_argument("monomial_simplex_integral: arity mismatch");
    Int num = 1;
    unsigned total = 0;
    for (unsigned a : exps) {
        Int fa;
        mpz_fac_ui(fa.get_mpz_t(), a);
        num *= fa;
        total += a;
    }
    Int den;
    mpz_fac_ui(den.get_mpz_t(), k + total);
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat simplex_integral(const MPoly& P) {
    Rat total = 0;
    for (const auto& [e, c] : P.terms())
        total += c * monomial_simplex_integral(e, P.nvars());
    return total;
}

}  // namespace fqt
