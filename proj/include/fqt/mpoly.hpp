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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "fqt/intfactor.hpp"

namespace fqt {

/// Multivariate polynomial over Q in variables x1..xn, used as the sieve
/// cutoff function. Restricting to polynomials keeps every downstream
/// quantity an exact rational.
class MPoly {
   public:
    explicit MPoly(unsigned nvars) : nvars_(nvars) {}

    static MPoly constant(unsigned nvars, const Rat& c);
    static MPoly var(unsigned nvars, unsigned i);  // x_{i+1}, 0-indexed i
    /// 1 - x1 - ... - xn, the default cutoff.
    static MPoly one_minus_sum(unsigned nvars);

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<unsigned>, Rat>& terms() const { return terms_; }

    void add_term(const std::vector<unsigned>& exps, const Rat& c);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly scaled(const Rat& c) const;

    /// Plain evaluation (no support restriction).
    Rat eval(std::span<const Rat> x) const;
    /// Evaluation as a function supported on the closed simplex
    /// {x_i >= 0, sum x_i <= 1}: zero outside.
    Rat eval_on_simplex(std::span<const Rat> x) const;

    /// Antiderivative in variable m (0-indexed); constant of integration 0.
    MPoly antiderivative(unsigned m) const;
    /// Substitutes the polynomial `val` for variable m.
    MPoly substituted(unsigned m, const MPoly& val) const;
    /// Removes an unused variable, renumbering the ones above it.
    MPoly dropped_var(unsigned m) const;

    std::string str() const;
    /// Parses forms like "1 - x1 - x2", "3/2 x1^2 x3 + 1". Terms are
    /// rational coefficients times optional variable powers.
    static MPoly parse(unsigned nvars, const std::string& text);

    friend bool operator==(const MPoly&, const MPoly&) = default;

   private:
    unsigned nvars_;
    std::map<std::vector<unsigned>, Rat> terms_;  // exponent vector -> coeff
};

/// Integral of the monomial prod x_i^(a_i) over the standard simplex in
/// dimension k: prod(a_i!) / (k + sum a_i)!.
Rat monomial_simplex_integral(std::span<const unsigned> exps, unsigned k);

/// Exact integral of P over the standard k-simplex.
Rat simplex_integral(const MPoly& P);

}  // namespace fqt
