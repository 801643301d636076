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

#include "fqt/sieve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fqt/errors.hpp"
#include "fqt/symbols.hpp"

namespace fqt::sieve {

namespace {

constexpr size_t kMaxViolations = 32;

struct Xgcd3 {
    long long g, u, v;  // u*a + v*b = g >= 0
};

Xgcd3 int_xgcd(long long a, long long b) {
    if (b == 0) return a >= 0 ? Xgcd3{a, 1, 0} : Xgcd3{-a, -1, 0};
    Xgcd3 r = int_xgcd(b, a % b);
    return {r.g, r.v, r.u - (a / b) * r.v};
}

// Coefficients b_i with sum b_i f_i = 1 (mod m); requires
// gcd(f_1, ..., f_r, m) = 1. Coefficients are kept reduced mod m, which
// preserves the congruence and bounds their growth.
std::vector<long long> bezout_with_modulus(const std::vector<long long>& f, long long m) {
    long long g = m;
    std::vector<long long> coef(f.size(), 0);
    for (size_t i = 0; i < f.size(); ++i) {
        Xgcd3 x = int_xgcd(g, f[i]);
        for (auto& c : coef) c = c * (x.u % m) % m;
        coef[i] = (coef[i] + x.v) % m;
        g = x.g;
    }
    if (g != 1)
        throw std::invalid_argument("exponent system has no unit combination (g not eligible)");
    return coef;
}

Poly poly_pow(const FieldCtx& Fq, const Poly& base, unsigned e) {
    Poly r = Poly::one();
    for (unsigned i = 0; i < e; ++i) r = mul(Fq, r, base);
    return r;
}

}  // namespace

int TupleH::max_deg() const {
    int d = -1;
    for (const auto& h : elements) d = std::max(d, h.deg());
    return d;
}

AdmissibilityCert is_admissible(const FieldCtx& Fq, const std::vector<Poly>& H) {
    if (H.empty()) throw std::invalid_argument("is_admissible: empty tuple");
    {
        std::set<std::vector<Elem>> seen;
        for (const auto& h : H)
            if (!seen.insert(h.c).second)
                throw std::invalid_argument("is_admissible: duplicate elements");
    }
    AdmissibilityCert cert;
    const std::uint64_t k = H.size();
    std::uint64_t qd = 1;
    for (unsigned d = 1;; ++d) {
        if (qd > k / Fq.q()) break;  // q^d > k: p cannot be covered
        qd *= Fq.q();
        for (const auto& p : factorizer::enumerate_irreducibles(Fq, d)) {
            std::set<std::uint64_t> residues;
            for (const auto& h : H) residues.insert(encode(Fq, rem(Fq, h, p)));
            if (residues.size() == qd) {
                cert.admissible = false;
                cert.witness = p;
                return cert;
            }
            for_each_poly_below(Fq, d, [&](const Poly& r) {
                if (residues.count(encode(Fq, r)) == 0) {
                    cert.omitted.emplace_back(p, r);
                    return false;
                }
                return true;
            });
        }
    }
    cert.admissible = true;
    return cert;
}

TupleH certified_tuple(const FieldCtx& Fq, std::vector<Poly> elements, const Poly& g) {
    TupleH t;
    t.cert = is_admissible(Fq, elements);
    if (!t.cert.admissible) {
        std::ostringstream os;
        os << "tuple is not admissible: residues cover every class mod "
           << to_string(Fq, *t.cert.witness);
        throw std::invalid_argument(os.str());
    }
    t.g_multiple = !g.is_zero();
    for (const auto& h : elements)
        t.g_multiple = t.g_multiple && divides(Fq, g, h);
    t.elements = std::move(elements);
    return t;
}

TupleH build_admissible_tuple(const FieldCtx& Fq, unsigned k, const Poly& g,
                              std::uint64_t budget) {
    if (k == 0) throw std::invalid_argument("build_admissible_tuple: k must be >= 1");
    if (g.is_zero() || !g.is_monic())
        throw std::invalid_argument("build_admissible_tuple: g must be monic and nonzero");
    std::vector<Poly> chosen;
    std::uint64_t qd = 1;
    unsigned d = 0;
    // smallest degree with q^d > k
    while (qd <= k) {
        qd *= Fq.q();
        ++d;
    }
    while (chosen.size() < k) {
        for (const auto& p : factorizer::enumerate_irreducibles(Fq, d, budget)) {
            chosen.push_back(mul(Fq, g, p));
            if (chosen.size() == k) break;
        }
        ++d;
    }
    return certified_tuple(Fq, std::move(chosen), g);
}

Poly compute_W(const FieldCtx& Fq, unsigned ell, const Poly& g) {
    if (g.is_zero() || !g.is_monic())
        throw std::invalid_argument("compute_W: g must be monic and nonzero");
    if (ell == 0) throw std::invalid_argument("compute_W: ell must be >= 1");
    Poly W = g;
    // norm threshold log log log(q^ell); undefined or < 2 means no primes
    double x0 = ell * std::log(static_cast<double>(Fq.q()));
    if (x0 <= 1.0) return W;
    double x1 = std::log(x0);
    if (x1 <= 0.0) return W;
    double tau = std::log(x1);
    for (unsigned d = 1; std::pow(static_cast<double>(Fq.q()), static_cast<double>(d)) < tau;
         ++d) {
        for (const auto& p : factorizer::enumerate_irreducibles(Fq, d))
            W = lcm(Fq, W, p);
    }
    return W;
}

Poly find_residue_class(const FieldCtx& Fq, const Poly& g, const TupleH& H, const Poly& W,
                        bool require_symbol) {
    const unsigned q = Fq.q();
    if (g.is_zero() || !g.is_monic())
        throw std::invalid_argument("find_residue_class: g must be monic and nonzero");
    if (W.is_zero() || !W.is_monic() || !divides(Fq, g, W))
        throw std::invalid_argument("find_residue_class: W must be a monic multiple of g");
    if (!H.cert.admissible) throw std::invalid_argument("find_residue_class: tuple not admissible");
    if (require_symbol && !H.g_multiple)
        throw std::invalid_argument("find_residue_class: every shift must be divisible by g");

    // Residues forced at the primes of g so that (a/g)_{q-1} hits the
    // right target; the remaining primes of W only need coprimality.
    std::map<std::uint64_t, Poly> forced;
    const bool use_symbol = require_symbol && q > 2;
    if (use_symbol) {
        // covers g = 1, which cannot produce a generating symbol when q > 2
        if (!primroots::is_eligible(Fq, g))
            throw std::invalid_argument("find_residue_class: g is not eligible");
        auto gfac = factorizer::factorize(Fq, g);
        std::vector<long long> exps;
        for (const auto& [p, e] : gfac.parts) exps.push_back(e);
        auto bs = bezout_with_modulus(exps, q - 1);

        // With deg(g) odd the reciprocity sign flips once for odd-degree n,
        // so aim at -omega instead of omega.
        Elem omega = Fq.generator();
        Elem target = (g.deg() % 2 == 0) ? omega : Fq.neg(omega);
        auto T = symbols::make_symbol(Fq, target);

        std::vector<std::pair<Poly, Poly>> congruences;
        for (size_t i = 0; i < gfac.parts.size(); ++i) {
            auto zeta = symbols::sym_pow(Fq, T, bs[i]);
            Poly a_i = symbols::find_preimage(Fq, gfac.parts[i].first, zeta.value, q - 1);
            forced.emplace(encode(Fq, gfac.parts[i].first), a_i);
            congruences.emplace_back(a_i, gfac.parts[i].first);
        }
        Poly a = crt(Fq, congruences);
        if (symbols::symbol_composite(Fq, a, g, q - 1).value != target)
            throw CrossCheckError("find_residue_class: symbol target missed");
    }

    std::vector<std::pair<Poly, Poly>> congruences;
    for (const auto& [p, e] : factorizer::factorize(Fq, W).parts) {
        Poly modulus = poly_pow(Fq, p, e);
        auto it = forced.find(encode(Fq, p));
        if (it != forced.end()) {
            congruences.emplace_back(it->second, modulus);
            continue;
        }
        // first class c mod p with c + h_i nonzero mod p for every i
        std::set<std::uint64_t> blocked;
        for (const auto& h : H.elements) blocked.insert(encode(Fq, rem(Fq, neg(Fq, h), p)));
        bool found = false;
        Poly res;
        for_each_poly_below(Fq, static_cast<unsigned>(p.deg()), [&](const Poly& c) {
            if (blocked.count(encode(Fq, c)) == 0) {
                res = c;
                found = true;
                return false;
            }
            return true;
        });
        if (!found)
            throw CrossCheckError("find_residue_class: no free class despite admissibility");
        congruences.emplace_back(res, modulus);
    }
    if (congruences.empty()) return Poly::zero();  // W = 1
    Poly alpha = crt(Fq, congruences);

    for (const auto& h : H.elements) {
        if (!coprime(Fq, add(Fq, alpha, h), W))
            throw CrossCheckError("find_residue_class: coprimality postcondition failed");
    }
    return alpha;
}

VerifyReport verify_residue_class(const FieldCtx& Fq, const Poly& alpha, const Poly& W,
                                  const TupleH& H, const Poly& g,
                                  const std::vector<unsigned>& degrees, std::uint64_t budget) {
    VerifyReport rep;
    const unsigned q = Fq.q();
    if (g.is_zero() || !g.is_monic() || W.is_zero() || !W.is_monic() || !divides(Fq, g, W))
        throw std::invalid_argument("verify_residue_class: W must be a monic multiple of g");
    const int hmax = H.max_deg();
    const unsigned degW = static_cast<unsigned>(W.deg());
    Poly alpha_red = degW > 0 ? rem(Fq, alpha, W) : Poly::zero();

    for (unsigned ell : degrees) {
        // The conditions apply to odd-degree n beyond the tuple's degrees;
        // anything else is out of scope, not failed.
        if (ell % 2 == 0 || static_cast<int>(ell) <= hmax || ell < degW) {
            rep.inapplicable.push_back(ell);
            continue;
        }
        factorizer::check_enum_budget(Fq, ell - degW, budget);
        rep.applicable.push_back(ell);
        for_each_monic(Fq, ell - degW, [&](const Poly& s) {
            Poly n = add(Fq, alpha_red, mul(Fq, W, s));
            ++rep.checked;
            for (size_t i = 0; i < H.elements.size(); ++i) {
                Poly shifted = add(Fq, n, H.elements[i]);
                if (!coprime(Fq, shifted, W)) {
                    if (rep.violations.size() < kMaxViolations)
                        rep.violations.push_back({n, i, "shift not coprime to W"});
                    continue;
                }
                if (q > 2) {
                    auto s2 = symbols::symbol_reciprocal(Fq, g, shifted, q - 1);
                    if (!symbols::generates_units(Fq, s2)) {
                        if (rep.violations.size() < kMaxViolations)
                            rep.violations.push_back({n, i, "symbol does not generate F_q^*"});
                    }
                }
            }
            return true;
        });
    }
    rep.ok = rep.violations.empty();
    return rep;
}

SieveConfig make_sieve_config(const FieldCtx& Fq, unsigned k, unsigned ell, const Rat& theta,
                              Poly W, Poly alpha, std::optional<MPoly> cutoff) {
    if (k == 0) throw std::invalid_argument("sieve config: k must be >= 1");
    if (!intfactor::is_prime_u64(ell))
        throw std::invalid_argument("sieve config: ell must be prime");
    Rat th = theta;
    th.canonicalize();
    if (!(th > 0) || !(th < Rat(1, 4)))
        throw std::invalid_argument("sieve config: theta must lie in (0, 1/4)");
    if (W.is_zero() || !W.is_monic())
        throw std::invalid_argument("sieve config: W must be monic and nonzero");
    SieveConfig cfg;
    cfg.k = k;
    cfg.ell = ell;
    cfg.theta = th;
    Rat x = th * Rat(static_cast<unsigned long>(ell));
    Int dr;
    mpz_cdiv_q(dr.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    cfg.deg_R = static_cast<unsigned>(mpz_get_ui(dr.get_mpz_t()));
    cfg.alpha = W.deg() > 0 ? rem(Fq, alpha, W) : Poly::zero();
    cfg.W = std::move(W);
    if (cutoff) {
        if (cutoff->nvars() != k)
            throw std::invalid_argument("sieve config: cutoff arity must equal k");
        cfg.cutoff = std::move(*cutoff);
    } else {
        cfg.cutoff = MPoly::one_minus_sum(k);
    }
    return cfg;
}

Rat WeightTable::lookup(const FieldCtx& Fq, const std::vector<Poly>& d) const {
    if (d.size() != k) throw std::invalid_argument("WeightTable::lookup: arity mismatch");
    std::vector<std::uint64_t> key;
    key.reserve(d.size());
    for (const auto& di : d) key.push_back(encode(Fq, di));
    auto it = index_.find(key);
    return it == index_.end() ? Rat(0) : entries[it->second].lambda;
}

Rat WeightTable::max_abs() const {
    Rat m = 0;
    for (const auto& e : entries) {
        Rat a = abs(e.lambda);
        if (a > m) m = a;
    }
    return m;
}

namespace {

// 256 prime slots are plenty for any in-budget weight computation.
using PrimeMask = std::array<std::uint64_t, 4>;

bool mask_disjoint(const PrimeMask& a, const PrimeMask& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return false;
    return true;
}

PrimeMask mask_union(const PrimeMask& a, const PrimeMask& b) {
    PrimeMask r;
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] | b[i];
    return r;
}

struct Cand {
    Poly f;
    unsigned deg = 0;
    std::uint64_t enc = 0;
    Rat inv_phi;
    Rat mu_norm;  // mu(f) * |f|
    PrimeMask mask{};
    std::vector<std::uint32_t> divisors;  // candidate ids of all monic divisors
};

}  // namespace

WeightTable lambda_weights(const FieldCtx& Fq, const SieveConfig& cfg, std::uint64_t budget) {
    const unsigned k = cfg.k;
    const unsigned deg_R = cfg.deg_R;
    factorizer::check_enum_budget(Fq, deg_R, budget);

    // candidate moduli: monic, squarefree, coprime to W, degree <= deg_R
    std::vector<Cand> cands;
    std::map<std::uint64_t, std::uint32_t> by_enc;
    std::map<std::uint64_t, std::uint32_t> prime_ids;
    for (unsigned d = 0; d <= deg_R; ++d) {
        for_each_monic(Fq, d, [&](const Poly& f) {
            if (!coprime(Fq, f, cfg.W)) return true;
            auto fac = factorizer::factorize(Fq, f);
            for (const auto& [p, e] : fac.parts)
                if (e > 1) return true;  // not squarefree
            Cand c;
            c.f = f;
            c.deg = d;
            c.enc = encode(Fq, f);
            c.inv_phi = Rat(1) / Rat(factorizer::euler_phi(Fq, f));
            c.mu_norm = Rat(fac.parts.size() % 2 == 0 ? 1 : -1) * Rat(norm(Fq, f));
            for (const auto& [p, e] : fac.parts) {
                std::uint64_t penc = encode(Fq, p);
                auto it = prime_ids.try_emplace(penc, static_cast<std::uint32_t>(prime_ids.size())).first;
                if (it->second >= 256)
                    throw BudgetError("lambda_weights: too many primes below the degree cap");
                c.mask[it->second / 64] |= std::uint64_t{1} << (it->second % 64);
            }
            by_enc.emplace(c.enc, static_cast<std::uint32_t>(cands.size()));
            cands.push_back(std::move(c));
            return true;
        });
    }
    // divisor lists (subset products of the prime factorization)
    for (auto& c : cands) {
        auto fac = factorizer::factorize(Fq, c.f);
        const size_t s = fac.parts.size();
        for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
            Poly d = Poly::one();
            for (size_t j = 0; j < s; ++j)
                if (mask & (1u << j)) d = mul(Fq, d, fac.parts[j].first);
            c.divisors.push_back(by_enc.at(encode(Fq, d)));
        }
    }

    // F evaluated at (deg r_1, ..., deg r_k)/deg_R, memoized per degree vector
    std::map<std::vector<unsigned>, Rat> fvals;
    auto cutoff_at = [&](const std::vector<unsigned>& degs) -> const Rat& {
        auto it = fvals.find(degs);
        if (it != fvals.end()) return it->second;
        std::vector<Rat> xs;
        xs.reserve(k);
        for (unsigned d : degs) xs.emplace_back(d, deg_R);
        for (auto& x : xs) x.canonicalize();
        return fvals.emplace(degs, cfg.cutoff.eval_on_simplex(xs)).first->second;
    };

    // accumulate the inner sums over r-tuples into their divisor tuples
    std::map<std::vector<std::uint32_t>, Rat> accum;
    std::vector<std::uint32_t> r_ids(k), d_ids(k);
    std::vector<unsigned> r_degs(k);

    auto distribute = [&](auto&& self, unsigned pos, const Rat& base) -> void {
        if (pos == k) {
            accum[d_ids] += base;
            return;
        }
        for (std::uint32_t div_id : cands[r_ids[pos]].divisors) {
            d_ids[pos] = div_id;
            self(self, pos + 1, base);
        }
    };

    auto recurse = [&](auto&& self, unsigned pos, unsigned deg_left, const PrimeMask& used,
                       const Rat& invphi_prod) -> void {
        if (pos == k) {
            const Rat& fv = cutoff_at(r_degs);
            if (fv == 0) return;
            Rat base = fv * invphi_prod;
            distribute(distribute, 0, base);
            return;
        }
        for (std::uint32_t id = 0; id < cands.size(); ++id) {
            const Cand& c = cands[id];
            if (c.deg > deg_left) break;  // candidates are degree-sorted
            if (!mask_disjoint(used, c.mask)) continue;
            r_ids[pos] = id;
            r_degs[pos] = c.deg;
            self(self, pos + 1, deg_left - c.deg, mask_union(used, c.mask),
                 invphi_prod * c.inv_phi);
        }
    };
    recurse(recurse, 0, deg_R, PrimeMask{}, Rat(1));

    WeightTable table;
    table.k = k;
    table.deg_R = deg_R;
    for (const auto& [ids, sum] : accum) {
        unsigned total_deg = 0;
        Rat lam = sum;
        WeightTable::Entry entry;
        for (std::uint32_t id : ids) {
            total_deg += cands[id].deg;
            lam *= cands[id].mu_norm;
            entry.d.push_back(cands[id].f);
        }
        if (total_deg >= deg_R) continue;  // support requires |d_1...d_k| < R
        if (lam == 0) continue;
        entry.lambda = std::move(lam);
        std::vector<std::uint64_t> key;
        for (std::uint32_t id : ids) key.push_back(cands[id].enc);
        table.index_.emplace(std::move(key), table.entries.size());
        table.entries.push_back(std::move(entry));
    }
    return table;
}

namespace {

// chi for "monic irreducible with g as a primitive root"; order data per
// degree cached by the caller.
struct PgTester {
    const FieldCtx& Fq;
    const Poly& g;
    std::map<unsigned, std::pair<std::vector<std::uint64_t>, Int>> cache;

    bool is_prime_poly(const Poly& f) {
        return !f.is_zero() && f.is_monic() && f.deg() >= 1 &&
               factorizer::is_irreducible(Fq, f);
    }

    bool chi_Pg(const Poly& f) {
        if (!is_prime_poly(f)) return false;
        unsigned d = static_cast<unsigned>(f.deg());
        auto it = cache.find(d);
        if (it == cache.end()) {
            Int order;
            mpz_ui_pow_ui(order.get_mpz_t(), Fq.q(), d);
            order -= 1;
            if (mpz_sizeinbase(order.get_mpz_t(), 2) > 63)
                throw BudgetError("unit group order exceeds 64 bits");
            auto rs = intfactor::prime_divisors_u64(mpz_get_ui(order.get_mpz_t()));
            it = cache.emplace(d, std::make_pair(std::move(rs), order)).first;
        }
        return primroots::is_primitive_root_with(Fq, g, f, it->second.first, it->second.second);
    }
};

}  // namespace

SieveSums sieve_sums(const FieldCtx& Fq, const SieveConfig& cfg, const TupleH& H, const Poly& g,
                     const WeightTable& table, std::uint64_t budget) {
    if (H.k() != cfg.k) throw std::invalid_argument("sieve_sums: tuple size must equal k");
    const unsigned degW = static_cast<unsigned>(cfg.W.deg());
    if (cfg.ell < degW) throw std::invalid_argument("sieve_sums: ell smaller than deg W");
    factorizer::check_enum_budget(Fq, cfg.ell - degW, budget);

    SieveSums out;
    out.s1 = 0;
    out.s2 = 0;
    out.s2_all_primes = 0;
    out.s2_per_shift.assign(cfg.k, Rat(0));
    PgTester tester{Fq, g, {}};

    std::vector<Poly> shifted(cfg.k);
    for_each_monic(Fq, cfg.ell - degW, [&](const Poly& s) {
        Poly n = add(Fq, cfg.alpha, mul(Fq, cfg.W, s));
        ++out.n_scanned;
        for (unsigned i = 0; i < cfg.k; ++i) shifted[i] = add(Fq, n, H.elements[i]);
        Rat w = 0;
        for (const auto& entry : table.entries) {
            bool all = true;
            for (unsigned i = 0; i < cfg.k && all; ++i) {
                const Poly& d = entry.d[i];
                if (d.deg() == 0) continue;  // d = 1 divides everything
                all = divides(Fq, d, shifted[i]);
            }
            if (all) w += entry.lambda;
        }
        if (w == 0) return true;
        Rat omega = w * w;
        out.s1 += omega;
        for (unsigned i = 0; i < cfg.k; ++i) {
            if (tester.is_prime_poly(shifted[i])) {
                out.s2_all_primes += omega;
                if (tester.chi_Pg(shifted[i])) {
                    out.s2 += omega;
                    out.s2_per_shift[i] += omega;
                }
            }
        }
        return true;
    });
    return out;
}

Rat s1_by_expansion(const FieldCtx& Fq, const SieveConfig& cfg, const TupleH& H,
                    const WeightTable& table) {
    if (H.k() != cfg.k) throw std::invalid_argument("s1_by_expansion: tuple size must equal k");
    Rat total = 0;
    const unsigned ell = cfg.ell;
    for (const auto& A : table.entries) {
        for (const auto& B : table.entries) {
            Congruence acc{cfg.alpha, cfg.W};
            bool consistent = true;
            for (unsigned i = 0; i < cfg.k && consistent; ++i) {
                Poly c = lcm(Fq, A.d[i], B.d[i]);
                if (c.deg() == 0) continue;
                Poly target = rem(Fq, neg(Fq, H.elements[i]), c);
                auto merged = crt_merge(Fq, acc, Congruence{target, c});
                if (!merged)
                    consistent = false;
                else
                    acc = std::move(*merged);
            }
            if (!consistent) continue;
            unsigned degM = static_cast<unsigned>(acc.modulus.deg());
            Rat count;
            if (degM <= ell) {
                Int cnt;
                mpz_ui_pow_ui(cnt.get_mpz_t(), Fq.q(), ell - degM);
                count = Rat(cnt);
            } else {
                count = (acc.residue.deg() == static_cast<int>(ell) && acc.residue.is_monic())
                            ? Rat(1)
                            : Rat(0);
            }
            total += A.lambda * B.lambda * count;
        }
    }
    return total;
}

Rat SimplexIntegrals::J_total() const {
    Rat t = 0;
    for (const auto& j : J) t += j;
    return t;
}

SimplexIntegrals simplex_integrals(const MPoly& cutoff, unsigned k) {
    if (cutoff.nvars() != k)
        throw std::invalid_argument("simplex_integrals: cutoff arity must equal k");
    SimplexIntegrals si;
    si.I = simplex_integral(cutoff * cutoff);
    for (unsigned m = 0; m < k; ++m) {
        MPoly anti = cutoff.antiderivative(m);
        MPoly upper = MPoly::constant(k, 1);
        for (unsigned i = 0; i < k; ++i)
            if (i != m) upper = upper - MPoly::var(k, i);
        // inner integral over the full fiber [0, 1 - sum of the others]
        MPoly inner = anti.substituted(m, upper).dropped_var(m);
        si.J.push_back(simplex_integral(inner * inner));
    }
    return si;
}

MkBound mk_lower_bound(unsigned k, const MPoly* cutoff) {
    if (k < 3) throw std::invalid_argument("mk_lower_bound: needs k >= 3");
    MkBound b;
    double lk = std::log(static_cast<double>(k));
    b.asymptotic = lk - 2.0 * std::log(lk) - 2.0;
    if (cutoff) {
        auto si = simplex_integrals(*cutoff, k);
        if (si.I == 0)
            throw std::invalid_argument("mk_lower_bound: cutoff is identically zero on the simplex");
        Rat r = si.J_total() / si.I;
        b.ratio = r;
    }
    return b;
}

}  // namespace fqt::sieve
