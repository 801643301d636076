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

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqt/errors.hpp"
#include "fqt/factorizer.hpp"
#include "fqt/field.hpp"
#include "fqt/geometry.hpp"
#include "fqt/mpoly.hpp"
#include "fqt/poly.hpp"
#include "fqt/primroots.hpp"
#include "fqt/sieve.hpp"
#include "fqt/symbols.hpp"

using json = nlohmann::json;
using namespace fqt;

namespace {

constexpr const char* kVersion = "fqt 0.1.0";

std::uint64_t budget_from_env(std::uint64_t fallback) {
    if (const char* env = std::getenv("FQ_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("FQ_BUDGET must be a positive integer");
    }
    return fallback;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

// FNV-1a over the result payload so reruns are byte-comparable.
std::string digest(const std::string& payload) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << "fnv1a:" << std::hex << h;
    return os.str();
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

json make_manifest(const std::string& command, const json& config, const std::string& payload,
                   long long wall_ms) {
    return json{{"version", kVersion},
                {"command", command},
                {"config", config},
                {"prng_seed", factorizer::kEdfSeed},
                {"wall_ms", wall_ms},
                {"output_digest", digest(payload)}};
}

Rat parse_rat(const std::string& s) {
    auto dot = s.find('.');
    Rat r;
    if (dot == std::string::npos) {
        r = Rat(s);
    } else {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac = s.size() - dot - 1;
        Int num(digits.empty() ? "0" : digits);
        Int den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
        r = Rat(num, den);
    }
    r.canonicalize();
    return r;
}

std::vector<Poly> load_tuple_file(const FieldCtx& Fq, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open tuple file: " + path);
    std::vector<Poly> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        out.push_back(parse_poly(Fq, line));
    }
    if (out.empty()) throw std::invalid_argument("tuple file is empty: " + path);
    return out;
}

// Flat key=value config with '#' comments.
std::map<std::string, std::string> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = val;
    }
    return kv;
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s.push_back(' ');
        s += argv[i];
    }
    return s;
}

void emit(const json& result, const std::string& command, const json& config, const Timer& timer,
          bool want_json, const std::string& human) {
    if (want_json) {
        json out{{"result", result},
                 {"manifest", make_manifest(command, config, result.dump(), timer.ms())}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << human;
    }
}

// ---- subcommand payload builders ---------------------------------------

struct SieveRun {
    sieve::TupleH tuple;
    Poly g, W, alpha;
    sieve::SieveConfig cfg;
    sieve::WeightTable table;
    sieve::SieveSums sums;
    sieve::SimplexIntegrals integrals;
};

SieveRun run_sieve_from_config(const std::map<std::string, std::string>& kv, bool full_pipeline) {
    auto need = [&](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) throw std::invalid_argument("config key missing: " + key);
        return it->second;
    };
    unsigned q = static_cast<unsigned>(std::stoul(need("q")));
    const FieldCtx& Fq = field_for(q);
    unsigned k = static_cast<unsigned>(std::stoul(need("k")));
    unsigned ell = static_cast<unsigned>(std::stoul(need("l")));
    Rat theta = parse_rat(need("theta"));
    std::uint64_t budget = budget_from_env(kDefaultBudget);
    if (kv.count("budget")) budget = std::stoull(kv.at("budget"));

    if (full_pipeline && ell % 2 == 0)
        throw std::invalid_argument("l must be an odd prime: the residue-class construction "
                                    "applies to odd-degree scans");

    SieveRun run;
    run.g = parse_poly(Fq, kv.count("g") ? kv.at("g") : "t");
    if (kv.count("tuple_file")) {
        run.tuple = sieve::certified_tuple(Fq, load_tuple_file(Fq, kv.at("tuple_file")), run.g);
    } else {
        run.tuple = sieve::build_admissible_tuple(Fq, k, run.g, budget);
    }
    if (run.tuple.k() != k) throw std::invalid_argument("tuple size does not match k");

    run.W = kv.count("w_override") ? parse_poly(Fq, kv.at("w_override"))
                                   : sieve::compute_W(Fq, ell, run.g);
    bool symbol_condition = true;
    if (kv.count("symbol_condition")) {
        const std::string& v = kv.at("symbol_condition");
        if (v == "off" || v == "0" || v == "false") symbol_condition = false;
    }
    run.alpha = kv.count("alpha_override")
                    ? parse_poly(Fq, kv.at("alpha_override"))
                    : sieve::find_residue_class(Fq, run.g, run.tuple, run.W, symbol_condition);

    std::optional<MPoly> cutoff;
    if (kv.count("f")) cutoff = MPoly::parse(k, kv.at("f"));
    run.cfg = sieve::make_sieve_config(Fq, k, ell, theta, run.W, run.alpha, cutoff);
    run.table = sieve::lambda_weights(Fq, run.cfg, budget);
    run.sums = sieve::sieve_sums(Fq, run.cfg, run.tuple, run.g, run.table, budget);
    run.integrals = sieve::simplex_integrals(run.cfg.cutoff, k);
    return run;
}

json sieve_run_json(const FieldCtx& Fq, const SieveRun& run) {
    json weights = json::array();
    for (const auto& e : run.table.entries) {
        json ds = json::array();
        for (const auto& d : e.d) ds.push_back(to_string(Fq, d));
        weights.push_back(json{{"d", ds}, {"lambda", rat_str(e.lambda)}});
    }
    json per_shift = json::array();
    for (const auto& r : run.sums.s2_per_shift) per_shift.push_back(rat_str(r));

    // main-term predictions; s1's is exact, s2's carries a 1/log(q) factor
    const unsigned k = run.cfg.k;
    Int phiW = factorizer::euler_phi(Fq, run.cfg.W);
    Int qell;
    mpz_ui_pow_ui(qell.get_mpz_t(), Fq.q(), run.cfg.ell);
    Int wnorm = norm(Fq, run.cfg.W);
    Rat front(1);
    for (unsigned i = 0; i < k; ++i) front *= Rat(phiW);
    Rat wpow(1);
    for (unsigned i = 0; i < k + 1; ++i) wpow *= Rat(wnorm);
    Rat degR_pow(1);
    for (unsigned i = 0; i < k; ++i) degR_pow *= Rat(static_cast<unsigned long>(run.cfg.deg_R));
    Rat s1_main = front * Rat(qell) * degR_pow / wpow * run.integrals.I;
    double s2_main = s1_main.get_d() * run.cfg.deg_R *
                     run.integrals.J_total().get_d() / run.integrals.I.get_d() /
                     (run.cfg.ell * std::log(static_cast<double>(Fq.q())));

    return json{
        {"k", run.cfg.k},
        {"l", run.cfg.ell},
        {"theta", rat_str(run.cfg.theta)},
        {"deg_R", run.cfg.deg_R},
        {"g", to_string(Fq, run.g)},
        {"W", to_string(Fq, run.W)},
        {"alpha", to_string(Fq, run.alpha)},
        {"cutoff", run.cfg.cutoff.str()},
        {"tuple", [&] {
             json t = json::array();
             for (const auto& h : run.tuple.elements) t.push_back(to_string(Fq, h));
             return t;
         }()},
        {"weights", weights},
        {"sums",
         {{"s1", rat_str(run.sums.s1)},
          {"s2", rat_str(run.sums.s2)},
          {"s2_per_shift", per_shift},
          {"s2_all_primes", rat_str(run.sums.s2_all_primes)},
          {"n_scanned", run.sums.n_scanned}}},
        {"integrals",
         {{"I", rat_str(run.integrals.I)},
          {"J", [&] {
               json j = json::array();
               for (const auto& v : run.integrals.J) j.push_back(rat_str(v));
               return j;
           }()}}},
        {"predictions",
         {{"s1_main_term", rat_str(s1_main)}, {"s2_main_term_float", s2_main}}},
    };
}

// ---- subcommands --------------------------------------------------------

int cmd_field(unsigned q, bool want_json, const std::string& command, const Timer& timer) {
    const FieldCtx& Fq = field_for(q);
    json result{{"q", Fq.q()},
                {"p", Fq.p()},
                {"e", Fq.e()},
                {"generator", Fq.generator()},
                {"description", Fq.describe()}};
    emit(result, command, json{{"q", q}}, timer, want_json, Fq.describe() + "\n");
    return 0;
}

int cmd_factor(unsigned q, const std::vector<std::string>& inputs,
               const std::optional<std::string>& int_input) {
    const FieldCtx& Fq = field_for(q);
    if (inputs.empty() && !int_input)
        throw std::invalid_argument("factor: nothing to factor (pass polynomials or --int N)");
    // JSON lines: one object per input
    if (int_input) {
        Int n(*int_input);
        auto fac = intfactor::factorize(n);
        json factors = json::array();
        for (const auto& [p, e] : fac.parts) factors.push_back(json::array({p, e}));
        std::cout << json{{"input", *int_input}, {"factors", factors}}.dump() << "\n";
    }
    for (const auto& text : inputs) {
        Poly f = parse_poly(Fq, text);
        auto fac = factorizer::factorize(Fq, f);
        json factors = json::array();
        for (const auto& [p, e] : fac.parts)
            factors.push_back(json::array({to_string(Fq, p), e}));
        std::cout << json{{"input", to_string(Fq, f)},
                          {"factors", factors},
                          {"unit", fac.unit}}
                         .dump()
                  << "\n";
    }
    return 0;
}

int cmd_symbol(unsigned q, unsigned d, const std::string& a_text, const std::string& b_text,
               const std::string& method, bool want_json, const std::string& command,
               const Timer& timer) {
    const FieldCtx& Fq = field_for(q);
    if (d == 0) d = q - 1;
    Poly a = parse_poly(Fq, a_text);
    Poly b = parse_poly(Fq, b_text);
    std::optional<symbols::SymbolValue> via_exp, via_rec;
    if (method == "exp" || method == "both") via_exp = symbols::symbol_composite(Fq, a, b, d);
    if (method == "reciprocity" || method == "both")
        via_rec = symbols::symbol_reciprocal(Fq, a, b, d);
    if (method == "both" && !(via_exp == via_rec))
        throw CrossCheckError("symbol: exponentiation and reciprocity methods disagree");
    auto val = via_exp ? *via_exp : *via_rec;
    json result{{"a", to_string(Fq, a)}, {"b", to_string(Fq, b)},     {"d", d},
                {"value", val.value},    {"dlog", val.dlog},          {"method", method},
                {"order", symbols::order(Fq, val)}};
    std::ostringstream human;
    human << "(" << to_string(Fq, a) << " / " << to_string(Fq, b) << ")_" << d << " = "
          << val.value << "  (generator^" << val.dlog << ")\n";
    emit(result, command, json{{"q", q}, {"d", d}}, timer, want_json, human.str());
    return 0;
}

int cmd_primroot_scan(unsigned q, const std::string& g_text, unsigned dmin, unsigned dmax,
                      const std::optional<std::string>& tuple_path, unsigned m,
                      std::uint64_t budget, bool want_json, const std::string& command,
                      const Timer& timer) {
    const FieldCtx& Fq = field_for(q);
    Poly g = parse_poly(Fq, g_text);
    std::optional<std::vector<Poly>> tuple;
    if (tuple_path) tuple = load_tuple_file(Fq, *tuple_path);
    auto rep = primroots::gap_report(Fq, g, dmin, dmax, budget,
                                     tuple ? &*tuple : nullptr, m);
    if (want_json) {
        json primes = json::array();
        for (const auto& p : rep.primes) primes.push_back(to_string(Fq, p));
        json gaps = json::array();
        for (const auto& e : rep.gaps)
            gaps.push_back(json{{"lo", to_string(Fq, e.lo)},
                                {"hi", to_string(Fq, e.hi)},
                                {"norm_diff", e.norm_diff.get_str()}});
        json hits = json::array();
        for (const auto& h : rep.shift_hits) {
            json idx = json::array();
            for (auto i : h.indices) idx.push_back(i);
            hits.push_back(json{{"f", to_string(Fq, h.f)}, {"indices", idx}});
        }
        json result{{"g", to_string(Fq, g)},
                    {"deg_min", rep.deg_min},
                    {"deg_max", rep.deg_max},
                    {"count", rep.primes.size()},
                    {"primes", primes},
                    {"gaps", gaps},
                    {"shift_hits", hits}};
        emit(result, command, json{{"q", q}}, timer, true, "");
        return 0;
    }
    // TSV: degree, polynomial, gap-to-previous
    for (size_t i = 0; i < rep.primes.size(); ++i) {
        std::cout << rep.primes[i].deg() << "\t" << to_string(Fq, rep.primes[i]) << "\t";
        if (i == 0)
            std::cout << "-";
        else
            std::cout << rep.gaps[i - 1].norm_diff.get_str();
        std::cout << "\n";
    }
    for (const auto& h : rep.shift_hits) {
        std::cout << "# shift-hit\t" << to_string(Fq, h.f) << "\t" << h.indices.size() << "\n";
    }
    return 0;
}

int cmd_tuple_build(unsigned q, unsigned k, const std::string& g_text, std::uint64_t budget,
                    bool want_json, const std::string& command, const Timer& timer) {
    const FieldCtx& Fq = field_for(q);
    Poly g = parse_poly(Fq, g_text);
    auto tuple = sieve::build_admissible_tuple(Fq, k, g, budget);
    json elements = json::array();
    std::ostringstream human;
    for (const auto& h : tuple.elements) {
        elements.push_back(to_string(Fq, h));
        human << to_string(Fq, h) << "\n";
    }
    json result{{"k", tuple.k()},
                {"g", to_string(Fq, g)},
                {"admissible", tuple.cert.admissible},
                {"elements", elements}};
    emit(result, command, json{{"q", q}, {"k", k}}, timer, want_json, human.str());
    return 0;
}

int cmd_tuple_check(unsigned q, const std::string& path, bool want_json,
                    const std::string& command, const Timer& timer) {
    const FieldCtx& Fq = field_for(q);
    auto elements = load_tuple_file(Fq, path);
    auto cert = sieve::is_admissible(Fq, elements);
    json omitted = json::array();
    for (const auto& [p, r] : cert.omitted)
        omitted.push_back(json{{"prime", to_string(Fq, p)}, {"omitted", to_string(Fq, r)}});
    json result{{"k", elements.size()}, {"admissible", cert.admissible}, {"omitted", omitted}};
    std::ostringstream human;
    if (cert.admissible) {
        human << "admissible (k=" << elements.size() << ")\n";
    } else {
        result["witness"] = to_string(Fq, *cert.witness);
        human << "NOT admissible: residues cover every class mod "
              << to_string(Fq, *cert.witness) << "\n";
    }
    emit(result, command, json{{"q", q}}, timer, want_json, human.str());
    return cert.admissible ? 0 : 1;
}

int cmd_genus_kummer(unsigned q, const std::string& a_text, std::uint64_t r, bool want_json,
                     const std::string& command, const Timer& timer) {
    const FieldCtx& Fq = field_for(q);
    Poly a = parse_poly(Fq, a_text);
    auto g = geometry::kummer_genus(Fq, a, r);
    json result{{"a", to_string(Fq, a)}, {"r", r}, {"genus", g.genus.get_str()},
                {"exact", g.exact},       {"provenance", g.provenance}};
    emit(result, command, json{{"q", q}}, timer, want_json,
         "genus = " + g.genus.get_str() + "\n");
    return 0;
}

int cmd_genus_cyclotomic(unsigned q, const std::string& m_text, bool want_json,
                         const std::string& command, const Timer& timer) {
    const FieldCtx& Fq = field_for(q);
    Poly M = parse_poly(Fq, m_text);
    auto g = geometry::cyclotomic_genus(Fq, M);
    json result{{"M", to_string(Fq, M)},
                {"genus", g.genus.get_str()},
                {"exact", g.exact},
                {"provenance", g.provenance}};
    emit(result, command, json{{"q", q}}, timer, want_json,
         "genus = " + g.genus.get_str() + "\n");
    return 0;
}

int cmd_genus_castelnuovo(const std::string& n1, const std::string& g1, const std::string& n2,
                          const std::string& g2, bool want_json, const std::string& command,
                          const Timer& timer) {
    Int bound = geometry::castelnuovo_bound(Int(n1), Int(g1), Int(n2), Int(g2));
    json result{{"n1", n1}, {"g1", g1}, {"n2", n2}, {"g2", g2}, {"bound", bound.get_str()}};
    emit(result, command, json::object(), timer, want_json,
         "genus bound = " + bound.get_str() + "\n");
    return 0;
}

int cmd_density(unsigned q, unsigned ell, std::uint64_t r, const std::string& m_text,
                const std::string& g_text, const std::string& class_text, bool rsum_only,
                std::uint64_t budget, bool want_json, const std::string& command,
                const Timer& timer) {
    const FieldCtx& Fq = field_for(q);
    if (rsum_only) {
        auto diag = geometry::r_sum_diagnostic(Fq, ell);
        json rs = json::array();
        for (auto v : diag.rs) rs.push_back(v);
        json result{{"l", ell},
                    {"sum", rat_str(diag.sum)},
                    {"bound", rat_str(diag.bound)},
                    {"primes", rs}};
        std::ostringstream human;
        human << "sum 1/r = " << rat_str(diag.sum) << " <= " << rat_str(diag.bound) << "\n";
        emit(result, command, json{{"q", q}, {"l", ell}}, timer, want_json, human.str());
        return 0;
    }
    Poly g = parse_poly(Fq, g_text);
    Poly M = parse_poly(Fq, m_text);
    Poly cls = parse_poly(Fq, class_text);
    auto res = geometry::density_check(Fq, g, r, M, cls, ell, budget);
    json result{{"q", q},
                {"l", ell},
                {"r", r},
                {"M", to_string(Fq, M)},
                {"g", to_string(Fq, g)},
                {"observed", res.observed},
                {"predicted", rat_str(res.predicted)},
                {"predicted_float", res.predicted.get_d()},
                {"abs_error", res.abs_error},
                {"sqrt_scale", res.sqrt_scale},
                {"primes_scanned", res.primes_scanned}};
    std::ostringstream human;
    human << "observed " << res.observed << " vs predicted " << rat_str(res.predicted) << " ("
          << res.predicted.get_d() << "); |err| = " << res.abs_error
          << ", q^(l/2) = " << res.sqrt_scale << "\n";
    emit(result, command, json{{"q", q}, {"l", ell}, {"r", r}}, timer, want_json, human.str());
    return 0;
}

int cmd_example5(unsigned q, const std::string& g_text, bool want_json,
                 const std::string& command, const Timer& timer) {
    const FieldCtx& Fq = field_for(q);
    Poly g = parse_poly(Fq, g_text);
    constexpr unsigned k = 105;

    // counts of irreducibles at the degrees the construction draws from
    json counts = json::object();
    unsigned total_7_9 = 0;
    if (q == 2) {
        for (unsigned d = 7; d <= 9; ++d) {
            unsigned c = static_cast<unsigned>(
                factorizer::count_irreducibles(Fq, d).get_ui());
            counts["deg" + std::to_string(d)] = c;
            total_7_9 += c;
        }
    }
    auto tuple = sieve::build_admissible_tuple(Fq, k, g);
    int pre_min = tuple.elements.front().deg() - g.deg();
    int pre_max = tuple.elements.back().deg() - g.deg();
    int post_min = tuple.elements.front().deg();
    int post_max = tuple.elements.back().deg();
    Int max_diff = 0;
    for (size_t i = 0; i < tuple.elements.size(); ++i)
        for (size_t j = i + 1; j < tuple.elements.size(); ++j) {
            Int nd = norm(Fq, sub(Fq, tuple.elements[i], tuple.elements[j]));
            if (nd > max_diff) max_diff = nd;
        }
    Int general_bound;
    mpz_ui_pow_ui(general_bound.get_mpz_t(), q, static_cast<unsigned long>(g.deg()) + 10);

    json result{{"q", q},
                {"g", to_string(Fq, g)},
                {"k", k},
                {"irreducible_counts", counts},
                {"count_deg_7_to_9", total_7_9},
                {"pre_mult_degrees", {pre_min, pre_max}},
                {"post_mult_degrees", {post_min, post_max}},
                {"admissible", tuple.cert.admissible},
                {"max_pairwise_norm_diff", max_diff.get_str()},
                {"general_bound", general_bound.get_str()}};
    std::ostringstream human;
    if (q == 2)
        human << "irreducibles of degree 7..9: " << total_7_9 << " (18+30+56)\n";
    human << "tuple size: " << k << "\n"
          << "degrees before multiplying by g: " << pre_min << ".." << pre_max << "\n"
          << "degrees after multiplying by g: " << post_min << ".." << post_max << "\n"
          << "admissible: " << (tuple.cert.admissible ? "yes" : "no") << "\n"
          << "max pairwise norm difference: " << max_diff.get_str() << "\n"
          << "general bound q^(deg g + 10): " << general_bound.get_str() << "\n";
    emit(result, command, json{{"q", q}, {"g", g_text}}, timer, want_json, human.str());
    return 0;
}

int cmd_sieve_run(const std::string& config_path, bool want_json, const std::string& command,
                  const Timer& timer) {
    auto kv = load_config(config_path);
    auto run = run_sieve_from_config(kv, /*full_pipeline=*/false);
    const FieldCtx& Fq = field_for(static_cast<unsigned>(std::stoul(kv.at("q"))));
    json result = sieve_run_json(Fq, run);
    std::ostringstream human;
    human << "s1 = " << rat_str(run.sums.s1) << "\n"
          << "s2 = " << rat_str(run.sums.s2) << "\n"
          << "s2 (all primes) = " << rat_str(run.sums.s2_all_primes) << "\n"
          << "weights: " << run.table.entries.size() << " tuples, n scanned "
          << run.sums.n_scanned << "\n";
    json config_snapshot = json::object();
    for (const auto& [key, val] : kv) config_snapshot[key] = val;
    emit(result, command, config_snapshot, timer, want_json, human.str());
    return 0;
}

int cmd_pipeline(const std::string& config_path, const std::string& command, const Timer& timer) {
    auto kv = load_config(config_path);
    auto run = run_sieve_from_config(kv, /*full_pipeline=*/true);
    unsigned q = static_cast<unsigned>(std::stoul(kv.at("q")));
    const FieldCtx& Fq = field_for(q);
    std::uint64_t budget = budget_from_env(kDefaultBudget);
    if (kv.count("budget")) budget = std::stoull(kv.at("budget"));

    json result = sieve_run_json(Fq, run);

    unsigned gap_min = kv.count("gap_deg_min")
                           ? static_cast<unsigned>(std::stoul(kv.at("gap_deg_min")))
                           : 2;
    unsigned gap_max = kv.count("gap_deg_max")
                           ? static_cast<unsigned>(std::stoul(kv.at("gap_deg_max")))
                           : run.cfg.ell;
    unsigned m = kv.count("m") ? static_cast<unsigned>(std::stoul(kv.at("m"))) : 2;
    auto rep = primroots::gap_report(Fq, run.g, gap_min, gap_max, budget,
                                     &run.tuple.elements, m);
    json primes = json::array();
    for (const auto& p : rep.primes) primes.push_back(to_string(Fq, p));
    json gaps = json::array();
    for (const auto& e : rep.gaps) gaps.push_back(e.norm_diff.get_str());
    json hits = json::array();
    for (const auto& h : rep.shift_hits) {
        json idx = json::array();
        for (auto i : h.indices) idx.push_back(i);
        hits.push_back(json{{"f", to_string(Fq, h.f)}, {"indices", idx}});
    }
    result["gap_report"] = json{{"deg_min", rep.deg_min},
                                {"deg_max", rep.deg_max},
                                {"count", rep.primes.size()},
                                {"primes", primes},
                                {"norm_gaps", gaps},
                                {"shift_hits", hits}};

    json config_snapshot = json::object();
    for (const auto& [key, val] : kv) config_snapshot[key] = val;
    json out{{"result", result},
             {"manifest", make_manifest(command, config_snapshot, result.dump(), timer.ms())}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Timer timer;
    const std::string command = join_args(argc, argv);

    CLI::App app{"exact arithmetic, power residue symbols, and sieve experiments in F_q[t]"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    unsigned q = 2, d = 0, k = 105, ell = 11, dmin = 2, dmax = 4, m = 2;
    std::uint64_t r = 0;
    std::uint64_t budget = 0;
    bool want_json = false, rsum_only = false;
    std::string a_text, b_text = "t", g_text = "t", m_text = "1", class_text = "0";
    std::string method = "both", path, n1, g1, n2, g2;
    std::vector<std::string> poly_inputs;
    std::optional<std::string> tuple_path, int_input;

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget", budget, "enumeration cap (default: FQ_BUDGET or 2^24)");
    };

    auto* field_cmd = app.add_subcommand("field", "describe F_q");
    field_cmd->add_option("--q", q, "field size")->required();
    field_cmd->add_flag("--json", want_json);

    auto* factor_cmd = app.add_subcommand("factor", "factor polynomials (JSON lines)");
    factor_cmd->add_option("--q", q, "field size")->required();
    factor_cmd->add_option("--int", int_input, "factor an integer instead");
    factor_cmd->add_option("poly", poly_inputs, "polynomials to factor");

    auto* symbol_cmd = app.add_subcommand("symbol", "d-th power residue symbol");
    symbol_cmd->add_option("--q", q)->required();
    symbol_cmd->add_option("--d", d, "defaults to q-1");
    symbol_cmd->add_option("--a", a_text)->required();
    symbol_cmd->add_option("--b", b_text)->required();
    symbol_cmd->add_option("--method", method)
        ->check(CLI::IsMember({"exp", "reciprocity", "both"}));
    symbol_cmd->add_flag("--json", want_json);

    auto* primroot_cmd = app.add_subcommand("primroot", "primitive-root scans");
    primroot_cmd->require_subcommand(1);
    auto* scan_cmd = primroot_cmd->add_subcommand("scan", "scan a degree range (TSV)");
    scan_cmd->add_option("--q", q)->required();
    scan_cmd->add_option("--g", g_text)->required();
    scan_cmd->add_option("--deg-min", dmin)->required();
    scan_cmd->add_option("--deg-max", dmax)->required();
    scan_cmd->add_option("--tuple", tuple_path, "tuple file for shift hits");
    scan_cmd->add_option("--m", m, "minimum shifts landing in P_g");
    scan_cmd->add_flag("--json", want_json);
    add_budget(scan_cmd);

    auto* tuple_cmd = app.add_subcommand("tuple", "admissible tuples");
    tuple_cmd->require_subcommand(1);
    auto* tb = tuple_cmd->add_subcommand("build", "first-k construction");
    tb->add_option("--q", q)->required();
    tb->add_option("--k", k)->required();
    tb->add_option("--g", g_text);
    tb->add_flag("--json", want_json);
    add_budget(tb);
    auto* tc = tuple_cmd->add_subcommand("check", "admissibility certificate");
    tc->add_option("--q", q)->required();
    tc->add_option("--file", path)->required();
    tc->add_flag("--json", want_json);

    auto* sieve_cmd = app.add_subcommand("sieve", "weights and sums");
    sieve_cmd->require_subcommand(1);
    auto* sr = sieve_cmd->add_subcommand("run", "run from a config file");
    sr->add_option("--config", path)->required();
    sr->add_flag("--json", want_json);
    std::string cutoff_text;
    auto* smk = sieve_cmd->add_subcommand("mk", "detection-constant lower bound");
    smk->add_option("--k", k)->required();
    smk->add_option("--f", cutoff_text, "cutoff polynomial in x1..xk");
    smk->add_flag("--json", want_json);

    auto* genus_cmd = app.add_subcommand("genus", "genus formulas");
    genus_cmd->require_subcommand(1);
    auto* gk = genus_cmd->add_subcommand("kummer", "radical extension genus");
    gk->add_option("--q", q)->required();
    gk->add_option("--a", a_text)->required();
    gk->add_option("--r", r)->required();
    gk->add_flag("--json", want_json);
    auto* gc = genus_cmd->add_subcommand("cyclotomic", "torsion extension genus");
    gc->add_option("--q", q)->required();
    gc->add_option("--M", m_text)->required();
    gc->add_flag("--json", want_json);
    auto* gcast = genus_cmd->add_subcommand("castelnuovo", "compositum genus bound");
    gcast->add_option("--n1", n1)->required();
    gcast->add_option("--g1", g1)->required();
    gcast->add_option("--n2", n2)->required();
    gcast->add_option("--g2", g2)->required();
    gcast->add_flag("--json", want_json);

    auto* density_cmd = app.add_subcommand("density", "observed vs predicted counts");
    density_cmd->add_option("--q", q)->required();
    density_cmd->add_option("--l", ell)->required();
    density_cmd->add_option("--r", r);
    density_cmd->add_option("--M", m_text);
    density_cmd->add_option("--g", g_text);
    density_cmd->add_option("--class", class_text, "residue class mod M");
    density_cmd->add_flag("--rsum", rsum_only, "only the sum-of-1/r diagnostic");
    density_cmd->add_flag("--json", want_json);
    add_budget(density_cmd);

    auto* ex5_cmd = app.add_subcommand("example5", "the 105-tuple construction");
    ex5_cmd->add_option("--q", q);
    ex5_cmd->add_option("--g", g_text);
    ex5_cmd->add_flag("--json", want_json);

    auto* pipe_cmd = app.add_subcommand("pipeline", "config-driven experiment with manifest");
    pipe_cmd->add_option("--config", path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        std::uint64_t effective_budget = budget ? budget : budget_from_env(kDefaultBudget);
        if (field_cmd->parsed()) return cmd_field(q, want_json, command, timer);
        if (factor_cmd->parsed()) return cmd_factor(q, poly_inputs, int_input);
        if (symbol_cmd->parsed())
            return cmd_symbol(q, d, a_text, b_text, method, want_json, command, timer);
        if (scan_cmd->parsed())
            return cmd_primroot_scan(q, g_text, dmin, dmax, tuple_path, m, effective_budget,
                                     want_json, command, timer);
        if (tb->parsed())
            return cmd_tuple_build(q, k, g_text, effective_budget, want_json, command, timer);
        if (tc->parsed()) return cmd_tuple_check(q, path, want_json, command, timer);
        if (sr->parsed()) return cmd_sieve_run(path, want_json, command, timer);
        if (smk->parsed()) {
            std::optional<MPoly> cut;
            if (!cutoff_text.empty()) cut = MPoly::parse(k, cutoff_text);
            auto b = cut ? sieve::mk_lower_bound(k, &*cut) : sieve::mk_lower_bound(k);
            json result{{"k", k}, {"asymptotic", b.asymptotic}};
            std::ostringstream human;
            human << "log k - 2 log log k - 2 = " << b.asymptotic << "\n";
            if (b.ratio) {
                result["ratio"] = rat_str(*b.ratio);
                human << "sum(J)/I for the cutoff = " << rat_str(*b.ratio) << " ("
                      << b.ratio->get_d() << ")\n";
            }
            emit(result, command, json{{"k", k}}, timer, want_json, human.str());
            return 0;
        }
        if (gk->parsed()) return cmd_genus_kummer(q, a_text, r, want_json, command, timer);
        if (gc->parsed()) return cmd_genus_cyclotomic(q, m_text, want_json, command, timer);
        if (gcast->parsed())
            return cmd_genus_castelnuovo(n1, g1, n2, g2, want_json, command, timer);
        if (density_cmd->parsed())
            return cmd_density(q, ell, r, m_text, g_text, class_text, rsum_only,
                               effective_budget, want_json, command, timer);
        if (ex5_cmd->parsed()) return cmd_example5(q, g_text, want_json, command, timer);
        if (pipe_cmd->parsed()) return cmd_pipeline(path, command, timer);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const CrossCheckError& e) {
        std::cerr << "cross-check mismatch: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
