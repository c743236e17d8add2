/* Copyright (C) 2026 The qaclcd authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

// Command-line front end. Deterministic, machine-readable outputs: CSV rows
// and JSON summaries with sorted keys; identical configurations produce
// byte-identical files regardless of the worker count.
//
// Exit codes: 0 success, 1 invariant violation detected, 2 invalid input or
// a feasibility cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "qaclcd/verify.hpp"
#include "qaclcd/version.hpp"

using json = nlohmann::json;
using namespace qaclcd;

namespace {

struct CommonOpts {
    uint64_t q = 0;
    uint32_t p = 0, m = 0;
    std::string group = "5";
    std::string lambda_str;
    std::string output;
    std::string format = "csv";
    uint64_t seed = 0;
    unsigned threads = 1;
    bool sampled = false;
    uint64_t trials = 10000;
};

std::vector<uint32_t> parse_group(const std::string& text) {
    std::vector<uint32_t> factors;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (part.empty()) throw InputError("empty invariant factor in group list");
        factors.push_back(static_cast<uint32_t>(std::stoul(part)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return factors;
}

std::pair<uint32_t, uint32_t> resolve_prime_power(const CommonOpts& opts) {
    if (opts.p) {
        if (!opts.m) throw InputError("--p requires --m");
        return {opts.p, opts.m};
    }
    if (!opts.q) throw InputError("missing --q (or --p/--m)");
    auto f = factorize_u64(opts.q);
    if (opts.q < 2 || f.size() != 1) throw InputError("--q must be a prime power");
    return {static_cast<uint32_t>(f[0].first), f[0].second};
}

unsigned effective_threads(unsigned flag_value) {
    if (const char* env = std::getenv("QACLCD_THREADS")) {
        unsigned v = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
        if (v > 0) return v;
    }
    return flag_value ? flag_value : 1;
}

void emit_text(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw InputError("cannot open output file: " + output);
    out << text;
}

struct Instance {
    GroupSpec G;
    std::unique_ptr<TowerContext> tower;
    IdempotentSystem sys;
    Instance(uint32_t p, uint32_t m, std::vector<uint32_t> factors)
        : G(GroupSpec::make(std::move(factors))),
          tower(TowerContext::build(p, m, G.exponent())),
          sys(build_idempotent_system(G, *tower)) {}
};

Instance make_instance(const CommonOpts& opts) {
    auto [p, m] = resolve_prime_power(opts);
    auto factors = parse_group(opts.group);
    Instance inst(p, m, std::move(factors));
    if (inst.G.order() < 7)
        std::cerr << "notice: group order " << inst.G.order()
                  << " is below the asymptotic hypotheses (n >= 7); results are desk-scale only\n";
    return inst;
}

json config_echo(const CommonOpts& opts, const std::string& command) {
    json cfg;
    cfg["command"] = command;
    if (opts.q) cfg["q"] = opts.q;
    if (opts.p) { cfg["p"] = opts.p; cfg["m"] = opts.m; }
    cfg["group"] = opts.group;
    if (!opts.lambda_str.empty()) cfg["lambda"] = opts.lambda_str;
    cfg["seed"] = opts.seed;
    cfg["format"] = opts.format;
    if (opts.sampled) { cfg["sampled"] = true; cfg["trials"] = opts.trials; }
    return cfg;
}

uint32_t resolve_lambda(const Instance& inst, const CommonOpts& opts) {
    auto lams = admissible_lambdas(inst.tower->herm());
    if (!opts.lambda_str.empty()) {
        uint64_t v = std::stoull(opts.lambda_str);
        uint32_t lam = inst.tower->herm().field().from_uint(v);
        if (lam == 0) throw InputError("lambda must be nonzero");
        return lam;
    }
    if (lams.empty())
        throw InputError("no admissible lambda for q=" + std::to_string(inst.tower->q()) +
                         " (the code family is empty)");
    return lams.front();
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

// Shared by `enumerate` and `census`: one row per family member.
std::string rows_to_csv(const std::vector<CensusRow>& rows, uint64_t qq, uint32_t two_n) {
    std::string csv = "beta_id,min_wt,delta_num,delta_den,lcd_sufficient,lcd_exact,exact_scan\n";
    for (const auto& r : rows) {
        csv += encode_word(r.beta, qq);
        csv += ',' + std::to_string(r.min_wt);
        csv += ',' + std::to_string(r.min_wt);
        csv += ',' + std::to_string(two_n);
        csv += ',' + csv_bool(r.lcd_sufficient);
        csv += ',' + csv_bool(r.lcd_exact);
        csv += ',' + csv_bool(r.exact_scan);
        csv += '\n';
    }
    return csv;
}

int cmd_idempotents(const CommonOpts& opts) {
    Instance inst = make_instance(opts);
    json out;
    out["q"] = inst.tower->q();
    out["group"] = opts.group;
    out["n"] = inst.G.order();
    out["t"] = inst.sys.splitting_degree();
    out["r"] = inst.sys.fixed_count();
    out["s"] = inst.sys.paired_count();
    out["mu"] = inst.G.order() > 1 ? json(inst.sys.min_component_dim()) : json(nullptr);
    json comps = json::array();
    for (const auto& c : inst.sys.components()) {
        json jc;
        switch (c.kind) {
            case IdempotentSystem::Kind::Trivial: jc["type"] = "e0"; break;
            case IdempotentSystem::Kind::Fixed: jc["type"] = "fixed"; break;
            case IdempotentSystem::Kind::Paired: jc["type"] = "paired"; break;
        }
        json orbits = json::array();
        orbits.push_back(inst.sys.orbits()[c.orbit_a].members);
        if (c.kind == IdempotentSystem::Kind::Paired)
            orbits.push_back(inst.sys.orbits()[c.orbit_b].members);
        jc["orbits"] = orbits;
        jc["k"] = c.dim_f;
        comps.push_back(jc);
    }
    out["components"] = comps;
    out["tool_version"] = QACLCD_VERSION;
    out["config"] = config_echo(opts, "idempotents");
    emit_text(out.dump(2) + "\n", opts.output);
    return 0;
}

struct FamilyRun {
    uint32_t lambda;
    std::vector<AlgebraElem<HermField>> family;
    std::vector<CensusRow> rows;
};

FamilyRun run_family_rows(const Instance& inst, const CommonOpts& opts, unsigned threads) {
    FamilyRun run;
    run.lambda = resolve_lambda(inst, opts);
    auto fam = solve_family(inst.sys, run.lambda);
    if (fam.empty_family)
        throw InputError("family is empty: " + fam.note);
    run.family = materialize_family(inst.sys, fam);
    CensusOptions copts;
    copts.threads = threads;
    copts.sampled = opts.sampled;
    copts.trials = opts.trials;
    copts.seed = opts.seed;
    if (!opts.sampled) {
        uint64_t words = 1;
        for (uint32_t i = 0; i < inst.G.order(); ++i) {
            words *= inst.tower->herm().order();
            if (words > (1ull << 26))
                throw CapError("exact weight scans exceed the 2^26 cap; pass --sampled to get "
                               "labeled upper bounds");
        }
    }
    run.rows = family_census(inst.sys, run.family, copts);
    return run;
}

int cmd_enumerate(const CommonOpts& opts) {
    Instance inst = make_instance(opts);
    unsigned threads = effective_threads(opts.threads);
    auto run = run_family_rows(inst, opts, threads);
    std::string csv = rows_to_csv(run.rows, inst.tower->herm().order(), 2 * inst.G.order());
    emit_text(csv, opts.output);
    return 0;
}

int cmd_census(const CommonOpts& opts, const std::string& delta_list) {
    Instance inst = make_instance(opts);
    unsigned threads = effective_threads(opts.threads);
    auto run = run_family_rows(inst, opts, threads);
    uint32_t two_n = 2 * inst.G.order();

    std::vector<Rational> deltas;
    if (delta_list.empty()) {
        for (int num = 0; num <= 10; ++num) deltas.push_back(Rational::make(num, 10));
    } else {
        size_t pos = 0;
        while (pos <= delta_list.size()) {
            size_t comma = delta_list.find(',', pos);
            deltas.push_back(Rational::parse(delta_list.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }

    auto formula = family_size_formula(inst.sys, run.lambda);
    json summary;
    summary["q"] = inst.tower->q();
    summary["group"] = opts.group;
    summary["lambda"] = opts.lambda_str.empty() ? std::to_string(run.lambda) : opts.lambda_str;
    summary["count_formula"] = formula.total.str();
    uint64_t words = 1;
    bool oracle_feasible = true;
    for (uint32_t i = 0; i < inst.G.order() && oracle_feasible; ++i) {
        words *= inst.tower->herm().order();
        if (words > (1ull << 26)) oracle_feasible = false;
    }
    if (oracle_feasible) {
        uint64_t oracle = family_size_bruteforce(inst.G, inst.tower->herm(), run.lambda, threads);
        summary["count_oracle"] = oracle;
        if (BigUint(oracle) != formula.total) {
            std::cerr << "invariant violation: formula count " << formula.total.str()
                      << " != oracle count " << oracle << "\n";
            return 1;
        }
    } else {
        summary["count_oracle"] = nullptr;
    }
    json census = json::array();
    for (const auto& d : deltas) {
        json row;
        row["delta"] = d.str();
        row["size"] = census_count_le(run.rows, d, two_n);
        census.push_back(row);
    }
    summary["census"] = census;
    summary["rows"] = run.rows.size();
    summary["tool_version"] = QACLCD_VERSION;
    summary["config"] = config_echo(opts, "census");

    std::string csv = rows_to_csv(run.rows, inst.tower->herm().order(), two_n);
    if (!opts.output.empty()) {
        emit_text(csv, opts.output);
        std::cout << summary.dump(2) << "\n";
    } else if (opts.format == "json") {
        std::cout << summary.dump(2) << "\n";
    } else {
        std::cout << csv;
    }
    return 0;
}

int cmd_mindist(const CommonOpts& opts, const std::string& beta_id) {
    Instance inst = make_instance(opts);
    unsigned threads = effective_threads(opts.threads);
    const HermField& H = inst.tower->herm();
    AlgebraElem<HermField> beta(&inst.G, &H);
    beta.c = decode_word(beta_id, H.order(), inst.G.order());
    auto one = AlgebraElem<HermField>::one(&inst.G, &H);
    auto code = code_from_pair(one, beta);

    json out;
    out["beta_id"] = beta_id;
    out["n"] = inst.G.order();
    out["q"] = inst.tower->q();
    out["rank"] = code.rank;
    if (opts.sampled) {
        out["min_wt"] = min_weight_sampled(code, opts.trials, opts.seed);
        out["upper_bound"] = true;
    } else {
        out["min_wt"] = min_weight_exact(code, threads);
        out["upper_bound"] = false;
    }
    out["delta"] = std::to_string(out["min_wt"].get<uint64_t>()) + "/" +
                   std::to_string(2 * inst.G.order());
    out["lcd_sufficient"] = constant_unit_product(one, beta).has_value();
    out["lcd_exact"] = exact_lcd_check(code);
    out["tool_version"] = QACLCD_VERSION;
    out["config"] = config_echo(opts, "mindist");
    emit_text(out.dump(2) + "\n", opts.output);
    return 0;
}

int cmd_bounds(const CommonOpts& opts, const std::string& delta_str, bool with_census) {
    Instance inst = make_instance(opts);
    unsigned threads = effective_threads(opts.threads);
    Rational delta = Rational::parse(delta_str.empty() ? "1/10" : delta_str);
    uint32_t n = inst.G.order();
    BoundInputs in{inst.tower->q(), n, inst.sys.min_component_dim()};

    json out;
    out["q"] = in.q;
    out["group"] = opts.group;
    out["n"] = n;
    out["mu"] = in.mu;
    out["delta"] = delta.str();

    auto lams = admissible_lambdas(inst.tower->herm());
    std::optional<uint32_t> lambda;
    if (!opts.lambda_str.empty() || !lams.empty()) lambda = resolve_lambda(inst, opts);
    if (lambda) {
        auto formula = family_size_formula(inst.sys, *lambda);
        auto lower = family_lower_bound_check(in, &formula.total);
        json jl;
        jl["lambda"] = std::to_string(*lambda);
        jl["count_formula"] = formula.total.str();
        jl["hypothesis_ok"] = lower.hypothesis_ok;
        jl["bound"] = lower.bound.str();
        jl["holds"] = lower.holds;
        out["lower_bound"] = jl;
    } else {
        out["lower_bound"] = nullptr;
    }

    auto upper = low_weight_family_bound(in, delta.to_long_double());
    json ju;
    ju["applicable"] = upper.applicable;
    ju["margin_approx"] = static_cast<double>(upper.margin);
    ju["exponent_approx"] = static_cast<double>(upper.exponent);
    out["upper_bound_le_delta"] = ju;
    out["ratio_bound_log_q_approx"] =
        static_cast<double>(family_ratio_bound_log_q(in, delta.to_long_double()));
    auto dmax = max_admissible_delta(in);
    out["max_good_delta"] = dmax ? json(dmax->str()) : json(nullptr);

    if (with_census && lambda) {
        auto fam = solve_family(inst.sys, *lambda);
        auto family = materialize_family(inst.sys, fam);
        CensusOptions copts;
        copts.threads = threads;
        auto rows = family_census(inst.sys, family, copts);
        uint64_t cnt = census_count_le(rows, delta, 2 * n);
        json jc;
        jc["census_le_delta"] = cnt;
        jc["family_size"] = rows.size();
        out["exact"] = jc;
    }
    out["tool_version"] = QACLCD_VERSION;
    out["config"] = config_echo(opts, "bounds");
    emit_text(out.dump(2) + "\n", opts.output);
    return 0;
}

int cmd_scan_lengths(const CommonOpts& opts, uint32_t max_n) {
    auto [p, m] = resolve_prime_power(opts);
    uint64_t q = pow_u64_sat(p, m);
    unsigned threads = effective_threads(opts.threads);
    auto rows = scan_lengths(q, max_n, threads);
    std::string csv = "n,mu,ratio_approx\n";
    for (const auto& r : rows) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.9Lg", r.ratio);
        csv += std::to_string(r.n) + ',' + std::to_string(r.mu) + ',' + buf + '\n';
    }
    emit_text(csv, opts.output);
    return 0;
}

int cmd_lift(const CommonOpts& opts, const std::string& ring_descr, const std::string& beta_id,
             const std::string& mode_str) {
    auto factors = parse_group(opts.group);
    GroupSpec G = GroupSpec::make(std::move(factors));
    if (G.order() < 7)
        std::cerr << "notice: group order " << G.order()
                  << " is below the asymptotic hypotheses (n >= 7); results are desk-scale only\n";
    auto S = ChainRing::build(ChainRingSpec::parse(ring_descr));
    unsigned threads = effective_threads(opts.threads);
    LiftMode mode = LiftMode::Naive;
    if (mode_str == "teichmuller") mode = LiftMode::Teichmuller;
    else if (mode_str != "naive") throw InputError("mode must be naive or teichmuller");

    const HermField& H = S->residue_view();
    AlgebraElem<HermField> beta(&G, &H);
    beta.c = decode_word(beta_id, H.order(), G.order());

    auto rep = lift_code(*S, beta, mode, threads, opts.trials, opts.seed);
    json out;
    out["ring"] = ring_descr;
    out["group"] = opts.group;
    out["mode"] = mode_str;
    out["beta_id"] = beta_id;
    json d = json::array();
    for (const auto& tuple : rep.d) d.push_back(tuple);
    out["d_coords"] = d;
    out["length"] = rep.length;
    json res;
    res["dim"] = rep.residue_dim;
    res["min_wt"] = rep.residue_min_wt;
    res["exact"] = rep.residue_exact;
    out["residue_params"] = res;
    json ch;
    ch["rank"] = rep.chain_rank;
    ch["min_wt"] = rep.chain_min_wt;
    ch["exact"] = rep.chain_exact;
    out["chain_params"] = ch;
    out["residue_identity"] = rep.residue_identity;
    out["lcd_residue"] = rep.lcd_residue;
    out["lcd_unit_criterion"] = rep.lcd_unit_criterion;
    out["lcd_direct"] = rep.lcd_direct ? json(*rep.lcd_direct) : json(nullptr);
    out["tool_version"] = QACLCD_VERSION;
    json cfg = config_echo(opts, "lift");
    cfg["ring"] = ring_descr;
    cfg["mode"] = mode_str;
    out["config"] = cfg;
    emit_text(out.dump(2) + "\n", opts.output);
    return 0;
}

int cmd_verify(const CommonOpts& opts, const std::string& suite, bool heavy, bool group_given,
               bool ring_given, const std::string& ring_descr) {
    VerifyOptions vopts;
    vopts.seed = opts.seed;
    vopts.threads = effective_threads(opts.threads);
    vopts.trials = opts.trials;
    vopts.heavy = heavy;
    if (opts.q) vopts.q = opts.q;
    if (opts.p) vopts.q = pow_u64_sat(opts.p, opts.m);
    if (group_given) vopts.group = parse_group(opts.group);
    if (ring_given) vopts.ring = ring_descr;
    if (!opts.lambda_str.empty()) vopts.lambda = static_cast<uint32_t>(std::stoul(opts.lambda_str));
    VerifyReport rep = run_verify_suite(suite, vopts);
    std::string text;
    for (const auto& l : rep.lines) text += l + "\n";
    text += "suite " + suite + ": " + std::to_string(rep.checks - rep.failures) + "/" +
            std::to_string(rep.checks) + " checks passed\n";
    emit_text(text, opts.output);
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("qaclcd ") + QACLCD_VERSION +
                 " - Hermitian LCD 2-quasi-abelian code workbench over F_{q^2} and finite chain "
                 "rings"};
    app.require_subcommand(1);
    app.set_version_flag("--version", QACLCD_VERSION);

    CommonOpts opts;
    std::string delta_list, beta_id, ring_descr = "uA:q=2,s=2", mode_str = "naive";
    std::string suite = "field";
    uint32_t max_n = 100;
    bool with_census = false, heavy = false;

    auto add_common = [&](CLI::App* cmd, bool with_field = true) {
        if (with_field) {
            cmd->add_option("--q", opts.q, "field size q (prime power); the scalars are F_{q^2}");
            cmd->add_option("--p", opts.p, "characteristic (with --m)");
            cmd->add_option("--m", opts.m, "extension degree over the prime field (with --p)");
        }
        cmd->add_option("--group", opts.group,
                        "invariant factors n_1,n_2,... with n_1 | n_2 | ...; odd total order");
        cmd->add_option("--seed", opts.seed, "seed for all sampled modes (default 0)");
        cmd->add_option("--threads", opts.threads,
                        "worker count; the env var QACLCD_THREADS overrides this flag");
        cmd->add_option("--output", opts.output, "write the primary artifact to this file");
        cmd->add_option("--format", opts.format, "csv or json where both exist (default csv)");
    };

    auto* c_idem = app.add_subcommand("idempotents",
                                      "decompose F_{q^2}G into primitive idempotent components");
    add_common(c_idem);

    auto* c_enum = app.add_subcommand(
        "enumerate",
        "enumerate the Hermitian LCD family and emit one CSV row per code; schema (frozen for "
        "1.x): beta_id,min_wt,delta_num,delta_den,lcd_sufficient,lcd_exact,exact_scan, where "
        "beta_id is one digit per coefficient in base q^2 (0-9a-zA-Z), most-significant group "
        "index first, and delta_num/delta_den is the exact rational min_wt/(2n)");
    add_common(c_enum);
    c_enum->add_option("--lambda", opts.lambda_str,
                       "field element label; defaults to the smallest admissible value");
    c_enum->add_flag("--sampled", opts.sampled,
                     "use seeded sampled weight bounds instead of exact scans");
    c_enum->add_option("--trials", opts.trials, "sampled-mode trial count (default 10000)");

    auto* c_census = app.add_subcommand(
        "census",
        "family CSV rows (same frozen schema as enumerate) plus a JSON summary "
        "{q, group, lambda, count_formula, count_oracle, census:[{delta,size}], rows, "
        "tool_version, config} with sorted keys; rationals serialize as num/den strings");
    add_common(c_census);
    c_census->add_option("--lambda", opts.lambda_str, "field element label");
    c_census->add_option("--delta", delta_list,
                         "comma list of rationals num/den (default 0,1/10,...,1)");
    c_census->add_flag("--sampled", opts.sampled, "sampled weight bounds");
    c_census->add_option("--trials", opts.trials, "sampled-mode trial count");

    auto* c_mind = app.add_subcommand("mindist", "minimum weight of one family code C(1, beta)");
    add_common(c_mind);
    c_mind->add_option("--beta", beta_id, "beta word, most-significant group index first")
        ->required();
    c_mind->add_flag("--sampled", opts.sampled, "sampled upper bound instead of the exact scan");
    c_mind->add_option("--trials", opts.trials, "sampled-mode trial count");

    auto* c_bounds = app.add_subcommand("bounds", "counting-bound report at one delta");
    add_common(c_bounds);
    c_bounds->add_option("--lambda", opts.lambda_str, "field element label");
    c_bounds->add_option("--delta", delta_list, "rational num/den (default 1/10)");
    c_bounds->add_flag("--with-census", with_census,
                       "also run the exact census at this delta (feasible instances only)");

    auto* c_scan = app.add_subcommand("scan-lengths",
                                      "tabulate cyclic lengths by the dimension-floor ratio");
    add_common(c_scan);
    c_scan->add_option("--max-n", max_n, "largest length to scan (default 100)");

    auto* c_lift = app.add_subcommand("lift", "lift a residue-field code to a chain ring");
    add_common(c_lift, false);
    c_lift->add_option("--ring", ring_descr, "ring descriptor: uA:q=..,s=.. or gr:p=..,s=..,m=..")
        ->required();
    c_lift->add_option("--beta", beta_id, "residue generator word")->required();
    c_lift->add_option("--mode", mode_str, "naive or teichmuller (default naive)");
    c_lift->add_option("--trials", opts.trials, "sampled-mode trial count");

    auto* c_verify = app.add_subcommand("verify", "run an invariant suite; exit 1 on any failure");
    add_common(c_verify);
    c_verify->add_option("--suite", suite, "field | counting | chain | bounds")->required();
    c_verify->add_option("--lambda", opts.lambda_str, "field element label");
    c_verify->add_option("--ring", ring_descr, "ring descriptor for the chain suite");
    c_verify->add_option("--trials", opts.trials, "trial count for seeded batteries (default 50)");
    c_verify->add_flag("--heavy", heavy, "include the slow diagnostics");

    // verify uses a lighter default trial budget
    opts.trials = 10000;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (opts.format != "csv" && opts.format != "json")
            throw InputError("--format must be csv or json");
        if (*c_idem) return cmd_idempotents(opts);
        if (*c_enum) return cmd_enumerate(opts);
        if (*c_census) return cmd_census(opts, delta_list);
        if (*c_mind) return cmd_mindist(opts, beta_id);
        if (*c_bounds) return cmd_bounds(opts, delta_list, with_census);
        if (*c_scan) return cmd_scan_lengths(opts, max_n);
        if (*c_lift) return cmd_lift(opts, ring_descr, beta_id, mode_str);
        if (*c_verify) {
            if (!c_verify->count("--trials")) opts.trials = 50;
            return cmd_verify(opts, suite, heavy, c_verify->count("--group") > 0,
                              c_verify->count("--ring") > 0, ring_descr);
        }
    } catch (const InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
