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

// Acceptance suite: twelve end-to-end criteria, one pass/fail line each.
// Criterion 12 shells out to the CLI binary given as argv[1].

#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>
#include <unistd.h>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qaclcd/verify.hpp"
#include "qaclcd/version.hpp"

using namespace qaclcd;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << what
              << std::endl;
    if (!pass) ++g_failures;
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

std::string cli;
const unsigned kThreads = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args, const std::string& stdout_file) {
    std::string cmd = cli + " " + args + " > " + stdout_file + " 2>/dev/null";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

// --- criterion 1: exact counting against the brute-force oracle -----------
void criterion_1() {
    bool ok = true;
    std::ostringstream detail;
    struct Case { uint32_t n; double limit; uint64_t expect; };
    for (auto c : {Case{5, 5.0, 320}, Case{7, 60.0, 3136}}) {
        Instance I(3, 1, {c.n});
        Stopwatch sw;
        auto formula = family_size_formula(I.sys, 2);
        uint64_t oracle = family_size_bruteforce(I.G, I.tower->herm(), 2, kThreads);
        double secs = sw.seconds();
        bool this_ok = formula.total == BigUint(oracle) && oracle == c.expect && secs < c.limit;
        detail << " n=" << c.n << ": formula " << formula.total.str() << ", oracle " << oracle
               << ", " << secs << "s;";
        ok = ok && this_ok;
    }
    report(1, ok, "count formula = brute-force oracle at (q=3, Z5/Z7, lambda=2);" + detail.str());
}

// --- criterion 2: every family code is full-rank Hermitian LCD ------------
void criterion_2() {
    bool ok = true;
    std::ostringstream detail;
    for (uint32_t n : {5u, 7u}) {
        Instance I(3, 1, {n});
        auto fam = solve_family(I.sys, 2);
        auto family = materialize_family(I.sys, fam);
        auto one = AlgebraElem<HermField>::one(&I.G, &I.tower->herm());
        size_t rank_fail = 0, lcd_fail = 0;
        for (const auto& beta : family) {
            auto code = code_from_pair(one, beta);
            if (code.rank != n) ++rank_fail;
            if (!exact_lcd_check(code)) ++lcd_fail;
        }
        detail << " n=" << n << ": " << family.size() << " codes, " << rank_fail
               << " rank failures, " << lcd_fail << " LCD failures;";
        ok = ok && rank_fail == 0 && lcd_fail == 0;
    }
    report(2, ok, "all enumerated codes have rank n and pass the exact LCD check;" + detail.str());
}

// --- criterion 3: component solution-set sizes ----------------------------
void criterion_3() {
    bool ok = true;
    std::ostringstream detail;
    for (uint32_t n : {5u, 7u}) {
        Instance I(3, 1, {n});
        for (size_t ci = 0; ci < I.sys.components().size(); ++ci) {
            auto set = solve_component_norm(I.sys, ci, 2);
            const auto& comp = I.sys.components()[ci];
            uint64_t expect = 0;
            switch (comp.kind) {
                case IdempotentSystem::Kind::Trivial: expect = 4; break;
                case IdempotentSystem::Kind::Fixed: expect = pow_u64_sat(3, comp.dim_f) + 1; break;
                case IdempotentSystem::Kind::Paired: expect = pow_u64_sat(3, comp.dim_f) - 1; break;
            }
            if (set.solutions.size() != expect) ok = false;
            detail << " n=" << n << " comp" << ci << ": " << set.solutions.size() << "/" << expect
                   << ";";
        }
    }
    report(3, ok, "materialized solution sets have sizes q+1, q^k+1, q^k-1;" + detail.str());
}

// --- criterion 4: fixed-subspace dimensions -------------------------------
void criterion_4() {
    bool ok = true;
    std::ostringstream detail;
    struct Case { uint32_t p, n; };
    for (auto c : {Case{3, 5}, Case{3, 7}, Case{2, 5}}) {
        Instance I(c.p, 1, {c.n});
        uint64_t total = 0;
        for (size_t i = 0; i < I.sys.components().size(); ++i) {
            uint32_t d = I.sys.fixed_subspace_dim(i);
            const auto& comp = I.sys.components()[i];
            uint32_t expect = comp.kind == IdempotentSystem::Kind::Trivial ? 1 : comp.dim_f;
            if (d != expect) ok = false;
            total += d;
        }
        if (total != c.n) ok = false;
        detail << " (q=" << c.p << ",n=" << c.n << "): sum " << total << ";";
    }
    report(4, ok, "fixed-subspace dims are 1 / k_i / 2k and sum to n;" + detail.str());
}

// --- criterion 5: full exact census at (q=3, n=5, lambda=2) --------------
void criterion_5() {
    Instance I(3, 1, {5});
    Stopwatch sw;
    auto fam = solve_family(I.sys, 2);
    auto family = materialize_family(I.sys, fam);
    CensusOptions opts;
    opts.threads = kThreads;
    auto rows = family_census(I.sys, family, opts);
    double secs = sw.seconds();

    bool ok = rows.size() == 320 && secs < 60.0;
    for (const auto& r : rows) ok = ok && r.exact_scan && r.min_wt > 0 && r.min_wt <= 10;
    uint64_t at0 = census_count_le(rows, Rational::make(0, 1), 10);
    uint64_t at1 = census_count_le(rows, Rational::make(1, 1), 10);
    ok = ok && at0 == 0 && at1 == 320;
    uint64_t prev = 0;
    for (int num = 0; num <= 10; ++num) {
        uint64_t cur = census_count_le(rows, Rational::make(num, 10), 10);
        ok = ok && cur >= prev;
        prev = cur;
    }
    std::ostringstream detail;
    detail << "320 exact rows in " << secs << "s, census(0)=" << at0 << ", census(1)=" << at1;
    report(5, ok, "exact census completes with exact rational deltas; " + detail.str());
}

// --- criterion 6: family lower bound ---------------------------------------
void criterion_6() {
    bool ok = true;
    std::ostringstream detail;
    for (uint32_t n : {5u, 7u, 11u}) {
        Instance I(3, 1, {n});
        auto formula = family_size_formula(I.sys, 2);
        BoundInputs in{3, n, I.sys.min_component_dim()};
        auto lower = family_lower_bound_check(in, &formula.total);
        ok = ok && lower.hypothesis_ok && lower.holds;
        detail << " n=" << n << ": " << lower.bound.str() << " <= " << formula.total.str() << ";";
    }
    report(6, ok, "q^{n-2} <= exact count on all three instances;" + detail.str());
}

// --- criterion 7: membership-count bound -----------------------------------
void criterion_7() {
    Instance I(3, 1, {5});
    auto fam = solve_family(I.sys, 2);
    auto family = materialize_family(I.sys, fam);
    Rng rng(0);
    bool ok = true;
    for (int k = 0; k < 50; ++k) {
        AlgebraElem<HermField> a(&I.G, &I.tower->herm());
        for (auto& x : a.c) x = static_cast<uint32_t>(rng.below(9));
        const auto& beta0 = family[rng.below(family.size())];
        auto b = convolve(a, beta0);
        auto cc = count_codes_containing(I.sys, family, a, b);
        uint64_t ell = component_support(I.sys, a).ell;
        ok = ok && BigUint(cc.count) <= BigUint::power(3, 5 + 3 - ell);
    }
    report(7, ok, "membership counts stay below q^{n+3-l} on 50 seeded pairs");
}

// --- criterion 8: idempotent lifting over three rings ----------------------
void criterion_8() {
    Stopwatch sw;
    bool ok = true;
    std::ostringstream detail;
    Rng rng(0);
    for (const char* descr : {"uA:q=3,s=2", "uA:q=3,s=3", "gr:p=3,s=2,m=1"}) {
        GroupSpec G = GroupSpec::make({5});
        auto S = ChainRing::build(ChainRingSpec::parse(descr));
        auto tower = TowerContext::build(S->spec().p, S->spec().m, G.exponent());
        auto sys = build_idempotent_system(G, *tower);
        try {
            // orthogonality, completeness, idempotency, residues checked inside
            auto lifts = lift_idempotent_system(*S, sys);
            uint32_t theta = S->uniformizer();
            for (size_t i = 0; i < lifts.size() && ok; ++i) {
                const auto& f = sys.components()[i].merged;
                for (int t = 0; t < 2; ++t) {
                    auto start = lift_elem(*S, f);
                    for (auto& x : start.c)
                        x = S->add(x, S->mul(theta, static_cast<uint32_t>(rng.below(S->size()))));
                    if (lift_idempotent(f, start) != lifts[i]) ok = false;
                }
            }
            detail << " " << descr << ": " << lifts.size() << " lifts ok;";
        } catch (const std::exception& e) {
            ok = false;
            detail << " " << descr << ": " << e.what() << ";";
        }
    }
    double secs = sw.seconds();
    ok = ok && secs < 5.0;
    report(8, ok, "idempotent lifting exact and start-independent (" + std::to_string(secs) +
                      "s);" + detail.str());
}

// --- criterion 9: residue LCD equals direct LCD on 200 seeded generators ---
void criterion_9() {
    Stopwatch sw;
    GroupSpec G = GroupSpec::make({5});
    auto S = ChainRing::build(ChainRingSpec::parse("uA:q=2,s=2"));
    Rng rng(0);
    size_t disagreements = 0, scans = 0;
    for (int t = 0; t < 200; ++t) {
        ChainElemVec d(&G, S.get());
        for (auto& x : d.c) x = static_cast<uint32_t>(rng.below(S->size()));
        auto eq = lcd_residue_equivalence(d, kThreads);
        if (!eq.lcd_direct.has_value()) continue;
        ++scans;
        if (!eq.agree) ++disagreements;
    }
    double secs = sw.seconds();
    bool ok = scans == 200 && disagreements == 0 && secs < 600.0;
    std::ostringstream detail;
    detail << scans << " exhaustive scans, " << disagreements << " disagreements, " << secs << "s";
    report(9, ok, "residue LCD = direct LCD on 200 seeded generators; " + detail.str());
}

// --- criterion 10: lifted codes preserve rank, residue, and distance -------
void criterion_10() {
    GroupSpec G = GroupSpec::make({5});
    auto S = ChainRing::build(ChainRingSpec::parse("uA:q=2,s=2"));
    const HermField& H = S->residue_view();
    auto tower = TowerContext::build(2, 1, 5);
    Rng rng(0);
    bool ok = true;
    int done = 0;
    size_t unit_pass = 0;
    while (done < 20) {
        AlgebraElem<HermField> beta(&G, &H);
        for (auto& x : beta.c) x = static_cast<uint32_t>(rng.below(H.order()));
        if (!is_unit(add(AlgebraElem<HermField>::one(&G, &H), convolve(beta, adjoint(beta)))))
            continue;
        ++done;
        auto rep = lift_code(*S, beta, LiftMode::Naive, kThreads);
        if (!(rep.chain_rank == 5 && rep.residue_identity && rep.residue_exact && rep.chain_exact &&
              rep.chain_min_wt == rep.residue_min_wt && rep.lcd_unit_criterion))
            ok = false;
        if (rep.lcd_direct && *rep.lcd_direct) ++unit_pass;
    }
    ok = ok && unit_pass == 20;
    report(10, ok, "20 unit-criterion codes lift with rank 5, residue identity, equal exact "
                   "minimum weights, and direct LCD");
}

// --- criterion 11: entropy, bound applicability, product-report violations -
void criterion_11() {
    bool ok = true;
    for (uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
        if (std::fabs(q_entropy(q, 0.0L)) >= 1e-12L) ok = false;
        if (std::fabs(q_entropy(q, 1.0L - 1.0L / q) - 1.0L) >= 1e-12L) ok = false;
    }
    Instance I5(3, 1, {5}), I7(3, 1, {7}), I11(3, 1, {11});
    BoundInputs b5{3, 5, I5.sys.min_component_dim()};
    BoundInputs b7{3, 7, I7.sys.min_component_dim()};
    BoundInputs b11{3, 11, I11.sys.min_component_dim()};
    for (int i = 0; i <= 6; ++i) {
        if (low_weight_family_bound(b5, i / 10.0L).applicable) ok = false;
        if (low_weight_family_bound(b7, i / 10.0L).applicable) ok = false;
    }
    if (!low_weight_family_bound(b11, 0.01L).applicable) ok = false;

    auto r22 = product_bounds_report(2, {2, 2});
    if (!(r22.lhs_minus == BigUint(9) && r22.rhs_minus == BigUint(14) && !r22.holds_minus))
        ok = false;
    auto r33 = product_bounds_report(3, {3, 3});
    if (!(r33.lhs_minus == BigUint(676) && r33.rhs_minus == BigUint(727) && !r33.holds_minus))
        ok = false;
    if (!(r33.lhs_plus == BigUint(784) && r33.rhs_plus == BigUint(731) && !r33.holds_plus))
        ok = false;
    report(11, ok, "entropy endpoints exact to 1e-12, bound applicability as recorded, product "
                   "violations (9<14, 676<727, 784>731) reproduced");
}

// --- criterion 12: byte-identical CLI outputs across seeds/threads ---------
void criterion_12() {
    if (cli.empty()) {
        report(12, false, "CLI path missing (pass it as argv[1])");
        return;
    }
    fs::path dir = fs::temp_directory_path() / "qaclcd_acceptance";
    fs::create_directories(dir);
    auto f = [&](const std::string& name) { return (dir / name).string(); };

    struct Cmd { std::string name, args; bool with_file; };
    std::vector<Cmd> cmds = {
        {"census", "census --q 3 --group 5 --lambda 2 --delta 0,1/10,1/2,1 --seed 0", true},
        {"enumerate", "enumerate --q 3 --group 5 --lambda 2 --seed 0", true},
        {"idempotents", "idempotents --q 3 --group 7", false},
        {"mindist", "mindist --q 3 --group 5 --beta 20001 --sampled --trials 2000 --seed 5", false},
        {"bounds", "bounds --q 3 --group 11 --delta 1/20", false},
        {"scan-lengths", "scan-lengths --q 3 --max-n 60", false},
        {"lift", "lift --ring uA:q=2,s=2 --group 5 --beta 10203 --seed 0", false},
        {"verify", "verify --suite bounds --trials 20 --seed 0", false},
    };
    bool ok = true;
    std::ostringstream detail;
    for (const auto& c : cmds) {
        std::string out1 = f(c.name + "_1.out"), out2 = f(c.name + "_2.out");
        std::string file1 = f(c.name + "_1.dat"), file2 = f(c.name + "_2.dat");
        std::string extra1 = c.with_file ? " --output " + file1 : "";
        std::string extra2 = c.with_file ? " --output " + file2 : "";
        int rc1 = run_cli(c.args + " --threads 1" + extra1, out1);
        int rc2 = run_cli(c.args + " --threads 2" + extra2, out2);
        bool same = rc1 == rc2 && slurp(out1) == slurp(out2) &&
                    (!c.with_file || slurp(file1) == slurp(file2));
        if (!same) {
            ok = false;
            detail << " " << c.name << " differs;";
        }
    }
    std::error_code ec;
    fs::remove_all(dir, ec);
    report(12, ok, "CLI outputs byte-identical across thread counts" +
                       (detail.str().empty() ? "" : ";" + detail.str()));
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) cli = argv[1];
    std::cout << "qaclcd acceptance suite (" << QACLCD_VERSION << ")\n";
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(g_failures))
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
