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

// Invariant batteries behind `verify --suite {field, counting, chain,
// bounds}`. Every check prints one deterministic line; any failure flips the
// process exit code to 1.

#pragma once

#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "asymptotics.hpp"
#include "lcd_chain.hpp"

namespace qaclcd {

struct VerifyOptions {
    uint64_t seed = 0;
    unsigned threads = 1;
    uint64_t trials = 50;
    bool heavy = false;
    std::optional<uint64_t> q;
    std::optional<std::vector<uint32_t>> group;
    std::optional<uint32_t> lambda;
    std::optional<std::string> ring;
};

struct VerifyReport {
    std::vector<std::string> lines;
    size_t checks = 0, failures = 0;

    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok) ++failures;
        lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
    void info(const std::string& what) { lines.push_back("info " + what); }
    bool ok() const { return failures == 0; }
};

namespace detail {

inline std::pair<uint32_t, uint32_t> split_prime_power(uint64_t q) {
    auto f = factorize_u64(q);
    if (q < 2 || f.size() != 1) throw InputError("q must be a prime power");
    return {static_cast<uint32_t>(f[0].first), f[0].second};
}

struct FieldInstance {
    GroupSpec G;
    std::unique_ptr<TowerContext> tower;
    IdempotentSystem sys;
    FieldInstance(uint64_t q, std::vector<uint32_t> factors)
        : G(GroupSpec::make(std::move(factors))),
          tower([&] {
              auto [p, m] = split_prime_power(q);
              return TowerContext::build(p, m, G.exponent());
          }()),
          sys(build_idempotent_system(G, *tower)) {}
};

inline std::string fmt_ld(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6Lg", v);
    return buf;
}

}  // namespace detail

// Number of distinct direct sums of nontrivial merged components of each
// dimension ell with mu <= ell < n, checked against n^{ell/mu}.
inline VerifyReport check_component_subset_counts(const IdempotentSystem& sys) {
    VerifyReport rep;
    uint32_t n = sys.group().order();
    uint32_t mu = sys.min_component_dim();
    std::vector<uint32_t> dims;
    for (const auto& c : sys.components())
        if (c.kind != IdempotentSystem::Kind::Trivial) dims.push_back(c.dim_f);
    std::map<uint32_t, uint64_t> count_by_dim;
    size_t subsets = 1ull << dims.size();
    for (size_t mask = 1; mask < subsets; ++mask) {
        uint32_t total = 0;
        for (size_t i = 0; i < dims.size(); ++i)
            if (mask & (1ull << i)) total += dims[i];
        ++count_by_dim[total];
    }
    for (auto [ell, count] : count_by_dim) {
        if (ell < mu || ell >= n) continue;
        long double bound = std::pow(static_cast<long double>(n),
                                     static_cast<long double>(ell) / mu);
        rep.check(static_cast<long double>(count) < bound,
                  "|Omega_" + std::to_string(ell) + "| = " + std::to_string(count) + " < n^{l/mu} = " +
                      detail::fmt_ld(bound) + " (n=" + std::to_string(n) + ")");
    }
    return rep;
}

// Enumerated Hamming-ball bound inside I x I for each merged component ideal
// that fits the cap: pairs of weight at most 2n*delta never exceed
// q^{h_q(delta) * 2 * dim_F(I x I)}.
inline VerifyReport check_component_ball_bounds(const IdempotentSystem& sys,
                                                uint64_t cap = 1ull << 22) {
    VerifyReport rep;
    const HermField& H = sys.herm();
    const GroupSpec& G = sys.group();
    uint32_t n = G.order();
    uint64_t q = sys.tower().q();
    for (size_t ci = 0; ci < sys.components().size(); ++ci) {
        const auto& comp = sys.components()[ci];
        uint32_t dim = comp.dim_f;
        uint64_t ideal_size = 1;
        bool feasible = true;
        for (uint32_t i = 0; i < 2 * dim && feasible; ++i) {
            ideal_size *= H.order();
            if (ideal_size > cap) feasible = false;
        }
        if (!feasible) {
            rep.info("component " + std::to_string(ci) + ": |I x I| above cap, skipped");
            continue;
        }
        // weight histogram of the ideal
        auto basis = sys.component_basis(ci);
        std::vector<uint64_t> hist(n + 1, 0);
        uint64_t elems = 1;
        for (uint32_t i = 0; i < dim; ++i) elems *= H.order();
        std::vector<uint32_t> digits(dim, 0);
        AlgebraElem<HermField> x(&G, &H);
        ++hist[0];
        for (uint64_t it = 1; it < elems; ++it) {
            uint32_t pos = 0;
            while (true) {
                uint32_t old = digits[pos];
                uint32_t nw = old + 1 == H.order() ? 0 : old + 1;
                digits[pos] = nw;
                uint32_t delta = H.sub(nw, old);
                for (uint32_t j = 0; j < n; ++j) x.c[j] = H.add(x.c[j], H.mul(delta, basis[pos].c[j]));
                if (nw != 0) break;
                ++pos;
            }
            ++hist[weight(x)];
        }
        for (int tenth = 1; tenth <= 6; ++tenth) {
            long double delta = tenth / 10.0L;
            if (delta > 1.0L - 1.0L / q) break;
            uint64_t wmax = static_cast<uint64_t>(std::floor(2.0L * n * delta));
            uint64_t pairs = 0;
            for (uint64_t w1 = 0; w1 <= std::min<uint64_t>(wmax, n); ++w1)
                for (uint64_t w2 = 0; w1 + w2 <= wmax && w2 <= n; ++w2)
                    pairs += hist[w1] * hist[w2];
            long double exponent = q_entropy(q, delta) * 2.0L * (2.0L * dim);
            long double bound = std::pow(static_cast<long double>(q), exponent);
            rep.check(static_cast<long double>(pairs) <= bound,
                      "ball bound, component " + std::to_string(ci) + ", delta " +
                          std::to_string(tenth) + "/10: " + std::to_string(pairs) +
                          " <= " + detail::fmt_ld(bound));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Suite: field (gf + group_algebra + idempotents + LCD soundness).
// ---------------------------------------------------------------------------
inline VerifyReport verify_field_suite(const VerifyOptions& opts) {
    VerifyReport rep;
    Rng rng(opts.seed);

    // field axioms and Frobenius/norm structure for small towers
    for (uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
        auto [p, m] = detail::split_prime_power(q);
        auto tower = TowerContext::build(p, m, 1);
        const HermField& H = tower->herm();
        const FieldTable& F = H.field();
        bool axioms = true;
        for (int i = 0; i < 1000 && axioms; ++i) {
            uint32_t a = static_cast<uint32_t>(rng.below(F.order()));
            uint32_t b = static_cast<uint32_t>(rng.below(F.order()));
            uint32_t c = static_cast<uint32_t>(rng.below(F.order()));
            axioms = F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)) &&
                     F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)) &&
                     F.add(F.add(a, b), c) == F.add(a, F.add(b, c));
        }
        rep.check(axioms, "field axioms on random triples, q^2 = " + std::to_string(F.order()));

        size_t fixed = 0;
        bool frob_hom = true;
        for (uint32_t x = 0; x < F.order(); ++x) {
            if (H.sigma(x) == x) ++fixed;
            uint32_t y = static_cast<uint32_t>(rng.below(F.order()));
            frob_hom = frob_hom && H.sigma(F.add(x, y)) == F.add(H.sigma(x), H.sigma(y)) &&
                       H.sigma(F.mul(x, y)) == F.mul(H.sigma(x), H.sigma(y)) &&
                       H.sigma(H.sigma(x)) == x;
        }
        rep.check(frob_hom, "conjugation is an involutive automorphism, q = " + std::to_string(q));
        rep.check(fixed == q, "conjugation fixes exactly F_q, q = " + std::to_string(q));

        bool norm_counts = true;
        for (uint32_t c = 1; c < F.order(); ++c) {
            auto sols = H.norm_preimages(c);
            bool base = H.in_base(c);
            norm_counts = norm_counts && (base ? sols.size() == q + 1 : sols.empty());
            for (uint32_t v : sols) norm_counts = norm_counts && H.norm(v) == c;
        }
        rep.check(norm_counts, "norm preimage counts are q+1 on F_q^*, q = " + std::to_string(q));
    }

    // group algebra identities
    {
        detail::FieldInstance I(3, {5});
        const HermField& H = I.tower->herm();
        bool algebra_ok = true, inner_ok = true, translate_ok = true;
        auto one = AlgebraElem<HermField>::one(&I.G, &H);
        for (int k = 0; k < 1000; ++k) {
            AlgebraElem<HermField> a(&I.G, &H), b(&I.G, &H);
            for (auto& x : a.c) x = static_cast<uint32_t>(rng.below(H.order()));
            for (auto& x : b.c) x = static_cast<uint32_t>(rng.below(H.order()));
            algebra_ok = algebra_ok && convolve(a, b) == convolve(b, a) &&
                         convolve(one, a) == a &&
                         adjoint(convolve(a, b)) == convolve(adjoint(a), adjoint(b)) &&
                         adjoint(adjoint(a)) == a;
            inner_ok = inner_ok && herm_inner(a, b) == identity_coeff(convolve(a, adjoint(b)));
            uint32_t g = static_cast<uint32_t>(rng.below(I.G.order()));
            translate_ok = translate_ok && weight(translate(g, a)) == weight(a);
        }
        rep.check(algebra_ok, "group algebra ring identities, q = 3, group 5");
        rep.check(inner_ok, "inner product factors through the adjoint");
        rep.check(translate_ok, "weights are translate invariant");

        // identity-coefficient projection: additive, unital, surjective
        bool phi_ok = true;
        for (uint32_t s = 0; s < H.order() && phi_ok; ++s)
            phi_ok = identity_coeff(scalar_mul(s, one)) == s;
        for (int k = 0; k < 200 && phi_ok; ++k) {
            AlgebraElem<HermField> a(&I.G, &H), b(&I.G, &H);
            for (auto& x : a.c) x = static_cast<uint32_t>(rng.below(H.order()));
            for (auto& x : b.c) x = static_cast<uint32_t>(rng.below(H.order()));
            phi_ok = identity_coeff(add(a, b)) == H.add(identity_coeff(a), identity_coeff(b));
        }
        rep.check(phi_ok, "identity-coefficient projection is additive, unital, surjective");
    }

    // idempotent systems (construction itself asserts exact structure)
    for (auto [q, factors] : std::vector<std::pair<uint64_t, std::vector<uint32_t>>>{
             {3, {5}}, {3, {7}}, {2, {5}}, {2, {3, 9}}}) {
        detail::FieldInstance I(q, factors);
        uint64_t tau_total = 0;
        for (size_t i = 0; i < I.sys.components().size(); ++i)
            tau_total += I.sys.fixed_subspace_dim(i);
        std::string name = "q=" + std::to_string(q) + ", group " + I.G.str();
        rep.check(tau_total == I.G.order(), "fixed-subspace dims sum to n, " + name);
        bool prim = true;
        for (const auto& c : I.sys.components()) {
            uint32_t da = c.kind == IdempotentSystem::Kind::Paired ? c.dim_f / 2 : c.dim_f;
            uint64_t size = 1;
            bool feasible = true;
            for (uint32_t i = 0; i < da && feasible; ++i) {
                size *= I.tower->herm().order();
                if (size > (1ull << 16)) feasible = false;
            }
            if (feasible) prim = prim && component_is_primitive(I.sys, c.prim_a, da);
        }
        rep.check(prim, "primitivity of primitive idempotents, " + name);
    }

    // LCD soundness of the whole family at the configured instance
    {
        uint64_t q = opts.q.value_or(3);
        auto factors = opts.group.value_or(std::vector<uint32_t>{5});
        detail::FieldInstance I(q, factors);
        auto lams = admissible_lambdas(I.tower->herm());
        if (lams.empty()) {
            rep.info("no admissible lambda at q = " + std::to_string(q) + "; family checks skipped");
        } else {
            uint32_t lambda = opts.lambda.value_or(lams.front());
            auto fam = solve_family(I.sys, lambda);
            auto family = materialize_family(I.sys, fam);
            auto one = AlgebraElem<HermField>::one(&I.G, &I.tower->herm());
            bool rank_ok = true, lcd_ok = true, suff_ok = true;
            for (const auto& beta : family) {
                auto code = code_from_pair(one, beta);
                rank_ok = rank_ok && code.rank == I.G.order();
                lcd_ok = lcd_ok && exact_lcd_check(code);
                suff_ok = suff_ok && constant_unit_product(one, beta) == lambda;
            }
            rep.check(rank_ok, "every family code has rank n (" + std::to_string(family.size()) +
                                   " codes)");
            rep.check(lcd_ok, "every family code passes the exact LCD check");
            rep.check(suff_ok, "every family member reproduces its lambda");

            // sufficient => exact on random pairs
            bool sufficient_implies_exact = true;
            for (int k = 0; k < 300; ++k) {
                AlgebraElem<HermField> a(&I.G, &I.tower->herm()), b(&I.G, &I.tower->herm());
                for (auto& x : a.c) x = static_cast<uint32_t>(rng.below(I.tower->herm().order()));
                for (auto& x : b.c) x = static_cast<uint32_t>(rng.below(I.tower->herm().order()));
                if (!constant_unit_product(a, b)) continue;
                auto code = code_from_pair(a, b);
                if (code.rank == code.gen.rows)
                    sufficient_implies_exact = sufficient_implies_exact && exact_lcd_check(code);
            }
            rep.check(sufficient_implies_exact, "sufficient criterion implies the exact one");

            // census endpoints and monotonicity when the scans are feasible
            uint64_t words = 1;
            bool feasible = true;
            for (uint32_t i = 0; i < I.G.order() && feasible; ++i) {
                words *= I.tower->herm().order();
                if (words > (1ull << 26)) feasible = false;
            }
            if (feasible && family.size() <= 4096) {
                CensusOptions copts;
                copts.threads = opts.threads;
                auto rows = family_census(I.sys, family, copts);
                uint32_t two_n = 2 * I.G.order();
                bool monotone = true;
                uint64_t prev = 0;
                for (int num = 0; num <= 10; ++num) {
                    uint64_t cur = census_count_le(rows, Rational::make(num, 10), two_n);
                    monotone = monotone && cur >= prev;
                    prev = cur;
                }
                rep.check(census_count_le(rows, Rational::make(0, 1), two_n) == 0,
                          "census at delta = 0 is empty");
                rep.check(census_count_le(rows, Rational::make(1, 1), two_n) == rows.size(),
                          "census at delta = 1 is the whole family");
                rep.check(monotone, "census is monotone in delta");
            } else {
                rep.info("census skipped: instance above the exact-scan caps");
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Suite: counting (formula vs oracle, component counts, membership bound).
// ---------------------------------------------------------------------------
inline VerifyReport verify_counting_suite(const VerifyOptions& opts) {
    VerifyReport rep;
    Rng rng(opts.seed);

    struct Case {
        uint64_t q;
        uint32_t n;
    };
    std::vector<Case> cases;
    if (opts.q || opts.group) {
        uint64_t q = opts.q.value_or(3);
        auto factors = opts.group.value_or(std::vector<uint32_t>{5});
        detail::FieldInstance I(q, factors);
        auto lams = admissible_lambdas(I.tower->herm());
        if (lams.empty()) {
            rep.info("no admissible lambda at q = " + std::to_string(q));
            return rep;
        }
        uint32_t lambda = opts.lambda.value_or(lams.front());
        auto formula = family_size_formula(I.sys, lambda);
        uint64_t oracle = family_size_bruteforce(I.G, I.tower->herm(), lambda, opts.threads);
        rep.check(formula.total == BigUint(oracle),
                  "formula count " + formula.total.str() + " equals brute-force count " +
                      std::to_string(oracle));
        return rep;
    }
    for (auto c : {Case{3, 1}, Case{3, 5}, Case{3, 7}, Case{4, 1}, Case{4, 3}, Case{4, 5},
                   Case{5, 1}, Case{5, 3}})
        cases.push_back(c);

    for (auto c : cases) {
        detail::FieldInstance I(c.q, {c.n});
        for (uint32_t lambda : admissible_lambdas(I.tower->herm())) {
            auto formula = family_size_formula(I.sys, lambda);
            uint64_t oracle = family_size_bruteforce(I.G, I.tower->herm(), lambda, opts.threads);
            rep.check(formula.total == BigUint(oracle),
                      "q=" + std::to_string(c.q) + ", n=" + std::to_string(c.n) + ", lambda=" +
                          std::to_string(lambda) + ": formula " + formula.total.str() +
                          " = oracle " + std::to_string(oracle));
        }
    }

    // component solution-set sizes at the two headline instances
    for (uint32_t n : {5u, 7u}) {
        detail::FieldInstance I(3, {n});
        uint64_t q = 3;
        bool sizes_ok = true;
        for (size_t ci = 0; ci < I.sys.components().size(); ++ci) {
            auto set = solve_component_norm(I.sys, ci, 2);
            const auto& comp = I.sys.components()[ci];
            uint64_t expect = 0;
            switch (comp.kind) {
                case IdempotentSystem::Kind::Trivial: expect = q + 1; break;
                case IdempotentSystem::Kind::Fixed: expect = pow_u64_sat(q, comp.dim_f) + 1; break;
                case IdempotentSystem::Kind::Paired: expect = pow_u64_sat(q, comp.dim_f) - 1; break;
            }
            sizes_ok = sizes_ok && set.solutions.size() == expect;
        }
        rep.check(sizes_ok, "component solution-set sizes, q=3, n=" + std::to_string(n));
    }

    // lower bound and membership-count bound
    for (uint32_t n : {5u, 7u, 11u}) {
        detail::FieldInstance I(3, {n});
        auto formula = family_size_formula(I.sys, 2);
        BoundInputs in{3, n, I.sys.min_component_dim()};
        auto lower = family_lower_bound_check(in, &formula.total);
        rep.check(lower.hypothesis_ok && lower.holds,
                  "q^{n-2} = " + lower.bound.str() + " <= family size " + formula.total.str() +
                      ", n=" + std::to_string(n));
    }
    {
        detail::FieldInstance I(3, {5});
        auto fam = solve_family(I.sys, 2);
        auto family = materialize_family(I.sys, fam);
        bool bound_ok = true;
        for (uint64_t k = 0; k < opts.trials; ++k) {
            AlgebraElem<HermField> a(&I.G, &I.tower->herm());
            for (auto& x : a.c) x = static_cast<uint32_t>(rng.below(9));
            const auto& beta0 = family[rng.below(family.size())];
            auto b = convolve(a, beta0);
            auto cc = count_codes_containing(I.sys, family, a, b);
            uint64_t ell = component_support(I.sys, a).ell;
            bound_ok = bound_ok && BigUint(cc.count) <= BigUint::power(3, 5 + 3 - ell);
        }
        rep.check(bound_ok, "membership counts below q^{n+3-l} on " + std::to_string(opts.trials) +
                                " seeded pairs");
    }

    for (uint32_t n : {5u, 7u, 11u}) {
        detail::FieldInstance I(3, {n});
        auto sub = check_component_subset_counts(I.sys);
        for (auto& l : sub.lines) rep.lines.push_back(l);
        rep.checks += sub.checks;
        rep.failures += sub.failures;
    }
    for (uint32_t n : {5u, 7u}) {
        detail::FieldInstance I(3, {n});
        auto ball = check_component_ball_bounds(I.sys);
        for (auto& l : ball.lines) rep.lines.push_back(l);
        rep.checks += ball.checks;
        rep.failures += ball.failures;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Suite: chain (ring structure, lifting, residue/direct LCD agreement).
// ---------------------------------------------------------------------------
inline VerifyReport verify_chain_suite(const VerifyOptions& opts) {
    VerifyReport rep;
    Rng rng(opts.seed);

    for (const char* descr : {"uA:q=2,s=2", "uA:q=3,s=2", "gr:p=3,s=2,m=1"}) {
        auto S = ChainRing::build(ChainRingSpec::parse(descr));
        const FieldTable& F = S->residue_field();
        bool sigma_ok = true, pi_ok = true;
        uint64_t fixed = 0;
        for (uint32_t x = 0; x < S->size(); ++x) {
            sigma_ok = sigma_ok && S->sigma(S->sigma(x)) == x;
            if (S->in_base_ring(x)) ++fixed;
            pi_ok = pi_ok && S->pi(S->sigma(x)) == F.pow(S->pi(x), S->spec().q);
        }
        rep.check(sigma_ok, std::string(descr) + ": sigma is an involution");
        rep.check(fixed * fixed == S->size(), std::string(descr) + ": rank over the base ring is 2");
        rep.check(pi_ok, std::string(descr) + ": residue intertwines sigma with Frobenius");

        // ideal chain via the uniformizer
        uint32_t theta = S->uniformizer();
        uint32_t tp = S->one();
        bool chain_ok = true;
        std::vector<std::set<uint32_t>> chain(S->nilpotency() + 1);
        for (uint32_t k = 0; k <= S->nilpotency(); ++k) {
            for (uint32_t y = 0; y < S->size(); ++y) chain[k].insert(S->mul(tp, y));
            tp = S->mul(tp, theta);
        }
        chain_ok = chain[S->nilpotency()] == std::set<uint32_t>{0} &&
                   chain[S->nilpotency() - 1].size() > 1;
        for (uint32_t x = 0; x < S->size() && chain_ok; ++x) {
            std::set<uint32_t> ideal;
            for (uint32_t y = 0; y < S->size(); ++y) ideal.insert(S->mul(x, y));
            bool matched = false;
            for (auto& link : chain)
                if (ideal == link) { matched = true; break; }
            chain_ok = matched;
        }
        rep.check(chain_ok, std::string(descr) + ": ideals form the uniformizer chain");
        rep.check(chain[1].size() == S->size() / F.order(),
                  std::string(descr) + ": residue kernel is the maximal ideal");
    }

    // no nonzero submodule of S^2 is fixed by the maximal ideal
    {
        auto S = ChainRing::build(ChainRingSpec::parse("uA:q=2,s=2"));
        uint32_t n = static_cast<uint32_t>(S->size());
        uint32_t theta = S->uniformizer();
        auto key = [n](uint32_t a, uint32_t b) { return static_cast<uint64_t>(a) * n + b; };
        std::set<std::set<uint64_t>> seen;
        for (uint32_t v1 = 0; v1 < n; ++v1)
            for (uint32_t v2 = 0; v2 < n; ++v2)
                for (uint32_t w1 = 0; w1 < n; ++w1)
                    for (uint32_t w2 = 0; w2 < n; ++w2) {
                        std::set<uint64_t> span;
                        for (uint32_t a = 0; a < n; ++a)
                            for (uint32_t b = 0; b < n; ++b)
                                span.insert(key(S->add(S->mul(a, v1), S->mul(b, w1)),
                                                S->add(S->mul(a, v2), S->mul(b, w2))));
                        seen.insert(std::move(span));
                    }
        bool nakayama = true;
        for (const auto& M : seen) {
            if (M.size() == 1) continue;
            std::set<uint64_t> scaled;
            for (uint64_t k : M)
                scaled.insert(key(S->mul(theta, static_cast<uint32_t>(k / n)),
                                  S->mul(theta, static_cast<uint32_t>(k % n))));
            if (scaled == M) { nakayama = false; break; }
        }
        rep.check(nakayama, "uA:q=2,s=2: no nonzero submodule of S^2 is fixed by the maximal ideal");
    }

    // lifted idempotent systems with start independence
    for (const char* descr : {"uA:q=3,s=2", "uA:q=3,s=3", "gr:p=3,s=2,m=1"}) {
        GroupSpec G = GroupSpec::make({5});
        auto S = ChainRing::build(ChainRingSpec::parse(descr));
        auto tower = TowerContext::build(S->spec().p, S->spec().m, G.exponent());
        auto sys = build_idempotent_system(G, *tower);
        bool ok = true;
        try {
            auto lifts = lift_idempotent_system(*S, sys);
            uint32_t theta = S->uniformizer();
            for (size_t i = 0; i < lifts.size() && ok; ++i) {
                const auto& f = sys.components()[i].merged;
                for (int t = 0; t < 2; ++t) {
                    auto start = lift_elem(*S, f);
                    for (auto& x : start.c)
                        x = S->add(x, S->mul(theta, static_cast<uint32_t>(rng.below(S->size()))));
                    ok = ok && lift_idempotent(f, start) == lifts[i];
                }
            }
        } catch (const std::exception&) {
            ok = false;
        }
        rep.check(ok, std::string(descr) + ", group 5: lifted system exact and start-independent");
    }

    // residue/direct equivalence and the unit criterion
    {
        std::string descr = opts.ring.value_or("uA:q=2,s=2");
        auto factors = opts.group.value_or(std::vector<uint32_t>{5});
        GroupSpec G = GroupSpec::make(factors);
        auto S = ChainRing::build(ChainRingSpec::parse(descr));
        bool agree_all = true, unit_sound = true, any_direct = false;
        for (uint64_t t = 0; t < opts.trials; ++t) {
            ChainElemVec d(&G, S.get());
            for (auto& x : d.c) x = static_cast<uint32_t>(rng.below(S->size()));
            auto eq = lcd_residue_equivalence(d, opts.threads);
            if (!eq.lcd_direct.has_value()) continue;
            any_direct = true;
            agree_all = agree_all && eq.agree;
            if (unit_criterion_lcd(ChainElemVec::one(&G, S.get()), d))
                unit_sound = unit_sound && *eq.lcd_direct;
        }
        rep.check(agree_all && any_direct,
                  descr + ": residue LCD equals direct LCD on " + std::to_string(opts.trials) +
                      " seeded generators");
        rep.check(unit_sound, descr + ": unit criterion implies direct LCD");
    }

    // the dual of a free pair code is free of rank n and orthogonal to it
    {
        GroupSpec G = GroupSpec::make({5});
        auto S = ChainRing::build(ChainRingSpec::parse("uA:q=2,s=2"));
        Rng dual_rng(opts.seed + 1);
        bool dual_ok = true;
        for (int k = 0; k < 10 && dual_ok; ++k) {
            ChainElemVec d(&G, S.get());
            for (auto& x : d.c) x = static_cast<uint32_t>(dual_rng.below(S->size()));
            auto code = chain_code_from_pair(ChainElemVec::one(&G, S.get()), d);
            auto dual = dual_generator(d);
            for (size_t i = 0; i < dual.rows && dual_ok; ++i)
                for (size_t j = 0; j < code.gen.rows; ++j)
                    dual_ok = dual_ok && row_herm_inner(*S, dual, i, code.gen, j) == 0;
            CMatrix work = dual;
            auto [r, torsion] = chain_row_reduce(work);
            dual_ok = dual_ok && r == G.order() && !torsion;
        }
        rep.check(dual_ok, "uA:q=2,s=2: duals of free codes are free of rank n");
    }

    // code lifting preserves rank, residue, and minimum weight
    {
        std::string descr = opts.ring.value_or("uA:q=2,s=2");
        auto factors = opts.group.value_or(std::vector<uint32_t>{5});
        GroupSpec G = GroupSpec::make(factors);
        auto S = ChainRing::build(ChainRingSpec::parse(descr));
        const HermField& H = S->residue_view();
        bool ok = true;
        uint64_t done = 0, attempts = 0;
        uint64_t want = std::min<uint64_t>(opts.trials, 20);
        while (done < want && attempts < 100 * want) {
            ++attempts;
            AlgebraElem<HermField> beta(&G, &H);
            for (auto& x : beta.c) x = static_cast<uint32_t>(rng.below(H.order()));
            if (!is_unit(add(AlgebraElem<HermField>::one(&G, &H), convolve(beta, adjoint(beta)))))
                continue;
            ++done;
            auto repo = lift_code(*S, beta, LiftMode::Naive, opts.threads);
            ok = ok && repo.chain_rank == G.order() && repo.residue_identity &&
                 repo.residue_exact && repo.chain_exact &&
                 repo.chain_min_wt == repo.residue_min_wt;
        }
        rep.check(ok && done == want,
                  descr + ": " + std::to_string(done) + " lifted codes preserve rank and distance");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Suite: bounds (entropy, applicability, product report, ratio diagnostic).
// ---------------------------------------------------------------------------
inline VerifyReport verify_bounds_suite(const VerifyOptions& opts) {
    VerifyReport rep;

    for (uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
        long double at_zero = q_entropy(q, 0.0L);
        long double at_top = q_entropy(q, 1.0L - 1.0L / q);
        rep.check(std::fabs(at_zero) < 1e-12L && std::fabs(at_top - 1.0L) < 1e-12L,
                  "entropy endpoints for q = " + std::to_string(q));
        bool monotone = true, concave = true;
        long double prev = 0.0L, prev_diff = -1.0L;
        const int grid = 1000;
        long double hi = 1.0L - 1.0L / q;
        for (int i = 1; i <= grid; ++i) {
            long double h = q_entropy(q, hi * i / grid);
            monotone = monotone && h >= prev;
            long double diff = h - prev;
            if (i > 1) concave = concave && diff <= prev_diff + 1e-15L;
            prev_diff = diff;
            prev = h;
        }
        rep.check(monotone, "entropy increases on [0, 1 - 1/q], q = " + std::to_string(q));
        rep.check(concave, "entropy is concave on the grid, q = " + std::to_string(q));
    }

    // applicability of the low-weight bound
    {
        detail::FieldInstance I5(3, {5});
        detail::FieldInstance I7(3, {7});
        detail::FieldInstance I11(3, {11});
        BoundInputs b5{3, 5, I5.sys.min_component_dim()};
        BoundInputs b7{3, 7, I7.sys.min_component_dim()};
        BoundInputs b11{3, 11, I11.sys.min_component_dim()};
        rep.check(!low_weight_family_bound(b5, 0.0L).applicable &&
                      !max_admissible_delta(b5).has_value(),
                  "low-weight bound not applicable at q=3, n=5");
        rep.check(!low_weight_family_bound(b7, 0.0L).applicable &&
                      !max_admissible_delta(b7).has_value(),
                  "low-weight bound not applicable at q=3, n=7");
        auto d11 = max_admissible_delta(b11);
        bool ok11 = d11.has_value();
        if (ok11) {
            long double dv = d11->to_long_double();
            ok11 = low_weight_family_bound(b11, dv).applicable &&
                   !low_weight_family_bound(b11, dv + std::pow(2.0L, -20.0L)).applicable;
            // the entropy at the boundary sits against 1/2 - log_3(11)/5
            long double target = 0.5L - log_ratio(b11);
            ok11 = ok11 && std::fabs(q_entropy(3, dv) - target) < 1e-4L;
        }
        rep.check(ok11, "largest admissible delta at q=3, n=11 sits on the margin boundary");

        bool monotone_bound = true;
        long double prev = -1.0L;
        auto dmax = d11 ? d11->to_long_double() : 0.0L;
        for (int i = 1; i <= 50; ++i) {
            auto r = low_weight_family_bound(b11, dmax * i / 50);
            monotone_bound = monotone_bound && r.exponent >= prev;
            prev = r.exponent;
        }
        rep.check(monotone_bound, "low-weight bound increases in delta on its admissible range");
    }

    // recorded violations of the printed product inequalities, reproduced exactly
    {
        auto r22 = product_bounds_report(2, {2, 2});
        rep.check(r22.hypothesis_ok && !r22.holds_minus && r22.lhs_minus == BigUint(9) &&
                      r22.rhs_minus == BigUint(14),
                  "product inequality (a) violated at q=2, l=(2,2): 9 < 14");
        auto r33 = product_bounds_report(3, {3, 3});
        rep.check(r33.hypothesis_ok && !r33.holds_minus && r33.lhs_minus == BigUint(676) &&
                      r33.rhs_minus == BigUint(727),
                  "product inequality (a) violated at q=3, l=(3,3): 676 < 727");
        rep.check(!r33.holds_plus && r33.lhs_plus == BigUint(784) && r33.rhs_plus == BigUint(731),
                  "product inequality (b) violated at q=3, l=(3,3): 784 > 731");
    }

    // scan of candidate lengths
    {
        auto rows = scan_lengths(3, 40, opts.threads);
        bool filter_ok = true, found11 = false;
        for (const auto& r : rows) {
            filter_ok = filter_ok && r.n % 2 == 1 && r.n % 3 != 0 && r.ratio > 0.0L;
            if (r.n == 11) found11 = r.mu == 5;
        }
        rep.check(filter_ok, "scanned lengths are odd, coprime, with positive ratios");
        rep.check(found11, "scan reports dimension floor 5 at n = 11 for q = 3");
    }

    // low-weight fraction diagnostic against the ratio bound (no assertion:
    // the bound hypothesis fails at these n; reported for trend inspection),
    // plus the conditional census/upper-bound comparison wherever the bound
    // is applicable AND an exact census exists. No desk-scale instance
    // satisfies both today, so the comparison is recorded as vacuous rather
    // than silently skipped.
    {
        std::vector<uint32_t> ns{5};
        if (opts.heavy) ns.push_back(7);
        size_t comparisons = 0, vacuous = 0;
        bool comparisons_ok = true;
        for (uint32_t n : ns) {
            detail::FieldInstance I(3, {n});
            auto fam = solve_family(I.sys, 2);
            auto family = materialize_family(I.sys, fam);
            CensusOptions copts;
            copts.threads = opts.threads;
            auto rows = family_census(I.sys, family, copts);
            for (int num = 1; num <= 5; ++num) {
                Rational delta = Rational::make(num, 10);
                uint64_t cnt = census_count_le(rows, delta, 2 * n);
                long double frac = static_cast<long double>(cnt) / family.size();
                BoundInputs in{3, n, I.sys.min_component_dim()};
                long double bound_log = family_ratio_bound_log_q(in, delta.to_long_double());
                rep.info("ratio diagnostic n=" + std::to_string(n) + ", delta=" + delta.str() +
                         ": fraction " + detail::fmt_ld(frac) + ", bound exponent log_q " +
                         detail::fmt_ld(bound_log) + " (hypothesis fails at this n)");
                auto upper = low_weight_family_bound(in, delta.to_long_double());
                if (upper.applicable) {
                    ++comparisons;
                    comparisons_ok =
                        comparisons_ok && compare_count_to_power(BigUint(cnt), 3, upper.exponent) ==
                                              BoundComparison::Holds;
                } else {
                    ++vacuous;
                }
            }
        }
        rep.check(comparisons_ok,
                  "upper bound dominates the census on every applicable instance (" +
                      std::to_string(comparisons) + " compared, " + std::to_string(vacuous) +
                      " vacuous: hypothesis fails at the census-feasible n)");
    }

    // the lower bound holds wherever the count is computable
    for (uint32_t n : {5u, 7u, 11u}) {
        detail::FieldInstance I(3, {n});
        auto formula = family_size_formula(I.sys, 2);
        BoundInputs in{3, n, I.sys.min_component_dim()};
        auto lower = family_lower_bound_check(in, &formula.total);
        rep.check(lower.hypothesis_ok && lower.holds,
                  "family lower bound holds at q=3, n=" + std::to_string(n));
    }
    return rep;
}

inline VerifyReport run_verify_suite(const std::string& suite, const VerifyOptions& opts) {
    if (suite == "field") return verify_field_suite(opts);
    if (suite == "counting") return verify_counting_suite(opts);
    if (suite == "chain") return verify_chain_suite(opts);
    if (suite == "bounds") return verify_bounds_suite(opts);
    throw InputError("unknown verify suite: " + suite);
}

}  // namespace qaclcd
