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

// Rate-1/2 2-quasi-abelian codes over F_{q^2}: pair-generated codes, the
// Hermitian LCD checks (sufficient constant criterion and exact Gram
// criterion), componentwise norm-equation solving, enumeration and exact
// counting of the unit-product code family, and weight censuses with
// brute-force scans as oracles.

#pragma once

#include <atomic>
#include <map>

#include "idempotents.hpp"

namespace qaclcd {

// ---------------------------------------------------------------------------
// Codes generated by one pair (a, b) inside (FG)^2.
// ---------------------------------------------------------------------------
struct QuasiAbelianCode {
    AlgebraElem<HermField> a, b;
    FMatrix gen;  // n x 2n, rows are g * (a, b)
    size_t rank = 0;
};

inline QuasiAbelianCode code_from_pair(const AlgebraElem<HermField>& a,
                                       const AlgebraElem<HermField>& b) {
    detail::check_pair(a, b);
    const GroupSpec& G = *a.grp;
    uint32_t n = G.order();
    QuasiAbelianCode code{a, b, FMatrix(a.ring->F, n, 2 * static_cast<size_t>(n)), 0};
    for (uint32_t g = 0; g < n; ++g) {
        auto ta = translate(g, a);
        auto tb = translate(g, b);
        for (uint32_t j = 0; j < n; ++j) {
            code.gen.at(g, j) = ta.c[j];
            code.gen.at(g, n + j) = tb.c[j];
        }
    }
    code.rank = rank(code.gen);
    return code;
}

// If a*adj(a) + b*adj(b) is a nonzero constant multiple of the identity,
// return that constant; this is the sufficient LCD criterion.
inline std::optional<uint32_t> constant_unit_product(const AlgebraElem<HermField>& a,
                                                     const AlgebraElem<HermField>& b) {
    auto w = add(convolve(a, adjoint(a)), convolve(b, adjoint(b)));
    uint32_t lam = identity_coeff(w);
    if (lam == 0) return std::nullopt;
    for (uint32_t g = 0; g < a.grp->order(); ++g) {
        if (g == a.grp->identity()) continue;
        if (w.c[g] != 0) return std::nullopt;
    }
    return lam;
}

namespace detail {
// Hermitian Gram matrix M sigma(M)^T of the generator matrix.
inline FMatrix hermitian_gram(const QuasiAbelianCode& code) {
    const HermField& H = *code.a.ring;
    size_t n = code.gen.rows;
    FMatrix gram(code.gen.ring, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            uint32_t acc = 0;
            for (size_t k = 0; k < code.gen.cols; ++k)
                acc = H.add(acc, H.mul(code.gen.at(i, k), H.sigma(code.gen.at(j, k))));
            gram.at(i, j) = acc;
        }
    return gram;
}

// Independent route: dim(C meet dual) via null spaces.
inline bool lcd_by_intersection(const QuasiAbelianCode& code) {
    const HermField& H = *code.a.ring;
    FMatrix dual = nullspace(code.gen);  // rows span {x : M x = 0}
    for (auto& v : dual.a) v = H.sigma(v);
    size_t rk_c = code.rank;
    size_t rk_d = rank(dual);
    size_t rk_sum = rank(vstack(code.gen, dual));
    return rk_sum == rk_c + rk_d;  // trivial intersection
}
}  // namespace detail

// Exact Hermitian LCD test: the Gram matrix of a full-rank generator matrix
// is nonsingular. Cross-validated against the intersection-dimension route
// whenever n <= 12.
inline bool exact_lcd_check(const QuasiAbelianCode& code) {
    if (code.rank != code.gen.rows)
        throw InputError("exact LCD check requires a full-rank generator matrix");
    bool by_gram = nonsingular(detail::hermitian_gram(code));
    if (code.gen.rows <= 12) {
        bool by_intersection = detail::lcd_by_intersection(code);
        if (by_gram != by_intersection)
            throw InvariantError("Gram criterion disagrees with the intersection route");
    }
    return by_gram;
}

// lambda values admitting a nonempty family: lambda != 0 with
// lambda - 1 in F_q^* (equivalently lambda in F_q minus {0, 1}).
inline std::vector<uint32_t> admissible_lambdas(const HermField& H) {
    std::vector<uint32_t> out;
    for (uint32_t lam = 1; lam < H.order(); ++lam) {
        uint32_t lm1 = H.sub(lam, 1);
        if (lm1 != 0 && H.in_base(lm1)) out.push_back(lam);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Componentwise norm-equation solutions.
// ---------------------------------------------------------------------------
struct NormSolutionSet {
    size_t component = 0;
    IdempotentSystem::Kind kind = IdempotentSystem::Kind::Trivial;
    std::vector<AlgebraElem<HermField>> solutions;  // sorted by coefficient vector
    std::string note;
};

struct SolveOptions {
    bool force_dlog = false;
    uint64_t scan_cap = 1ull << 20;
};

namespace detail {

inline std::vector<AlgebraElem<HermField>> idempotent_basis(const IdempotentSystem& sys,
                                                            const AlgebraElem<HermField>& e,
                                                            uint32_t dim) {
    const GroupSpec& G = sys.group();
    uint32_t n = G.order();
    FMatrix M(sys.herm().F, n, n);
    for (uint32_t g = 0; g < n; ++g) {
        auto t = translate(g, e);
        for (uint32_t j = 0; j < n; ++j) M.at(g, j) = t.c[j];
    }
    size_t r = rref(M);
    if (r != dim) throw InvariantError("idempotent component has unexpected dimension");
    std::vector<AlgebraElem<HermField>> basis;
    for (size_t i = 0; i < r; ++i) {
        AlgebraElem<HermField> b(&G, &sys.herm());
        for (uint32_t j = 0; j < n; ++j) b.c[j] = M.at(i, j);
        basis.push_back(std::move(b));
    }
    return basis;
}

inline AlgebraElem<HermField> component_pow(const AlgebraElem<HermField>& x, uint64_t e,
                                            const AlgebraElem<HermField>& identity) {
    AlgebraElem<HermField> r = identity, b = x;
    while (e) {
        if (e & 1) r = convolve(r, b);
        b = convolve(b, b);
        e >>= 1;
    }
    return r;
}

// Deterministic primitive-element search in the component field: walk basis
// combinations in lexicographic order and keep the first full-order element.
inline AlgebraElem<HermField> find_component_primitive(
    const std::vector<AlgebraElem<HermField>>& basis, const AlgebraElem<HermField>& identity,
    uint64_t field_size) {
    const HermField& H = *identity.ring;
    uint64_t group_order = field_size - 1;
    auto factors = factorize_u64(group_order);
    std::vector<uint32_t> digits(basis.size(), 0);
    for (uint64_t it = 1; it < field_size; ++it) {
        uint64_t v = it;
        for (size_t d = 0; d < digits.size(); ++d) {
            digits[d] = static_cast<uint32_t>(v % H.order());
            v /= H.order();
        }
        AlgebraElem<HermField> cand(identity.grp, identity.ring);
        for (size_t d = 0; d < digits.size(); ++d)
            if (digits[d]) cand = add(cand, scalar_mul(digits[d], basis[d]));
        bool primitive = true;
        for (auto [r, e] : factors) {
            (void)e;
            if (component_pow(cand, group_order / r, identity) == identity) {
                primitive = false;
                break;
            }
        }
        if (primitive) return cand;
    }
    throw InvariantError("component field has no primitive element");
}

// Baby-step giant-step discrete log in the cyclic group generated by theta.
inline uint64_t component_dlog(const AlgebraElem<HermField>& theta,
                               const AlgebraElem<HermField>& target,
                               const AlgebraElem<HermField>& identity, uint64_t group_order) {
    uint64_t msteps = 1;
    while (msteps * msteps < group_order) ++msteps;
    std::map<std::vector<uint32_t>, uint64_t> baby;
    AlgebraElem<HermField> cur = identity;
    for (uint64_t i = 0; i < msteps; ++i) {
        baby.emplace(cur.c, i);
        cur = convolve(cur, theta);
    }
    AlgebraElem<HermField> giant = component_pow(theta, group_order - msteps, identity);
    AlgebraElem<HermField> g = target;
    for (uint64_t j = 0; j * msteps <= group_order; ++j) {
        auto it = baby.find(g.c);
        if (it != baby.end()) return (j * msteps + it->second) % group_order;
        g = convolve(g, giant);
    }
    throw InvariantError("discrete log not found in component field");
}

}  // namespace detail

// Solutions of x * adj(x) = (lambda - 1) e inside one merged component.
// Trivial: scalars through the norm preimages. Fixed: exhaustive scan up to
// the cap, discrete-log parameterization beyond it. Paired: the explicit
// unit parameterization c + (lambda-1) adj(c^{-1}).
inline NormSolutionSet solve_component_norm(const IdempotentSystem& sys, size_t comp,
                                            uint32_t lambda, SolveOptions opts = {}) {
    const HermField& H = sys.herm();
    const GroupSpec& G = sys.group();
    const auto& C = sys.components()[comp];
    NormSolutionSet out;
    out.component = comp;
    out.kind = C.kind;

    if (lambda == 0) throw InputError("lambda must be nonzero");
    uint32_t lm1 = H.sub(lambda, 1);
    if (lm1 == 0) {
        out.note = "degenerate: lambda - 1 = 0";
        return out;
    }

    uint64_t q = sys.tower().q();

    if (C.kind == IdempotentSystem::Kind::Trivial) {
        if (!H.in_base(lm1)) {
            out.note = "lambda - 1 outside F_q^*: trivial component unsolvable, family empty";
            return out;
        }
        for (uint32_t nu : H.norm_preimages(lm1)) out.solutions.push_back(scalar_mul(nu, C.merged));
        if (out.solutions.size() != q + 1)
            throw InvariantError("trivial component solution count mismatch");
    } else if (C.kind == IdempotentSystem::Kind::Fixed) {
        uint32_t k = C.dim_f;
        uint64_t field_size = 1;
        for (uint32_t i = 0; i < k; ++i) field_size *= H.order();
        auto target = scalar_mul(lm1, C.merged);
        if (field_size <= opts.scan_cap && !opts.force_dlog) {
            auto basis = detail::idempotent_basis(sys, C.merged, k);
            std::vector<uint32_t> digits(k, 0);
            AlgebraElem<HermField> x(&G, &H);
            for (uint64_t it = 1; it < field_size; ++it) {
                // advance odometer; apply the digit delta to x
                uint32_t pos = 0;
                while (true) {
                    uint32_t old = digits[pos];
                    uint32_t nw = old + 1 == H.order() ? 0 : old + 1;
                    digits[pos] = nw;
                    uint32_t delta = H.sub(nw, old);
                    for (uint32_t j = 0; j < G.order(); ++j)
                        x.c[j] = H.add(x.c[j], H.mul(delta, basis[pos].c[j]));
                    if (nw != 0) break;
                    ++pos;
                }
                if (convolve(x, adjoint(x)) == target) out.solutions.push_back(x);
            }
        } else {
            auto basis = detail::idempotent_basis(sys, C.merged, k);
            auto theta = detail::find_component_primitive(basis, C.merged, field_size);
            uint64_t big_q = pow_u64_sat(q, k);
            uint64_t ell = detail::component_dlog(theta, target, C.merged, field_size - 1);
            if (ell % (big_q + 1) != 0)
                throw InvariantError("fixed-component norm target outside the image");
            uint64_t base = ell / (big_q + 1), stride = big_q - 1;
            auto cur = detail::component_pow(theta, base, C.merged);
            auto step = detail::component_pow(theta, stride, C.merged);
            for (uint64_t j = 0; j <= big_q; ++j) {
                out.solutions.push_back(cur);
                cur = convolve(cur, step);
            }
        }
        for (const auto& x : out.solutions)
            if (convolve(x, adjoint(x)) != target)
                throw InvariantError("fixed-component solution fails its equation");
        if (out.solutions.size() != pow_u64_sat(q, k) + 1)
            throw InvariantError("fixed component solution count mismatch");
    } else {
        // paired: alpha = c + (lambda-1) adj(c^{-1}) over units c of FGe
        uint32_t k = C.dim_f / 2;
        uint64_t field_size = 1;
        for (uint32_t i = 0; i < k; ++i) field_size *= H.order();
        auto basis = detail::idempotent_basis(sys, C.prim_a, k);
        auto theta = detail::find_component_primitive(basis, C.prim_a, field_size);
        auto theta_inv = detail::component_pow(theta, field_size - 2, C.prim_a);
        auto target = scalar_mul(lm1, C.merged);
        AlgebraElem<HermField> cur = C.prim_a, cur_inv = C.prim_a;
        for (uint64_t j = 0; j + 1 < field_size; ++j) {
            auto alpha = add(cur, scalar_mul(lm1, adjoint(cur_inv)));
            if (convolve(alpha, adjoint(alpha)) != target)
                throw InvariantError("paired-component solution fails its equation");
            out.solutions.push_back(std::move(alpha));
            cur = convolve(cur, theta);
            cur_inv = convolve(cur_inv, theta_inv);
        }
        if (out.solutions.size() != field_size - 1)
            throw InvariantError("paired component solution count mismatch");
    }

    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const auto& a, const auto& b) { return a.c < b.c; });
    return out;
}

// ---------------------------------------------------------------------------
// The full family: Cartesian product of the component solution sets.
// ---------------------------------------------------------------------------
struct FamilySolutions {
    uint32_t lambda = 0;
    std::vector<NormSolutionSet> parts;  // component order: trivial, fixed, paired
    bool empty_family = false;
    std::string note;

    BigUint size() const {
        if (empty_family) return BigUint(0);
        BigUint total(1);
        for (const auto& p : parts) total = total * BigUint(p.solutions.size());
        return total;
    }
};

inline FamilySolutions solve_family(const IdempotentSystem& sys, uint32_t lambda,
                                    SolveOptions opts = {}) {
    FamilySolutions fam;
    fam.lambda = lambda;
    auto trivial = solve_component_norm(sys, 0, lambda, opts);
    if (trivial.solutions.empty()) {
        fam.empty_family = true;
        fam.note = trivial.note.empty() ? "trivial component unsolvable" : trivial.note;
        fam.parts.push_back(std::move(trivial));
        return fam;
    }
    fam.parts.push_back(std::move(trivial));
    for (size_t c = 1; c < sys.components().size(); ++c)
        fam.parts.push_back(solve_component_norm(sys, c, lambda, opts));
    return fam;
}

// Visit every family member in the lexicographic Cartesian order of the
// component solution sets (first component most significant).
template <class Fn>
void for_each_family_member(const GroupSpec& G, const HermField& H, const FamilySolutions& fam,
                            Fn&& fn) {
    if (fam.empty_family) return;
    size_t parts = fam.parts.size();
    std::vector<size_t> idx(parts, 0);
    while (true) {
        AlgebraElem<HermField> beta(&G, &H);
        for (size_t i = 0; i < parts; ++i) beta = add(beta, fam.parts[i].solutions[idx[i]]);
        fn(beta);
        size_t pos = parts;
        while (pos-- > 0) {
            if (++idx[pos] < fam.parts[pos].solutions.size()) break;
            idx[pos] = 0;
            if (pos == 0) return;
        }
    }
}

inline std::vector<AlgebraElem<HermField>> materialize_family(const IdempotentSystem& sys,
                                                              const FamilySolutions& fam) {
    std::vector<AlgebraElem<HermField>> out;
    const HermField& H = sys.herm();
    uint32_t lm1 = H.sub(fam.lambda, 1);
    auto target = scalar_mul(lm1, AlgebraElem<HermField>::one(&sys.group(), &H));
    for_each_family_member(sys.group(), H, fam, [&](const AlgebraElem<HermField>& beta) {
        if (convolve(beta, adjoint(beta)) != target)
            throw InvariantError("family member fails the defining equation");
        out.push_back(beta);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Exact counting: closed-form product with per-factor breakdown.
// ---------------------------------------------------------------------------
struct CountBreakdown {
    struct Factor {
        IdempotentSystem::Kind kind;
        uint32_t dim;
        BigUint value;
    };
    std::vector<Factor> factors;
    BigUint total{0};
    bool empty_family = false;
};

inline CountBreakdown family_size_formula(const IdempotentSystem& sys, uint32_t lambda) {
    const HermField& H = sys.herm();
    if (lambda == 0) throw InputError("lambda must be nonzero");
    CountBreakdown out;
    uint32_t lm1 = H.sub(lambda, 1);
    if (lm1 == 0 || !H.in_base(lm1)) {
        out.empty_family = true;
        return out;
    }
    uint64_t q = sys.tower().q();
    out.total = BigUint(1);
    for (const auto& c : sys.components()) {
        CountBreakdown::Factor f{c.kind, c.dim_f, BigUint(0)};
        switch (c.kind) {
            case IdempotentSystem::Kind::Trivial:
                f.value = BigUint(q + 1);
                break;
            case IdempotentSystem::Kind::Fixed:
                f.value = BigUint::power(q, c.dim_f) + BigUint(1);
                break;
            case IdempotentSystem::Kind::Paired:
                f.value = BigUint::power(q, c.dim_f) - BigUint(1);
                break;
        }
        out.total = out.total * f.value;
        out.factors.push_back(std::move(f));
    }
    return out;
}

// Independent oracle: exhaustive scan of all beta over FG counting the
// defining equation. Depends on nothing but the group algebra.
inline uint64_t family_size_bruteforce(const GroupSpec& G, const HermField& H, uint32_t lambda,
                                       unsigned threads = 1, uint64_t cap = 1ull << 26) {
    if (lambda == 0 || H.sub(lambda, 1) == 0) throw InputError("lambda and lambda - 1 must be nonzero");
    uint32_t n = G.order();
    uint64_t qq = H.order();
    uint64_t total = 1;
    for (uint32_t i = 0; i < n; ++i) {
        total *= qq;
        if (total > cap) throw CapError("brute-force family scan exceeds the 2^26 cap");
    }
    uint32_t lm1 = H.sub(lambda, 1);

    std::vector<uint64_t> counts(std::max(1u, threads), 0);
    parallel_chunks(1, total, threads, [&](unsigned tid, uint64_t lo, uint64_t hi) {
        std::vector<uint32_t> digits(n, 0);
        AlgebraElem<HermField> beta(&G, &H), adj(&G, &H);
        uint64_t v = lo;
        for (uint32_t i = 0; i < n; ++i) {
            digits[i] = static_cast<uint32_t>(v % qq);
            v /= qq;
        }
        for (uint32_t i = 0; i < n; ++i) {
            beta.c[i] = digits[i];
            adj.c[G.inv(i)] = H.sigma(digits[i]);
        }
        uint64_t local = 0;
        auto check = [&]() {
            // identity coefficient first, then the rest; early exit on mismatch
            for (uint32_t h = 0; h < n; ++h) {
                uint32_t acc = 0;
                for (uint32_t g = 0; g < n; ++g)
                    acc = H.add(acc, H.mul(beta.c[g], adj.c[G.op(G.inv(g), h)]));
                if (acc != (h == G.identity() ? lm1 : 0)) return false;
            }
            return true;
        };
        if (check()) ++local;
        for (uint64_t it = lo + 1; it < hi; ++it) {
            uint32_t pos = 0;
            while (true) {
                uint32_t old = digits[pos];
                uint32_t nw = old + 1 == qq ? 0 : old + 1;
                digits[pos] = nw;
                beta.c[pos] = nw;
                adj.c[G.inv(pos)] = H.sigma(nw);
                if (nw != 0) break;
                ++pos;
            }
            if (check()) ++local;
        }
        counts[tid] = local;
    });
    uint64_t sum = 0;
    for (uint64_t c : counts) sum += c;
    return sum;
}

// ---------------------------------------------------------------------------
// Minimum weights.
// ---------------------------------------------------------------------------

// Exact minimum over all nonzero codewords s(a, b); incremental odometer
// scan, data-parallel over disjoint candidate ranges.
inline uint64_t min_weight_exact(const QuasiAbelianCode& code, unsigned threads = 1,
                                 uint64_t cap = 1ull << 26) {
    const GroupSpec& G = *code.a.grp;
    const HermField& H = *code.a.ring;
    if (code.rank == 0) throw InputError("zero code has no minimum weight");
    uint32_t n = G.order();
    uint64_t qq = H.order();
    uint64_t total = 1;
    for (uint32_t i = 0; i < n; ++i) {
        total *= qq;
        if (total > cap) throw CapError("exact weight scan exceeds the 2^26 cap");
    }

    // translate tables
    std::vector<std::vector<uint32_t>> ta(n), tb(n);
    for (uint32_t g = 0; g < n; ++g) {
        ta[g] = translate(g, code.a).c;
        tb[g] = translate(g, code.b).c;
    }

    std::vector<uint64_t> minima(std::max(1u, threads), UINT64_MAX);
    std::atomic<bool> floor_hit{false};
    parallel_chunks(1, total, threads, [&](unsigned tid, uint64_t lo, uint64_t hi) {
        std::vector<uint32_t> digits(n, 0), sa(n, 0), sb(n, 0);
        uint64_t v = lo;
        for (uint32_t i = 0; i < n; ++i) {
            digits[i] = static_cast<uint32_t>(v % qq);
            v /= qq;
        }
        uint32_t nza = 0, nzb = 0;
        for (uint32_t j = 0; j < n; ++j) {
            uint32_t accA = 0, accB = 0;
            for (uint32_t i = 0; i < n; ++i) {
                accA = H.add(accA, H.mul(digits[i], ta[i][j]));
                accB = H.add(accB, H.mul(digits[i], tb[i][j]));
            }
            sa[j] = accA;
            sb[j] = accB;
            nza += accA != 0;
            nzb += accB != 0;
        }
        uint64_t best = UINT64_MAX;
        auto consider = [&]() {
            uint64_t w = nza + nzb;
            if (w > 0 && w < best) {
                best = w;
                if (best == 1) floor_hit.store(true, std::memory_order_relaxed);
            }
        };
        consider();
        for (uint64_t it = lo + 1; it < hi; ++it) {
            uint32_t pos = 0;
            while (true) {
                uint32_t old = digits[pos];
                uint32_t nw = old + 1 == qq ? 0 : old + 1;
                digits[pos] = nw;
                uint32_t delta = H.sub(nw, old);
                const auto& rowA = ta[pos];
                const auto& rowB = tb[pos];
                for (uint32_t j = 0; j < n; ++j) {
                    uint32_t va = H.add(sa[j], H.mul(delta, rowA[j]));
                    nza += (va != 0) - (sa[j] != 0);
                    sa[j] = va;
                    uint32_t vb = H.add(sb[j], H.mul(delta, rowB[j]));
                    nzb += (vb != 0) - (sb[j] != 0);
                    sb[j] = vb;
                }
                if (nw != 0) break;
                ++pos;
            }
            consider();
            if (best == 1) break;
            if ((it & 0xffff) == 0 && floor_hit.load(std::memory_order_relaxed) && best > 1) {
                // another worker already proved the global floor
                break;
            }
        }
        minima[tid] = best;
    });
    uint64_t best = UINT64_MAX;
    for (uint64_t m : minima) best = std::min(best, m);
    if (best == UINT64_MAX) throw InvariantError("weight scan found no nonzero codeword");
    return best;
}

// Seeded sampled upper bound on the minimum weight; never reported as exact.
// Message words are drawn weight-stratified (uniform support size, then
// uniform support and values) so sparse codewords are reachable quickly.
inline uint64_t min_weight_sampled(const QuasiAbelianCode& code, uint64_t trials, uint64_t seed) {
    if (trials == 0) throw InputError("sampled weight scan needs at least one trial");
    const GroupSpec& G = *code.a.grp;
    const HermField& H = *code.a.ring;
    if (code.rank == 0) throw InputError("zero code has no minimum weight");
    Rng rng(seed);
    uint32_t n = G.order();
    uint64_t best = UINT64_MAX;
    AlgebraElem<HermField> s(&G, &H);
    std::vector<uint32_t> positions(n);
    for (uint32_t i = 0; i < n; ++i) positions[i] = i;
    for (uint64_t t = 0; t < trials; ++t) {
        std::fill(s.c.begin(), s.c.end(), 0);
        uint32_t w = 1 + static_cast<uint32_t>(rng.below(n));
        for (uint32_t i = 0; i < w; ++i) {  // partial Fisher-Yates for the support
            uint32_t j = i + static_cast<uint32_t>(rng.below(n - i));
            std::swap(positions[i], positions[j]);
            s.c[positions[i]] = 1 + static_cast<uint32_t>(rng.below(H.order() - 1));
        }
        auto sa = convolve(s, code.a);
        auto sb = convolve(s, code.b);
        uint64_t wt = weight(sa) + weight(sb);
        if (wt > 0) best = std::min(best, wt);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Census of the whole family.
// ---------------------------------------------------------------------------
struct CensusRow {
    std::vector<uint32_t> beta;  // coefficient labels
    uint64_t min_wt = 0;
    bool lcd_sufficient = false;
    bool lcd_exact = false;
    bool exact_scan = true;
};

struct CensusOptions {
    bool sampled = false;
    uint64_t trials = 10000;
    uint64_t seed = 0;
    unsigned threads = 1;
};

inline std::vector<CensusRow> family_census(const IdempotentSystem& sys,
                                            const std::vector<AlgebraElem<HermField>>& family,
                                            CensusOptions opts = {}) {
    const GroupSpec& G = sys.group();
    const HermField& H = sys.herm();
    std::vector<CensusRow> rows(family.size());
    auto one = AlgebraElem<HermField>::one(&G, &H);
    // row order follows the family enumeration order; parallel over rows
    // (grain 1: each row hides a full weight scan)
    parallel_chunks(0, family.size(), opts.threads, [&](unsigned, uint64_t lo, uint64_t hi) {
        for (uint64_t i = lo; i < hi; ++i) {
            const auto& beta = family[i];
            CensusRow row;
            row.beta = beta.c;
            auto code = code_from_pair(one, beta);
            if (code.rank != G.order()) throw InvariantError("family code is not full rank");
            row.lcd_sufficient = constant_unit_product(one, beta).has_value();
            row.lcd_exact = exact_lcd_check(code);
            if (opts.sampled) {
                row.min_wt = min_weight_sampled(code, opts.trials, opts.seed + i);
                row.exact_scan = false;
            } else {
                row.min_wt = min_weight_exact(code, 1);
                row.exact_scan = true;
            }
            rows[i] = std::move(row);
        }
    }, 1);
    return rows;
}

// Number of census rows whose relative weight min_wt / (2n) is at most delta.
inline uint64_t census_count_le(const std::vector<CensusRow>& rows, const Rational& delta,
                                uint32_t two_n) {
    uint64_t count = 0;
    for (const auto& r : rows) {
        __int128 lhs = static_cast<__int128>(r.min_wt) * delta.den;
        __int128 rhs = static_cast<__int128>(delta.num) * two_n;
        if (lhs <= rhs) ++count;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Component support and membership counting.
// ---------------------------------------------------------------------------
struct SupportInfo {
    std::vector<size_t> nontrivial;  // nontrivial merged components with e*a != 0
    bool trivial_hit = false;        // e0 * a != 0
    uint64_t ell = 0;                // sum of merged dims over `nontrivial`
};

inline SupportInfo component_support(const IdempotentSystem& sys,
                                     const AlgebraElem<HermField>& a) {
    SupportInfo info;
    for (size_t i = 0; i < sys.components().size(); ++i) {
        const auto& c = sys.components()[i];
        bool hit = !convolve(c.merged, a).is_zero();
        if (c.kind == IdempotentSystem::Kind::Trivial) {
            info.trivial_hit = hit;
        } else if (hit) {
            info.nontrivial.push_back(i);
            info.ell += c.dim_f;
        }
    }
    return info;
}

struct ContainCount {
    uint64_t count = 0;
    bool support_mismatch = false;
};

// Number of family codes containing the word (a, b); membership reduces to
// b = a * beta. Returns 0 with a flag when the supports of a and b differ.
inline ContainCount count_codes_containing(const IdempotentSystem& sys,
                                           const std::vector<AlgebraElem<HermField>>& family,
                                           const AlgebraElem<HermField>& a,
                                           const AlgebraElem<HermField>& b) {
    auto sa = component_support(sys, a);
    auto sb = component_support(sys, b);
    if (sa.trivial_hit != sb.trivial_hit || sa.nontrivial != sb.nontrivial)
        return {0, true};
    ContainCount out;
    for (const auto& beta : family)
        if (convolve(a, beta) == b) ++out.count;
    return out;
}

}  // namespace qaclcd
