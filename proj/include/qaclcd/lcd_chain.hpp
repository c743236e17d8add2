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

// 2-quasi-abelian codes over a finite chain ring S: idempotent lifting from
// the residue algebra, pair-generated codes with unit-pivot rank, the unit
// LCD criterion, the extensional residue/direct LCD equivalence, and
// parameter-preserving code lifting from the residue field.

#pragma once

#include "chain_ring.hpp"
#include "lcd_field.hpp"

namespace qaclcd {

enum class LiftMode { Naive, Teichmuller };

using ChainElemVec = AlgebraElem<ChainRing>;

inline ChainElemVec lift_elem(const ChainRing& S, const AlgebraElem<HermField>& a,
                              LiftMode mode = LiftMode::Naive) {
    if (!a.ring->compatible(S.residue_view()))
        throw InputError("element does not live over the residue field of this ring");
    ChainElemVec out(a.grp, &S);
    for (size_t i = 0; i < a.c.size(); ++i)
        out.c[i] = mode == LiftMode::Naive ? S.lift_naive(a.c[i]) : S.lift_teichmuller(a.c[i]);
    return out;
}

// h <- 3h^2 - 2h^3 squares the nilpotency degree of h - h^2 each step, so
// ceil(log2 s) + 1 iterations reach an exact idempotent. The result is
// independent of the chosen preimage (idempotents are unique modulo a nil
// ideal in a commutative ring).
inline ChainElemVec lift_idempotent(const AlgebraElem<HermField>& f, const ChainElemVec& start) {
    const ChainRing& S = *start.ring;
    if (convolve(f, f) != f) throw InputError("residue element is not idempotent");
    if (residue_of(start) != f) throw InputError("start is not a preimage of the idempotent");

    unsigned steps = 1;
    while ((1u << steps) < S.nilpotency()) ++steps;
    ChainElemVec h = start;
    for (unsigned i = 0; i <= steps; ++i) {
        auto h2 = convolve(h, h);
        auto h3 = convolve(h2, h);
        auto three_h2 = add(h2, add(h2, h2));
        h = sub(three_h2, add(h3, h3));
    }
    if (convolve(h, h) != h) throw InvariantError("idempotent lift did not converge");
    if (residue_of(h) != f) throw InvariantError("idempotent lift changed the residue");
    return h;
}

// Lift every merged idempotent of the residue system; the lifted system is
// orthogonal, complete, and residue-compatible, all checked exactly.
inline std::vector<ChainElemVec> lift_idempotent_system(const ChainRing& S,
                                                        const IdempotentSystem& sys) {
    const GroupSpec& G = sys.group();
    std::vector<ChainElemVec> lifts;
    for (const auto& comp : sys.components())
        lifts.push_back(lift_idempotent(comp.merged, lift_elem(S, comp.merged)));
    ChainElemVec total(&G, &S);
    for (size_t i = 0; i < lifts.size(); ++i) {
        total = add(total, lifts[i]);
        for (size_t j = i + 1; j < lifts.size(); ++j)
            if (!convolve(lifts[i], lifts[j]).is_zero())
                throw InvariantError("lifted idempotents are not orthogonal");
    }
    if (total != ChainElemVec::one(&G, &S))
        throw InvariantError("lifted idempotents do not sum to 1");
    return lifts;
}

// ---------------------------------------------------------------------------
// Pair codes over S.
// ---------------------------------------------------------------------------
using CMatrix = Mat<ChainRing>;

// Row reduction with unit pivots; returns the free rank and whether nonzero
// torsion rows remain.
inline std::pair<size_t, bool> chain_row_reduce(CMatrix& M) {
    const ChainRing& S = *M.ring;
    size_t r = 0;
    for (size_t c = 0; c < M.cols && r < M.rows; ++c) {
        size_t sel = SIZE_MAX;
        for (size_t i = r; i < M.rows; ++i)
            if (S.is_unit(M.at(i, c))) { sel = i; break; }
        if (sel == SIZE_MAX) continue;
        if (sel != r)
            for (size_t j = 0; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(r, j));
        uint32_t piv_inv = S.inverse(M.at(r, c));
        for (size_t j = 0; j < M.cols; ++j) M.at(r, j) = S.mul(M.at(r, j), piv_inv);
        for (size_t i = 0; i < M.rows; ++i) {
            if (i == r) continue;
            uint32_t f = M.at(i, c);
            if (S.is_zero(f)) continue;
            for (size_t j = 0; j < M.cols; ++j)
                M.at(i, j) = S.sub(M.at(i, j), S.mul(f, M.at(r, j)));
        }
        ++r;
    }
    bool torsion = false;
    for (size_t i = r; i < M.rows && !torsion; ++i)
        for (size_t j = 0; j < M.cols; ++j)
            if (!S.is_zero(M.at(i, j))) { torsion = true; break; }
    return {r, torsion};
}

struct ChainCode {
    ChainElemVec c, d;
    CMatrix gen;  // n x 2n, rows are g * (c, d)
    size_t free_rank = 0;
    bool is_free = false;
};

inline ChainCode chain_code_from_pair(const ChainElemVec& c, const ChainElemVec& d) {
    detail::check_pair(c, d);
    const GroupSpec& G = *c.grp;
    uint32_t n = G.order();
    ChainCode code{c, d, CMatrix(c.ring, n, 2 * static_cast<size_t>(n)), 0, false};
    for (uint32_t g = 0; g < n; ++g) {
        auto tc = translate(g, c);
        auto td = translate(g, d);
        for (uint32_t j = 0; j < n; ++j) {
            code.gen.at(g, j) = tc.c[j];
            code.gen.at(g, n + j) = td.c[j];
        }
    }
    CMatrix work = code.gen;
    auto [r, torsion] = chain_row_reduce(work);
    code.free_rank = r;
    code.is_free = !torsion;
    return code;
}

// Residue of the generator matrix, entrywise.
inline FMatrix residue_matrix(const CMatrix& M) {
    const ChainRing& S = *M.ring;
    FMatrix out(&S.residue_field(), M.rows, M.cols);
    for (size_t i = 0; i < M.a.size(); ++i) out.a[i] = S.pi(M.a[i]);
    return out;
}

// Sufficient LCD criterion over S: the residue of c*adj(c) + d*adj(d) is a
// unit of the residue group algebra.
inline bool unit_criterion_lcd(const ChainElemVec& c, const ChainElemVec& d) {
    auto w = add(convolve(c, adjoint(c)), convolve(d, adjoint(d)));
    return is_unit(residue_of(w));
}

// Generator of the Hermitian dual of the free code generated by (1, d):
// rows g * (-adj(d), 1).
inline CMatrix dual_generator(const ChainElemVec& d) {
    const GroupSpec& G = *d.grp;
    const ChainRing& S = *d.ring;
    uint32_t n = G.order();
    auto left = neg(adjoint(d));
    CMatrix M(&S, n, 2 * static_cast<size_t>(n));
    for (uint32_t g = 0; g < n; ++g) {
        auto tl = translate(g, left);
        for (uint32_t j = 0; j < n; ++j) M.at(g, j) = tl.c[j];
        M.at(g, n + g) = S.one();
    }
    return M;
}

// Hermitian inner product of two rows of length 2n over S.
inline uint32_t row_herm_inner(const ChainRing& S, const CMatrix& A, size_t i, const CMatrix& B,
                               size_t j) {
    uint32_t acc = S.zero();
    for (size_t k = 0; k < A.cols; ++k) acc = S.add(acc, S.mul(A.at(i, k), S.sigma(B.at(j, k))));
    return acc;
}

// ---------------------------------------------------------------------------
// Extensional residue/direct LCD equivalence for the free family (1, d).
// ---------------------------------------------------------------------------
struct LcdEquivalence {
    bool lcd_residue = false;
    std::optional<bool> lcd_direct;  // absent when the scan cap is exceeded
    bool agree = true;
};

// The direct side scans every word u(1, d) and tests membership in the dual
// extensionally: the n inner products against the generator rows are exactly
// the coefficients of u * (1 + d adj(d)), maintained incrementally.
inline LcdEquivalence lcd_residue_equivalence(const ChainElemVec& d, unsigned threads = 1,
                                              uint64_t scan_cap = 1ull << 22) {
    const GroupSpec& G = *d.grp;
    const ChainRing& S = *d.ring;
    const HermField& H = S.residue_view();
    uint32_t n = G.order();

    LcdEquivalence out;
    auto beta = residue_of(d);
    auto one_f = AlgebraElem<HermField>::one(&G, &H);
    out.lcd_residue = exact_lcd_check(code_from_pair(one_f, beta));

    uint64_t total = 1;
    bool feasible = true;
    for (uint32_t i = 0; i < n; ++i) {
        total *= S.size();
        if (total > scan_cap) { feasible = false; break; }
    }
    if (!feasible) {
        out.lcd_direct = std::nullopt;
        out.agree = true;
        return out;
    }

    auto w0 = add(ChainElemVec::one(&G, &S), convolve(d, adjoint(d)));
    std::vector<std::vector<uint32_t>> tw(n);
    for (uint32_t g = 0; g < n; ++g) tw[g] = translate(g, w0).c;

    std::atomic<bool> found{false};
    parallel_chunks(1, total, threads, [&](unsigned, uint64_t lo, uint64_t hi) {
        std::vector<uint32_t> digits(n, 0), z(n, 0);
        uint64_t v = lo;
        for (uint32_t i = 0; i < n; ++i) {
            digits[i] = static_cast<uint32_t>(v % S.size());
            v /= S.size();
        }
        uint32_t nz = 0;
        for (uint32_t j = 0; j < n; ++j) {
            uint32_t acc = 0;
            for (uint32_t i = 0; i < n; ++i) acc = S.add(acc, S.mul(digits[i], tw[i][j]));
            z[j] = acc;
            nz += acc != 0;
        }
        if (nz == 0) found.store(true, std::memory_order_relaxed);
        for (uint64_t it = lo + 1; it < hi; ++it) {
            uint32_t pos = 0;
            while (true) {
                uint32_t old = digits[pos];
                uint32_t nw = old + 1 == S.size() ? 0 : old + 1;
                digits[pos] = nw;
                uint32_t delta = S.sub(nw, old);
                const auto& row = tw[pos];
                for (uint32_t j = 0; j < n; ++j) {
                    uint32_t val = S.add(z[j], S.mul(delta, row[j]));
                    nz += (val != 0) - (z[j] != 0);
                    z[j] = val;
                }
                if (nw != 0) break;
                ++pos;
            }
            if (nz == 0) {
                found.store(true, std::memory_order_relaxed);
                break;
            }
            if ((it & 0x3fff) == 0 && found.load(std::memory_order_relaxed)) break;
        }
    });
    out.lcd_direct = !found.load();
    out.agree = (*out.lcd_direct == out.lcd_residue);
    return out;
}

// ---------------------------------------------------------------------------
// Minimum weight over S.
// ---------------------------------------------------------------------------
struct WeightResult {
    uint64_t value = 0;
    bool exact = false;
};

inline WeightResult chain_min_weight(const ChainCode& code, bool exact_mode, uint64_t trials = 10000,
                                     uint64_t seed = 0, unsigned threads = 1,
                                     uint64_t scan_cap = 1ull << 22) {
    const GroupSpec& G = *code.c.grp;
    const ChainRing& S = *code.c.ring;
    uint32_t n = G.order();

    if (exact_mode) {
        uint64_t total = 1;
        for (uint32_t i = 0; i < n; ++i) {
            total *= S.size();
            if (total > scan_cap) throw CapError("exact chain weight scan exceeds the 2^22 cap");
        }
        std::vector<std::vector<uint32_t>> tc(n), td(n);
        for (uint32_t g = 0; g < n; ++g) {
            tc[g] = translate(g, code.c).c;
            td[g] = translate(g, code.d).c;
        }
        std::vector<uint64_t> minima(std::max(1u, threads), UINT64_MAX);
        parallel_chunks(1, total, threads, [&](unsigned tid, uint64_t lo, uint64_t hi) {
            std::vector<uint32_t> digits(n, 0), uc(n, 0), ud(n, 0);
            uint64_t v = lo;
            for (uint32_t i = 0; i < n; ++i) {
                digits[i] = static_cast<uint32_t>(v % S.size());
                v /= S.size();
            }
            uint32_t nzc = 0, nzd = 0;
            for (uint32_t j = 0; j < n; ++j) {
                uint32_t accC = 0, accD = 0;
                for (uint32_t i = 0; i < n; ++i) {
                    accC = S.add(accC, S.mul(digits[i], tc[i][j]));
                    accD = S.add(accD, S.mul(digits[i], td[i][j]));
                }
                uc[j] = accC;
                ud[j] = accD;
                nzc += accC != 0;
                nzd += accD != 0;
            }
            uint64_t best = UINT64_MAX;
            if (nzc + nzd > 0) best = nzc + nzd;
            for (uint64_t it = lo + 1; it < hi; ++it) {
                uint32_t pos = 0;
                while (true) {
                    uint32_t old = digits[pos];
                    uint32_t nw = old + 1 == S.size() ? 0 : old + 1;
                    digits[pos] = nw;
                    uint32_t delta = S.sub(nw, old);
                    const auto& rowC = tc[pos];
                    const auto& rowD = td[pos];
                    for (uint32_t j = 0; j < n; ++j) {
                        uint32_t vc = S.add(uc[j], S.mul(delta, rowC[j]));
                        nzc += (vc != 0) - (uc[j] != 0);
                        uc[j] = vc;
                        uint32_t vd = S.add(ud[j], S.mul(delta, rowD[j]));
                        nzd += (vd != 0) - (ud[j] != 0);
                        ud[j] = vd;
                    }
                    if (nw != 0) break;
                    ++pos;
                }
                uint64_t w = nzc + nzd;
                if (w > 0 && w < best) best = w;
                if (best == 1) break;
            }
            minima[tid] = best;
        });
        uint64_t best = UINT64_MAX;
        for (uint64_t m : minima) best = std::min(best, m);
        if (best == UINT64_MAX) throw InputError("zero code has no minimum weight");
        return {best, true};
    }

    if (trials == 0) throw InputError("sampled weight scan needs at least one trial");
    Rng rng(seed);
    uint64_t best = UINT64_MAX;
    ChainElemVec u(&G, &S);
    std::vector<uint32_t> positions(n);
    for (uint32_t i = 0; i < n; ++i) positions[i] = i;
    for (uint64_t t = 0; t < trials; ++t) {
        std::fill(u.c.begin(), u.c.end(), 0u);
        uint32_t w = 1 + static_cast<uint32_t>(rng.below(n));
        for (uint32_t i = 0; i < w; ++i) {
            uint32_t j = i + static_cast<uint32_t>(rng.below(n - i));
            std::swap(positions[i], positions[j]);
            u.c[positions[i]] = 1 + static_cast<uint32_t>(rng.below(S.size() - 1));
        }
        auto uc = convolve(u, code.c);
        auto ud = convolve(u, code.d);
        uint64_t wt = weight(uc) + weight(ud);
        if (wt > 0) best = std::min(best, wt);
    }
    if (best == UINT64_MAX) throw InputError("sampled scan hit only zero codewords");
    return {best, false};
}

// ---------------------------------------------------------------------------
// Lifting a residue-field code to S.
// ---------------------------------------------------------------------------
struct LiftReport {
    std::vector<uint32_t> beta;               // residue generator coefficients
    std::vector<std::vector<uint32_t>> d;     // lifted generator, coordinate tuples
    uint32_t length = 0;                      // 2n
    uint32_t residue_dim = 0;                 // k = n
    uint64_t residue_min_wt = 0;
    bool residue_exact = true;
    size_t chain_rank = 0;
    uint64_t chain_min_wt = 0;
    bool chain_exact = true;
    bool residue_identity = false;            // pi(generator matrix) matches
    bool lcd_residue = false;
    bool lcd_unit_criterion = false;
    std::optional<bool> lcd_direct;
};

inline LiftReport lift_code(const ChainRing& S, const AlgebraElem<HermField>& beta, LiftMode mode,
                            unsigned threads = 1, uint64_t trials = 10000, uint64_t seed = 0) {
    const GroupSpec& G = *beta.grp;
    const HermField& H = S.residue_view();
    if (!beta.ring->compatible(H)) throw InputError("beta does not live over the residue field");
    uint32_t n = G.order();

    LiftReport rep;
    rep.beta = beta.c;
    rep.length = 2 * n;

    auto d = lift_elem(S, beta, mode);
    for (auto x : d.c) rep.d.push_back(S.coords(x));

    auto one_f = AlgebraElem<HermField>::one(&G, &H);
    auto residue_code = code_from_pair(one_f, beta);
    rep.residue_dim = static_cast<uint32_t>(residue_code.rank);
    rep.lcd_residue = exact_lcd_check(residue_code);

    uint64_t field_total = 1;
    bool field_feasible = true;
    for (uint32_t i = 0; i < n && field_feasible; ++i) {
        field_total *= H.order();
        if (field_total > (1ull << 26)) field_feasible = false;
    }
    if (field_feasible) {
        rep.residue_min_wt = min_weight_exact(residue_code, threads);
        rep.residue_exact = true;
    } else {
        rep.residue_min_wt = min_weight_sampled(residue_code, trials, seed);
        rep.residue_exact = false;
    }

    auto one_s = ChainElemVec::one(&G, &S);
    auto chain_code = chain_code_from_pair(one_s, d);
    rep.chain_rank = chain_code.free_rank;
    if (chain_code.free_rank != n || !chain_code.is_free)
        throw InvariantError("lifted code is not free of rank n");

    rep.residue_identity = residue_matrix(chain_code.gen) == residue_code.gen;
    if (!rep.residue_identity) throw InvariantError("residue of the lifted code is not the source code");

    rep.lcd_unit_criterion = unit_criterion_lcd(one_s, d);

    uint64_t chain_total = 1;
    bool chain_feasible = true;
    for (uint32_t i = 0; i < n && chain_feasible; ++i) {
        chain_total *= S.size();
        if (chain_total > (1ull << 22)) chain_feasible = false;
    }
    if (chain_feasible) {
        auto w = chain_min_weight(chain_code, true, trials, seed, threads);
        rep.chain_min_wt = w.value;
        rep.chain_exact = true;
        rep.lcd_direct = lcd_residue_equivalence(d, threads).lcd_direct;
    } else {
        auto w = chain_min_weight(chain_code, false, trials, seed, threads);
        rep.chain_min_wt = w.value;
        rep.chain_exact = false;
        rep.lcd_direct = std::nullopt;
    }
    return rep;
}

}  // namespace qaclcd
