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

// The commutative group algebra RG over a scalar ring R: a length-n
// coefficient vector indexed by group elements, with convolution product.
// R is a field view (HermField) or a finite chain ring; both expose the same
// table-backed element interface.

#pragma once

#include "group.hpp"
#include "linalg.hpp"

namespace qaclcd {

template <class R>
struct AlgebraElem {
    using Scalar = typename R::Elem;

    const GroupSpec* grp = nullptr;
    const R* ring = nullptr;
    std::vector<Scalar> c;

    AlgebraElem() = default;
    AlgebraElem(const GroupSpec* g, const R* r) : grp(g), ring(r), c(g->order(), r->zero()) {}

    static AlgebraElem zero(const GroupSpec* g, const R* r) { return AlgebraElem(g, r); }

    static AlgebraElem one(const GroupSpec* g, const R* r) {
        AlgebraElem e(g, r);
        e.c[g->identity()] = r->one();
        return e;
    }

    // scalar * group element
    static AlgebraElem monomial(const GroupSpec* g, const R* r, uint32_t pos, Scalar s) {
        AlgebraElem e(g, r);
        e.c[pos] = s;
        return e;
    }

    bool is_zero() const {
        for (Scalar x : c)
            if (!ring->is_zero(x)) return false;
        return true;
    }

    bool operator==(const AlgebraElem& o) const { return c == o.c; }
    bool operator!=(const AlgebraElem& o) const { return c != o.c; }
};

namespace detail {
template <class R>
inline void check_pair(const AlgebraElem<R>& a, const AlgebraElem<R>& b) {
    if (!a.grp || !b.grp || !(*a.grp == *b.grp)) throw InputError("group mismatch");
    if constexpr (R::kIsChain) {
        if (a.ring != b.ring) throw InputError("scalar ring mismatch");
    } else {
        if (!a.ring->compatible(*b.ring)) throw InputError("scalar ring mismatch");
    }
}
}  // namespace detail

template <class R>
AlgebraElem<R> add(const AlgebraElem<R>& a, const AlgebraElem<R>& b) {
    detail::check_pair(a, b);
    AlgebraElem<R> out(a.grp, a.ring);
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = a.ring->add(a.c[i], b.c[i]);
    return out;
}

template <class R>
AlgebraElem<R> sub(const AlgebraElem<R>& a, const AlgebraElem<R>& b) {
    detail::check_pair(a, b);
    AlgebraElem<R> out(a.grp, a.ring);
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = a.ring->sub(a.c[i], b.c[i]);
    return out;
}

template <class R>
AlgebraElem<R> neg(const AlgebraElem<R>& a) {
    AlgebraElem<R> out(a.grp, a.ring);
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = a.ring->neg(a.c[i]);
    return out;
}

template <class R>
AlgebraElem<R> scalar_mul(typename R::Elem s, const AlgebraElem<R>& a) {
    AlgebraElem<R> out(a.grp, a.ring);
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = a.ring->mul(s, a.c[i]);
    return out;
}

// Coefficient of the product at h is sum over g of a_g * b_{g^{-1} h}.
template <class R>
AlgebraElem<R> convolve(const AlgebraElem<R>& a, const AlgebraElem<R>& b) {
    detail::check_pair(a, b);
    const GroupSpec& G = *a.grp;
    const R& ring = *a.ring;
    AlgebraElem<R> out(a.grp, a.ring);
    uint32_t n = G.order();
    for (uint32_t g = 0; g < n; ++g) {
        auto ag = a.c[g];
        if (ring.is_zero(ag)) continue;
        for (uint32_t h = 0; h < n; ++h) {
            auto bh = b.c[h];
            if (ring.is_zero(bh)) continue;
            uint32_t k = G.op(g, h);
            out.c[k] = ring.add(out.c[k], ring.mul(ag, bh));
        }
    }
    return out;
}

// The conjugate-inverse automorphism: coefficient at g^{-1} becomes
// sigma(a_g). A ring automorphism of RG of order 2.
template <class R>
AlgebraElem<R> adjoint(const AlgebraElem<R>& a) {
    AlgebraElem<R> out(a.grp, a.ring);
    for (uint32_t g = 0; g < a.grp->order(); ++g) out.c[a.grp->inv(g)] = a.ring->sigma(a.c[g]);
    return out;
}

// Projection onto the coefficient at the group identity.
template <class R>
typename R::Elem identity_coeff(const AlgebraElem<R>& a) {
    return a.c[a.grp->identity()];
}

// Hermitian inner product as the direct sum over coefficients.
template <class R>
typename R::Elem herm_inner(const AlgebraElem<R>& a, const AlgebraElem<R>& b) {
    detail::check_pair(a, b);
    typename R::Elem acc = a.ring->zero();
    for (size_t i = 0; i < a.c.size(); ++i)
        acc = a.ring->add(acc, a.ring->mul(a.c[i], a.ring->sigma(b.c[i])));
    return acc;
}

template <class R>
size_t weight(const AlgebraElem<R>& a) {
    size_t w = 0;
    for (auto x : a.c)
        if (!a.ring->is_zero(x)) ++w;
    return w;
}

// g * a as a group translate.
template <class R>
AlgebraElem<R> translate(uint32_t g, const AlgebraElem<R>& a) {
    AlgebraElem<R> out(a.grp, a.ring);
    for (uint32_t h = 0; h < a.grp->order(); ++h) out.c[a.grp->op(g, h)] = a.c[h];
    return out;
}

// Matrix of x -> a*x in the group-element basis: M[h][g] = a_{h g^{-1}}.
inline FMatrix mult_matrix(const AlgebraElem<HermField>& a) {
    const GroupSpec& G = *a.grp;
    uint32_t n = G.order();
    FMatrix M(a.ring->F, n, n);
    for (uint32_t h = 0; h < n; ++h)
        for (uint32_t g = 0; g < n; ++g) M.at(h, g) = a.c[G.op(h, G.inv(g))];
    return M;
}

template <class R>
Mat<R> mult_matrix_generic(const AlgebraElem<R>& a) {
    const GroupSpec& G = *a.grp;
    uint32_t n = G.order();
    Mat<R> M(a.ring, n, n);
    for (uint32_t h = 0; h < n; ++h)
        for (uint32_t g = 0; g < n; ++g) M.at(h, g) = a.c[G.op(h, G.inv(g))];
    return M;
}

template <class R>
bool is_unit(const AlgebraElem<R>& a);

template <class R>
std::optional<AlgebraElem<R>> try_inverse(const AlgebraElem<R>& a);

inline bool is_unit(const AlgebraElem<HermField>& a) {
    return nonsingular(mult_matrix(a));
}

inline std::optional<AlgebraElem<HermField>> try_inverse(const AlgebraElem<HermField>& a) {
    FMatrix M = mult_matrix(a);
    std::vector<uint32_t> e(a.grp->order(), 0);
    e[a.grp->identity()] = 1;
    auto x = solve(M, e);
    if (!x) return std::nullopt;
    AlgebraElem<HermField> out(a.grp, a.ring);
    out.c = *x;
    return out;
}

// Chain-ring units are exactly the elements whose residue is a unit. The
// inverse is lifted from the residue inverse by x <- x(2 - ax), which
// doubles the precision each step.
template <class R>
AlgebraElem<HermField> residue_of(const AlgebraElem<R>& a) {
    static_assert(R::kIsChain);
    AlgebraElem<HermField> out(a.grp, &a.ring->residue_view());
    for (size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.ring->pi(a.c[i]);
    return out;
}

template <class R>
bool is_unit_chain(const AlgebraElem<R>& a) {
    static_assert(R::kIsChain);
    return is_unit(residue_of(a));
}

template <class R>
std::optional<AlgebraElem<R>> try_inverse_chain(const AlgebraElem<R>& a) {
    static_assert(R::kIsChain);
    auto res_inv = try_inverse(residue_of(a));
    if (!res_inv) return std::nullopt;
    AlgebraElem<R> x(a.grp, a.ring);
    for (size_t i = 0; i < x.c.size(); ++i) x.c[i] = a.ring->lift_naive(res_inv->c[i]);
    AlgebraElem<R> two = add(AlgebraElem<R>::one(a.grp, a.ring), AlgebraElem<R>::one(a.grp, a.ring));
    unsigned steps = 1;
    for (uint32_t s = a.ring->nilpotency(); (1u << steps) < s;) ++steps;
    for (unsigned i = 0; i <= steps; ++i) x = convolve(x, sub(two, convolve(a, x)));
    if (convolve(a, x) != AlgebraElem<R>::one(a.grp, a.ring))
        return std::nullopt;
    return x;
}

}  // namespace qaclcd
