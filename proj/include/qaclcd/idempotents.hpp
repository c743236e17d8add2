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

// Primitive idempotents of the semisimple group algebra over F_{q^2} via
// character-orbit sums in the splitting field, classified under the
// conjugate-inverse automorphism into the trivial / fixed / paired families.

#pragma once

#include "group_algebra.hpp"

namespace qaclcd {

struct CharOrbit {
    uint32_t rep = 0;               // smallest member
    std::vector<uint32_t> members;  // sorted ascending
    uint32_t size() const { return static_cast<uint32_t>(members.size()); }
};

// Partition of the character indices (identified with group elements) into
// orbits of coordinatewise multiplication by `multiplier`. The trivial orbit
// {0} comes first; orbits are sorted by representative.
inline std::vector<CharOrbit> compute_orbits(const GroupSpec& G, uint64_t multiplier) {
    if (std::gcd(static_cast<uint64_t>(G.order()), multiplier) != 1)
        throw InputError("gcd(n, q) = 1 violated");
    uint32_t n = G.order();
    std::vector<char> seen(n, 0);
    std::vector<CharOrbit> orbits;
    for (uint32_t a = 0; a < n; ++a) {
        if (seen[a]) continue;
        CharOrbit o;
        uint32_t cur = a;
        do {
            o.members.push_back(cur);
            seen[cur] = 1;
            cur = G.scale(cur, multiplier);
        } while (cur != a);
        std::sort(o.members.begin(), o.members.end());
        o.rep = o.members.front();
        orbits.push_back(std::move(o));
    }
    return orbits;
}

inline size_t orbit_containing(const std::vector<CharOrbit>& orbits, uint32_t idx) {
    for (size_t i = 0; i < orbits.size(); ++i)
        if (std::binary_search(orbits[i].members.begin(), orbits[i].members.end(), idx)) return i;
    throw InvariantError("character index not covered by any orbit");
}

// Image of an orbit under the dual action of the conjugate-inverse
// automorphism: the orbit containing (-q) * representative.
inline size_t tau_orbit_image(const GroupSpec& G, const std::vector<CharOrbit>& orbits,
                              size_t oi, uint64_t q) {
    uint32_t rep = orbits[oi].rep;
    uint64_t e = G.exponent();
    uint64_t mult = (e - (q % e)) % e;  // -q mod every invariant factor via exponent multiple
    return orbit_containing(orbits, G.scale(rep, mult));
}

class IdempotentSystem {
  public:
    enum class Kind { Trivial, Fixed, Paired };

    struct Component {
        Kind kind = Kind::Trivial;
        size_t orbit_a = 0, orbit_b = 0;        // orbit_b only meaningful for Paired
        AlgebraElem<HermField> merged;          // the idempotent generating the component ideal
        AlgebraElem<HermField> prim_a, prim_b;  // primitive pieces; prim_b only for Paired
        uint32_t dim_f = 0;                     // dim over F of the merged ideal
    };

    const GroupSpec& group() const { return *grp_; }
    const TowerContext& tower() const { return *tower_; }
    const HermField& herm() const { return tower_->herm(); }
    const std::vector<CharOrbit>& orbits() const { return orbits_; }
    const std::vector<Component>& components() const { return comps_; }
    size_t fixed_count() const { return r_; }
    size_t paired_count() const { return s_; }
    uint32_t splitting_degree() const { return tower_->t(); }

    // All primitive idempotents: e0, the fixed ones, then both members of
    // each pair.
    std::vector<const AlgebraElem<HermField>*> primitive_idempotents() const {
        std::vector<const AlgebraElem<HermField>*> out;
        for (const auto& c : comps_) {
            out.push_back(&c.prim_a);
            if (c.kind == Kind::Paired) out.push_back(&c.prim_b);
        }
        return out;
    }

    // Minimum dim over F of a nontrivial primitive component ideal.
    uint32_t min_component_dim() const {
        if (grp_->order() == 1) throw InputError("no nontrivial idempotent for the trivial group");
        uint32_t mu = UINT32_MAX;
        for (size_t i = 1; i < orbits_.size(); ++i) mu = std::min(mu, orbits_[i].size());
        return mu;
    }

    // F-basis of the merged component ideal, deterministic via row reduction
    // of the translates of its idempotent.
    std::vector<AlgebraElem<HermField>> component_basis(size_t comp) const {
        const Component& C = comps_[comp];
        uint32_t n = grp_->order();
        FMatrix M(herm().F, n, n);
        for (uint32_t g = 0; g < n; ++g) {
            AlgebraElem<HermField> t = translate(g, C.merged);
            for (uint32_t j = 0; j < n; ++j) M.at(g, j) = t.c[j];
        }
        size_t r = rref(M);
        if (r != C.dim_f) throw InvariantError("component dimension mismatch");
        std::vector<AlgebraElem<HermField>> basis;
        basis.reserve(r);
        for (size_t i = 0; i < r; ++i) {
            AlgebraElem<HermField> b(grp_, &herm());
            for (uint32_t j = 0; j < n; ++j) b.c[j] = M.at(i, j);
            basis.push_back(std::move(b));
        }
        return basis;
    }

    // Dim over F_q of the fixed subspace of the conjugate-inverse
    // automorphism restricted to the merged component ideal.
    uint32_t fixed_subspace_dim(size_t comp) const {
        const FieldTable& B = tower_->base();
        const FieldTable& Q = tower_->quad();
        uint32_t n = grp_->order();
        uint64_t q = tower_->q();

        // coordinates of F_{q^2} over F_q in the basis {1, xi}
        uint32_t xi = Q.generator();
        std::vector<std::pair<uint32_t, uint32_t>> coords(Q.order(), {0, 0});
        for (uint32_t a = 0; a < B.order(); ++a)
            for (uint32_t b = 0; b < B.order(); ++b) {
                uint32_t x = Q.add(tower_->embed_base(a), Q.mul(tower_->embed_base(b), xi));
                coords[x] = {a, b};
            }

        auto block = [&](uint32_t z, uint32_t out[2][2]) {
            auto [za, zb] = coords[z];
            auto [ca, cb] = coords[Q.mul(z, xi)];
            out[0][0] = za; out[0][1] = ca;
            out[1][0] = zb; out[1][1] = cb;
        };

        size_t dim = 2 * static_cast<size_t>(n);
        FMatrix stack(&B, 2 * dim, dim);

        // rows 0..dim: P - I where P is multiplication by the idempotent
        const AlgebraElem<HermField>& e = comps_[comp].merged;
        for (uint32_t h = 0; h < n; ++h)
            for (uint32_t g = 0; g < n; ++g) {
                uint32_t z = e.c[grp_->op(h, grp_->inv(g))];
                uint32_t blk[2][2];
                block(z, blk);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) stack.at(2 * h + i, 2 * g + j) = blk[i][j];
            }
        for (size_t i = 0; i < dim; ++i) stack.at(i, i) = B.sub(stack.at(i, i), 1);

        // rows dim..2dim: T - I where T is the conjugate-inverse map
        auto [sa, sb] = coords[Q.pow(xi, q)];
        for (uint32_t g = 0; g < n; ++g) {
            uint32_t gi = grp_->inv(g);
            stack.at(dim + 2 * gi + 0, 2 * g + 0) = 1;
            stack.at(dim + 2 * gi + 0, 2 * g + 1) = sa;
            stack.at(dim + 2 * gi + 1, 2 * g + 1) = sb;
        }
        for (size_t i = 0; i < dim; ++i) stack.at(dim + i, i) = B.sub(stack.at(dim + i, i), 1);

        size_t rk = rank(std::move(stack));
        return static_cast<uint32_t>(dim - rk);
    }

    friend IdempotentSystem build_idempotent_system(const GroupSpec&, const TowerContext&);

  private:
    const GroupSpec* grp_ = nullptr;
    const TowerContext* tower_ = nullptr;
    std::vector<CharOrbit> orbits_;
    std::vector<Component> comps_;
    size_t r_ = 0, s_ = 0;
};

inline IdempotentSystem build_idempotent_system(const GroupSpec& G, const TowerContext& tower) {
    if (std::gcd<uint64_t>(G.order(), tower.p()) != 1)
        throw InputError("gcd(n, q) = 1 violated");
    if (G.exponent() != tower.group_exponent())
        throw InputError("tower was built for a different group exponent");

    IdempotentSystem sys;
    sys.grp_ = &G;
    sys.tower_ = &tower;
    uint64_t q = tower.q();
    sys.orbits_ = compute_orbits(G, q * q);

    const FieldTable& S = tower.split();
    const HermField& H = tower.herm();
    uint32_t n = G.order();
    uint64_t E = G.exponent();
    uint32_t zeta_needed = static_cast<uint32_t>((S.order() - 1) / E);
    // fixed primitive E-th root of unity
    uint32_t n_inv = S.inv(S.scalar_from_int(n));

    // chi_a(h) = zeta ^ (sum_i a_i h_i E/n_i); exponent stays modulo E
    const auto& factors = G.invariant_factors();
    auto chi_exponent = [&](uint32_t a, uint32_t h) {
        auto at = G.to_tuple(a);
        auto ht = G.to_tuple(h);
        uint64_t acc = 0;
        for (size_t i = 0; i < factors.size(); ++i)
            acc = (acc + static_cast<uint64_t>(at[i]) * ht[i] % E * (E / factors[i])) % E;
        return acc;
    };

    // idempotent of one orbit, with coefficients verified to lie in F_{q^2}
    auto orbit_idempotent = [&](const CharOrbit& o) {
        AlgebraElem<HermField> e(&G, &H);
        for (uint32_t g = 0; g < n; ++g) {
            uint32_t ginv = G.inv(g);
            uint32_t acc = 0;
            for (uint32_t a : o.members)
                acc = S.add(acc, S.pow(S.exp(zeta_needed), chi_exponent(a, ginv)));
            uint32_t coeff = S.mul(n_inv, acc);
            auto down = tower.quad_preimage(coeff);
            if (!down) throw InvariantError("idempotent coefficient escapes F_{q^2}");
            e.c[g] = *down;
        }
        return e;
    };

    std::vector<AlgebraElem<HermField>> orbit_es;
    orbit_es.reserve(sys.orbits_.size());
    for (const auto& o : sys.orbits_) orbit_es.push_back(orbit_idempotent(o));

    // classification under the dual action
    std::vector<size_t> tau_img(sys.orbits_.size());
    for (size_t i = 0; i < sys.orbits_.size(); ++i)
        tau_img[i] = tau_orbit_image(G, sys.orbits_, i, q);

    IdempotentSystem::Component trivial;
    trivial.kind = IdempotentSystem::Kind::Trivial;
    trivial.orbit_a = 0;
    trivial.merged = orbit_es[0];
    trivial.prim_a = orbit_es[0];
    trivial.dim_f = 1;
    sys.comps_.push_back(std::move(trivial));

    std::vector<char> used(sys.orbits_.size(), 0);
    used[0] = 1;
    std::vector<IdempotentSystem::Component> fixed, paired;
    for (size_t i = 1; i < sys.orbits_.size(); ++i) {
        if (used[i]) continue;
        if (tau_img[i] == i) {
            IdempotentSystem::Component c;
            c.kind = IdempotentSystem::Kind::Fixed;
            c.orbit_a = i;
            c.merged = orbit_es[i];
            c.prim_a = orbit_es[i];
            c.dim_f = sys.orbits_[i].size();
            used[i] = 1;
            fixed.push_back(std::move(c));
        } else {
            size_t j = tau_img[i];
            if (used[j] || tau_img[j] != i) throw InvariantError("orbit pairing is not an involution");
            IdempotentSystem::Component c;
            c.kind = IdempotentSystem::Kind::Paired;
            c.orbit_a = i;
            c.orbit_b = j;
            c.prim_a = orbit_es[i];
            c.prim_b = orbit_es[j];
            c.merged = add(orbit_es[i], orbit_es[j]);
            c.dim_f = sys.orbits_[i].size() + sys.orbits_[j].size();
            used[i] = used[j] = 1;
            paired.push_back(std::move(c));
        }
    }
    auto by_rep = [&](const IdempotentSystem::Component& a, const IdempotentSystem::Component& b) {
        return sys.orbits_[a.orbit_a].rep < sys.orbits_[b.orbit_a].rep;
    };
    std::sort(fixed.begin(), fixed.end(), by_rep);
    std::sort(paired.begin(), paired.end(), by_rep);
    sys.r_ = fixed.size();
    sys.s_ = paired.size();
    for (auto& c : fixed) sys.comps_.push_back(std::move(c));
    for (auto& c : paired) sys.comps_.push_back(std::move(c));

    // exact structural checks: idempotency, orthogonality, completeness,
    // dimension bookkeeping
    auto prims = sys.primitive_idempotents();
    AlgebraElem<HermField> total(&G, &H);
    for (size_t i = 0; i < prims.size(); ++i) {
        if (convolve(*prims[i], *prims[i]) != *prims[i]) throw InvariantError("idempotency failed");
        total = add(total, *prims[i]);
        for (size_t j = i + 1; j < prims.size(); ++j)
            if (!convolve(*prims[i], *prims[j]).is_zero())
                throw InvariantError("orthogonality failed");
    }
    if (total != AlgebraElem<HermField>::one(&G, &H)) throw InvariantError("completeness failed");
    uint64_t dims = 0;
    for (const auto& c : sys.comps_) {
        dims += c.dim_f;
        if (c.kind == IdempotentSystem::Kind::Paired && c.dim_f % 2 != 0)
            throw InvariantError("paired component dimension must be even");
    }
    if (dims != n) throw InvariantError("component dimensions do not sum to n");
    return sys;
}

// Exhaustive primitivity check: a component ideal of size at most the cap
// contains no idempotents besides 0 and its generator.
inline bool component_is_primitive(const IdempotentSystem& sys, const AlgebraElem<HermField>& e,
                                   uint32_t dim_f, uint64_t cap = 1ull << 16) {
    const HermField& H = sys.herm();
    uint64_t qq = H.order();
    uint64_t total = 1;
    for (uint32_t i = 0; i < dim_f; ++i) {
        total *= qq;
        if (total > cap) throw CapError("component too large for exhaustive primitivity check");
    }
    // basis via translates of e
    const GroupSpec& G = sys.group();
    uint32_t n = G.order();
    FMatrix M(H.F, n, n);
    for (uint32_t g = 0; g < n; ++g) {
        AlgebraElem<HermField> t = translate(g, e);
        for (uint32_t j = 0; j < n; ++j) M.at(g, j) = t.c[j];
    }
    size_t r = rref(M);
    if (r != dim_f) return false;
    std::vector<uint32_t> digits(dim_f, 0);
    AlgebraElem<HermField> x(&G, &H);
    size_t idempotents_found = 0;
    for (uint64_t it = 0; it < total; ++it) {
        // decode digits -> element
        uint64_t v = it;
        for (uint32_t d = 0; d < dim_f; ++d) {
            digits[d] = static_cast<uint32_t>(v % qq);
            v /= qq;
        }
        for (uint32_t j = 0; j < n; ++j) {
            uint32_t acc = 0;
            for (uint32_t d = 0; d < dim_f; ++d)
                acc = H.add(acc, H.mul(digits[d], M.at(d, j)));
            x.c[j] = acc;
        }
        if (convolve(x, x) == x) {
            if (!x.is_zero() && x != e) return false;
            ++idempotents_found;
        }
    }
    return idempotents_found == 2;  // exactly 0 and e
}

}  // namespace qaclcd
