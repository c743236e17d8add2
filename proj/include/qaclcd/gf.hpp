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

// Table-backed arithmetic in small finite fields F_{p^m} (order capped at
// 2^20), plus quadratic/splitting towers with deterministic embeddings.
//
// Element labels are the base-p integer encoding of the coefficient vector
// in the polynomial basis: label = sum c_i p^i for x = sum c_i X^i modulo
// the defining polynomial. Labels 0..p-1 are the prime-field constants.
// Runtime arithmetic never touches polynomials: multiplication uses exp/log
// tables and addition uses the Zech logarithm table.

#pragma once

#include <memory>
#include <optional>

#include "util.hpp"

namespace qaclcd {

struct FieldSpec {
    uint32_t p = 0;   // prime characteristic
    uint32_t m = 0;   // extension degree over F_p
    uint64_t order = 0;
    bool operator==(const FieldSpec& o) const { return p == o.p && m == o.m; }
};

namespace detail {

using Poly = std::vector<uint32_t>;  // coefficients low to high, trimmed

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_from_label(uint64_t v, uint32_t p) {
    Poly a;
    while (v) {
        a.push_back(static_cast<uint32_t>(v % p));
        v /= p;
    }
    return a;
}

inline uint64_t poly_label(const Poly& a, uint32_t p) {
    uint64_t v = 0;
    for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

// a*b mod f over F_p, f monic.
inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    size_t m = f.size() - 1;
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<uint64_t>(a[i]) * b[j];
    }
    for (size_t d = acc.size(); d-- > m;) {
        uint64_t c = acc[d] % p;
        if (!c) continue;
        // subtract c * x^(d-m) * f
        for (size_t k = 0; k <= m; ++k) {
            uint64_t sub = c * f[k] % p;
            size_t pos = d - m + k;
            acc[pos] = (acc[pos] + static_cast<uint64_t>(p) * p - sub) % p;  // keep small
        }
        acc[d] = 0;
    }
    Poly r(std::min(acc.size(), m));
    for (size_t i = 0; i < r.size(); ++i) r[i] = static_cast<uint32_t>(acc[i] % p);
    poly_trim(r);
    return r;
}

inline Poly poly_powmod(Poly a, uint64_t e, const Poly& f, uint32_t p) {
    Poly r{1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, a, f, p);
        a = poly_mulmod(a, a, f, p);
        e >>= 1;
    }
    return r;
}

inline Poly poly_mod(Poly a, const Poly& f, uint32_t p) {
    size_t m = f.size() - 1;
    while (a.size() > m) {
        uint32_t c = a.back();
        size_t d = a.size() - 1;
        if (c) {
            for (size_t k = 0; k <= m; ++k) {
                uint64_t sub = static_cast<uint64_t>(c) * f[k] % p;
                a[d - m + k] = static_cast<uint32_t>((a[d - m + k] + p - sub) % p);
            }
        }
        a.pop_back();
    }
    poly_trim(a);
    return a;
}

inline Poly poly_gcd(Poly a, Poly b, uint32_t p) {
    auto inv_mod_p = [p](uint32_t v) {
        uint32_t r = 1;
        for (uint32_t e = p - 2; e; e >>= 1) {
            if (e & 1) r = static_cast<uint32_t>(static_cast<uint64_t>(r) * v % p);
            v = static_cast<uint32_t>(static_cast<uint64_t>(v) * v % p);
        }
        return r;
    };
    while (!b.empty()) {
        // a mod b with b made monic on the fly
        uint32_t lead_inv = inv_mod_p(b.back());
        Poly bm = b;
        for (auto& c : bm) c = static_cast<uint32_t>(static_cast<uint64_t>(c) * lead_inv % p);
        a = poly_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

// Deterministic irreducibility test for monic f of degree m over F_p:
// X^{p^m} = X mod f, and gcd(X^{p^{m/r}} - X, f) = 1 for every prime r | m.
inline bool poly_is_irreducible(const Poly& f, uint32_t p) {
    size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    Poly x{0, 1};
    Poly t = x;
    std::vector<Poly> frob_powers(m + 1);  // frob_powers[j] = X^{p^j} mod f
    frob_powers[0] = x;
    for (size_t j = 1; j <= m; ++j) {
        t = poly_powmod(t, p, f, p);
        frob_powers[j] = t;
    }
    // X^{p^m} == X
    if (frob_powers[m] != x) return false;
    for (auto [r, e] : factorize_u64(m)) {
        (void)e;
        size_t j = m / static_cast<size_t>(r);
        Poly diff = frob_powers[j];
        // diff - x
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<uint32_t>((diff[1] + p - 1) % p);
        poly_trim(diff);
        Poly g = poly_gcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree m: smallest value
// of sum c_i p^i over the non-leading coefficients.
inline Poly find_irreducible(uint32_t p, uint32_t m) {
    uint64_t span = 1;
    for (uint32_t i = 0; i < m; ++i) span *= p;
    for (uint64_t v = 0; v < span; ++v) {
        Poly f = poly_from_label(v, p);
        f.resize(m + 1, 0);
        f[m] = 1;
        if (poly_is_irreducible(f, p)) return f;
    }
    throw InvariantError("no irreducible polynomial found");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// FieldTable: one finite field with exp/log/Zech tables.
// ---------------------------------------------------------------------------
class FieldTable {
  public:
    using Elem = uint32_t;
    static constexpr bool kIsChain = false;
    static constexpr uint64_t kMaxOrder = 1ull << 20;
    static constexpr uint32_t kNoLog = UINT32_MAX;

    static FieldTable build(uint32_t p, uint32_t m) {
        if (!is_prime_u64(p)) throw InputError("p not prime");
        if (m == 0) throw InputError("extension degree must be positive");
        uint64_t order = pow_u64_sat(p, m);
        if (order > kMaxOrder) throw CapError("field order exceeds 2^20 table cap");
        FieldTable F;
        F.spec_ = FieldSpec{p, m, order};
        F.f_ = detail::find_irreducible(p, m);
        F.init_tables();
        return F;
    }

    const FieldSpec& spec() const { return spec_; }
    uint64_t order() const { return spec_.order; }
    uint32_t characteristic() const { return spec_.p; }
    uint32_t degree() const { return spec_.m; }
    const std::vector<uint32_t>& defining_poly() const { return f_; }
    Elem generator() const { return gen_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }

    Elem add(Elem a, Elem b) const {
        if (a == 0) return b;
        if (b == 0) return a;
        uint64_t la = log_[a], lb = log_[b];
        uint64_t d = lb >= la ? lb - la : lb + ord_ - la;
        uint32_t z = zech_[d];
        if (z == kNoLog) return 0;
        uint64_t e = la + z;
        if (e >= ord_) e -= ord_;
        return exp_[e];
    }

    Elem neg(Elem a) const {
        if (a == 0 || spec_.p == 2) return a;
        uint64_t e = log_[a] + ord_ / 2;
        if (e >= ord_) e -= ord_;
        return exp_[e];
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        uint64_t e = static_cast<uint64_t>(log_[a]) + log_[b];
        if (e >= ord_) e -= ord_;
        return exp_[e];
    }

    Elem inv(Elem a) const {
        if (a == 0) throw InputError("inverse of zero");
        uint64_t la = log_[a];
        return exp_[la == 0 ? 0 : ord_ - la];
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        uint64_t r = mulmod_u64(log_[a], e % ord_, ord_);
        return exp_[r];
    }

    uint64_t log(Elem a) const {
        if (a == 0) throw InputError("log of zero");
        return log_[a];
    }
    Elem exp(uint64_t k) const { return exp_[k % ord_]; }

    Elem from_uint(uint64_t label) const {
        if (label >= spec_.order) throw InputError("field element label out of range");
        return static_cast<Elem>(label);
    }

    // k mod p as a prime-field constant.
    Elem scalar_from_int(uint64_t k) const { return static_cast<Elem>(k % spec_.p); }

    // x -> x^s; s must be a power of the characteristic.
    Elem frobenius(Elem x, uint64_t subfield_order) const {
        uint64_t s = subfield_order;
        if (s < 2) throw InputError("subfield order must be at least 2");
        while (s % spec_.p == 0) s /= spec_.p;
        if (s != 1) throw InputError("subfield order is not a power of the characteristic");
        return pow(x, subfield_order);
    }

    // Membership in the subfield of the given order (must divide as p-powers).
    bool in_subfield(Elem x, uint64_t suborder) const { return pow(x, suborder) == x; }

  private:
    void init_tables() {
        uint64_t N = spec_.order;
        ord_ = N - 1;
        exp_.resize(ord_ ? ord_ : 1);
        log_.assign(N, kNoLog);
        if (ord_ == 0) throw InvariantError("field of order 1");

        // smallest primitive element by label
        gen_ = 0;
        if (ord_ == 1) {
            gen_ = 1;
        } else {
            auto factors = factorize_u64(ord_);
            for (uint64_t cand = 2; cand < N; ++cand) {
                detail::Poly c = detail::poly_from_label(cand, spec_.p);
                bool primitive = true;
                for (auto [r, e] : factors) {
                    (void)e;
                    if (detail::poly_powmod(c, ord_ / r, f_, spec_.p) == detail::Poly{1}) {
                        primitive = false;
                        break;
                    }
                }
                if (primitive) {
                    gen_ = static_cast<Elem>(cand);
                    break;
                }
            }
            if (gen_ == 0) throw InvariantError("no primitive element found");
        }

        detail::Poly g = detail::poly_from_label(gen_, spec_.p);
        detail::Poly cur{1};
        for (uint64_t k = 0; k < ord_; ++k) {
            uint64_t label = detail::poly_label(cur, spec_.p);
            exp_[k] = static_cast<uint32_t>(label);
            log_[label] = static_cast<uint32_t>(k);
            cur = detail::poly_mulmod(cur, g, f_, spec_.p);
        }
        if (cur != detail::Poly{1}) throw InvariantError("generator order mismatch");

        zech_.resize(ord_);
        for (uint64_t k = 0; k < ord_; ++k) {
            uint32_t v = exp_[k];
            uint32_t c0 = v % spec_.p;
            uint32_t w = v - c0 + (c0 + 1) % spec_.p;  // v + 1 in the polynomial basis
            zech_[k] = (w == 0) ? kNoLog : log_[w];
        }
    }

    FieldSpec spec_;
    std::vector<uint32_t> f_;
    Elem gen_ = 0;
    uint64_t ord_ = 0;
    std::vector<uint32_t> exp_, log_, zech_;
};

// ---------------------------------------------------------------------------
// Field embedding K -> L determined by sending K's primitive element to the
// smallest-label root of its minimal polynomial in L.
// ---------------------------------------------------------------------------
inline std::vector<uint32_t> build_embedding(const FieldTable& K, const FieldTable& L) {
    if (K.characteristic() != L.characteristic() || L.degree() % K.degree() != 0)
        throw InputError("no embedding between these fields");
    uint32_t p = K.characteristic();
    std::vector<uint32_t> emb(K.order(), 0);
    if (K.degree() == L.degree() && K.defining_poly() == L.defining_poly()) {
        for (uint64_t x = 0; x < K.order(); ++x) emb[x] = static_cast<uint32_t>(x);
        return emb;
    }

    // minimal polynomial of K's generator over F_p (computed inside K)
    uint32_t d = K.degree();
    std::vector<uint32_t> minpoly{1};  // coefficients in K, low to high
    uint32_t conj = K.generator();
    for (uint32_t j = 0; j < d; ++j) {
        std::vector<uint32_t> next(minpoly.size() + 1, 0);
        for (size_t i = 0; i < minpoly.size(); ++i) {
            next[i + 1] = K.add(next[i + 1], minpoly[i]);
            next[i] = K.add(next[i], K.mul(minpoly[i], K.neg(conj)));
        }
        minpoly = std::move(next);
        conj = K.pow(conj, p);
    }
    for (uint32_t c : minpoly)
        if (c >= p) throw InvariantError("minimal polynomial not over the prime field");

    // smallest root in L (roots exist in the unique subfield of K's order)
    uint32_t root = 0;
    bool found = false;
    for (uint64_t x = 0; x < L.order(); ++x) {
        if (!L.in_subfield(static_cast<uint32_t>(x), K.order())) continue;
        uint32_t acc = 0;
        for (size_t i = minpoly.size(); i-- > 0;)
            acc = L.add(L.mul(acc, static_cast<uint32_t>(x)), minpoly[i]);
        if (acc == 0) {
            root = static_cast<uint32_t>(x);
            found = true;
            break;
        }
    }
    if (!found) throw InvariantError("embedding root not found");

    uint32_t cur = 1;
    for (uint64_t k = 0; k + 1 < K.order(); ++k) {
        emb[K.exp(k)] = cur;
        cur = L.mul(cur, root);
    }
    emb[0] = 0;
    return emb;
}

// ---------------------------------------------------------------------------
// HermField: the quadratic extension F = F_{q^2} viewed with its order-2
// automorphism x -> x^q. This is the scalar ring of all field-side algebra.
// ---------------------------------------------------------------------------
struct HermField {
    using Elem = uint32_t;
    static constexpr bool kIsChain = false;

    const FieldTable* F = nullptr;
    uint64_t q = 0;  // suborder; F has order q^2

    HermField() = default;
    HermField(const FieldTable* table, uint64_t suborder) : F(table), q(suborder) {
        if (!F || F->order() != q * q) throw InputError("field order is not the square of q");
    }

    uint64_t order() const { return F->order(); }
    const FieldTable& field() const { return *F; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const { return F->add(a, b); }
    Elem sub(Elem a, Elem b) const { return F->sub(a, b); }
    Elem neg(Elem a) const { return F->neg(a); }
    Elem mul(Elem a, Elem b) const { return F->mul(a, b); }
    Elem inv(Elem a) const { return F->inv(a); }
    Elem sigma(Elem a) const { return F->pow(a, q); }
    Elem norm(Elem a) const { return F->pow(a, q + 1); }
    bool in_base(Elem a) const { return F->pow(a, q) == a; }

    bool compatible(const HermField& o) const {
        return q == o.q && F->spec() == o.F->spec();
    }

    // Exact solution set of nu^{q+1} = c: q+1 elements when c is in F_q^*,
    // {0} when c = 0, empty otherwise. Sorted by label.
    std::vector<Elem> norm_preimages(Elem c) const {
        if (c == 0) return {0};
        uint64_t ord = F->order() - 1;
        uint64_t L = F->log(c);
        uint64_t d = q + 1;
        if (L % d != 0) return {};
        std::vector<Elem> out;
        out.reserve(d);
        uint64_t stride = ord / d;  // = q - 1
        for (uint64_t j = 0; j < d; ++j) out.push_back(F->exp(L / d + j * stride));
        std::sort(out.begin(), out.end());
        return out;
    }
};

// ---------------------------------------------------------------------------
// TowerContext: F_q in F_{q^2} in F_{(q^2)^t}, with t the multiplicative
// order of q^2 modulo the group exponent so the top field carries all the
// needed roots of unity. Non-movable; algebra elements hold pointers into it.
// ---------------------------------------------------------------------------
class TowerContext {
  public:
    static std::unique_ptr<TowerContext> build(uint32_t p, uint32_t m, uint64_t group_exponent) {
        if (group_exponent == 0) throw InputError("group exponent must be positive");
        if (group_exponent % p == 0)
            throw InputError("gcd(n, q) = 1 violated: characteristic divides the group exponent");
        auto tc = std::unique_ptr<TowerContext>(new TowerContext());
        tc->p_ = p;
        tc->m_ = m;
        tc->q_ = pow_u64_sat(p, m);
        tc->exponent_ = group_exponent;
        uint64_t qsq = tc->q_ * tc->q_;
        tc->t_ = static_cast<uint32_t>(multiplicative_order(qsq % std::max<uint64_t>(group_exponent, 2),
                                                            group_exponent));
        if (group_exponent == 1) tc->t_ = 1;
        tc->base_ = FieldTable::build(p, m);
        tc->quad_ = FieldTable::build(p, 2 * m);
        tc->split_ = FieldTable::build(p, 2 * m * tc->t_);
        tc->emb_bq_ = build_embedding(tc->base_, tc->quad_);
        tc->emb_qs_ = build_embedding(tc->quad_, tc->split_);
        tc->inv_bq_.assign(tc->quad_.order(), FieldTable::kNoLog);
        for (uint64_t x = 0; x < tc->base_.order(); ++x) tc->inv_bq_[tc->emb_bq_[x]] = static_cast<uint32_t>(x);
        tc->inv_qs_.assign(tc->split_.order(), FieldTable::kNoLog);
        for (uint64_t x = 0; x < tc->quad_.order(); ++x) tc->inv_qs_[tc->emb_qs_[x]] = static_cast<uint32_t>(x);
        tc->herm_ = HermField(&tc->quad_, tc->q_);
        return tc;
    }

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint64_t q() const { return q_; }
    uint32_t t() const { return t_; }
    uint64_t group_exponent() const { return exponent_; }

    const FieldTable& base() const { return base_; }
    const FieldTable& quad() const { return quad_; }
    const FieldTable& split() const { return split_; }
    const HermField& herm() const { return herm_; }

    uint32_t embed_base(uint32_t x) const { return emb_bq_[x]; }
    uint32_t embed_quad(uint32_t x) const { return emb_qs_[x]; }
    // Preimage in F_{q^2} of a splitting-field label, if any.
    std::optional<uint32_t> quad_preimage(uint32_t label) const {
        uint32_t v = inv_qs_[label];
        if (v == FieldTable::kNoLog) return std::nullopt;
        return v;
    }
    std::optional<uint32_t> base_preimage(uint32_t label) const {
        uint32_t v = inv_bq_[label];
        if (v == FieldTable::kNoLog) return std::nullopt;
        return v;
    }

    TowerContext(const TowerContext&) = delete;
    TowerContext& operator=(const TowerContext&) = delete;

  private:
    TowerContext() = default;

    uint32_t p_ = 0, m_ = 0, t_ = 1;
    uint64_t q_ = 0, exponent_ = 1;
    FieldTable base_, quad_, split_;
    std::vector<uint32_t> emb_bq_, emb_qs_, inv_bq_, inv_qs_;
    HermField herm_;
};

}  // namespace qaclcd
