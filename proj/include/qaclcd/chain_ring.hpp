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

// Finite chain rings S with a degree-2 Galois extension over a base ring R:
//
//   family A ("uA"): S = F_{q^2}[u]/(u^s) over R = F_q[u]/(u^s)
//   family B ("gr"): S = GR(p^s, 2m)     over R = GR(p^s, m)
//
// Both carry the generator sigma of Aut_R(S) (order 2), the residue map pi
// onto F_{q^2}, and naive/Teichmuller lifts. Elements are ordinals in
// [0, |S|); coordinates are field labels (family A, one per power of u) or
// integers mod p^s (family B, one per power of the ring generator).

#pragma once

#include "gf.hpp"

namespace qaclcd {

struct ChainRingSpec {
    enum class Family { PolyU, Galois };

    Family family = Family::PolyU;
    uint32_t p = 0;  // prime characteristic of the residue field
    uint32_t m = 0;  // q = p^m
    uint32_t s = 1;  // nilpotency index of the maximal ideal
    uint64_t q = 0;

    static ChainRingSpec poly_u(uint64_t q, uint32_t s) {
        ChainRingSpec spec;
        spec.family = Family::PolyU;
        auto factors = factorize_u64(q);
        if (q < 2 || factors.size() != 1) throw InputError("q must be a prime power");
        spec.p = static_cast<uint32_t>(factors[0].first);
        spec.m = factors[0].second;
        spec.q = q;
        spec.s = s;
        if (s == 0) throw InputError("nilpotency index must be positive");
        return spec;
    }

    static ChainRingSpec galois(uint32_t p, uint32_t s, uint32_t m) {
        ChainRingSpec spec;
        spec.family = Family::Galois;
        if (!is_prime_u64(p)) throw InputError("p not prime");
        if (s == 0 || m == 0) throw InputError("s and m must be positive");
        spec.p = p;
        spec.m = m;
        spec.s = s;
        spec.q = pow_u64_sat(p, m);
        return spec;
    }

    // "uA:q=2,s=2" or "gr:p=3,s=2,m=1"
    static ChainRingSpec parse(const std::string& text) {
        auto colon = text.find(':');
        if (colon == std::string::npos) throw InputError("bad ring descriptor: " + text);
        std::string head = text.substr(0, colon);
        uint64_t q = 0, p = 0, s = 0, m = 0;
        size_t pos = colon + 1;
        while (pos < text.size()) {
            size_t eq = text.find('=', pos);
            size_t comma = text.find(',', pos);
            if (eq == std::string::npos) throw InputError("bad ring descriptor: " + text);
            std::string key = text.substr(pos, eq - pos);
            std::string val = text.substr(eq + 1, comma == std::string::npos ? std::string::npos
                                                                             : comma - eq - 1);
            uint64_t v = std::stoull(val);
            if (key == "q") q = v;
            else if (key == "p") p = v;
            else if (key == "s") s = v;
            else if (key == "m") m = v;
            else throw InputError("bad ring descriptor key: " + key);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (head == "uA") {
            if (!q || !s) throw InputError("uA descriptor needs q and s");
            return poly_u(q, static_cast<uint32_t>(s));
        }
        if (head == "gr") {
            if (!p || !s || !m) throw InputError("gr descriptor needs p, s and m");
            return galois(static_cast<uint32_t>(p), static_cast<uint32_t>(s),
                          static_cast<uint32_t>(m));
        }
        throw InputError("unknown ring family: " + head);
    }

    std::string descriptor() const {
        if (family == Family::PolyU)
            return "uA:q=" + std::to_string(q) + ",s=" + std::to_string(s);
        return "gr:p=" + std::to_string(p) + ",s=" + std::to_string(s) + ",m=" + std::to_string(m);
    }

    uint64_t size() const {
        return family == Family::PolyU ? pow_u64_sat(q * q, s) : pow_u64_sat(p, 2ull * m * s);
    }
};

// Models the extension pair S|R: all arithmetic is in S; R is reachable as
// the fixed ring of sigma. Non-movable since algebra elements point at it.
class ChainRing {
  public:
    using Elem = uint32_t;
    static constexpr bool kIsChain = true;
    static constexpr uint64_t kMaxSize = 1ull << 24;
    static constexpr uint64_t kTableCap = 1ull << 10;

    static std::unique_ptr<ChainRing> build(const ChainRingSpec& spec) {
        uint64_t size = spec.size();
        if (size > kMaxSize) throw CapError("chain ring size exceeds 2^24 cap");
        auto ring = std::unique_ptr<ChainRing>(new ChainRing());
        ring->spec_ = spec;
        ring->size_ = size;
        ring->residue_ = FieldTable::build(spec.p, 2 * spec.m);
        ring->herm_ = HermField(&ring->residue_, spec.q);
        if (spec.family == ChainRingSpec::Family::PolyU) {
            ring->width_ = spec.s;
            ring->radix_ = ring->residue_.order();
        } else {
            ring->width_ = 2 * spec.m;
            ring->radix_ = pow_u64_sat(spec.p, spec.s);
            ring->init_galois_modulus();
        }
        if (size <= kTableCap) ring->init_tables();
        return ring;
    }

    const ChainRingSpec& spec() const { return spec_; }
    uint64_t size() const { return size_; }
    uint32_t nilpotency() const { return spec_.s; }
    const FieldTable& residue_field() const { return residue_; }
    const HermField& residue_view() const { return herm_; }

    Elem zero() const { return 0; }
    Elem one() const { return one_; }
    bool is_zero(Elem a) const { return a == 0; }

    Elem add(Elem a, Elem b) const {
        if (tabled()) return add_tab_[static_cast<size_t>(a) * size_ + b];
        return add_raw(a, b);
    }
    Elem neg(Elem a) const {
        if (tabled()) return neg_tab_[a];
        return neg_raw(a);
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (tabled()) return mul_tab_[static_cast<size_t>(a) * size_ + b];
        return mul_raw(a, b);
    }
    Elem sigma(Elem a) const {
        if (tabled()) return sigma_tab_[a];
        return sigma_raw(a);
    }

    Elem pow(Elem a, uint64_t e) const {
        Elem r = one_, b = a;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    // Residue in F_{q^2}; surjective ring homomorphism with kernel m.
    uint32_t pi(Elem a) const {
        if (spec_.family == ChainRingSpec::Family::PolyU) return coord(a, 0);
        uint32_t label = 0;
        uint32_t mult = 1;
        for (uint32_t i = 0; i < width_; ++i) {
            label += static_cast<uint32_t>(coord(a, i) % spec_.p) * mult;
            mult *= spec_.p;
        }
        return label;
    }

    Elem lift_naive(uint32_t residue_label) const {
        if (residue_label >= residue_.order()) throw InputError("residue label out of range");
        if (spec_.family == ChainRingSpec::Family::PolyU) {
            std::vector<uint32_t> co(width_, 0);
            co[0] = residue_label;
            return from_coords(co);
        }
        std::vector<uint32_t> co(width_, 0);
        uint32_t v = residue_label;
        for (uint32_t i = 0; i < width_; ++i) {
            co[i] = v % spec_.p;
            v /= spec_.p;
        }
        return from_coords(co);
    }

    // The unique lift fixed by x -> x^{q^2}. For family A the naive lift
    // already satisfies this.
    Elem lift_teichmuller(uint32_t residue_label) const {
        Elem z = lift_naive(residue_label);
        if (spec_.family == ChainRingSpec::Family::PolyU) return z;
        return teich_of(z);
    }

    bool is_unit(Elem a) const { return pi(a) != 0; }

    // Inverse of a unit by lifting the residue inverse; each correction step
    // doubles the precision in powers of the maximal ideal.
    Elem inverse(Elem a) const {
        if (!is_unit(a)) throw InputError("inverse of a non-unit");
        Elem x = lift_naive(residue_.inv(pi(a)));
        Elem two = add(one_, one_);
        unsigned steps = 1;
        while ((1u << steps) < spec_.s) ++steps;
        for (unsigned i = 0; i <= steps; ++i) x = mul(x, sub(two, mul(a, x)));
        if (mul(a, x) != one_) throw InvariantError("unit inverse iteration failed");
        return x;
    }

    // Generator of the maximal ideal: u (family A) or p (family B).
    Elem uniformizer() const {
        if (spec_.s == 1) return 0;
        std::vector<uint32_t> co(width_, 0);
        if (spec_.family == ChainRingSpec::Family::PolyU)
            co[1] = 1;
        else
            co[0] = spec_.p;
        return from_coords(co);
    }

    // Membership in the base ring R = the fixed ring of sigma.
    bool in_base_ring(Elem a) const { return sigma(a) == a; }

    std::vector<uint32_t> coords(Elem a) const {
        std::vector<uint32_t> co(width_);
        for (uint32_t i = 0; i < width_; ++i) co[i] = coord(a, i);
        return co;
    }

    Elem from_coords(const std::vector<uint32_t>& co) const {
        if (co.size() != width_) throw InputError("coordinate arity mismatch");
        uint64_t v = 0;
        for (size_t i = co.size(); i-- > 0;) {
            if (co[i] >= radix_) throw InputError("coordinate out of range");
            v = v * radix_ + co[i];
        }
        return static_cast<Elem>(v);
    }

    ChainRing(const ChainRing&) = delete;
    ChainRing& operator=(const ChainRing&) = delete;

  private:
    ChainRing() = default;

    bool tabled() const { return !mul_tab_.empty(); }

    uint32_t coord(Elem a, uint32_t i) const {
        uint64_t v = a;
        for (uint32_t k = 0; k < i; ++k) v /= radix_;
        return static_cast<uint32_t>(v % radix_);
    }

    Elem add_raw(Elem a, Elem b) const {
        std::vector<uint32_t> out(width_);
        if (spec_.family == ChainRingSpec::Family::PolyU) {
            for (uint32_t i = 0; i < width_; ++i) out[i] = residue_.add(coord(a, i), coord(b, i));
        } else {
            for (uint32_t i = 0; i < width_; ++i)
                out[i] = static_cast<uint32_t>((static_cast<uint64_t>(coord(a, i)) + coord(b, i)) %
                                               radix_);
        }
        return from_coords(out);
    }

    Elem neg_raw(Elem a) const {
        std::vector<uint32_t> out(width_);
        if (spec_.family == ChainRingSpec::Family::PolyU) {
            for (uint32_t i = 0; i < width_; ++i) out[i] = residue_.neg(coord(a, i));
        } else {
            for (uint32_t i = 0; i < width_; ++i)
                out[i] = static_cast<uint32_t>((radix_ - coord(a, i)) % radix_);
        }
        return from_coords(out);
    }

    Elem mul_raw(Elem a, Elem b) const {
        if (spec_.family == ChainRingSpec::Family::PolyU) {
            // truncated polynomial product in u
            std::vector<uint32_t> out(width_, 0);
            for (uint32_t i = 0; i < width_; ++i) {
                uint32_t ai = coord(a, i);
                if (ai == 0) continue;
                for (uint32_t j = 0; i + j < width_; ++j)
                    out[i + j] = residue_.add(out[i + j], residue_.mul(ai, coord(b, j)));
            }
            return from_coords(out);
        }
        // product modulo the lifted defining polynomial and p^s
        std::vector<uint64_t> acc(2 * width_ - 1, 0);
        for (uint32_t i = 0; i < width_; ++i) {
            uint64_t ai = coord(a, i);
            if (!ai) continue;
            for (uint32_t j = 0; j < width_; ++j)
                acc[i + j] = (acc[i + j] + ai * coord(b, j)) % radix_;
        }
        for (size_t d = acc.size(); d-- > width_;) {
            uint64_t c = acc[d];
            if (!c) continue;
            for (uint32_t k = 0; k < width_; ++k) {
                uint64_t sub = c * modulus_[k] % radix_;
                size_t pos = d - width_ + k;
                acc[pos] = (acc[pos] + radix_ - sub) % radix_;
            }
            acc[d] = 0;
        }
        std::vector<uint32_t> out(width_);
        for (uint32_t i = 0; i < width_; ++i) out[i] = static_cast<uint32_t>(acc[i]);
        return from_coords(out);
    }

    // Iterating x -> x^{q^2} converges to the Teichmuller representative of
    // the residue; one step per power of the maximal ideal.
    Elem teich_of(Elem a) const {
        uint64_t qsq = spec_.q * spec_.q;
        Elem z = a;
        for (uint32_t i = 0; i < spec_.s; ++i) z = pow_raw(z, qsq);
        return z;
    }

    Elem pow_raw(Elem a, uint64_t e) const {
        Elem r = one_, b = a;
        while (e) {
            if (e & 1) r = mul_raw(r, b);
            b = mul_raw(b, b);
            e >>= 1;
        }
        return r;
    }

    Elem sigma_raw(Elem a) const {
        if (spec_.family == ChainRingSpec::Family::PolyU) {
            std::vector<uint32_t> out(width_);
            for (uint32_t i = 0; i < width_; ++i)
                out[i] = residue_.pow(coord(a, i), spec_.q);
            return from_coords(out);
        }
        // p-adic Teichmuller digits t_k, then sigma(a) = sum t_k^{p^m} p^k
        uint64_t pm = pow_u64_sat(spec_.p, spec_.m);
        Elem cur = a;
        Elem out = 0;
        uint64_t pk = 1;
        for (uint32_t k = 0; k < spec_.s; ++k) {
            Elem t = teich_of(cur);
            Elem img = pow_raw(t, pm);
            // out += p^k * img
            std::vector<uint32_t> co(width_);
            for (uint32_t i = 0; i < width_; ++i)
                co[i] = static_cast<uint32_t>(static_cast<uint64_t>(coord(img, i)) * (pk % radix_) %
                                              radix_);
            out = add_raw(out, from_coords(co));
            // cur = (cur - t) / p
            std::vector<uint32_t> diff(width_);
            for (uint32_t i = 0; i < width_; ++i) {
                uint32_t d = static_cast<uint32_t>(
                    (static_cast<uint64_t>(coord(cur, i)) + radix_ - coord(t, i)) % radix_);
                if (d % spec_.p != 0) throw InvariantError("Teichmuller digit extraction failed");
                diff[i] = d / spec_.p;
            }
            cur = from_coords(diff);
            pk *= spec_.p;
        }
        return out;
    }

    // Lift the residue defining polynomial so that the ring generator is a
    // Teichmuller unit: modulus = prod (x - theta^{p^j}) with theta the
    // Teichmuller representative of the naive generator.
    void init_galois_modulus() {
        const auto& f = residue_.defining_poly();
        modulus_.assign(f.begin(), f.end() - 1);  // low coefficients of the naive lift
        one_ = 1;
        if (spec_.s == 1) return;  // the naive lift already works modulo p

        // theta = Teichmuller lift of x in Z_{p^s}[x]/(naive f)
        Elem theta = teich_of(from_coords([&] {
            std::vector<uint32_t> co(width_, 0);
            co[1] = 1;
            return co;
        }()));

        // conjugates theta^{p^j}
        std::vector<Elem> roots;
        Elem c = theta;
        for (uint32_t j = 0; j < width_; ++j) {
            roots.push_back(c);
            c = pow_raw(c, spec_.p);
        }
        if (c != theta) throw InvariantError("Teichmuller conjugates do not close");

        // product of (y - root) with coefficients in the working ring
        std::vector<Elem> poly{one_};
        for (Elem r : roots) {
            std::vector<Elem> next(poly.size() + 1, 0);
            Elem nr = neg_raw(r);
            for (size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] = add_raw(next[i + 1], poly[i]);
                next[i] = add_raw(next[i], mul_raw(poly[i], nr));
            }
            poly = std::move(next);
        }
        // coefficients must be constants of the working ring
        std::vector<uint32_t> lifted(width_);
        for (uint32_t i = 0; i < width_; ++i) {
            auto co = coords(poly[i]);
            for (uint32_t k = 1; k < width_; ++k)
                if (co[k] != 0) throw InvariantError("lifted modulus coefficient not constant");
            lifted[i] = co[0];
        }
        auto top = coords(poly[width_]);
        if (top[0] != 1) throw InvariantError("lifted modulus not monic");
        for (uint32_t k = 1; k < width_; ++k)
            if (top[k] != 0) throw InvariantError("lifted modulus not monic");

        modulus_ = lifted;
        // sanity: reduction mod p recovers the residue polynomial, and the
        // ring generator is now a Teichmuller unit
        for (uint32_t i = 0; i < width_; ++i)
            if (modulus_[i] % spec_.p != f[i]) throw InvariantError("modulus reduction mismatch");
        std::vector<uint32_t> xco(width_, 0);
        xco[1] = 1;
        Elem x = from_coords(xco);
        if (pow_raw(x, spec_.q * spec_.q) != x)
            throw InvariantError("ring generator is not Teichmuller after lifting");
    }

    void init_tables() {
        size_t n = static_cast<size_t>(size_);
        add_tab_.resize(n * n);
        mul_tab_.resize(n * n);
        neg_tab_.resize(n);
        sigma_tab_.resize(n);
        for (size_t a = 0; a < n; ++a) {
            neg_tab_[a] = neg_raw(static_cast<Elem>(a));
            sigma_tab_[a] = sigma_raw(static_cast<Elem>(a));
            for (size_t b = 0; b < n; ++b) {
                add_tab_[a * n + b] = add_raw(static_cast<Elem>(a), static_cast<Elem>(b));
                mul_tab_[a * n + b] = mul_raw(static_cast<Elem>(a), static_cast<Elem>(b));
            }
        }
    }

    ChainRingSpec spec_;
    uint64_t size_ = 0, radix_ = 0;
    uint32_t width_ = 0;
    Elem one_ = 1;
    FieldTable residue_;
    HermField herm_;
    std::vector<uint32_t> modulus_;  // family B: lifted defining polynomial, low coeffs
    std::vector<Elem> add_tab_, mul_tab_, neg_tab_, sigma_tab_;
};

}  // namespace qaclcd
