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

// Finite abelian groups given by invariant factors n_1 | n_2 | ... | n_k.
// Elements are mixed-radix tuples flattened with the first factor most
// significant; index 0 is the identity.

#pragma once

#include "util.hpp"

namespace qaclcd {

class GroupSpec {
  public:
    static GroupSpec make(std::vector<uint32_t> invariant_factors) {
        if (invariant_factors.empty()) throw InputError("group needs at least one invariant factor");
        uint64_t n = 1;
        for (size_t i = 0; i < invariant_factors.size(); ++i) {
            uint32_t f = invariant_factors[i];
            if (f == 0) throw InputError("invariant factor must be positive");
            if (i + 1 < invariant_factors.size() && invariant_factors[i + 1] % f != 0)
                throw InputError("invariant factors must form a divisibility chain");
            n *= f;
            if (n > (1u << 16)) throw CapError("group order too large");
        }
        if (n % 2 == 0) throw InputError("group order must be odd");
        GroupSpec g;
        g.factors_ = std::move(invariant_factors);
        g.n_ = static_cast<uint32_t>(n);
        g.strides_.resize(g.factors_.size());
        uint32_t s = 1;
        for (size_t i = g.factors_.size(); i-- > 0;) {
            g.strides_[i] = s;
            s *= g.factors_[i];
        }
        g.init_tables();
        return g;
    }

    uint32_t order() const { return n_; }
    const std::vector<uint32_t>& invariant_factors() const { return factors_; }
    uint32_t exponent() const { return factors_.back(); }
    uint32_t identity() const { return 0; }

    uint32_t op(uint32_t g, uint32_t h) const { return add_[static_cast<size_t>(g) * n_ + h]; }
    uint32_t inv(uint32_t g) const { return inv_[g]; }

    std::vector<uint32_t> to_tuple(uint32_t g) const {
        std::vector<uint32_t> t(factors_.size());
        for (size_t i = 0; i < factors_.size(); ++i) {
            t[i] = (g / strides_[i]) % factors_[i];
        }
        return t;
    }

    uint32_t from_tuple(const std::vector<uint32_t>& t) const {
        if (t.size() != factors_.size()) throw InputError("tuple arity mismatch");
        uint32_t g = 0;
        for (size_t i = 0; i < t.size(); ++i) {
            if (t[i] >= factors_[i]) throw InputError("tuple entry out of range");
            g += t[i] * strides_[i];
        }
        return g;
    }

    // Coordinatewise multiplication by an integer (character-index action).
    uint32_t scale(uint32_t g, uint64_t k) const {
        uint32_t out = 0;
        for (size_t i = 0; i < factors_.size(); ++i) {
            uint64_t c = (g / strides_[i]) % factors_[i];
            out += static_cast<uint32_t>(c * (k % factors_[i]) % factors_[i]) * strides_[i];
        }
        return out;
    }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < factors_.size(); ++i) {
            if (i) s.push_back(',');
            s += std::to_string(factors_[i]);
        }
        return s;
    }

    bool operator==(const GroupSpec& o) const { return factors_ == o.factors_; }

  private:
    void init_tables() {
        add_.resize(static_cast<size_t>(n_) * n_);
        inv_.resize(n_);
        for (uint32_t g = 0; g < n_; ++g) {
            for (uint32_t h = 0; h < n_; ++h) {
                uint32_t out = 0;
                for (size_t i = 0; i < factors_.size(); ++i) {
                    uint32_t a = (g / strides_[i]) % factors_[i];
                    uint32_t b = (h / strides_[i]) % factors_[i];
                    out += ((a + b) % factors_[i]) * strides_[i];
                }
                add_[static_cast<size_t>(g) * n_ + h] = out;
            }
            uint32_t out = 0;
            for (size_t i = 0; i < factors_.size(); ++i) {
                uint32_t a = (g / strides_[i]) % factors_[i];
                out += ((factors_[i] - a) % factors_[i]) * strides_[i];
            }
            inv_[g] = out;
        }
    }

    std::vector<uint32_t> factors_, strides_;
    uint32_t n_ = 0;
    std::vector<uint32_t> add_, inv_;
};

}  // namespace qaclcd
