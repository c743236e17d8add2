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

// The q-ary entropy function and the finite-n counting-bound diagnostics:
// the family lower bound, the low-weight upper bound with its hypothesis
// margin, admissible-delta search, good-length scanning over cyclic groups,
// and the exact product-inequality report.

#pragma once

#include <cmath>
#include <optional>

#include "util.hpp"

namespace qaclcd {

// h_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x) on [0, 1 - 1/q],
// extended continuously by h_q(0) = 0.
inline long double q_entropy(uint64_t q, long double delta) {
    if (q < 2) throw InputError("entropy base must be at least 2");
    long double hi = 1.0L - 1.0L / static_cast<long double>(q);
    if (delta < 0.0L || delta > hi + 1e-18L) throw InputError("delta outside [0, 1 - 1/q]");
    if (delta == 0.0L) return 0.0L;
    long double lq = std::log(static_cast<long double>(q));
    long double h = delta * std::log(static_cast<long double>(q - 1)) / lq -
                    delta * std::log(delta) / lq;
    if (delta < 1.0L) h -= (1.0L - delta) * std::log(1.0L - delta) / lq;
    return h;
}

struct BoundInputs {
    uint64_t q = 0;
    uint32_t n = 0;
    uint32_t mu = 0;
};

inline long double log_ratio(const BoundInputs& in) {
    return std::log(static_cast<long double>(in.n)) /
           std::log(static_cast<long double>(in.q)) / static_cast<long double>(in.mu);
}

// Lower bound q^{n-2} on the family size under log_q n <= mu.
struct LowerBoundCheck {
    bool hypothesis_ok = false;
    BigUint bound;
    bool compared = false;
    bool holds = false;
};

inline LowerBoundCheck family_lower_bound_check(const BoundInputs& in, const BigUint* exact_count) {
    LowerBoundCheck out;
    // log_q n <= mu  <=>  n <= q^mu, exactly in integers
    out.hypothesis_ok = BigUint(in.n) <= BigUint::power(in.q, in.mu);
    out.bound = in.n >= 2 ? BigUint::power(in.q, in.n - 2) : BigUint(1);
    if (exact_count) {
        out.compared = true;
        out.holds = out.bound <= *exact_count;
    }
    return out;
}

// Upper bound q^{n + 4 - 2 mu [1/2 - h_q(delta) - log_q n / mu]} on the
// number of family codes with relative weight at most delta; only applicable
// when the bracketed margin is positive.
struct UpperBoundResult {
    bool applicable = false;
    long double margin = 0.0L;    // 1/2 - h_q(delta) - log_q n / mu
    long double exponent = 0.0L;  // full exponent of q
};

inline UpperBoundResult low_weight_family_bound(const BoundInputs& in, long double delta) {
    UpperBoundResult out;
    long double h = q_entropy(in.q, delta);
    out.margin = 0.5L - h - log_ratio(in);
    out.exponent = static_cast<long double>(in.n) + 4.0L -
                   2.0L * static_cast<long double>(in.mu) * out.margin;
    out.applicable = out.margin > 0.0L;
    return out;
}

// Ratio bound q^{-2 mu [margin] + 6} for the low-weight fraction.
inline long double family_ratio_bound_log_q(const BoundInputs& in, long double delta) {
    long double margin = 0.5L - q_entropy(in.q, delta) - log_ratio(in);
    return -2.0L * static_cast<long double>(in.mu) * margin + 6.0L;
}

// Largest delta on the 2^-20 grid with a strictly positive margin, found by
// bisection (the entropy is increasing). Empty when no positive-margin delta
// exists.
inline std::optional<Rational> max_admissible_delta(const BoundInputs& in) {
    constexpr int64_t kGrid = 1ll << 20;
    long double target = 0.5L - log_ratio(in);
    if (target <= 0.0L) return std::nullopt;
    int64_t hi_grid = static_cast<int64_t>(std::floor((1.0L - 1.0L / in.q) * kGrid));
    auto margin_positive = [&](int64_t k) {
        long double d = static_cast<long double>(k) / kGrid;
        return 0.5L - q_entropy(in.q, d) - log_ratio(in) > 0.0L;
    };
    if (!margin_positive(0)) return std::nullopt;
    if (margin_positive(hi_grid)) return Rational::make(hi_grid, kGrid);
    int64_t lo = 0, hi = hi_grid;  // margin(lo) > 0, margin(hi) <= 0
    while (hi - lo > 1) {
        int64_t mid = lo + (hi - lo) / 2;
        (margin_positive(mid) ? lo : hi) = mid;
    }
    return Rational::make(lo, kGrid);
}

// Minimum nontrivial orbit dimension of the cyclic group of order n under
// multiplication by q^2: the minimum of ord(q^2 mod d) over divisors d > 1.
inline uint32_t cyclic_min_orbit_dim(uint64_t q, uint32_t n) {
    if (n <= 1) throw InputError("n must exceed 1");
    uint64_t qsq = q * q;
    uint32_t mu = UINT32_MAX;
    for (uint32_t d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        mu = std::min(mu, static_cast<uint32_t>(multiplicative_order(qsq % d, d)));
    }
    return mu;
}

struct LengthRow {
    uint32_t n = 0;
    uint32_t mu = 0;
    long double ratio = 0.0L;  // log_q n / mu
};

// All odd n in [3, n_max] coprime to q with the cyclic-group dimension
// floor, sorted by ascending ratio (ties by n).
inline std::vector<LengthRow> scan_lengths(uint64_t q, uint32_t n_max, unsigned threads = 1) {
    std::vector<uint32_t> ns;
    for (uint32_t n = 3; n <= n_max; n += 2)
        if (std::gcd<uint64_t>(n, q) == 1) ns.push_back(n);
    std::vector<LengthRow> rows(ns.size());
    parallel_chunks(0, ns.size(), threads, [&](unsigned, uint64_t lo, uint64_t hi) {
        for (uint64_t i = lo; i < hi; ++i) {
            uint32_t n = ns[i];
            uint32_t mu = cyclic_min_orbit_dim(q, n);
            long double ratio = std::log(static_cast<long double>(n)) /
                                std::log(static_cast<long double>(q)) / mu;
            rows[i] = LengthRow{n, mu, ratio};
        }
    });
    std::sort(rows.begin(), rows.end(), [](const LengthRow& a, const LengthRow& b) {
        if (a.ratio != b.ratio) return a.ratio < b.ratio;
        return a.n < b.n;
    });
    return rows;
}

// Rigorous comparison of an exact count against q^exponent: the count's
// base-q logarithm is padded outward, so Holds and Violated are certain and
// anything inside the pad reports Inconclusive.
enum class BoundComparison { Holds, Violated, Inconclusive };

inline BoundComparison compare_count_to_power(const BigUint& count, uint64_t q,
                                              long double exponent,
                                              long double pad = 1e-9L) {
    if (count.is_zero()) return BoundComparison::Holds;
    long double lg = std::log(count.to_long_double()) / std::log(static_cast<long double>(q));
    if (lg + pad <= exponent) return BoundComparison::Holds;
    if (lg - pad > exponent) return BoundComparison::Violated;
    return BoundComparison::Inconclusive;
}

// Exact two-sided evaluation of the product inequalities
//   (a) prod (q^{l_i} - 1) >= q^{sum l_i} - 2
//   (b) prod (q^{l_i} + 1) <= q^{sum l_i} + 2
// under the printed hypothesis l_i >= log_q(count). Diagnostic only: the
// inequalities as printed admit small violations, which this reports
// verbatim.
struct ProductBoundsReport {
    bool hypothesis_ok = true;
    BigUint lhs_minus, rhs_minus;
    bool holds_minus = false;
    BigUint lhs_plus, rhs_plus;
    bool holds_plus = false;
};

inline ProductBoundsReport product_bounds_report(uint64_t q, const std::vector<uint32_t>& exps) {
    if (exps.empty()) throw InputError("need at least one exponent");
    ProductBoundsReport out;
    uint64_t count = exps.size();
    uint64_t total = 0;
    out.lhs_minus = BigUint(1);
    out.lhs_plus = BigUint(1);
    for (uint32_t l : exps) {
        if (BigUint::power(q, l) < BigUint(count)) out.hypothesis_ok = false;
        out.lhs_minus = out.lhs_minus * (BigUint::power(q, l) - BigUint(1));
        out.lhs_plus = out.lhs_plus * (BigUint::power(q, l) + BigUint(1));
        total += l;
    }
    out.rhs_minus = BigUint::power(q, total) - BigUint(2);
    out.rhs_plus = BigUint::power(q, total) + BigUint(2);
    out.holds_minus = out.lhs_minus >= out.rhs_minus;
    out.holds_plus = out.lhs_plus <= out.rhs_plus;
    return out;
}

}  // namespace qaclcd
