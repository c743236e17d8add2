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

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace qaclcd {

// Invalid parameters or malformed input (CLI exit code 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A hard feasibility cap was exceeded (CLI exit code 2, never a silent downgrade).
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal exact assertion failed (CLI exit code 1).
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Trial division; inputs here never exceed ~2^50.
inline std::vector<std::pair<uint64_t, unsigned>> factorize_u64(uint64_t n) {
    std::vector<std::pair<uint64_t, unsigned>> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// p^e with overflow clamp to UINT64_MAX.
inline uint64_t pow_u64_sat(uint64_t b, uint64_t e) {
    unsigned __int128 r = 1;
    for (uint64_t i = 0; i < e; ++i) {
        r *= b;
        if (r > ~static_cast<unsigned __int128>(0) >> 64) return UINT64_MAX;
    }
    return static_cast<uint64_t>(r);
}

// Multiplicative order of a modulo m (gcd(a, m) = 1, m >= 1).
inline uint64_t multiplicative_order(uint64_t a, uint64_t m) {
    if (m <= 1) return 1;
    if (std::gcd(a % m, m) != 1) throw InputError("multiplicative_order: arguments not coprime");
    uint64_t t = 1, x = a % m;
    while (x != 1) {
        x = mulmod_u64(x, a % m, m);
        ++t;
        if (t > m) throw InvariantError("multiplicative_order: no order found");
    }
    return t;
}

// ---------------------------------------------------------------------------
// Arbitrary-precision unsigned integers, enough for exact counting formulas.
// ---------------------------------------------------------------------------
class BigUint {
  public:
    BigUint() = default;
    explicit BigUint(uint64_t v) {
        if (v) {
            d_.push_back(static_cast<uint32_t>(v));
            if (v >> 32) d_.push_back(static_cast<uint32_t>(v >> 32));
        }
    }

    bool is_zero() const { return d_.empty(); }

    static BigUint power(uint64_t base, uint64_t exp) {
        BigUint r(1), b(base);
        while (exp) {
            if (exp & 1) r = r * b;
            b = b * b;
            exp >>= 1;
        }
        return r;
    }

    BigUint operator+(const BigUint& o) const {
        BigUint r;
        size_t n = std::max(d_.size(), o.d_.size());
        r.d_.resize(n, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t s = carry;
            if (i < d_.size()) s += d_[i];
            if (i < o.d_.size()) s += o.d_[i];
            r.d_[i] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) r.d_.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    // Requires *this >= o.
    BigUint operator-(const BigUint& o) const {
        if (compare(o) < 0) throw InvariantError("BigUint subtraction underflow");
        BigUint r;
        r.d_.resize(d_.size(), 0);
        int64_t borrow = 0;
        for (size_t i = 0; i < d_.size(); ++i) {
            int64_t s = static_cast<int64_t>(d_[i]) - borrow - (i < o.d_.size() ? o.d_[i] : 0);
            borrow = 0;
            if (s < 0) { s += (1ll << 32); borrow = 1; }
            r.d_[i] = static_cast<uint32_t>(s);
        }
        r.trim();
        return r;
    }

    BigUint operator*(const BigUint& o) const {
        if (is_zero() || o.is_zero()) return BigUint();
        BigUint r;
        r.d_.assign(d_.size() + o.d_.size(), 0);
        for (size_t i = 0; i < d_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < o.d_.size(); ++j) {
                uint64_t s = static_cast<uint64_t>(d_[i]) * o.d_[j] + r.d_[i + j] + carry;
                r.d_[i + j] = static_cast<uint32_t>(s);
                carry = s >> 32;
            }
            size_t k = i + o.d_.size();
            while (carry) {
                uint64_t s = static_cast<uint64_t>(r.d_[k]) + carry;
                r.d_[k] = static_cast<uint32_t>(s);
                carry = s >> 32;
                ++k;
            }
        }
        r.trim();
        return r;
    }

    int compare(const BigUint& o) const {
        if (d_.size() != o.d_.size()) return d_.size() < o.d_.size() ? -1 : 1;
        for (size_t i = d_.size(); i-- > 0;)
            if (d_[i] != o.d_[i]) return d_[i] < o.d_[i] ? -1 : 1;
        return 0;
    }
    bool operator==(const BigUint& o) const { return compare(o) == 0; }
    bool operator!=(const BigUint& o) const { return compare(o) != 0; }
    bool operator<(const BigUint& o) const { return compare(o) < 0; }
    bool operator<=(const BigUint& o) const { return compare(o) <= 0; }
    bool operator>(const BigUint& o) const { return compare(o) > 0; }
    bool operator>=(const BigUint& o) const { return compare(o) >= 0; }

    bool fits_u64() const { return d_.size() <= 2; }
    uint64_t to_u64() const {
        if (!fits_u64()) throw InvariantError("BigUint does not fit in 64 bits");
        uint64_t v = 0;
        if (d_.size() > 0) v = d_[0];
        if (d_.size() > 1) v |= static_cast<uint64_t>(d_[1]) << 32;
        return v;
    }

    long double to_long_double() const {
        long double v = 0;
        for (size_t i = d_.size(); i-- > 0;) v = v * 4294967296.0L + d_[i];
        return v;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::vector<uint32_t> work = d_;
        std::string out;
        while (!work.empty()) {
            uint64_t rem = 0;
            for (size_t i = work.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            for (int k = 0; k < 9; ++k) {
                out.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (out.size() > 1 && out.back() == '0') out.pop_back();
        std::reverse(out.begin(), out.end());
        return out;
    }

  private:
    void trim() {
        while (!d_.empty() && d_.back() == 0) d_.pop_back();
    }
    std::vector<uint32_t> d_;  // base 2^32, little-endian
};

// ---------------------------------------------------------------------------
// Exact rationals for relative-weight thresholds; always compared cross-wise.
// ---------------------------------------------------------------------------
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    static Rational make(int64_t n, int64_t d) {
        if (d == 0) throw InputError("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        int64_t g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        return Rational{n, d};
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return make(std::stoll(s), 1);
            return make(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::logic_error&) {
            throw InputError("cannot parse rational: " + s);
        }
    }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    long double to_long_double() const {
        return static_cast<long double>(num) / static_cast<long double>(den);
    }

    int compare(const Rational& o) const {
        __int128 l = static_cast<__int128>(num) * o.den;
        __int128 r = static_cast<__int128>(o.num) * den;
        return l < r ? -1 : (l > r ? 1 : 0);
    }
    bool operator<(const Rational& o) const { return compare(o) < 0; }
    bool operator<=(const Rational& o) const { return compare(o) <= 0; }
    bool operator==(const Rational& o) const { return compare(o) == 0; }
};

// ---------------------------------------------------------------------------
// Word serialization: one digit per coefficient, most-significant index first.
// Bases up to 62 use 0-9a-zA-Z; larger bases fall back to dot-separated
// decimal coefficients. No commas in either form.
// ---------------------------------------------------------------------------
inline char digit_char(uint32_t v) {
    if (v < 10) return static_cast<char>('0' + v);
    if (v < 36) return static_cast<char>('a' + (v - 10));
    return static_cast<char>('A' + (v - 36));
}

inline uint32_t digit_value(char c) {
    if (c >= '0' && c <= '9') return static_cast<uint32_t>(c - '0');
    if (c >= 'a' && c <= 'z') return static_cast<uint32_t>(c - 'a' + 10);
    if (c >= 'A' && c <= 'Z') return static_cast<uint32_t>(c - 'A' + 36);
    throw InputError(std::string("bad digit character: ") + c);
}

inline std::string encode_word(const std::vector<uint32_t>& coeffs, uint64_t base) {
    std::string out;
    if (base <= 62) {
        out.reserve(coeffs.size());
        for (size_t i = coeffs.size(); i-- > 0;) out.push_back(digit_char(coeffs[i]));
    } else {
        for (size_t i = coeffs.size(); i-- > 0;) {
            out += std::to_string(coeffs[i]);
            if (i) out.push_back('.');
        }
    }
    return out;
}

inline std::vector<uint32_t> decode_word(const std::string& s, uint64_t base, size_t count) {
    std::vector<uint32_t> coeffs(count, 0);
    if (base <= 62) {
        if (s.size() != count) throw InputError("word has wrong length: " + s);
        for (size_t i = 0; i < count; ++i) {
            uint32_t v = digit_value(s[i]);
            if (v >= base) throw InputError("digit out of range in word: " + s);
            coeffs[count - 1 - i] = v;
        }
    } else {
        size_t pos = 0, idx = count;
        while (idx > 0) {
            size_t dot = s.find('.', pos);
            std::string part = s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
            uint64_t v = std::stoull(part);
            if (v >= base) throw InputError("coefficient out of range in word: " + s);
            coeffs[--idx] = static_cast<uint32_t>(v);
            if (dot == std::string::npos) break;
            pos = dot + 1;
        }
        if (idx != 0) throw InputError("word has wrong length: " + s);
    }
    return coeffs;
}

// ---------------------------------------------------------------------------
// Seeded RNG. std::mt19937_64 output is pinned by the standard, so seeded
// runs are identical across platforms; modulo reduction keeps draws
// library-independent.
// ---------------------------------------------------------------------------
struct Rng {
    explicit Rng(uint64_t seed) : gen(seed) {}
    uint64_t next() { return gen(); }
    uint64_t below(uint64_t k) { return k ? gen() % k : 0; }
    std::mt19937_64 gen;
};

// ---------------------------------------------------------------------------
// Deterministic data-parallel dispatch. Work is split into one contiguous
// range per worker; callers must merge per-chunk results in chunk order or
// with order-independent reductions.
// ---------------------------------------------------------------------------
inline void parallel_chunks(uint64_t begin, uint64_t end, unsigned threads,
                            const std::function<void(unsigned, uint64_t, uint64_t)>& fn,
                            uint64_t min_grain = 4096) {
    if (end <= begin) return;
    uint64_t total = end - begin;
    if (threads <= 1 || total < min_grain) {
        fn(0, begin, end);
        return;
    }
    if (threads > total) threads = static_cast<unsigned>(total);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    uint64_t step = total / threads, extra = total % threads, lo = begin;
    for (unsigned t = 0; t < threads; ++t) {
        uint64_t hi = lo + step + (t < extra ? 1 : 0);
        pool.emplace_back([&fn, t, lo, hi] { fn(t, lo, hi); });
        lo = hi;
    }
    for (auto& th : pool) th.join();
}

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

}  // namespace qaclcd
