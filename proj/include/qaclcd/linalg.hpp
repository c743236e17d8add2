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

// Dense matrices over table-backed rings and Gaussian elimination over
// fields. Sizes here are tiny (at most a few hundred rows), so everything is
// straightforward O(n^3).

#pragma once

#include "gf.hpp"

namespace qaclcd {

template <class R>
struct Mat {
    const R* ring = nullptr;
    size_t rows = 0, cols = 0;
    std::vector<typename R::Elem> a;

    Mat() = default;
    Mat(const R* r, size_t nr, size_t nc) : ring(r), rows(nr), cols(nc), a(nr * nc, 0) {}

    typename R::Elem& at(size_t r, size_t c) { return a[r * cols + c]; }
    typename R::Elem at(size_t r, size_t c) const { return a[r * cols + c]; }

    static Mat identity(const R* r, size_t n) {
        Mat m(r, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = r->one();
        return m;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

using FMatrix = Mat<FieldTable>;

// Row-reduce in place; returns rank and (optionally) the pivot columns.
inline size_t rref(FMatrix& M, std::vector<size_t>* pivot_cols = nullptr) {
    const FieldTable& F = *M.ring;
    size_t r = 0;
    for (size_t c = 0; c < M.cols && r < M.rows; ++c) {
        size_t sel = SIZE_MAX;
        for (size_t i = r; i < M.rows; ++i)
            if (M.at(i, c) != 0) { sel = i; break; }
        if (sel == SIZE_MAX) continue;
        if (sel != r)
            for (size_t j = 0; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(r, j));
        uint32_t piv_inv = F.inv(M.at(r, c));
        for (size_t j = c; j < M.cols; ++j) M.at(r, j) = F.mul(M.at(r, j), piv_inv);
        for (size_t i = 0; i < M.rows; ++i) {
            if (i == r) continue;
            uint32_t f = M.at(i, c);
            if (f == 0) continue;
            for (size_t j = c; j < M.cols; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

inline size_t rank(FMatrix M) { return rref(M); }

inline bool nonsingular(const FMatrix& M) {
    if (M.rows != M.cols) return false;
    return rank(M) == M.rows;
}

// Basis of the right null space {x : M x = 0}, one basis vector per row.
inline FMatrix nullspace(FMatrix M) {
    std::vector<size_t> pivots;
    size_t r = rref(M, &pivots);
    std::vector<char> is_pivot(M.cols, 0);
    for (size_t c : pivots) is_pivot[c] = 1;
    FMatrix N(M.ring, M.cols - r, M.cols);
    size_t row = 0;
    for (size_t c = 0; c < M.cols; ++c) {
        if (is_pivot[c]) continue;
        N.at(row, c) = M.ring->one();
        for (size_t i = 0; i < pivots.size(); ++i)
            N.at(row, pivots[i]) = M.ring->neg(M.at(i, c));
        ++row;
    }
    return N;
}

// Solve M x = b; empty optional when inconsistent or underdetermined pivots
// are missing for some coordinate of b.
inline std::optional<std::vector<uint32_t>> solve(const FMatrix& M, const std::vector<uint32_t>& b) {
    if (b.size() != M.rows) throw InputError("solve: dimension mismatch");
    FMatrix W(M.ring, M.rows, M.cols + 1);
    for (size_t i = 0; i < M.rows; ++i) {
        for (size_t j = 0; j < M.cols; ++j) W.at(i, j) = M.at(i, j);
        W.at(i, M.cols) = b[i];
    }
    std::vector<size_t> pivots;
    size_t r = rref(W, &pivots);
    for (size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] == M.cols) return std::nullopt;  // inconsistent
    std::vector<uint32_t> x(M.cols, 0);
    for (size_t i = 0; i < r; ++i) x[pivots[i]] = W.at(i, M.cols);
    // verify (guards underdetermined systems; cheap at these sizes)
    for (size_t i = 0; i < M.rows; ++i) {
        uint32_t acc = 0;
        for (size_t j = 0; j < M.cols; ++j) acc = M.ring->add(acc, M.ring->mul(M.at(i, j), x[j]));
        if (acc != b[i]) return std::nullopt;
    }
    return x;
}

// Stack two matrices with identical column counts.
inline FMatrix vstack(const FMatrix& A, const FMatrix& B) {
    if (A.cols != B.cols) throw InputError("vstack: column mismatch");
    FMatrix S(A.ring, A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), S.a.begin());
    std::copy(B.a.begin(), B.a.end(), S.a.begin() + static_cast<long>(A.a.size()));
    return S;
}

}  // namespace qaclcd
