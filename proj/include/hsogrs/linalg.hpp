/*
   Copyright 2026 The hsogrs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HSOGRS_LINALG_HPP
#define HSOGRS_LINALG_HPP

#include <cstddef>
#include <vector>

#include "field.hpp"

namespace hsogrs {

using Vector = std::vector<Felt>;
using Matrix = std::vector<Vector>;

/// Reduced row echelon form with zero rows removed.
struct Echelon {
    Matrix rows;
    std::vector<int> pivots;
    int rank() const noexcept { return static_cast<int>(rows.size()); }
};

namespace detail {

using RawRow = std::vector<FieldCtx::Index>;

inline std::vector<RawRow> to_raw(const FieldCtx& F, const Matrix& m) {
    std::vector<RawRow> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        RawRow r;
        r.reserve(row.size());
        for (const auto& x : row) {
            F.check(x);
            r.push_back(static_cast<FieldCtx::Index>(x.index()));
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline Matrix from_raw(const FieldCtx& F, const std::vector<RawRow>& m) {
    Matrix out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Vector v;
        v.reserve(row.size());
        for (auto x : row) v.push_back(F.element(x));
        out.push_back(std::move(v));
    }
    return out;
}

// row_a += c * row_b
inline void axpy(const FieldCtx& F, RawRow& a, FieldCtx::Index c, const RawRow& b, std::size_t from = 0) {
    if (c == 0) return;
    for (std::size_t j = from; j < a.size(); ++j)
        if (b[j] != 0) a[j] = F.raw_add(a[j], F.raw_mul(c, b[j]));
}

inline std::vector<int> rref_in_place(const FieldCtx& F, std::vector<RawRow>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        const auto inv = F.raw_inv(m[r][c]);
        for (auto& x : m[r]) x = F.raw_mul(x, inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i != r && m[i][c] != 0) axpy(F, m[i], F.raw_neg(m[i][c]), m[r], c);
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

}  // namespace detail

inline Echelon rref(const FieldCtx& F, const Matrix& m) {
    auto raw = detail::to_raw(F, m);
    auto pivots = detail::rref_in_place(F, raw);
    return {detail::from_raw(F, raw), std::move(pivots)};
}

inline int rank(const FieldCtx& F, const Matrix& m) { return rref(F, m).rank(); }

/// Basis (in reduced echelon form) of {x : m x = 0}, x of length cols.
inline Matrix null_space(const FieldCtx& F, const Matrix& m, std::size_t cols) {
    auto raw = detail::to_raw(F, m);
    auto pivots = detail::rref_in_place(F, raw);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<detail::RawRow> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        detail::RawRow v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.raw_neg(raw[i][free]);
        basis.push_back(std::move(v));
    }
    detail::rref_in_place(F, basis);
    return detail::from_raw(F, basis);
}

/// Membership of v in the row space of an echelon form.
inline bool in_row_space(const FieldCtx& F, const Echelon& e, const Vector& v) {
    detail::RawRow r;
    r.reserve(v.size());
    for (const auto& x : v) {
        F.check(x);
        r.push_back(static_cast<FieldCtx::Index>(x.index()));
    }
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        const int c = e.pivots[i];
        if (r[c] == 0) continue;
        detail::RawRow row;
        row.reserve(e.rows[i].size());
        for (const auto& x : e.rows[i]) row.push_back(static_cast<FieldCtx::Index>(x.index()));
        detail::axpy(F, r, F.raw_neg(r[c]), row);
    }
    for (auto x : r)
        if (x != 0) return false;
    return true;
}

inline bool is_nonsingular(const FieldCtx& F, const Matrix& square) {
    return rank(F, square) == static_cast<int>(square.size());
}

inline int weight(const Vector& v) {
    int w = 0;
    for (const auto& x : v) w += !x.is_zero();
    return w;
}

}  // namespace hsogrs

#endif
