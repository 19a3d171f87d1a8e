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

#ifndef HSOGRS_WEIGHTS_HPP
#define HSOGRS_WEIGHTS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "linalg.hpp"

namespace hsogrs {

/// Outcome of walking every codeword of a linear code.
struct SpanEnumeration {
    int min_weight = 0;  // 0 when the code is {0}
    Vector witness;      // lexicographically smallest codeword (by enumeration index) of minimum weight
    std::vector<std::uint64_t> weight_counts;  // weight_counts[w] = number of codewords of weight w
    std::uint64_t codewords = 0;
};

/// Outcome of the minimal dependent column search on a parity-check matrix.
struct SupportSearch {
    int min_weight = 0;
    Vector witness;  // supported on the lexicographically first minimal support, first nonzero entry 1
    std::uint64_t nodes = 0;
};

namespace detail {

// p^m, saturating at limit + 1.
inline std::uint64_t bounded_power(std::uint64_t p, std::uint64_t m, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        if (r > limit / p) return limit + 1;
        r *= p;
    }
    return r;
}

inline std::uint64_t bounded_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t limit) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    long double r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
        if (r > static_cast<long double>(limit)) return limit + 1;
    }
    return static_cast<std::uint64_t>(r + 0.5L);
}

struct ChunkResult {
    int best = 0;
    RawRow witness;
    std::vector<std::uint64_t> counts;
};

// Modular p-ary Gray code over the F_p-span of gens, counter values t in [begin, end).
inline ChunkResult walk_chunk(const FieldCtx& F, const std::vector<RawRow>& gens, std::uint64_t begin, std::uint64_t end) {
    const int p = F.p();
    const std::size_t n = gens.empty() ? 0 : gens.front().size();
    const std::size_t m = gens.size();

    std::vector<std::vector<std::uint32_t>> support(m);
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t c = 0; c < n; ++c)
            if (gens[g][c] != 0) support[g].push_back(static_cast<std::uint32_t>(c));

    // prime field element d*1
    std::vector<FieldCtx::Index> prime(p, 0);
    for (int d = 1; d < p; ++d) prime[d] = F.raw_add(prime[d - 1], 1);

    ChunkResult res;
    res.counts.assign(n + 1, 0);
    RawRow cw(n, 0);
    {
        std::vector<int> t(m + 1, 0);
        std::uint64_t v = begin;
        for (std::size_t i = 0; i < m; ++i) {
            t[i] = static_cast<int>(v % p);
            v /= p;
        }
        for (std::size_t i = 0; i < m; ++i) {
            int g = ((t[i] - t[i + 1]) % p + p) % p;
            if (g == 0) continue;
            for (auto c : support[i]) cw[c] = F.raw_add(cw[c], F.raw_mul(prime[g], gens[i][c]));
        }
    }
    int w = 0;
    for (auto x : cw) w += x != 0;

    auto record = [&]() {
        ++res.counts[w];
        if (w == 0) return;
        if (res.best == 0 || w < res.best) {
            res.best = w;
            res.witness = cw;
        } else if (w == res.best && std::lexicographical_compare(cw.begin(), cw.end(), res.witness.begin(), res.witness.end())) {
            res.witness = cw;
        }
    };
    if (begin < end) record();
    for (std::uint64_t t = begin + 1; t < end; ++t) {
        std::size_t j = 0;
        for (std::uint64_t u = t; u % p == 0; u /= p) ++j;
        const auto& g = gens[j];
        for (auto c : support[j]) {
            const auto old = cw[c];
            const auto nw = F.raw_add(old, g[c]);
            w += (nw != 0) - (old != 0);
            cw[c] = nw;
        }
        record();
    }
    return res;
}

}  // namespace detail

/**
 * Enumerates the span of rows over the subfield spanned by scalar_basis
 * (an F_p-basis of the scalars, e.g. {1, u, ..., u^(h-1)} for F_q).
 * Rows must be independent over the scalar field. Throws CapExceededError
 * when the span has more than cap elements.
 */
inline SpanEnumeration enumerate_span(const FieldCtx& F, const Matrix& rows, const Vector& scalar_basis, std::uint64_t cap,
                                      int threads = 1) {
    std::vector<detail::RawRow> gens;
    auto raw = detail::to_raw(F, rows);
    for (const auto& r : raw) {
        for (const auto& s : scalar_basis) {
            F.check(s);
            detail::RawRow g(r.size());
            for (std::size_t c = 0; c < r.size(); ++c) g[c] = F.raw_mul(static_cast<FieldCtx::Index>(s.index()), r[c]);
            gens.push_back(std::move(g));
        }
    }
    const std::uint64_t total = detail::bounded_power(F.p(), gens.size(), cap);
    if (total > cap)
        throw CapExceededError("row space has more than " + std::to_string(cap) + " codewords");

    const std::size_t n = rows.empty() ? 0 : rows.front().size();
    SpanEnumeration out;
    out.codewords = total;
    if (gens.empty()) {
        out.weight_counts.assign(n + 1, 0);
        out.weight_counts[0] = 1;
        return out;
    }

    threads = std::max(1, threads);
    const std::uint64_t chunks = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total);
    std::vector<detail::ChunkResult> parts(chunks);
    std::vector<std::thread> pool;
    for (std::uint64_t i = 0; i < chunks; ++i) {
        const std::uint64_t b = total * i / chunks, e = total * (i + 1) / chunks;
        if (chunks == 1) {
            parts[i] = detail::walk_chunk(F, gens, b, e);
        } else {
            pool.emplace_back([&, i, b, e] { parts[i] = detail::walk_chunk(F, gens, b, e); });
        }
    }
    for (auto& t : pool) t.join();

    out.weight_counts.assign(n + 1, 0);
    detail::RawRow best;
    for (const auto& part : parts) {
        for (std::size_t w = 0; w <= n; ++w) out.weight_counts[w] += part.counts[w];
        if (part.best == 0) continue;
        if (out.min_weight == 0 || part.best < out.min_weight ||
            (part.best == out.min_weight && part.witness < best)) {
            out.min_weight = part.best;
            best = part.witness;
        }
    }
    for (auto x : best) out.witness.push_back(F.element(x));
    return out;
}

/// Upper estimate of the work done by min_weight_by_supports when searching up to max_weight.
inline std::uint64_t support_search_cost(std::uint64_t n, int max_weight, std::uint64_t limit) {
    std::uint64_t total = 0;
    for (int w = 1; w <= max_weight; ++w) {
        auto c = detail::bounded_binomial(n, static_cast<std::uint64_t>(w), limit);
        if (c > limit / static_cast<std::uint64_t>(w)) return limit + 1;
        total += c * static_cast<std::uint64_t>(w);
        if (total > limit) return limit + 1;
    }
    return total;
}

/**
 * Minimum weight of the code with parity-check matrix parity (rows of length n),
 * found as the smallest linearly dependent set of columns. Column subsets are
 * searched in increasing size and lexicographic order. Returns nullopt when
 * no dependency of size <= max_weight exists.
 */
inline std::optional<SupportSearch> min_weight_by_supports(const FieldCtx& F, const Matrix& parity, std::size_t n,
                                                           int max_weight) {
    using detail::RawRow;
    const std::size_t m = parity.size();
    std::vector<RawRow> cols(n, RawRow(m, 0));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            F.check(parity[r][c]);
            cols[c][r] = static_cast<FieldCtx::Index>(parity[r][c].index());
        }

    SupportSearch result;
    const int limit = std::min<int>(max_weight, static_cast<int>(n));

    for (int target = 1; target <= limit; ++target) {
        std::vector<int> chosen;
        std::vector<RawRow> reduced;     // reduced[i] has pivot pivots[i] normalised to 1
        std::vector<RawRow> coefs;       // reduced[i] = sum coefs[i][l] * cols[chosen[l]]
        std::vector<int> pivots;
        bool found = false;

        // Returns true once a dependency of size target is recorded.
        auto dfs = [&](auto&& self, std::size_t start) -> bool {
            const int depth = static_cast<int>(chosen.size());
            for (std::size_t c = start; c + (target - depth) <= n; ++c) {
                ++result.nodes;
                RawRow v = cols[c];
                RawRow coef(target, 0);
                coef[depth] = 1;
                for (int i = 0; i < depth; ++i) {
                    const auto a = v[pivots[i]];
                    if (a == 0) continue;
                    const auto na = F.raw_neg(a);
                    detail::axpy(F, v, na, reduced[i]);
                    detail::axpy(F, coef, na, coefs[i]);
                }
                auto it = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
                if (it == v.end()) {
                    if (depth + 1 != target) continue;  // smaller sizes were already excluded
                    Vector w(n, F.zero());
                    FieldCtx::Index lead = 0;
                    for (int l = 0; l < target; ++l) {
                        if (coef[l] != 0 && lead == 0) lead = F.raw_inv(coef[l]);
                    }
                    std::vector<int> sup = chosen;
                    sup.push_back(static_cast<int>(c));
                    for (int l = 0; l < target; ++l) w[sup[l]] = F.element(F.raw_mul(lead, coef[l]));
                    result.min_weight = target;
                    result.witness = std::move(w);
                    return true;
                }
                if (depth + 1 == target) continue;
                const int pv = static_cast<int>(it - v.begin());
                const auto inv = F.raw_inv(v[pv]);
                for (auto& x : v) x = F.raw_mul(x, inv);
                for (auto& x : coef) x = F.raw_mul(x, inv);
                chosen.push_back(static_cast<int>(c));
                reduced.push_back(std::move(v));
                coefs.push_back(std::move(coef));
                pivots.push_back(pv);
                if (self(self, c + 1)) return true;
                chosen.pop_back();
                reduced.pop_back();
                coefs.pop_back();
                pivots.pop_back();
            }
            return false;
        };
        found = dfs(dfs, 0);
        if (found) return result;
    }
    return std::nullopt;
}

}  // namespace hsogrs

#endif
