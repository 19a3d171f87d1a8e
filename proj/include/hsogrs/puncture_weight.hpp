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

#ifndef HSOGRS_PUNCTURE_WEIGHT_HPP
#define HSOGRS_PUNCTURE_WEIGHT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "constructions.hpp"
#include "grscode.hpp"
#include "puncture.hpp"
#include "weights.hpp"

namespace hsogrs {

struct PunctureMinWeight {
    int q = 0, k = 0, dim = 0;
    std::optional<int> value;  // nullopt when P(C) = {0}
    Vector witness;
    std::string mode;    // "exhaustive", "constructive" or "trivial"
    std::string method;  // "enumeration", "support_search" or "construction"
    std::optional<int> formula_value;
    bool agrees = false;
    std::optional<std::vector<std::uint64_t>> weight_counts;  // present after full enumeration
};

/// F_p-basis {1, u, ..., u^(h-1)} of F_q, u = w^(q+1).
inline Vector subfield_scalar_basis(const FieldCtx& F) {
    Vector out;
    for (int s = 0; s < F.h(); ++s) out.push_back(F.power_of_primitive(static_cast<long long>(s) * (F.q() + 1)));
    return out;
}

/// lam lies in P(C) iff the truncation it defines has zero Hermitian Gram matrix.
inline bool certifies_self_orthogonal(const Field& ctx, int k, const Vector& lam) {
    if (weight(lam) < k) return false;
    return is_hermitian_self_orthogonal(truncate_scale(build_rs(ctx, k), lam));
}

/**
 * Minimum nonzero weight of P(C). Exhaustive when the row space has at most
 * cap words (enumeration) or when the column-subset search up to the weight
 * of a known witness costs at most cap; otherwise the constructive witness
 * is reported together with the closed-form value.
 */
inline PunctureMinWeight min_weight_pc(const Field& ctx, int k, std::uint64_t cap = 100'000'000, int threads = 1) {
    const auto& F = *ctx;
    const int q = F.q();
    const int n = F.order() + 1;
    PunctureMinWeight out;
    out.q = q;
    out.k = k;
    out.dim = puncture_dimension(q, k);
    out.formula_value = formula_min_weight(q, k);
    if (k > q) {
        out.mode = "trivial";
        out.method = "construction";
        out.agrees = true;
        return out;
    }

    const auto known = minimum_weight_witness(ctx, k);
    if (!known || !certifies_self_orthogonal(ctx, k, *known))
        throw VerificationError("constructed witness is not in the puncture code");
    const int known_weight = weight(*known);

    // The linear system has 2k^2 rows and q^2+1 columns; keep it desk-sized.
    const bool system_feasible = 2.0 * k * k * n <= 4e6;
    if (system_feasible) {
        const Matrix parity = puncture_parity_check(ctx, k);
        if (detail::bounded_power(q, out.dim, cap) <= cap) {
            const Matrix basis = null_space(F, parity, n);
            auto en = enumerate_span(F, basis, subfield_scalar_basis(F), cap, threads);
            out.value = en.min_weight;
            out.witness = std::move(en.witness);
            out.weight_counts = std::move(en.weight_counts);
            out.mode = "exhaustive";
            out.method = "enumeration";
        } else {
            const int limit = std::min(known_weight, n - out.dim + 1);
            if (support_search_cost(n, limit, cap) <= cap) {
                auto found = min_weight_by_supports(F, parity, n, limit);
                if (!found) throw VerificationError("support search found no codeword up to a known witness weight");
                out.value = found->min_weight;
                out.witness = std::move(found->witness);
                out.mode = "exhaustive";
                out.method = "support_search";
            }
        }
    }
    if (!out.value) {
        out.value = known_weight;
        out.witness = *known;
        out.mode = "constructive";
        out.method = "construction";
    }
    out.agrees = out.value == out.formula_value;
    return out;
}

}  // namespace hsogrs

#endif
