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

#ifndef HSOGRS_GRSCODE_HPP
#define HSOGRS_GRSCODE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "weights.hpp"

namespace hsogrs {

/// Parameters [[n, n-2k, k+1]]_q of the quantum code obtained from a Hermitian self-orthogonal [n,k]_{q^2} code.
struct QuantumParams {
    int n = 0, k = 0, d = 0, q = 0;
    friend bool operator==(const QuantumParams&, const QuantumParams&) = default;
};

struct CodeParams {
    int n = 0, k = 0, d = 0;
    bool verified_d = false;
    int alphabet = 0;
    QuantumParams quantum;
};

enum class MdsStatus { mds, not_mds, not_checked };

inline const char* to_string(MdsStatus s) {
    switch (s) {
        case MdsStatus::mds: return "mds";
        case MdsStatus::not_mds: return "not_mds";
        default: return "not_checked";
    }
}

/**
 * Truncated generalised Reed-Solomon code over F_{q^2}.
 *
 * Coordinates are numbered 1..q^2+1. Coordinate i <= q^2 evaluates at the
 * enumeration element a_i, coordinate q^2+1 carries the coefficient f_{k-1}.
 * Row r of the generator is theta_i * a_i^r on evaluation coordinates and
 * theta_{q^2+1} * [r == k-1] on the coefficient coordinate.
 */
class GrsCode {
   public:
    static GrsCode make(Field ctx, int k, std::vector<int> support, Vector thetas) {
        const int order = ctx->order();
        if (k < 1) throw ValidationError("code dimension must be positive");
        if (support.size() != thetas.size()) throw ValidationError("support and thetas differ in length");
        if (static_cast<int>(support.size()) < k) throw ValidationError("code length is smaller than its dimension");
        for (std::size_t i = 0; i < support.size(); ++i) {
            if (support[i] < 1 || support[i] > order + 1)
                throw ValidationError("support index " + std::to_string(support[i]) + " out of range");
            if (i > 0 && support[i] <= support[i - 1])
                throw ValidationError("support indices must be strictly increasing");
            ctx->check(thetas[i]);
            if (thetas[i].is_zero()) throw ValidationError("column multipliers must be nonzero");
        }
        GrsCode code;
        code.ctx_ = std::move(ctx);
        code.k_ = k;
        code.support_ = std::move(support);
        code.thetas_ = std::move(thetas);
        code.build_generator();
        return code;
    }

    const Field& ctx() const noexcept { return ctx_; }
    int k() const noexcept { return k_; }
    int n() const noexcept { return static_cast<int>(support_.size()); }
    const std::vector<int>& support() const noexcept { return support_; }
    const Vector& thetas() const noexcept { return thetas_; }
    const Matrix& generator() const noexcept { return gen_; }

   private:
    GrsCode() = default;

    void build_generator() {
        const auto& F = *ctx_;
        gen_.assign(k_, Vector(support_.size(), F.zero()));
        for (std::size_t col = 0; col < support_.size(); ++col) {
            const int i = support_[col];
            if (i == F.order() + 1) {
                gen_[k_ - 1][col] = thetas_[col];
                continue;
            }
            const Felt a = F.element(i - 1);
            for (int r = 0; r < k_; ++r) gen_[r][col] = F.mul(thetas_[col], F.pow(a, r));
        }
    }

    Field ctx_;
    int k_ = 0;
    std::vector<int> support_;
    Vector thetas_;
    Matrix gen_;
};

/// Full-length code, all multipliers 1.
inline GrsCode build_rs(const Field& ctx, int k) {
    if (k < 1 || k > ctx->q() + 1) throw ValidationError("Reed-Solomon dimension must satisfy 1 <= k <= q+1");
    std::vector<int> support(ctx->order() + 1);
    for (int i = 0; i < ctx->order() + 1; ++i) support[i] = i + 1;
    return GrsCode::make(ctx, k, std::move(support), Vector(ctx->order() + 1, ctx->one()));
}

/**
 * Keeps the coordinates where lam is nonzero and multiplies column i by the
 * minimal theta with theta^(q+1) = lam_i. lam has length q^2+1 over F_q.
 */
inline GrsCode truncate_scale(const GrsCode& code, const Vector& lam) {
    const auto& F = *code.ctx();
    if (static_cast<int>(lam.size()) != F.order() + 1) throw ValidationError("puncture vector must have length q^2+1");
    std::vector<int> support;
    Vector thetas;
    std::size_t col = 0;
    for (int i = 1; i <= F.order() + 1; ++i) {
        const Felt l = lam[i - 1];
        F.check(l);
        if (!F.in_subfield(l)) throw ValidationError("puncture vector entries must lie in F_q");
        while (col < code.support().size() && code.support()[col] < i) ++col;
        if (l.is_zero()) continue;
        if (col == code.support().size() || code.support()[col] != i)
            throw ValidationError("puncture vector is nonzero outside the code support");
        support.push_back(i);
        thetas.push_back(F.mul(code.thetas()[col], F.solve_norm(l)));
    }
    if (static_cast<int>(support.size()) < code.k())
        throw ValidationError("puncture vector weight " + std::to_string(support.size()) + " is below the dimension " +
                              std::to_string(code.k()));
    return GrsCode::make(code.ctx(), code.k(), std::move(support), std::move(thetas));
}

/// Entry (r,s) is the Hermitian product sum_j gen[r][j]^q * gen[s][j].
inline Matrix hermitian_gram(const FieldCtx& F, const Matrix& gen) {
    const std::size_t k = gen.size();
    Matrix gram(k, Vector(k, F.zero()));
    for (std::size_t r = 0; r < k; ++r) {
        Vector conj;
        conj.reserve(gen[r].size());
        for (const auto& x : gen[r]) conj.push_back(F.frobenius(x));
        for (std::size_t s = 0; s < k; ++s) {
            Felt acc = F.zero();
            for (std::size_t j = 0; j < gen[s].size(); ++j) acc = F.add(acc, F.mul(conj[j], gen[s][j]));
            gram[r][s] = acc;
        }
    }
    return gram;
}

inline Matrix hermitian_gram(const GrsCode& code) { return hermitian_gram(*code.ctx(), code.generator()); }

inline bool is_zero_matrix(const Matrix& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

inline bool is_hermitian_self_orthogonal(const GrsCode& code) { return is_zero_matrix(hermitian_gram(code)); }

/// Every k-subset of columns nonsingular; not_checked when C(n,k) exceeds cap.
inline MdsStatus check_mds(const GrsCode& code, std::uint64_t cap = 1'000'000) {
    const auto& F = *code.ctx();
    const int n = code.n(), k = code.k();
    if (detail::bounded_binomial(n, k, cap) > cap) return MdsStatus::not_checked;
    const auto& gen = code.generator();
    std::vector<int> cols(k);
    for (int i = 0; i < k; ++i) cols[i] = i;
    Matrix minor(k, Vector(k));
    while (true) {
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) minor[r][c] = gen[r][cols[c]];
        if (!is_nonsingular(F, minor)) return MdsStatus::not_mds;
        int i = k - 1;
        while (i >= 0 && cols[i] == n - k + i) --i;
        if (i < 0) break;
        ++cols[i];
        for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return MdsStatus::mds;
}

/// Minimum weight by enumerating all (q^2)^k codewords.
inline int min_weight(const GrsCode& code, std::uint64_t cap = 100'000'000, int threads = 1) {
    const auto& F = *code.ctx();
    Vector scalars;
    for (int s = 0; s < 2 * F.h(); ++s) scalars.push_back(F.power_of_primitive(s));
    return enumerate_span(F, code.generator(), scalars, cap, threads).min_weight;
}

struct DistanceCheck {
    int d = 0;
    bool verified = false;
    std::string mode;  // "mds_minors", "enumeration" or "by_construction"
    MdsStatus mds = MdsStatus::not_checked;
};

/// Tiered distance verification: minors, then enumeration, else the MDS value unverified.
inline DistanceCheck verify_distance(const GrsCode& code, std::uint64_t minor_cap = 1'000'000,
                                     std::uint64_t enumeration_cap = 1'000'000, int threads = 1) {
    DistanceCheck out;
    out.d = code.n() - code.k() + 1;
    out.mds = check_mds(code, minor_cap);
    if (out.mds == MdsStatus::mds) {
        out.verified = true;
        out.mode = "mds_minors";
        return out;
    }
    try {
        out.d = min_weight(code, enumeration_cap, threads);
        out.verified = true;
        out.mode = "enumeration";
        return out;
    } catch (const CapExceededError&) {
    }
    if (out.mds == MdsStatus::not_mds)
        throw std::logic_error("code is not MDS and its distance could not be enumerated");
    out.mode = "by_construction";
    return out;
}

/// [[n, n-2k, k+1]]_q for a Hermitian self-orthogonal code.
inline CodeParams quantum_params(const GrsCode& code, const DistanceCheck* distance = nullptr) {
    if (!is_hermitian_self_orthogonal(code))
        throw ValidationError("quantum parameters require a Hermitian self-orthogonal code");
    CodeParams p;
    p.n = code.n();
    p.k = code.k();
    p.d = distance ? distance->d : p.n - p.k + 1;
    p.verified_d = distance && distance->verified;
    p.alphabet = code.ctx()->order();
    p.quantum = {p.n, p.n - 2 * p.k, p.k + 1, code.ctx()->q()};
    return p;
}

}  // namespace hsogrs

#endif
