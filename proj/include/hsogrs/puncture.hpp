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

#ifndef HSOGRS_PUNCTURE_HPP
#define HSOGRS_PUNCTURE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "poly.hpp"

/*
 * The puncture code P(C) of the k-dimensional Reed-Solomon code C of length
 * q^2+1: all lam in F_q^(q^2+1) with sum_i lam_i u_i v_i^q = 0 for u, v in C.
 * Three independent descriptions are provided:
 *   direct   - null space of the linear conditions on the monomial basis,
 *   u_space  - evaluations of the structured polynomial space U,
 *   g_form   - vectors g + g^q + c X^((q-k)(q+1)) with deg g <= (q-k)q - 1.
 * Every basis is returned in reduced row echelon form so that equal row
 * spaces give equal matrices.
 */

namespace hsogrs {

enum class PunctureMethod { direct, u_space, g_form };

inline const char* to_string(PunctureMethod m) {
    switch (m) {
        case PunctureMethod::direct: return "direct";
        case PunctureMethod::u_space: return "u_space";
        default: return "g_form";
    }
}

inline PunctureMethod parse_puncture_method(const std::string& s) {
    if (s == "direct") return PunctureMethod::direct;
    if (s == "u_space") return PunctureMethod::u_space;
    if (s == "g_form") return PunctureMethod::g_form;
    throw ValidationError("unknown puncture method '" + s + "'");
}

struct PunctureBasis {
    Field ctx;
    int k = 0;
    PunctureMethod method = PunctureMethod::direct;
    Matrix rows;
    std::vector<int> pivots;

    int dim() const noexcept { return static_cast<int>(rows.size()); }
    Echelon echelon() const { return {rows, pivots}; }
};

/// q^2 + 1 - k^2 for k <= q, 0 above.
inline int puncture_dimension(int q, int k) { return k <= q ? q * q + 1 - k * k : 0; }

namespace detail {

inline void check_dimension_arg(const FieldCtx& F, int k) {
    if (k < 1 || k > F.order() + 1) throw ValidationError("dimension k must satisfy 1 <= k <= q^2+1");
}

inline PunctureBasis make_basis(const Field& ctx, int k, PunctureMethod method, Matrix generators) {
    PunctureBasis b{ctx, k, method, {}, {}};
    if (generators.empty()) return b;
    auto e = rref(*ctx, generators);
    b.rows = std::move(e.rows);
    b.pivots = std::move(e.pivots);
    return b;
}

}  // namespace detail

/**
 * The F_q-linear conditions defining P(C): for 0 <= r, s < k,
 * sum_{i <= q^2} lam_i a_i^(rq+s) + [r = s = k-1] lam_{q^2+1} = 0,
 * each F_{q^2} equation split into two F_q equations over the basis {1, xi}.
 */
inline Matrix puncture_equations(const Field& ctx, int k) {
    const auto& F = *ctx;
    detail::check_dimension_arg(F, k);
    const int order = F.order(), q = F.q();
    Matrix eqs;
    eqs.reserve(2 * static_cast<std::size_t>(k) * k);
    for (int r = 0; r < k; ++r) {
        for (int s = 0; s < k; ++s) {
            Vector re(order + 1, F.zero()), im(order + 1, F.zero());
            const long long e = static_cast<long long>(r) * q + s;
            for (int i = 0; i < order; ++i) {
                auto [x, y] = F.split(F.pow(F.element(i), e));
                re[i] = x;
                im[i] = y;
            }
            if (r == k - 1 && s == k - 1) re[order] = F.one();
            eqs.push_back(std::move(re));
            eqs.push_back(std::move(im));
        }
    }
    return eqs;
}

/// Parity-check matrix of P(C) in reduced row echelon form (rank k^2 for k <= q).
inline Matrix puncture_parity_check(const Field& ctx, int k) { return rref(*ctx, puncture_equations(ctx, k)).rows; }

/// P(C) as the solution space of its defining linear system.
inline PunctureBasis puncture_direct(const Field& ctx, int k, int max_q = 11) {
    const auto& F = *ctx;
    detail::check_dimension_arg(F, k);
    if (F.q() > max_q)
        throw CapExceededError("direct puncture solver is capped at q <= " + std::to_string(max_q));
    auto eqs = puncture_equations(ctx, k);
    return detail::make_basis(ctx, k, PunctureMethod::direct, null_space(F, eqs, F.order() + 1));
}

/// Element of U: h_ij in F_{q^2} for 0 <= i <= q-k-1 < j <= q-1, h_i in F_q for 0 <= i <= q-k.
struct UPoly {
    Field ctx;
    int k = 0;
    std::map<std::pair<int, int>, Felt> h_pair;
    std::vector<Felt> h_diag;

    explicit UPoly(Field c, int dim) : ctx(std::move(c)), k(dim) {
        const int q = ctx->q();
        if (k < 1 || k > q) throw ValidationError("U is defined for 1 <= k <= q");
        h_diag.assign(q - k + 1, ctx->zero());
    }

    void set_pair(int i, int j, Felt v) {
        const int q = ctx->q();
        if (i < 0 || i > q - k - 1 || j <= i || j > q - 1) throw ValidationError("h_ij index outside U");
        ctx->check(v);
        h_pair[{i, j}] = v;
    }
    void set_diag(int i, Felt v) {
        if (i < 0 || i >= static_cast<int>(h_diag.size())) throw ValidationError("h_i index outside U");
        if (!ctx->in_subfield(v)) throw ValidationError("h_i must lie in F_q");
        h_diag[i] = v;
    }

    /// sum (h_ij X^(iq+j) + h_ij^q X^(jq+i)) + sum h_i X^(i(q+1))
    Poly expand() const {
        const auto& F = *ctx;
        const long long q = F.q();
        std::vector<Felt> c(static_cast<std::size_t>(q * q), F.zero());
        for (const auto& [ij, v] : h_pair) {
            auto [i, j] = ij;
            c[static_cast<std::size_t>(i * q + j)] = F.add(c[static_cast<std::size_t>(i * q + j)], v);
            c[static_cast<std::size_t>(j * q + i)] = F.add(c[static_cast<std::size_t>(j * q + i)], F.frobenius(v));
        }
        for (std::size_t i = 0; i < h_diag.size(); ++i)
            c[i * static_cast<std::size_t>(q + 1)] = F.add(c[i * static_cast<std::size_t>(q + 1)], h_diag[i]);
        return Poly(ctx, std::move(c));
    }

    /// (h(a_1), ..., h(a_{q^2}), h_{q-k})
    Vector puncture_vector() const {
        auto v = expand().eval_all();
        v.push_back(h_diag.back());
        for (const auto& x : v)
            if (!ctx->in_subfield(x)) throw std::logic_error("U polynomial evaluates outside F_q");
        return v;
    }
};

/// F_q-spanning set of U: h_ij = 1 and h_ij = xi for every pair slot, h_i = 1 for every diagonal slot.
inline std::vector<UPoly> u_space_generators(const Field& ctx, int k) {
    const auto& F = *ctx;
    const int q = F.q();
    std::vector<UPoly> gens;
    if (k > q) return gens;
    for (int i = 0; i <= q - k - 1; ++i)
        for (int j = i + 1; j <= q - 1; ++j)
            for (Felt v : {F.one(), F.subfield_complement()}) {
                UPoly u(ctx, k);
                u.set_pair(i, j, v);
                gens.push_back(std::move(u));
            }
    for (int i = 0; i <= q - k; ++i) {
        UPoly u(ctx, k);
        u.set_diag(i, F.one());
        gens.push_back(std::move(u));
    }
    return gens;
}

/// 2((q-1)(q-k) - (q-k-1)(q-k)/2) + (q-k+1)
inline int u_space_generator_count(int q, int k) {
    if (k > q) return 0;
    return 2 * ((q - 1) * (q - k) - (q - k - 1) * (q - k) / 2) + (q - k + 1);
}

inline PunctureBasis u_space_basis(const Field& ctx, int k) {
    detail::check_dimension_arg(*ctx, k);
    Matrix rows;
    for (const auto& u : u_space_generators(ctx, k)) rows.push_back(u.puncture_vector());
    return detail::make_basis(ctx, k, PunctureMethod::u_space, std::move(rows));
}

/// (g(a_i) + g(a_i)^q + c a_i^((q-k)(q+1)))_i followed by c.
inline Vector g_form_vector(const Field& ctx, int k, const Poly& g, Felt c) {
    const auto& F = *ctx;
    detail::check_dimension_arg(F, k);
    if (g.ctx() != ctx) throw ContextMismatchError("polynomial over a different field context");
    F.check(c);
    if (!F.in_subfield(c)) throw ValidationError("c must lie in F_q");
    const int q = F.q();
    const long long bound = static_cast<long long>(q - k) * q - 1;
    if (g.degree() > bound)
        throw ValidationError("deg g = " + std::to_string(g.degree()) + " exceeds (q-k)q-1 = " + std::to_string(bound));
    if (k > q) {
        if (!c.is_zero()) throw ValidationError("c must be zero when k > q");
        return Vector(F.order() + 1, F.zero());
    }
    const long long top = static_cast<long long>(q - k) * (q + 1);
    Vector v;
    v.reserve(F.order() + 1);
    for (int i = 0; i < F.order(); ++i) {
        const Felt a = F.element(i);
        const Felt ga = g.eval(a);
        Felt x = F.add(F.add(ga, F.frobenius(ga)), F.mul(c, F.pow(a, top)));
        if (!F.in_subfield(x)) throw std::logic_error("g-form entry outside F_q");
        v.push_back(x);
    }
    v.push_back(c);
    return v;
}

/// Row-reduced span of the g-form vectors of g = X^e, xi X^e (e <= (q-k)q-1) and of g = 0, c = 1.
inline PunctureBasis g_form_basis(const Field& ctx, int k) {
    const auto& F = *ctx;
    detail::check_dimension_arg(F, k);
    const int q = F.q();
    Matrix rows;
    if (k <= q) {
        const long long bound = static_cast<long long>(q - k) * q - 1;
        for (long long e = 0; e <= bound; ++e)
            for (Felt s : {F.one(), F.subfield_complement()})
                rows.push_back(g_form_vector(ctx, k, Poly::monomial(ctx, e, s), F.zero()));
        rows.push_back(g_form_vector(ctx, k, Poly(ctx), F.one()));
    }
    return detail::make_basis(ctx, k, PunctureMethod::g_form, std::move(rows));
}

inline PunctureBasis puncture_basis(const Field& ctx, int k, PunctureMethod method, int max_q = 11) {
    switch (method) {
        case PunctureMethod::direct: return puncture_direct(ctx, k, max_q);
        case PunctureMethod::u_space: return u_space_basis(ctx, k);
        default: return g_form_basis(ctx, k);
    }
}

inline bool membership(const PunctureBasis& basis, const Vector& v) {
    if (static_cast<int>(v.size()) != basis.ctx->order() + 1)
        throw ValidationError("vector length differs from q^2+1");
    return in_row_space(*basis.ctx, basis.echelon(), v);
}

/// Conjectured-then-proven minimum distance of P(C); nullopt when P(C) = {0}.
inline std::optional<int> formula_min_weight(int q, int k) {
    if (k < 1) throw ValidationError("k must be positive");
    if (k > q) return std::nullopt;
    if (k == q) return q * q + 1;
    if (2 * k <= q) return 2 * k;
    if (q % 2 == 1) return (q + 1) * (2 * k - (q - 1)) / 2;
    return q * (k + 1 - q / 2);
}

}  // namespace hsogrs

#endif
