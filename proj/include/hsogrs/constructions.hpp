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

#ifndef HSOGRS_CONSTRUCTIONS_HPP
#define HSOGRS_CONSTRUCTIONS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "grscode.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "puncture.hpp"

/*
 * Explicit polynomial families giving Hermitian self-orthogonal truncations
 * of the Reed-Solomon code. Each builder forms g (or h), counts the zeros of
 * g + g^q by exhaustive evaluation, compares the count with the family's
 * predicted N, and pushes the resulting puncture vector through
 * truncate_scale with a Gram-matrix certificate. Any disagreement is thrown
 * as VerificationError.
 */

namespace hsogrs {

enum class Family { example1, example2, example3, even_q_min, odd_q_min, qsq_plus_one, custom_g };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::example1: return "example1";
        case Family::example2: return "example2";
        case Family::example3: return "example3";
        case Family::even_q_min: return "even_q_min";
        case Family::odd_q_min: return "odd_q_min";
        case Family::qsq_plus_one: return "qsq_plus_one";
        default: return "custom_g";
    }
}

struct ConstructionSpec {
    Family family = Family::custom_g;
    int k = 0;
    std::optional<int> t;
    std::optional<Poly> f;
    std::vector<Felt> R;
    std::optional<Felt> e;
    std::optional<Poly> g;
    std::optional<Felt> c;
};

struct ConstructionChecks {
    std::optional<bool> factored_identity;
    bool zero_count_matches_N = false;
    bool self_orthogonal = false;
    MdsStatus mds = MdsStatus::not_checked;
};

struct ConstructionOptions {
    std::uint64_t minor_cap = 1'000'000;
    std::uint64_t enumeration_cap = 1'000'000;
    int threads = 1;
};

struct ConstructionReport {
    ConstructionSpec spec;
    std::string polynomial_role;  // "g" for g + g^q + c X^((q-k)(q+1)), "h" for an element of U
    Poly polynomial;
    Felt c;
    Vector puncture;
    int zero_count = 0;
    std::optional<int> predicted_N;
    GrsCode code;
    DistanceCheck distance;
    CodeParams params;
    ConstructionChecks checks;
};

namespace detail {

inline int count_points(const FieldCtx& F, const std::function<bool(Felt)>& pred) {
    int n = 0;
    for (int i = 0; i < F.order(); ++i) n += pred(F.element(i));
    return n;
}

inline bool holds_everywhere(const FieldCtx& F, const std::function<bool(Felt)>& pred) {
    for (int i = 0; i < F.order(); ++i)
        if (!pred(F.element(i))) return false;
    return true;
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ValidationError(msg);
}

inline void require_distinct(const std::vector<Felt>& R, const std::string& what) {
    std::set<Felt> seen(R.begin(), R.end());
    require(seen.size() == R.size(), what + " must consist of distinct elements");
}

inline long long degree_bound(int q, int k) { return static_cast<long long>(q - k) * q - 1; }

// Runs the common tail: weight check, truncation, Gram certificate, distance and parameters.
inline ConstructionReport finish(const Field& ctx, ConstructionSpec spec, std::string role, Poly poly, Felt c, Vector lam,
                                 std::optional<int> predicted, std::optional<bool> factored,
                                 const ConstructionOptions& opt) {
    const auto& F = *ctx;
    const int k = spec.k;
    int zeros = 0;
    for (int i = 0; i < F.order(); ++i) zeros += lam[i].is_zero();
    if (factored && !*factored) throw VerificationError(std::string(to_string(spec.family)) + ": factored identity fails");
    if (predicted && *predicted != zeros)
        throw VerificationError(std::string(to_string(spec.family)) + ": measured " + std::to_string(zeros) +
                                " zeros, predicted N = " + std::to_string(*predicted));
    const int n = weight(lam);
    if (n < 2 * k)
        throw ValidationError("puncture vector weight " + std::to_string(n) + " is below 2k = " + std::to_string(2 * k) +
                              "; a Hermitian self-orthogonal code needs length at least twice its dimension");
    GrsCode code = truncate_scale(build_rs(ctx, k), lam);
    const bool so = is_hermitian_self_orthogonal(code);
    if (!so) throw VerificationError(std::string(to_string(spec.family)) + ": truncated code is not Hermitian self-orthogonal");
    DistanceCheck dist = verify_distance(code, opt.minor_cap, opt.enumeration_cap, opt.threads);
    CodeParams params = quantum_params(code, &dist);
    ConstructionChecks checks{factored, !predicted || *predicted == zeros, so, dist.mds};
    return ConstructionReport{std::move(spec), std::move(role), std::move(poly), c, std::move(lam), zeros, predicted,
                              std::move(code), dist, params, checks};
}

inline ConstructionReport finish_g(const Field& ctx, ConstructionSpec spec, Poly g, Felt c, std::optional<int> predicted,
                                   std::optional<bool> factored, const ConstructionOptions& opt) {
    Vector lam = g_form_vector(ctx, spec.k, g, c);
    return finish(ctx, std::move(spec), "g", std::move(g), c, std::move(lam), predicted, factored, opt);
}

inline Poly product_of(const Field& ctx, const std::vector<Felt>& R, const std::function<Poly(Felt)>& factor) {
    Poly acc = Poly::constant(ctx, ctx->one());
    for (const auto& r : R) acc *= factor(r);
    return acc;
}

}  // namespace detail

/// Divisors d >= 1 of q+1.
inline bool divides(int d, int n) { return d >= 1 && n % d == 0; }

/**
 * g = c X^t f(X^(q+1)) with c^q = -c, t | q+1, f over F_q and
 * t + deg(f)(q+1) <= (q-k)q - 1. Predicts N = 1 + t(q-1) + M where M counts
 * the nonzero zeros of f(X^(q+1)) that are not t(q-1)-th roots of unity.
 */
inline ConstructionReport build_example1(const Field& ctx, int k, int t, const Poly& f, const ConstructionOptions& opt = {}) {
    const auto& F = *ctx;
    const int q = F.q();
    detail::require(k >= 1 && k <= q - 1, "example1 needs 1 <= k <= q-1");
    detail::require(divides(t, q + 1), "example1 needs t | q+1");
    detail::require(!f.is_zero() && f.over_subfield(), "example1 needs a nonzero f with coefficients in F_q");
    detail::require(t + f.degree() * (q + 1) <= detail::degree_bound(q, k), "example1 degree bound t + deg(f)(q+1) <= (q-k)q-1 violated");

    const Felt c = F.skew_element();
    const Poly fx = f.compose_power(q + 1);
    const Poly g = Poly::monomial(ctx, t, c) * fx;
    const long long tq1 = static_cast<long long>(t) * (q - 1);

    const bool factored = detail::holds_everywhere(F, [&](Felt x) {
        Felt gx = g.eval(x);
        Felt rhs = F.mul(F.mul(c, F.pow(x, t)), F.mul(F.sub(F.one(), F.pow(x, tq1)), fx.eval(x)));
        return F.add(gx, F.frobenius(gx)) == rhs;
    });
    const int M = detail::count_points(F, [&](Felt x) { return !x.is_zero() && fx.eval(x).is_zero() && F.pow(x, tq1) != F.one(); });
    const int N = 1 + t * (q - 1) + M;

    ConstructionSpec spec{Family::example1, k, t, f, {}, {}, {}, {}};
    return detail::finish_g(ctx, std::move(spec), g, F.zero(), N, factored, opt);
}

/**
 * g = c X^t prod_{r in R} (X^q + X + r), R a subset of F_q, t | q+1 and
 * t + |R| q <= (q-k)q - 1. N = 1 + t(q-1) + sum N_r.
 */
inline ConstructionReport build_example2(const Field& ctx, int k, int t, const std::vector<Felt>& R,
                                         const ConstructionOptions& opt = {}) {
    const auto& F = *ctx;
    const int q = F.q();
    detail::require(k >= 1 && k <= q - 1, "example2 needs 1 <= k <= q-1");
    detail::require(divides(t, q + 1), "example2 needs t | q+1");
    for (const auto& r : R) detail::require(F.in_subfield(r), "example2 needs R inside F_q");
    detail::require_distinct(R, "R");
    detail::require(t + static_cast<long long>(R.size()) * q <= detail::degree_bound(q, k),
                    "example2 degree bound t + |R|q <= (q-k)q-1 violated");

    const Felt c = F.skew_element();
    const Poly trace_shift_base = Poly::monomial(ctx, q, F.one()) + Poly::x(ctx);
    const Poly prod = detail::product_of(ctx, R, [&](Felt r) { return trace_shift_base + Poly::constant(ctx, r); });
    const Poly g = Poly::monomial(ctx, t, c) * prod;
    const long long tq1 = static_cast<long long>(t) * (q - 1);

    const bool factored = detail::holds_everywhere(F, [&](Felt x) {
        Felt gx = g.eval(x);
        Felt rhs = F.mul(F.mul(c, F.pow(x, t)), F.mul(F.sub(F.one(), F.pow(x, tq1)), prod.eval(x)));
        return F.add(gx, F.frobenius(gx)) == rhs;
    });
    int N = 1 + t * (q - 1);
    for (const auto& r : R) {
        const Poly fr = trace_shift_base + Poly::constant(ctx, r);
        N += detail::count_points(F, [&](Felt x) { return !x.is_zero() && fr.eval(x).is_zero() && F.pow(x, tq1) != F.one(); });
    }
    ConstructionSpec spec{Family::example2, k, t, {}, R, {}, {}, {}};
    return detail::finish_g(ctx, std::move(spec), g, F.zero(), N, factored, opt);
}

/**
 * g = c X^t prod_{e in R} (X^(q-1) + e), R inside the (q+1)-st roots of unity,
 * closed under inversion with product 1, (t-|R|) | q+1 and
 * t + |R|(q-1) <= (q-k)q - 1. N = 1 + (t-|R|)(q-1) + sum N_e.
 */
inline ConstructionReport build_example3(const Field& ctx, int k, int t, const std::vector<Felt>& R,
                                         const ConstructionOptions& opt = {}) {
    const auto& F = *ctx;
    const int q = F.q();
    const int s = t - static_cast<int>(R.size());
    detail::require(k >= 1 && k <= q - 1, "example3 needs 1 <= k <= q-1");
    detail::require_distinct(R, "R");
    for (const auto& e : R) detail::require(F.norm(e) == F.one(), "example3 needs every e in R to satisfy e^(q+1) = 1");
    for (const auto& e : R)
        detail::require(std::find(R.begin(), R.end(), F.inv(e)) != R.end(), "example3 needs R closed under inversion");
    Felt prod_e = F.one();
    for (const auto& e : R) prod_e = F.mul(prod_e, e);
    detail::require(prod_e == F.one(), "example3 needs the product of R to be 1");
    detail::require(divides(s, q + 1), "example3 needs (t-|R|) | q+1");
    detail::require(t + static_cast<long long>(R.size()) * (q - 1) <= detail::degree_bound(q, k),
                    "example3 degree bound t + |R|(q-1) <= (q-k)q-1 violated");

    const Felt c = F.skew_element();
    const Poly xq1 = Poly::monomial(ctx, q - 1, F.one());
    const Poly prod = detail::product_of(ctx, R, [&](Felt e) { return xq1 + Poly::constant(ctx, e); });
    const Poly g = Poly::monomial(ctx, t, c) * prod;
    const long long sq1 = static_cast<long long>(s) * (q - 1);
    const Felt cinv = F.inv(c);

    const bool factored = detail::holds_everywhere(F, [&](Felt x) {
        Felt gx = g.eval(x);
        Felt lhs = F.mul(cinv, F.add(gx, F.frobenius(gx)));
        Felt rhs = F.mul(F.pow(x, t), F.mul(F.sub(F.one(), F.pow(x, sq1)), prod.eval(x)));
        return lhs == rhs;
    });
    int N = 1 + s * (q - 1);
    for (const auto& e : R) {
        const Poly fe = xq1 + Poly::constant(ctx, e);
        N += detail::count_points(F, [&](Felt x) { return fe.eval(x).is_zero() && F.pow(x, sq1) != F.one(); });
    }
    ConstructionSpec spec{Family::example3, k, t, {}, R, {}, {}, {}};
    return detail::finish_g(ctx, std::move(spec), g, F.zero(), N, factored, opt);
}

/// Elements of F_q with absolute trace 1, enumeration order (q even).
inline std::vector<Felt> trace_one_elements(const FieldCtx& F) {
    std::vector<Felt> out;
    for (const auto& e : F.subfield_elements())
        if (F.trace_to_prime(e) == F.one()) out.push_back(e);
    return out;
}

/// Nonzero squares of F_q, enumeration order (q odd).
inline std::vector<Felt> subfield_squares(const FieldCtx& F) {
    std::vector<Felt> out;
    for (const auto& e : F.subfield_elements())
        if (F.pow(e, (F.q() - 1) / 2) == F.one()) out.push_back(e);
    return out;
}

/// sum_{j < m} X^(2^j)
inline Poly binary_trace_poly(const Field& ctx, int m) {
    Poly acc(ctx);
    for (int j = 0; j < m; ++j) acc += Poly::monomial(ctx, 1LL << j, ctx->one());
    return acc;
}

/**
 * q even, q/2 <= k <= q-1: g = tr_{q->2}(X) prod_{e in R}(X^q + X + e) with
 * |R| = q-k-1 trace-one elements. g + g^q has q(q-k-1) + q^2/2 zeros, so the
 * puncture vector has weight q(k+1-q/2).
 */
inline ConstructionReport build_even_q_min(const Field& ctx, int k, std::optional<std::vector<Felt>> R_in = std::nullopt,
                                           const ConstructionOptions& opt = {}) {
    const auto& F = *ctx;
    const int q = F.q();
    detail::require(F.p() == 2, "even_q_min needs q even");
    detail::require(2 * k >= q && k <= q - 1, "even_q_min needs q/2 <= k <= q-1");
    const auto eligible = trace_one_elements(F);
    std::vector<Felt> R = R_in ? *R_in : std::vector<Felt>(eligible.begin(), eligible.begin() + (q - k - 1));
    detail::require(static_cast<int>(R.size()) == q - k - 1, "even_q_min needs |R| = q-k-1");
    detail::require_distinct(R, "R");
    for (const auto& e : R)
        detail::require(F.in_subfield(e) && F.trace_to_prime(e) == F.one(), "even_q_min needs R inside the trace-one elements of F_q");

    const Poly base = Poly::monomial(ctx, q, F.one()) + Poly::x(ctx);
    const Poly prod = detail::product_of(ctx, R, [&](Felt e) { return base + Poly::constant(ctx, e); });
    const Poly g = binary_trace_poly(ctx, F.h()) * prod;
    const Poly big_trace = binary_trace_poly(ctx, 2 * F.h());

    const bool factored = detail::holds_everywhere(F, [&](Felt x) {
        Felt gx = g.eval(x);
        return F.add(gx, F.frobenius(gx)) == F.mul(big_trace.eval(x), prod.eval(x));
    });
    const int N = q * (q - k - 1) + q * q / 2;
    ConstructionSpec spec{Family::even_q_min, k, {}, {}, R, {}, {}, {}};
    return detail::finish_g(ctx, std::move(spec), g, F.zero(), N, factored, opt);
}

/**
 * q odd, (q+1)/2 <= k <= q-1: g = X^((q+1)/2) prod_{e in R}(X^(q+1) - e) with
 * |R| = q-k-1 nonzero squares of F_q. g + g^q has (q^2+1)/2 + (q-k-1)(q+1)
 * zeros, so the puncture vector has weight (q+1)(k-(q-1)/2).
 */
inline ConstructionReport build_odd_q_min(const Field& ctx, int k, std::optional<std::vector<Felt>> R_in = std::nullopt,
                                          const ConstructionOptions& opt = {}) {
    const auto& F = *ctx;
    const int q = F.q();
    detail::require(F.p() != 2, "odd_q_min needs q odd");
    detail::require(2 * k >= q + 1 && k <= q - 1, "odd_q_min needs (q+1)/2 <= k <= q-1");
    const auto eligible = subfield_squares(F);
    std::vector<Felt> R = R_in ? *R_in : std::vector<Felt>(eligible.begin(), eligible.begin() + (q - k - 1));
    detail::require(static_cast<int>(R.size()) == q - k - 1, "odd_q_min needs |R| = q-k-1");
    detail::require_distinct(R, "R");
    for (const auto& e : R)
        detail::require(F.in_subfield(e) && F.pow(e, (q - 1) / 2) == F.one(), "odd_q_min needs R inside the nonzero squares of F_q");

    const Poly xq1 = Poly::monomial(ctx, q + 1, F.one());
    const Poly prod = detail::product_of(ctx, R, [&](Felt e) { return xq1 - Poly::constant(ctx, e); });
    const Poly g = Poly::monomial(ctx, (q + 1) / 2, F.one()) * prod;

    const bool factored = detail::holds_everywhere(F, [&](Felt x) {
        Felt gx = g.eval(x);
        Felt lead = F.add(F.pow(x, (static_cast<long long>(q) * q + q) / 2), F.pow(x, (q + 1) / 2));
        return F.add(gx, F.frobenius(gx)) == F.mul(lead, prod.eval(x));
    });
    const int N = (q * q + 1) / 2 + (q - k - 1) * (q + 1);
    ConstructionSpec spec{Family::odd_q_min, k, {}, {}, R, {}, {}, {}};
    return detail::finish_g(ctx, std::move(spec), g, F.zero(), N, factored, opt);
}

/// r with q = 2^r, r odd and >= 3; ValidationError otherwise.
inline int qsq_exponent(const FieldCtx& F) {
    if (F.p() != 2 || F.h() % 2 == 0 || F.h() < 3) {
        const std::string why = F.p() != 2 ? "q is not a power of two"
                                : F.h() == 2 ? "no such code exists for q = 4"
                                             : "q = 2^r with r even is an open case";
        throw ValidationError("qsq_plus_one needs q = 2^r with r odd and r >= 3 (" + why + ")");
    }
    return F.h();
}

/// All e with e^(q+1) = 1 and e^((q+1)/3) != 1, ordered by discrete logarithm.
inline std::vector<Felt> qsq_valid_e(const FieldCtx& F) {
    qsq_exponent(F);
    const int q = F.q();
    std::vector<Felt> out;
    for (int s = 0; s <= q; ++s) {
        Felt e = F.power_of_primitive(static_cast<long long>(q - 1) * s);
        if (F.pow(e, (q + 1) / 3) != F.one()) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), [&](Felt a, Felt b) { return F.log(a) < F.log(b); });
    return out;
}

/// e X^3 + e^q X^(3q) + X^(q+1) + 1
inline Poly qsq_polynomial(const Field& ctx, Felt e) {
    const auto& F = *ctx;
    UPoly u(ctx, F.q() - 1);
    u.set_pair(0, 3, e);
    u.set_diag(0, F.one());
    u.set_diag(1, F.one());
    return u.expand();
}

/**
 * Full-length [q^2+1, q-1] code for q = 2^r, r odd >= 3, from the zero-free
 * h = e X^3 + e^q X^(3q) + X^(q+1) + 1. The default e is the valid one with
 * the smallest discrete logarithm.
 */
inline ConstructionReport build_qsq_plus_one(const Field& ctx, std::optional<Felt> e_in = std::nullopt,
                                             const ConstructionOptions& opt = {}) {
    const auto& F = *ctx;
    qsq_exponent(F);
    const int q = F.q();
    const auto valid = qsq_valid_e(F);
    const Felt e = e_in ? *e_in : valid.front();
    F.check(e);
    detail::require(std::find(valid.begin(), valid.end(), e) != valid.end(),
                    "qsq_plus_one needs e^(q+1) = 1 and e^((q+1)/3) != 1");

    const Poly h = qsq_polynomial(ctx, e);
    const Poly direct = Poly::monomial(ctx, 3, e) + Poly::monomial(ctx, 3 * q, F.frobenius(e)) +
                        Poly::monomial(ctx, q + 1, F.one()) + Poly::constant(ctx, F.one());
    Vector lam = h.eval_all();
    for (const auto& x : lam)
        if (!F.in_subfield(x)) throw VerificationError("qsq_plus_one: h evaluates outside F_q");
    lam.push_back(F.one());
    const int zeros = h.distinct_zeros().count;
    if (zeros != 0) throw VerificationError("qsq_plus_one: h has " + std::to_string(zeros) + " zeros");

    ConstructionSpec spec{Family::qsq_plus_one, q - 1, {}, {}, {}, e, {}, {}};
    return detail::finish(ctx, std::move(spec), "h", h, F.one(), std::move(lam), 0, h == direct, opt);
}

/// Pipeline for an arbitrary g of degree <= (q-k)q-1 and c in F_q.
inline ConstructionReport build_custom(const Field& ctx, int k, const Poly& g, Felt c, const ConstructionOptions& opt = {}) {
    const auto& F = *ctx;
    const int q = F.q();
    detail::require(k >= 1 && k <= q - 1, "custom construction needs 1 <= k <= q-1");
    ConstructionSpec spec{Family::custom_g, k, {}, {}, {}, {}, g, c};
    return detail::finish_g(ctx, std::move(spec), g, c, std::nullopt, std::nullopt, opt);
}

/**
 * Weight-2k element of P(C) for k <= q/2: lam_l = 1 / prod_{m != l}(b_l - b_m)
 * on the first 2k elements b_l of F_q, zero elsewhere.
 */
inline Vector small_k_witness(const Field& ctx, int k) {
    const auto& F = *ctx;
    detail::require(k >= 1 && 2 * k <= F.q(), "small_k_witness needs 1 <= k <= q/2");
    const auto sub = F.subfield_elements();
    Vector lam(F.order() + 1, F.zero());
    for (int l = 0; l < 2 * k; ++l) {
        Felt den = F.one();
        for (int m = 0; m < 2 * k; ++m)
            if (m != l) den = F.mul(den, F.sub(sub[l], sub[m]));
        lam[sub[l].index()] = F.inv(den);
    }
    return lam;
}

/// A member of P(C) of the smallest known weight, from the constructions above; nullopt when P(C) = {0}.
inline std::optional<Vector> minimum_weight_witness(const Field& ctx, int k) {
    const auto& F = *ctx;
    const int q = F.q();
    if (k < 1) throw ValidationError("k must be positive");
    if (k > q) return std::nullopt;
    if (k == q) return Vector(F.order() + 1, F.one());
    if (2 * k <= q) return small_k_witness(ctx, k);
    ConstructionOptions light{0, 0, 1};
    return F.p() == 2 ? build_even_q_min(ctx, k, std::nullopt, light).puncture
                      : build_odd_q_min(ctx, k, std::nullopt, light).puncture;
}

}  // namespace hsogrs

#endif
