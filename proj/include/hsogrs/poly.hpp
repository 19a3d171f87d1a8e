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

#ifndef HSOGRS_POLY_HPP
#define HSOGRS_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "field.hpp"

namespace hsogrs {

/// Distinct zeros of a polynomial over F_{q^2}; zero_set holds 1-based enumeration positions.
struct ZeroSet {
    int count = 0;
    std::vector<int> zero_set;
};

/// Dense univariate polynomial over F_{q^2}, coefficients low degree first, no trailing zeros.
class Poly {
   public:
    explicit Poly(Field ctx) : ctx_(std::move(ctx)) {}
    Poly(Field ctx, std::vector<Felt> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_) ctx_->check(c);
        trim();
    }

    static Poly constant(const Field& ctx, Felt c) { return Poly(ctx, {c}); }
    /// c * X^e
    static Poly monomial(const Field& ctx, long long e, Felt c) {
        std::vector<Felt> v(static_cast<std::size_t>(e) + 1, ctx->zero());
        v.back() = c;
        return Poly(ctx, std::move(v));
    }
    static Poly x(const Field& ctx) { return monomial(ctx, 1, ctx->one()); }

    const Field& ctx() const noexcept { return ctx_; }
    const std::vector<Felt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree, -1 for the zero polynomial.
    long long degree() const noexcept { return static_cast<long long>(coeffs_.size()) - 1; }
    Felt coeff(long long i) const {
        if (i < 0 || i > degree()) return ctx_->zero();
        return coeffs_[static_cast<std::size_t>(i)];
    }

    Felt eval(Felt x) const {
        ctx_->check(x);
        return ctx_->element(raw_eval(static_cast<FieldCtx::Index>(x.index())));
    }

    /// Values at a_1, ..., a_{q^2} in enumeration order.
    std::vector<Felt> eval_all() const {
        std::vector<Felt> out;
        out.reserve(ctx_->order());
        for (int i = 0; i < ctx_->order(); ++i) out.push_back(ctx_->element(raw_eval(static_cast<FieldCtx::Index>(i))));
        return out;
    }

    /// Zeros counted without multiplicity by evaluating at every point.
    ZeroSet distinct_zeros() const {
        ZeroSet z;
        for (int i = 0; i < ctx_->order(); ++i) {
            if (raw_eval(static_cast<FieldCtx::Index>(i)) == 0) z.zero_set.push_back(i + 1);
        }
        z.count = static_cast<int>(z.zero_set.size());
        if (!is_zero() && degree() < ctx_->order() && z.count > degree())
            throw std::logic_error("polynomial has more distinct zeros than its degree");
        return z;
    }

    /// The reduced polynomial of degree < q^2 representing x -> f(x)^q.
    Poly q_power_mod() const {
        const long long q = ctx_->q();
        if (degree() >= q * q) throw ValidationError("q_power_mod: degree must be below q^2");
        std::vector<Felt> out(coeffs_.size() > 0 ? static_cast<std::size_t>(q * q) : 0, ctx_->zero());
        for (std::size_t e = 0; e < coeffs_.size(); ++e) {
            if (coeffs_[e].is_zero()) continue;
            long long i = static_cast<long long>(e) / q, j = static_cast<long long>(e) % q;
            out[static_cast<std::size_t>(j * q + i)] = ctx_->frobenius(coeffs_[e]);
        }
        return Poly(ctx_, std::move(out));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        same_ctx(a, b);
        std::vector<Felt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), a.ctx_->zero());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.ctx_->add(a.coeff(i), b.coeff(i));
        return Poly(a.ctx_, std::move(v));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<Felt> v;
        v.reserve(a.coeffs_.size());
        for (const auto& c : a.coeffs_) v.push_back(a.ctx_->neg(c));
        return Poly(a.ctx_, std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        same_ctx(a, b);
        if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
        const auto& F = *a.ctx_;
        std::vector<FieldCtx::Index> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            auto ai = static_cast<FieldCtx::Index>(a.coeffs_[i].index());
            if (ai == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] = F.raw_add(v[i + j], F.raw_mul(ai, static_cast<FieldCtx::Index>(b.coeffs_[j].index())));
        }
        std::vector<Felt> out;
        out.reserve(v.size());
        for (auto c : v) out.push_back(F.element(c));
        return Poly(a.ctx_, std::move(out));
    }
    Poly scale(Felt c) const {
        std::vector<Felt> v;
        v.reserve(coeffs_.size());
        for (const auto& a : coeffs_) v.push_back(ctx_->mul(a, c));
        return Poly(ctx_, std::move(v));
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    /// f(X^m)
    Poly compose_power(long long m) const {
        if (is_zero()) return *this;
        std::vector<Felt> v(static_cast<std::size_t>(degree() * m) + 1, ctx_->zero());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * static_cast<std::size_t>(m)] = coeffs_[i];
        return Poly(ctx_, std::move(v));
    }

    /// True when every coefficient lies in F_q.
    bool over_subfield() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [&](Felt c) { return ctx_->in_subfield(c); });
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_; }

    FieldCtx::Index raw_eval(FieldCtx::Index x) const noexcept {
        const auto& F = *ctx_;
        FieldCtx::Index acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = F.raw_add(F.raw_mul(acc, x), static_cast<FieldCtx::Index>(it->index()));
        return acc;
    }

   private:
    static void same_ctx(const Poly& a, const Poly& b) {
        if (a.ctx_ != b.ctx_) throw ContextMismatchError("polynomials over different field contexts");
    }
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    Field ctx_;
    std::vector<Felt> coeffs_;
};

}  // namespace hsogrs

#endif
