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

#ifndef HSOGRS_FIELD_HPP
#define HSOGRS_FIELD_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "error.hpp"

/*
 * Arithmetic in F_{q^2}, q = p^h <= 64, with F_q realised as the set of
 * Frobenius-fixed elements. Elements are stored as their position in the
 * canonical enumeration a_1 = 0, a_{i+1} = w^{i-1}, so index 0 is zero and
 * index i >= 1 is w^(i-1). Multiplication is addition of logarithms, addition
 * goes through a Zech logarithm table.
 */

namespace hsogrs {

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

/// Element handle; only meaningful together with the FieldCtx that produced it.
class Felt {
   public:
    Felt() = default;

    std::uint32_t index() const noexcept { return idx_; }
    std::uint32_t field_id() const noexcept { return field_; }
    bool is_zero() const noexcept { return idx_ == 0; }

    friend bool operator==(const Felt& a, const Felt& b) noexcept = default;
    friend auto operator<=>(const Felt& a, const Felt& b) noexcept = default;

   private:
    friend class FieldCtx;
    Felt(std::uint32_t field, std::uint32_t idx) : field_(field), idx_(idx) {}

    std::uint32_t field_ = 0;
    std::uint32_t idx_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Felt& x) {
    if (x.is_zero()) return os << "0";
    return os << "w^" << (x.index() - 1);
}

Field make_field(int p, int h);

class FieldCtx {
   public:
    using Index = std::uint16_t;

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    int p() const noexcept { return p_; }
    int h() const noexcept { return h_; }
    int q() const noexcept { return q_; }
    /// Number of elements of the big field, q^2.
    int order() const noexcept { return order_; }
    std::uint32_t id() const noexcept { return id_; }

    /// Monic primitive polynomial of degree 2h over F_p, coefficients low degree first.
    const std::vector<int>& modulus() const noexcept { return modulus_; }
    /// exp_table()[i] is w^i in the polynomial basis, packed base p (digit j = coefficient of x^j).
    const std::vector<int>& exp_table() const noexcept { return exp_; }
    /// log_table()[r] is the discrete logarithm of the packed element r (r != 0).
    const std::vector<int>& log_table() const noexcept { return log_; }

    Felt zero() const noexcept { return {id_, 0}; }
    Felt one() const noexcept { return {id_, 1}; }
    Felt primitive() const noexcept { return {id_, order_ > 2 ? 2u : 1u}; }
    /// The element a_{i+1} of the enumeration, i in [0, q^2).
    Felt element(int i) const {
        if (i < 0 || i >= order_) throw std::out_of_range("field element index out of range");
        return {id_, static_cast<std::uint32_t>(i)};
    }
    Felt from_index(long long i) const {
        if (i < 0 || i >= order_) throw MalformedInputError("field element index " + std::to_string(i) + " out of range");
        return {id_, static_cast<std::uint32_t>(i)};
    }
    /// w^e for any integer e.
    Felt power_of_primitive(long long e) const noexcept {
        long long m = order_ - 1;
        return {id_, static_cast<std::uint32_t>(((e % m) + m) % m + 1)};
    }
    std::vector<Felt> elements() const {
        std::vector<Felt> out;
        out.reserve(order_);
        for (int i = 0; i < order_; ++i) out.push_back({id_, static_cast<std::uint32_t>(i)});
        return out;
    }
    /// Elements of F_q in enumeration order, zero first.
    std::vector<Felt> subfield_elements() const {
        std::vector<Felt> out{zero()};
        for (int j = 0; j < q_ - 1; ++j) out.push_back(power_of_primitive(static_cast<long long>(j) * (q_ + 1)));
        return out;
    }
    /// Discrete logarithm of a nonzero element.
    long long log(Felt x) const {
        check(x);
        if (x.is_zero()) throw ValidationError("logarithm of zero");
        return x.index() - 1;
    }
    /// Packed polynomial-basis representation (base-p digits).
    int packed(Felt x) const {
        check(x);
        return x.is_zero() ? 0 : exp_[x.index() - 1];
    }

    Felt add(Felt a, Felt b) const { return wrap(raw_add(idx(a), idx(b))); }
    Felt sub(Felt a, Felt b) const { return wrap(raw_add(idx(a), raw_neg(idx(b)))); }
    Felt neg(Felt a) const { return wrap(raw_neg(idx(a))); }
    Felt mul(Felt a, Felt b) const { return wrap(raw_mul(idx(a), idx(b))); }
    Felt inv(Felt a) const {
        if (idx(a) == 0) throw ValidationError("inverse of zero");
        return wrap(raw_inv(idx(a)));
    }
    Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }
    /// x^e with the convention 0^0 = 1.
    Felt pow(Felt x, long long e) const {
        if (e < 0) return pow(inv(x), -e);
        return wrap(raw_pow(idx(x), e));
    }

    Felt frobenius(Felt x) const { return pow(x, q_); }
    Felt norm(Felt x) const { return pow(x, q_ + 1); }
    Felt trace_to_subfield(Felt x) const { return add(x, frobenius(x)); }
    bool in_subfield(Felt x) const { return frobenius(x) == x; }

    /// Absolute trace F_q -> F_p, sum of x^(p^j) for j < h.
    Felt trace_to_prime(Felt x) const {
        if (!in_subfield(x)) throw ValidationError("trace_to_prime: argument not in F_q");
        Felt acc = zero();
        Felt y = x;
        for (int j = 0; j < h_; ++j) {
            acc = add(acc, y);
            y = pow(y, p_);
        }
        return acc;
    }

    /// The theta = w^j with theta^(q+1) = lam and j minimal.
    Felt solve_norm(Felt lam) const {
        check(lam);
        if (lam.is_zero()) throw ValidationError("solve_norm: argument is zero");
        if (!in_subfield(lam)) throw ValidationError("solve_norm: argument not in F_q");
        return power_of_primitive(log(lam) / (q_ + 1));
    }

    /// Nonzero c with c^q = -c.
    Felt skew_element() const { return p_ == 2 ? one() : power_of_primitive((q_ + 1) / 2); }

    /// First element of the enumeration outside F_q; {1, xi} is the F_q-basis of F_{q^2} used for splitting.
    Felt subfield_complement() const { return xi_; }

    /// Coordinates (x, y) in F_q with a = x + y*xi.
    std::pair<Felt, Felt> split(Felt a) const {
        Felt y = div(sub(a, frobenius(a)), sub(xi_, frobenius(xi_)));
        return {sub(a, mul(y, xi_)), y};
    }

    void check(Felt x) const {
        if (x.field_id() != id_) throw ContextMismatchError("element belongs to a different field context");
    }

    // Unchecked arithmetic on enumeration indices, for inner loops.
    Index raw_mul(Index a, Index b) const noexcept {
        if (a == 0 || b == 0) return 0;
        int s = a + b - 2;
        if (s >= order_ - 1) s -= order_ - 1;
        return static_cast<Index>(s + 1);
    }
    Index raw_add(Index a, Index b) const noexcept {
        if (a == 0) return b;
        if (b == 0) return a;
        int d = static_cast<int>(b) - static_cast<int>(a);
        if (d < 0) d += order_ - 1;
        Index z = zech_[d];
        return z == 0 ? 0 : raw_mul(a, z);
    }
    Index raw_neg(Index a) const noexcept { return p_ == 2 ? a : raw_mul(a, minus_one_); }
    Index raw_inv(Index a) const noexcept {
        int l = a - 1;
        return static_cast<Index>(l == 0 ? 1 : order_ - 1 - l + 1);
    }
    Index raw_pow(Index a, long long e) const noexcept {
        if (e == 0) return 1;
        if (a == 0) return 0;
        long long m = order_ - 1;
        return static_cast<Index>((static_cast<long long>(a - 1) * (e % m)) % m + 1);
    }

   private:
    friend Field make_field(int p, int h);
    FieldCtx(int p, int h);

    static std::uint32_t next_id() {
        static std::atomic<std::uint32_t> counter{1};
        return counter.fetch_add(1);
    }

    Index idx(Felt x) const {
        check(x);
        return static_cast<Index>(x.index());
    }
    Felt wrap(Index i) const noexcept { return {id_, i}; }

    int p_, h_, q_, order_;
    std::uint32_t id_;
    std::vector<int> modulus_;
    std::vector<int> exp_;
    std::vector<int> log_;
    std::vector<Index> zech_;
    Index minus_one_ = 1;
    Felt xi_;
};

namespace detail {

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Multiply a packed element by x modulo the monic polynomial given by its low coefficients.
inline int times_x(int packed, const std::vector<int>& low, int p) {
    const int deg = static_cast<int>(low.size());
    std::vector<int> d(deg + 1, 0);
    for (int j = 0; j < deg; ++j) {
        d[j + 1] = packed % p;
        packed /= p;
    }
    const int top = d[deg];
    int out = 0;
    for (int j = deg - 1; j >= 0; --j) {
        int c = ((d[j] - top * low[j]) % p + p) % p;
        out = out * p + c;
    }
    return out;
}

}  // namespace detail

inline FieldCtx::FieldCtx(int p, int h) : p_(p), h_(h), id_(next_id()) {
    q_ = 1;
    for (int i = 0; i < h; ++i) q_ *= p;
    order_ = q_ * q_;
    const int deg = 2 * h;

    // Smallest primitive polynomial, comparing c_0 first.
    std::vector<int> low(deg);
    bool found = false;
    for (int m = 0; m < order_ && !found; ++m) {
        int r = m;
        for (int j = deg - 1; j >= 0; --j) {
            low[j] = r % p;
            r /= p;
        }
        if (low[0] == 0) continue;
        int x = 1, ord = 0;
        do {
            x = detail::times_x(x, low, p);
            ++ord;
        } while (x != 1 && ord < order_);
        found = ord == order_ - 1;
    }
    if (!found) throw std::logic_error("no primitive polynomial found");
    modulus_ = low;
    modulus_.push_back(1);

    exp_.resize(order_ - 1);
    log_.assign(order_, -1);
    int x = 1;
    for (int i = 0; i < order_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = detail::times_x(x, low, p);
    }
    zech_.resize(order_ - 1);
    for (int n = 0; n < order_ - 1; ++n) {
        int r = exp_[n];
        int d0 = r % p;
        int s = r - d0 + (d0 + 1) % p;
        zech_[n] = static_cast<Index>(s == 0 ? 0 : log_[s] + 1);
    }
    if (p_ != 2) minus_one_ = static_cast<Index>((order_ - 1) / 2 + 1);

    for (int i = 1; i < order_; ++i) {
        Felt a = element(i);
        if (!in_subfield(a)) {
            xi_ = a;
            break;
        }
    }
}

/// Builds the deterministic context for F_{q^2}, q = p^h <= 64.
inline Field make_field(int p, int h) {
    if (!detail::is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
    if (h < 1) throw ValidationError("extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < h; ++i) {
        q *= p;
        if (q > 64) throw ValidationError("q = p^h must not exceed 64");
    }
    return Field(new FieldCtx(p, h));
}

/// Splits a prime power q into (p, h); throws if q is not a prime power.
inline std::pair<int, int> prime_power(int q) {
    if (q < 2) throw ValidationError("q must be a prime power >= 2");
    int p = 2;
    while (q % p != 0) ++p;
    int h = 0;
    int r = q;
    while (r % p == 0) {
        r /= p;
        ++h;
    }
    if (r != 1) throw ValidationError(std::to_string(q) + " is not a prime power");
    return {p, h};
}

inline Field make_field_of_order(int q) {
    auto [p, h] = prime_power(q);
    return make_field(p, h);
}

}  // namespace hsogrs

#endif
