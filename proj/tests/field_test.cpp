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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "hsogrs/field.hpp"
#include "oracle.hpp"

using namespace hsogrs;

namespace {

// First monic degree-m polynomial over F_p, coefficients compared constant term first, for which x is primitive.
oracle::Digits smallest_primitive_modulus(int p, int m) {
    long long total = 1;
    for (int i = 0; i < m; ++i) total *= p;
    for (long long code = 0; code < total; ++code) {
        oracle::Digits mod(m + 1, 0);
        long long r = code;
        for (int i = m - 1; i >= 0; --i) {
            mod[i] = static_cast<int>(r % p);
            r /= p;
        }
        mod[m] = 1;
        oracle::Gf gf(p, mod);
        if (gf.order_of_x() == gf.size() - 1) return mod;
    }
    throw std::logic_error("no primitive polynomial");
}

const std::vector<std::pair<int, int>> kAllFields{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4},
                                                   {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3},
                                                   {29, 1}, {31, 1}, {2, 5}, {37, 1}, {41, 1}, {43, 1}, {47, 1},
                                                   {7, 2}, {53, 1}, {59, 1}, {61, 1}, {2, 6}};

}  // namespace

TEST(MakeField, CardinalityAndEnumeration) {
    auto f8 = make_field(2, 3);
    EXPECT_EQ(f8->q(), 8);
    EXPECT_EQ(f8->order(), 64);
    EXPECT_EQ(f8->elements().size(), 64u);

    auto f5 = make_field(5, 1);
    EXPECT_EQ(f5->q(), 5);
    EXPECT_EQ(f5->order(), 25);

    auto f4 = make_field(2, 2);
    EXPECT_EQ(f4->q(), 4);
    auto e = f4->elements();
    EXPECT_TRUE(e[0].is_zero());
    EXPECT_EQ(e[1], f4->one());
    EXPECT_EQ(e[2], f4->primitive());
}

TEST(MakeField, RejectsInvalidParameters) {
    EXPECT_THROW(make_field(4, 1), ValidationError);
    EXPECT_THROW(make_field(1, 1), ValidationError);
    EXPECT_THROW(make_field(2, 0), ValidationError);
    EXPECT_THROW(make_field(2, 7), ValidationError);
    EXPECT_THROW(make_field(67, 1), ValidationError);
    EXPECT_THROW(make_field_of_order(6), ValidationError);
    EXPECT_THROW(make_field_of_order(1), ValidationError);
    EXPECT_EQ(make_field_of_order(49)->order(), 2401);
}

TEST(MakeField, ModulusIsSmallestPrimitive) {
    for (auto [p, h] : kAllFields) {
        if (p * p > 300) continue;  // candidate scan grows as p^(2h)
        long long q = 1;
        for (int i = 0; i < h; ++i) q *= p;
        if (q > 16) continue;
        SCOPED_TRACE(testing::Message() << "p=" << p << " h=" << h);
        EXPECT_EQ(make_field(p, h)->modulus(), smallest_primitive_modulus(p, 2 * h));
    }
}

TEST(MakeField, PrimitiveElementHasFullOrder) {
    for (auto [p, h] : kAllFields) {
        auto F = make_field(p, h);
        oracle::Gf gf(p, F->modulus());
        SCOPED_TRACE(testing::Message() << "p=" << p << " h=" << h);
        ASSERT_EQ(static_cast<int>(F->modulus().size()), 2 * h + 1);
        EXPECT_EQ(gf.order_of_x(), F->order() - 1);
        for (int i = 1; i < F->order(); ++i) {
            const Felt x = F->element(i);
            ASSERT_EQ(F->power_of_primitive(F->log(x)), x);
        }
    }
}

TEST(MakeField, Deterministic) {
    for (auto [p, h] : oracle::small_fields()) {
        auto a = make_field(p, h), b = make_field(p, h);
        EXPECT_EQ(a->modulus(), b->modulus());
        EXPECT_EQ(a->exp_table(), b->exp_table());
        EXPECT_EQ(a->log_table(), b->log_table());
        EXPECT_NE(a->id(), b->id());
    }
}

TEST(Arithmetic, MatchesPolynomialModel) {
    for (auto [p, h] : oracle::small_fields()) {
        auto F = make_field(p, h);
        oracle::Mirror M(*F);
        SCOPED_TRACE(testing::Message() << "q=" << F->q());
        for (auto a : F->elements())
            for (auto b : F->elements()) {
                ASSERT_EQ(F->add(a, b), M.add(a, b));
                ASSERT_EQ(F->sub(a, b), M.sub(a, b));
                ASSERT_EQ(F->mul(a, b), M.mul(a, b));
            }
        for (auto a : F->elements()) {
            if (a.is_zero()) continue;
            ASSERT_EQ(F->inv(a), M.inv(a));
        }
    }
}

TEST(Arithmetic, LargeFieldsAgainstModelOnSamples) {
    oracle::Gen gen(11);
    for (auto [p, h] : std::vector<std::pair<int, int>>{{2, 5}, {7, 2}, {2, 6}, {61, 1}}) {
        auto F = make_field(p, h);
        oracle::Mirror M(*F);
        for (int trial = 0; trial < 400; ++trial) {
            const Felt a = gen.felt(*F), b = gen.felt(*F);
            ASSERT_EQ(F->add(a, b), M.add(a, b));
            ASSERT_EQ(F->mul(a, b), M.mul(a, b));
            ASSERT_EQ(F->pow(a, 37), M.pow(a, 37));
        }
    }
}

TEST(Arithmetic, FieldAxiomsOnRandomTriples) {
    oracle::Gen gen(1);
    for (auto [p, h] : oracle::small_fields()) {
        auto F = make_field(p, h);
        for (int trial = 0; trial < 2000; ++trial) {
            const Felt x = gen.felt(*F), y = gen.felt(*F), z = gen.felt(*F);
            ASSERT_EQ(F->add(F->add(x, y), z), F->add(x, F->add(y, z)));
            ASSERT_EQ(F->mul(F->mul(x, y), z), F->mul(x, F->mul(y, z)));
            ASSERT_EQ(F->add(x, y), F->add(y, x));
            ASSERT_EQ(F->mul(x, y), F->mul(y, x));
            ASSERT_EQ(F->mul(x, F->add(y, z)), F->add(F->mul(x, y), F->mul(x, z)));
            ASSERT_EQ(F->add(x, F->neg(x)), F->zero());
            if (!x.is_zero()) ASSERT_EQ(F->mul(x, F->inv(x)), F->one());
        }
    }
}

TEST(Arithmetic, PowConventions) {
    auto F = make_field(3, 1);
    EXPECT_EQ(F->pow(F->zero(), 0), F->one());
    EXPECT_EQ(F->pow(F->zero(), 5), F->zero());
    EXPECT_EQ(F->pow(F->primitive(), -1), F->inv(F->primitive()));
    EXPECT_THROW(F->inv(F->zero()), ValidationError);
}

TEST(Arithmetic, RejectsForeignElements) {
    auto a = make_field(2, 2), b = make_field(2, 2);
    EXPECT_THROW(a->add(a->one(), b->one()), ContextMismatchError);
    EXPECT_THROW(a->mul(b->primitive(), a->one()), ContextMismatchError);
    EXPECT_THROW(a->frobenius(b->one()), ContextMismatchError);
}

TEST(Frobenius, Examples) {
    auto F = make_field(2, 2);
    oracle::Mirror M(*F);
    EXPECT_EQ(F->frobenius(F->zero()), F->zero());
    for (auto x : F->subfield_elements()) EXPECT_EQ(F->frobenius(x), x);
    const Felt w = F->primitive();
    Felt sq = w;
    for (int i = 0; i < 2; ++i) sq = M.mul(sq, sq);  // two squarings give w^4
    EXPECT_EQ(F->frobenius(w), sq);
    EXPECT_EQ(sq, F->power_of_primitive(4));
}

TEST(Frobenius, IsAnInvolutiveAutomorphism) {
    for (auto [p, h] : oracle::small_fields()) {
        auto F = make_field(p, h);
        int fixed = 0;
        for (auto x : F->elements()) {
            EXPECT_EQ(F->frobenius(F->frobenius(x)), x);
            if (F->frobenius(x) == x) ++fixed;
            EXPECT_EQ(F->in_subfield(x), F->frobenius(x) == x);
            for (auto y : F->elements()) {
                ASSERT_EQ(F->frobenius(F->add(x, y)), F->add(F->frobenius(x), F->frobenius(y)));
                ASSERT_EQ(F->frobenius(F->mul(x, y)), F->mul(F->frobenius(x), F->frobenius(y)));
            }
        }
        EXPECT_EQ(fixed, F->q());
        const auto sub = F->subfield_elements();
        std::set<Felt> listed(sub.begin(), sub.end());
        EXPECT_EQ(static_cast<int>(listed.size()), F->q());
        for (auto x : listed) EXPECT_TRUE(F->in_subfield(x));
    }
}

TEST(Norm, Examples) {
    auto F = make_field(3, 1);
    oracle::Mirror M(*F);
    EXPECT_EQ(F->norm(F->one()), F->one());
    EXPECT_EQ(F->norm(F->zero()), F->zero());
    const Felt n = F->norm(F->primitive());
    EXPECT_EQ(n, M.pow(F->primitive(), 4));
    EXPECT_EQ(n, F->power_of_primitive(4));
    EXPECT_TRUE(F->in_subfield(n));
    EXPECT_NE(n, F->one());  // generates F_3^* = {1, -1}
}

TEST(Norm, OntoSubfieldWithEqualFibers) {
    for (auto [p, h] : oracle::small_fields()) {
        auto F = make_field(p, h);
        std::map<Felt, int> fiber;
        for (auto x : F->elements()) {
            if (x.is_zero()) continue;
            const Felt n = F->norm(x);
            ASSERT_TRUE(F->in_subfield(n));
            ++fiber[n];
        }
        EXPECT_EQ(static_cast<int>(fiber.size()), F->q() - 1);
        for (auto [v, count] : fiber) EXPECT_EQ(count, F->q() + 1);
    }
}

TEST(TraceToSubfield, Examples) {
    auto F4 = make_field(2, 2);
    EXPECT_EQ(F4->trace_to_subfield(F4->zero()), F4->zero());
    for (auto x : F4->subfield_elements()) EXPECT_EQ(F4->trace_to_subfield(x), F4->zero());
    auto F5 = make_field(5, 1);
    for (auto x : F5->subfield_elements()) EXPECT_EQ(F5->trace_to_subfield(x), F5->add(x, x));
}

TEST(TraceToSubfield, OntoSubfieldWithEqualFibers) {
    for (auto [p, h] : oracle::small_fields()) {
        auto F = make_field(p, h);
        std::map<Felt, int> fiber;
        for (auto x : F->elements()) {
            const Felt t = F->trace_to_subfield(x);
            ASSERT_TRUE(F->in_subfield(t));
            ++fiber[t];
        }
        EXPECT_EQ(static_cast<int>(fiber.size()), F->q());
        for (auto [v, count] : fiber) EXPECT_EQ(count, F->q());
    }
}

TEST(TraceToPrime, Examples) {
    auto F8 = make_field(2, 3);
    EXPECT_EQ(F8->trace_to_prime(F8->zero()), F8->zero());
    int ones = 0;
    for (auto x : F8->subfield_elements())
        if (F8->trace_to_prime(x) == F8->one()) ++ones;
    EXPECT_EQ(ones, 4);
    auto F4 = make_field(2, 2);
    EXPECT_EQ(F4->trace_to_prime(F4->one()), F4->zero());
    EXPECT_THROW(F4->trace_to_prime(F4->primitive()), ValidationError);
}

TEST(TraceToPrime, LandsInPrimeFieldAndIsBalanced) {
    for (auto [p, h] : oracle::small_fields()) {
        auto F = make_field(p, h);
        oracle::Mirror M(*F);
        std::map<Felt, int> fiber;
        for (auto x : F->subfield_elements()) {
            const Felt t = F->trace_to_prime(x);
            ASSERT_EQ(M.pow(t, p), t);
            ++fiber[t];
        }
        EXPECT_EQ(static_cast<int>(fiber.size()), p);
        for (auto [v, c] : fiber) EXPECT_EQ(c, F->q() / p);
    }
}

TEST(SolveNorm, Examples) {
    auto F = make_field(3, 1);
    EXPECT_EQ(F->solve_norm(F->one()), F->one());
    EXPECT_EQ(F->solve_norm(F->power_of_primitive(4)), F->primitive());
    EXPECT_THROW(F->solve_norm(F->zero()), ValidationError);
    EXPECT_THROW(F->solve_norm(F->primitive()), ValidationError);
}

TEST(SolveNorm, MinimalExponentPreimage) {
    for (auto [p, h] : oracle::small_fields()) {
        auto F = make_field(p, h);
        oracle::Mirror M(*F);
        for (auto lam : F->subfield_elements()) {
            if (lam.is_zero()) continue;
            int j = 0;
            while (M.pow(F->power_of_primitive(j), F->q() + 1) != lam) ++j;
            const Felt theta = F->solve_norm(lam);
            EXPECT_EQ(theta, F->power_of_primitive(j));
            EXPECT_EQ(F->norm(theta), lam);
        }
    }
}

TEST(SkewElement, Examples) {
    auto F8 = make_field(2, 3);
    EXPECT_EQ(F8->skew_element(), F8->one());
    auto F = make_field(5, 1);
    oracle::Mirror M(*F);
    const Felt c = F->skew_element();
    EXPECT_EQ(c, F->power_of_primitive(3));
    EXPECT_EQ(M.pow(c, 5), F->neg(c));
    for (auto [p, h] : oracle::small_fields()) {
        auto G = make_field(p, h);
        const Felt s = G->skew_element();
        EXPECT_FALSE(s.is_zero());
        EXPECT_EQ(G->add(s, G->frobenius(s)), G->zero());
    }
}

TEST(Split, RecoversCoordinates) {
    for (auto [p, h] : oracle::small_fields()) {
        auto F = make_field(p, h);
        const Felt xi = F->subfield_complement();
        EXPECT_FALSE(F->in_subfield(xi));
        for (int i = 0; i < F->order(); ++i) {
            if (F->element(i) == xi) break;
            EXPECT_TRUE(F->in_subfield(F->element(i)));
        }
        for (auto a : F->elements()) {
            auto [x, y] = F->split(a);
            ASSERT_TRUE(F->in_subfield(x));
            ASSERT_TRUE(F->in_subfield(y));
            ASSERT_EQ(F->add(x, F->mul(y, xi)), a);
        }
    }
}

TEST(FromIndex, RejectsOutOfRange) {
    auto F = make_field(2, 1);
    EXPECT_EQ(F->from_index(3), F->power_of_primitive(2));
    EXPECT_THROW(F->from_index(4), MalformedInputError);
    EXPECT_THROW(F->from_index(-1), MalformedInputError);
}
