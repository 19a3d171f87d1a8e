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

#ifndef HSOGRS_COMMANDS_HPP
#define HSOGRS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "constructions.hpp"
#include "error.hpp"
#include "field.hpp"
#include "grscode.hpp"
#include "io.hpp"
#include "puncture.hpp"
#include "puncture_weight.hpp"

// Command implementations behind the hsogrs executable. Each returns the JSON document it would print.

namespace hsogrs {

struct GlobalOptions {
    std::uint64_t cap = 100'000'000;       // puncture-code enumeration / support search budget
    std::uint64_t minor_cap = 1'000'000;   // C(n,k) limit for MDS minor checks
    std::uint64_t enum_cap = 1'000'000;    // codeword limit for code distance enumeration
    int threads = 1;
    std::uint64_t seed = 0;
    bool generator = false;
};

inline ConstructionOptions construction_options(const GlobalOptions& g) { return {g.minor_cap, g.enum_cap, g.threads}; }

inline json cmd_field_info(int p, int h) {
    auto ctx = make_field(p, h);
    json j{{"schema", kSchemaVersion}, {"command", "field-info"}};
    j.update(field_json(*ctx));
    return j;
}

struct PunctureArgs {
    int p = 0, h = 0, k = 0;
    std::string method = "all";
    bool check_min_weight = false;
    int samples = 0;
    int max_q = 11;
};

namespace detail {

inline Felt random_element(const FieldCtx& F, std::mt19937_64& rng) {
    return F.element(static_cast<int>(std::uniform_int_distribution<int>(0, F.order() - 1)(rng)));
}

inline Felt random_subfield_element(const FieldCtx& F, std::mt19937_64& rng) {
    const auto sub = F.subfield_elements();
    return sub[std::uniform_int_distribution<std::size_t>(0, sub.size() - 1)(rng)];
}

/// Random g with deg g <= (q-k)q-1 (zero when the bound is negative).
inline Poly random_g(const Field& ctx, int k, std::mt19937_64& rng) {
    const long long bound = static_cast<long long>(ctx->q() - k) * ctx->q() - 1;
    std::vector<Felt> c;
    for (long long i = 0; i <= bound; ++i) c.push_back(random_element(*ctx, rng));
    return Poly(ctx, std::move(c));
}

}  // namespace detail

inline json cmd_puncture(const PunctureArgs& a, const GlobalOptions& g) {
    auto ctx = make_field(a.p, a.h);
    const auto& F = *ctx;
    json j{{"schema", kSchemaVersion}, {"command", "puncture"}, {"q", F.q()}, {"k", a.k}, {"method", a.method}};

    PunctureBasis basis;
    if (a.method == "all") {
        basis = puncture_direct(ctx, a.k, a.max_q);
        const auto u = u_space_basis(ctx, a.k);
        const auto gf = g_form_basis(ctx, a.k);
        const bool agree = basis.rows == u.rows && basis.rows == gf.rows;
        j["dims"] = {{"direct", basis.dim()}, {"u_space", u.dim()}, {"g_form", gf.dim()}};
        j["methods_agree"] = agree;
        if (!agree) throw VerificationError("puncture code bases disagree between methods");
    } else {
        basis = puncture_basis(ctx, a.k, parse_puncture_method(a.method), a.max_q);
    }
    j["dim"] = basis.dim();
    j["expected_dim"] = puncture_dimension(F.q(), a.k);
    json rows = json::array();
    for (const auto& r : basis.rows) rows.push_back(to_json(r));
    j["basis"] = rows;

    if (a.samples > 0) {
        std::mt19937_64 rng(g.seed);
        int members = 0;
        for (int s = 0; s < a.samples; ++s) {
            if (a.k > F.q()) {
                members += membership(basis, Vector(F.order() + 1, F.zero()));
                continue;
            }
            Poly gp = detail::random_g(ctx, a.k, rng);
            Felt c = detail::random_subfield_element(F, rng);
            members += membership(basis, g_form_vector(ctx, a.k, gp, c));
        }
        j["g_form_samples"] = {{"count", a.samples}, {"members", members}, {"all_members", members == a.samples}};
    }

    if (a.check_min_weight) {
        auto mw = min_weight_pc(ctx, a.k, g.cap, g.threads);
        j["min_weight"] = min_weight_json(mw);
        j["formula_value"] = mw.formula_value ? json(*mw.formula_value) : json(nullptr);
        j["agrees"] = mw.agrees;
    }
    return j;
}

struct ConstructArgs {
    std::string family;
    int p = 0, h = 0, k = 0;
    std::optional<int> t;
    std::optional<std::string> f, R, e, g, c;
};

inline json cmd_construct(const ConstructArgs& a, const GlobalOptions& gopt) {
    auto ctx = make_field(a.p, a.h);
    const auto& F = *ctx;
    const auto opt = construction_options(gopt);
    auto need_t = [&]() {
        if (!a.t) throw MalformedInputError(a.family + " needs --t");
        return *a.t;
    };
    auto list = [&](const std::optional<std::string>& s) { return s ? parse_felt_list(F, *s) : Vector{}; };
    auto optional_list = [&](const std::optional<std::string>& s) -> std::optional<Vector> {
        if (!s) return std::nullopt;
        return parse_felt_list(F, *s);
    };
    auto single = [&](const std::optional<std::string>& s, const char* what) {
        auto v = list(s);
        if (v.size() != 1) throw MalformedInputError(std::string("--") + what + " takes one element index");
        return v.front();
    };

    std::optional<ConstructionReport> r;
    if (a.family == "example1") {
        if (!a.f) throw MalformedInputError("example1 needs --f");
        r = build_example1(ctx, a.k, need_t(), Poly(ctx, list(a.f)), opt);
    } else if (a.family == "example2") {
        r = build_example2(ctx, a.k, need_t(), list(a.R), opt);
    } else if (a.family == "example3") {
        r = build_example3(ctx, a.k, need_t(), list(a.R), opt);
    } else if (a.family == "even-min") {
        r = build_even_q_min(ctx, a.k, optional_list(a.R), opt);
    } else if (a.family == "odd-min") {
        r = build_odd_q_min(ctx, a.k, optional_list(a.R), opt);
    } else if (a.family == "qsq-plus-one") {
        std::optional<Felt> e;
        if (a.e) e = single(a.e, "e");
        r = build_qsq_plus_one(ctx, e, opt);
    } else if (a.family == "custom") {
        if (!a.c) throw MalformedInputError("custom needs --c");
        r = build_custom(ctx, a.k, Poly(ctx, list(a.g)), single(a.c, "c"), opt);
    } else {
        throw MalformedInputError("unknown construction family '" + a.family + "'");
    }
    json j = report_json(*r, gopt.generator);
    j["command"] = "construct";
    return j;
}

struct VerifyOutcome {
    json report;
    bool ok = false;
};

/// Recomputes Gram matrix, MDS status and parameters of a serialized code.
inline VerifyOutcome cmd_verify(const json& record, const GlobalOptions& g) {
    GrsCode code = code_from_record(record);
    const auto& F = *code.ctx();
    const Matrix gram = hermitian_gram(code);
    const bool so = is_zero_matrix(gram);
    const DistanceCheck dist = verify_distance(code, g.minor_cap, g.enum_cap, g.threads);
    json j{{"schema", kSchemaVersion}, {"command", "verify"}, {"p", F.p()}, {"h", F.h()}, {"k", code.k()}, {"n", code.n()}};
    j["self_orthogonal"] = so;
    j["mds"] = to_string(dist.mds);
    j["params"] = {{"n", code.n()}, {"k", code.k()}, {"d", dist.d}, {"verified_d", dist.verified}};
    j["distance_mode"] = dist.mode;
    if (so) {
        auto qp = quantum_params(code, &dist).quantum;
        j["quantum"] = {qp.n, qp.k, qp.d, qp.q};
    } else {
        j["quantum"] = nullptr;
    }
    bool consistent = true;
    if (record.contains("self_orthogonal")) consistent = consistent && record["self_orthogonal"] == so;
    if (record.contains("params") && record["params"].is_object()) {
        const auto& p = record["params"];
        if (p.contains("n")) consistent = consistent && p["n"] == code.n();
        if (p.contains("k")) consistent = consistent && p["k"] == code.k();
        if (p.contains("d")) consistent = consistent && p["d"] == dist.d;
    }
    if (record.contains("quantum")) consistent = consistent && record["quantum"] == j["quantum"];
    j["consistent_with_record"] = consistent;
    const bool distance_ok = dist.mds != MdsStatus::not_mds;
    j["ok"] = so && consistent && distance_ok;
    return {j, so && consistent && distance_ok};
}

inline json cmd_sweep(int p, int h, const GlobalOptions& g) {
    auto ctx = make_field(p, h);
    const int q = ctx->q();
    json rows = json::array();
    bool all = true;
    for (int k = 1; k <= q; ++k) {
        auto mw = min_weight_pc(ctx, k, g.cap, g.threads);
        const auto witness = minimum_weight_witness(ctx, k);
        const int constructive = witness ? weight(*witness) : 0;
        json row{{"q", q}, {"k", k}, {"dim", mw.dim}, {"formula", mw.formula_value ? json(*mw.formula_value) : json(nullptr)},
                 {"constructive", constructive}};
        const bool exhaustive = mw.mode == "exhaustive";
        row["exhaustive"] = exhaustive ? json(*mw.value) : json(nullptr);
        row["method"] = mw.method;
        const bool agrees = mw.formula_value && constructive == *mw.formula_value && (!exhaustive || mw.agrees);
        row["agrees"] = agrees;
        all = all && agrees;
        rows.push_back(row);
    }
    return json{{"schema", kSchemaVersion}, {"command", "sweep"}, {"q", q}, {"rows", rows}, {"all_agree", all}};
}

inline constexpr const char* kSweepCsvHeader = "q,k,dim,formula,constructive,exhaustive,method,agrees";

inline std::string sweep_csv(const json& sweep) {
    std::ostringstream os;
    os << kSweepCsvHeader << "\n";
    for (const auto& r : sweep["rows"]) {
        os << r["q"].get<int>() << "," << r["k"].get<int>() << "," << r["dim"].get<int>() << ",";
        if (!r["formula"].is_null()) os << r["formula"].get<int>();
        os << "," << r["constructive"].get<int>() << ",";
        if (!r["exhaustive"].is_null()) os << r["exhaustive"].get<int>();
        os << "," << r["method"].get<std::string>() << "," << (r["agrees"].get<bool>() ? "true" : "false") << "\n";
    }
    return os.str();
}

}  // namespace hsogrs

#endif
