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

#ifndef HSOGRS_IO_HPP
#define HSOGRS_IO_HPP

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "constructions.hpp"
#include "error.hpp"
#include "field.hpp"
#include "grscode.hpp"
#include "poly.hpp"
#include "puncture.hpp"
#include "puncture_weight.hpp"

// JSON forms. A field element is its enumeration index (0 for zero, i for w^(i-1)).

namespace hsogrs {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline json to_json(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.index());
    return a;
}

inline json to_json(const Poly& f) { return to_json(f.coeffs()); }

inline Vector felts_from_json(const FieldCtx& F, const json& j, const char* what) {
    if (!j.is_array()) throw MalformedInputError(std::string(what) + " must be an array of element indices");
    Vector out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw MalformedInputError(std::string(what) + " must contain integers");
        out.push_back(F.from_index(x.get<long long>()));
    }
    return out;
}

/// Comma-separated element indices, e.g. "0,3,1".
inline Vector parse_felt_list(const FieldCtx& F, const std::string& s) {
    Vector out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(F.from_index(v));
        } catch (const std::logic_error&) {
            throw MalformedInputError("cannot parse field element '" + item + "'");
        }
    }
    return out;
}

inline json field_json(const FieldCtx& F) {
    return json{{"p", F.p()},
                {"h", F.h()},
                {"q", F.q()},
                {"q2", F.order()},
                {"modulus", F.modulus()},
                {"primitive", F.primitive().index()},
                {"subfield_size", static_cast<int>(F.subfield_elements().size())}};
}

inline json generator_json(const GrsCode& code) {
    json a = json::array();
    for (const auto& row : code.generator())
        for (const auto& x : row) a.push_back(x.index());
    return a;
}

/// Code record; params carry the verified distance when available.
inline json code_record(const GrsCode& code, const DistanceCheck& dist, bool include_generator = false) {
    const auto& F = *code.ctx();
    const bool so = is_hermitian_self_orthogonal(code);
    json rec{{"schema", kSchemaVersion},
             {"p", F.p()},
             {"h", F.h()},
             {"k", code.k()},
             {"support", code.support()},
             {"thetas", to_json(code.thetas())},
             {"params", {{"n", code.n()}, {"k", code.k()}, {"d", dist.d}, {"verified_d", dist.verified}}},
             {"distance_mode", dist.mode},
             {"mds", to_string(dist.mds)}};
    if (so) {
        auto qp = quantum_params(code, &dist).quantum;
        rec["quantum"] = {qp.n, qp.k, qp.d, qp.q};
    } else {
        rec["quantum"] = nullptr;
    }
    rec["self_orthogonal"] = so;
    if (include_generator) rec["generator"] = generator_json(code);
    return rec;
}

/// Rebuilds a code from a record, checking the structural invariants.
inline GrsCode code_from_record(const json& rec) {
    if (!rec.is_object()) throw MalformedInputError("code record must be a JSON object");
    for (const char* key : {"p", "h", "k", "support", "thetas"})
        if (!rec.contains(key)) throw MalformedInputError(std::string("code record lacks '") + key + "'");
    if (rec.contains("schema") && rec["schema"] != kSchemaVersion) throw MalformedInputError("unsupported schema version");
    Field ctx;
    int k = 0;
    std::vector<int> support;
    try {
        ctx = make_field(rec["p"].get<int>(), rec["h"].get<int>());
        k = rec["k"].get<int>();
        support = rec["support"].get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw MalformedInputError(std::string("bad code record: ") + e.what());
    } catch (const ValidationError& e) {
        throw MalformedInputError(std::string("bad field in code record: ") + e.what());
    }
    std::set<int> distinct(support.begin(), support.end());
    if (distinct.size() != support.size()) throw MalformedInputError("duplicated support index");
    Vector thetas = felts_from_json(*ctx, rec["thetas"], "thetas");
    try {
        return GrsCode::make(ctx, k, std::move(support), std::move(thetas));
    } catch (const ValidationError& e) {
        throw MalformedInputError(std::string("invalid code record: ") + e.what());
    }
}

inline json spec_parameters(const ConstructionSpec& s) {
    json j{{"k", s.k}};
    if (s.t) j["t"] = *s.t;
    if (s.f) j["f"] = to_json(*s.f);
    if (!s.R.empty() || s.family == Family::example2 || s.family == Family::example3 || s.family == Family::even_q_min ||
        s.family == Family::odd_q_min)
        j["R"] = to_json(s.R);
    if (s.e) j["e"] = s.e->index();
    if (s.g) j["g"] = to_json(*s.g);
    if (s.c) j["c"] = s.c->index();
    return j;
}

inline json report_json(const ConstructionReport& r, bool include_generator = false) {
    json j = code_record(r.code, r.distance, include_generator);
    j["family"] = to_string(r.spec.family);
    j["parameters"] = spec_parameters(r.spec);
    j["polynomial"] = {{"role", r.polynomial_role}, {"coeffs", to_json(r.polynomial)}};
    j["c"] = r.c.index();
    j["puncture_vector"] = to_json(r.puncture);
    j["predicted_N"] = r.predicted_N ? json(*r.predicted_N) : json(nullptr);
    j["zero_count"] = r.zero_count;
    j["checks"] = {{"factored_identity", r.checks.factored_identity ? json(*r.checks.factored_identity) : json(nullptr)},
                   {"zero_count_matches_N", r.checks.zero_count_matches_N},
                   {"self_orthogonal", r.checks.self_orthogonal},
                   {"mds", to_string(r.checks.mds)}};
    return j;
}

inline json min_weight_json(const PunctureMinWeight& m) {
    json j{{"value", m.value ? json(*m.value) : json(nullptr)},
           {"mode", m.mode},
           {"method", m.method},
           {"witness", to_json(m.witness)}};
    if (m.weight_counts) j["full_length_words"] = m.weight_counts->back();
    return j;
}

}  // namespace hsogrs

#endif
