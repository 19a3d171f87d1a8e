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

#include "hsogrs/commands.hpp"
#include "oracle.hpp"

using namespace hsogrs;

namespace {

json example1_record() {
    auto F = make_field(5, 1);
    auto r = build_example1(F, 4, 3, Poly::constant(F, F->one()));
    return report_json(r);
}

std::vector<int> column(const json& rows, const char* key) {
    std::vector<int> out;
    for (const auto& r : rows) out.push_back(r[key].is_null() ? -1 : r[key].get<int>());
    return out;
}

}  // namespace

TEST(CodeRecord, RoundTrip) {
    auto F = make_field(5, 1);
    auto r = build_example1(F, 4, 3, Poly::constant(F, F->one()));
    const json rec = report_json(r, true);
    EXPECT_EQ(rec["schema"], 1);
    EXPECT_EQ(rec["quantum"], json::array({12, 4, 5, 5}));
    EXPECT_EQ(rec["params"]["d"], 9);
    EXPECT_EQ(rec["generator"].size(), 4u * 12u);  // row-major
    auto back = code_from_record(json::parse(rec.dump()));
    EXPECT_EQ(back.k(), 4);
    EXPECT_EQ(back.support(), r.code.support());
    EXPECT_EQ(back.thetas().size(), r.code.thetas().size());
    for (std::size_t i = 0; i < back.thetas().size(); ++i) EXPECT_EQ(back.thetas()[i].index(), r.code.thetas()[i].index());
}

TEST(CodeRecord, RejectsMalformedRecords) {
    const json good = example1_record();
    auto broken = [&](auto edit) {
        json j = good;
        edit(j);
        return j;
    };
    EXPECT_THROW(code_from_record(broken([](json& j) { j["support"][1] = j["support"][0]; })), MalformedInputError);
    EXPECT_THROW(code_from_record(broken([](json& j) { j.erase("thetas"); })), MalformedInputError);
    EXPECT_THROW(code_from_record(broken([](json& j) { j["p"] = 4; })), MalformedInputError);
    EXPECT_THROW(code_from_record(broken([](json& j) { j["thetas"][0] = 25; })), MalformedInputError);
    EXPECT_THROW(code_from_record(broken([](json& j) { j["thetas"][0] = 0; })), MalformedInputError);
    EXPECT_THROW(code_from_record(broken([](json& j) { j["thetas"][0] = "w"; })), MalformedInputError);
    EXPECT_THROW(code_from_record(broken([](json& j) { j["schema"] = 2; })), MalformedInputError);
    EXPECT_THROW(code_from_record(broken([](json& j) { j["support"].push_back(30); })), MalformedInputError);
    EXPECT_THROW(code_from_record(json::array()), MalformedInputError);
}

TEST(ParseFeltList, AcceptsIndicesOnly) {
    auto F = make_field(2, 2);
    auto v = parse_felt_list(*F, "0, 1,15");
    ASSERT_EQ(v.size(), 3u);
    EXPECT_TRUE(v[0].is_zero());
    EXPECT_EQ(v[2], F->power_of_primitive(14));
    EXPECT_TRUE(parse_felt_list(*F, "").empty());
    EXPECT_THROW(parse_felt_list(*F, "16"), MalformedInputError);
    EXPECT_THROW(parse_felt_list(*F, "1,x"), MalformedInputError);
}

TEST(Verify, ConstructedCodesPass) {
    GlobalOptions g;
    for (const json& rec : {example1_record(), report_json(build_qsq_plus_one(make_field(2, 3))),
                            report_json(build_even_q_min(make_field(2, 2), 3))}) {
        auto out = cmd_verify(json::parse(rec.dump()), g);
        EXPECT_TRUE(out.ok) << out.report.dump();
        EXPECT_EQ(out.report["self_orthogonal"], true);
        EXPECT_EQ(out.report["consistent_with_record"], true);
    }
}

TEST(Verify, PerturbedThetaBreaksSelfOrthogonality) {
    GlobalOptions g;
    json rec = example1_record();
    auto F = make_field(5, 1);
    oracle::Mirror M(*F);
    // multiply one theta by w: its norm changes, so the weight vector leaves the puncture code
    const int old = rec["thetas"][0].get<int>();
    rec["thetas"][0] = F->mul(F->element(old), F->primitive()).index();
    auto out = cmd_verify(rec, g);
    EXPECT_FALSE(out.ok);
    EXPECT_EQ(out.report["self_orthogonal"], false);
    EXPECT_TRUE(out.report["quantum"].is_null());
    auto code = code_from_record(rec);
    Matrix gen = code.generator();
    Matrix same_field_gen;
    for (const auto& row : gen) {
        Vector r;
        for (auto x : row) r.push_back(F->element(static_cast<int>(x.index())));
        same_field_gen.push_back(r);
    }
    EXPECT_FALSE(is_zero_matrix(oracle::gram(M, same_field_gen)));
}

TEST(Verify, InconsistentClaimsFail) {
    GlobalOptions g;
    json rec = example1_record();
    rec["params"]["d"] = 10;
    auto out = cmd_verify(rec, g);
    EXPECT_TRUE(out.report["self_orthogonal"].get<bool>());
    EXPECT_FALSE(out.report["consistent_with_record"].get<bool>());
    EXPECT_FALSE(out.ok);
}

TEST(Commands, FieldInfo) {
    auto a = cmd_field_info(2, 3);
    EXPECT_EQ(a["q"], 8);
    EXPECT_EQ(a["q2"], 64);
    auto b = cmd_field_info(5, 1);
    EXPECT_EQ(b["q"], 5);
    auto c = cmd_field_info(7, 2);
    EXPECT_EQ(c["q"], 49);
    EXPECT_EQ(c["q2"], 2401);
    EXPECT_EQ(c["subfield_size"], 49);
    EXPECT_THROW(cmd_field_info(6, 1), ValidationError);
}

TEST(Commands, PunctureExamples) {
    GlobalOptions g;
    auto a = cmd_puncture({2, 2, 3, "all", true, 0, 11}, g);
    EXPECT_EQ(a["dim"], 8);
    EXPECT_EQ(a["methods_agree"], true);
    EXPECT_EQ(a["min_weight"]["value"], 8);
    EXPECT_EQ(a["agrees"], true);
    EXPECT_EQ(a["min_weight"]["full_length_words"], 0);

    auto b = cmd_puncture({5, 1, 2, "all", true, 0, 11}, g);
    EXPECT_EQ(b["dim"], 22);
    EXPECT_EQ(b["min_weight"]["value"], 4);
    EXPECT_EQ(b["formula_value"], 4);

    auto c = cmd_puncture({2, 3, 8, "direct", false, 0, 11}, g);
    EXPECT_EQ(c["dim"], 1);
    EXPECT_EQ(c["basis"][0], json(std::vector<int>(65, 1)));

    auto d = cmd_puncture({3, 1, 2, "g_form", false, 25, 11}, g);
    EXPECT_EQ(d["g_form_samples"]["all_members"], true);
    EXPECT_THROW(cmd_puncture({13, 1, 2, "direct", false, 0, 11}, g), CapExceededError);
}

TEST(Commands, ConstructExamples) {
    GlobalOptions g;
    ConstructArgs qsq{"qsq-plus-one", 2, 3, 0, {}, {}, {}, {}, {}, {}};
    auto a = cmd_construct(qsq, g);
    EXPECT_EQ(a["quantum"], json::array({65, 51, 8, 8}));

    ConstructArgs ex1{"example1", 5, 1, 4, 3, std::string("1"), {}, {}, {}, {}};
    auto b = cmd_construct(ex1, g);
    EXPECT_EQ(b["quantum"], json::array({12, 4, 5, 5}));
    EXPECT_EQ(b["family"], "example1");

    ConstructArgs custom{"custom", 2, 2, 2, {}, {}, {}, {}, std::string("3,0,7,1"), std::string("0")};
    auto c = cmd_construct(custom, g);
    EXPECT_EQ(c["self_orthogonal"], true);

    ConstructArgs refused{"qsq-plus-one", 2, 2, 0, {}, {}, {}, {}, {}, {}};
    EXPECT_THROW(cmd_construct(refused, g), ValidationError);
    ConstructArgs no_t{"example1", 5, 1, 4, {}, std::string("1"), {}, {}, {}, {}};
    EXPECT_THROW(cmd_construct(no_t, g), MalformedInputError);
}

TEST(Commands, SweepTables) {
    GlobalOptions g;
    auto q4 = cmd_sweep(2, 2, g);
    EXPECT_EQ(column(q4["rows"], "exhaustive"), (std::vector<int>{2, 4, 8, 17}));
    EXPECT_EQ(q4["all_agree"], true);

    auto q5 = cmd_sweep(5, 1, g);
    EXPECT_EQ(column(q5["rows"], "exhaustive"), (std::vector<int>{2, 4, 6, 12, 26}));

    auto q8 = cmd_sweep(2, 3, g);
    EXPECT_EQ(column(q8["rows"], "constructive"), (std::vector<int>{2, 4, 6, 8, 16, 24, 32, 65}));
    EXPECT_EQ(column(q8["rows"], "formula"), (std::vector<int>{2, 4, 6, 8, 16, 24, 32, 65}));
    EXPECT_EQ(q8["all_agree"], true);
    const std::string csv = sweep_csv(q4);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), kSweepCsvHeader);
    EXPECT_NE(csv.find("4,3,8,8,8,8,enumeration,true"), std::string::npos);
}

TEST(Commands, Deterministic) {
    GlobalOptions g;
    g.seed = 7;
    EXPECT_EQ(cmd_puncture({2, 2, 2, "all", true, 10, 11}, g).dump(), cmd_puncture({2, 2, 2, "all", true, 10, 11}, g).dump());
    GlobalOptions threaded = g;
    threaded.threads = 3;
    EXPECT_EQ(cmd_puncture({2, 2, 3, "all", true, 0, 11}, g).dump(),
              cmd_puncture({2, 2, 3, "all", true, 0, 11}, threaded).dump());
}
