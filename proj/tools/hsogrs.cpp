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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"

#include "hsogrs/commands.hpp"

namespace {

// Exit codes: 0 ok, 1 verification failure, 2 refused precondition, 3 cap exceeded, 4 malformed input.
constexpr int kVerificationFailed = 1;
constexpr int kRefused = 2;
constexpr int kCapExceeded = 3;
constexpr int kMalformed = 4;

struct FieldArgs {
    std::optional<int> p, h, q;

    void add_to(CLI::App* app) {
        app->add_option("--p", p, "characteristic");
        app->add_option("--h", h, "extension degree of F_q over F_p");
        app->add_option("--q", q, "subfield size q = p^h (alternative to --p/--h)");
    }
    std::pair<int, int> resolve() const {
        if (q) {
            auto ph = hsogrs::prime_power(*q);
            if ((p && *p != ph.first) || (h && *h != ph.second)) throw hsogrs::MalformedInputError("--q disagrees with --p/--h");
            return ph;
        }
        if (!p || !h) throw hsogrs::MalformedInputError("give either --q or both --p and --h");
        return {*p, *h};
    }
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    using hsogrs::json;

    CLI::App app{"Hermitian self-orthogonal truncated GRS codes: puncture codes, constructions, verification"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);
    app.fallthrough();

    hsogrs::GlobalOptions global;
    std::string output, format = "json";
    app.add_option("-o,--output", output, "output file (default: stdout)");
    app.add_option("--format", format, "json or csv (csv only for sweep)")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", global.seed, "seed for randomized sampling");
    app.add_option("--threads", global.threads, "worker threads for enumeration")->check(CLI::PositiveNumber);
    app.add_option("--cap", global.cap, "codeword / support-search budget for puncture-code weights");
    app.add_option("--minor-cap", global.minor_cap, "maximum C(n,k) for the MDS minor check");
    app.add_option("--enum-cap", global.enum_cap, "maximum codewords for code distance enumeration");
    app.add_flag("--generator", global.generator, "include the generator matrix in code records");

    auto* field_info = app.add_subcommand("field-info", "describe F_{q^2}");
    FieldArgs field_info_args;
    field_info_args.add_to(field_info);

    auto* puncture = app.add_subcommand("puncture", "basis and minimum weight of the Reed-Solomon puncture code");
    FieldArgs puncture_field;
    puncture_field.add_to(puncture);
    hsogrs::PunctureArgs pargs;
    puncture->add_option("--k", pargs.k, "code dimension")->required();
    puncture->add_option("--method", pargs.method, "direct, u_space, g_form or all")
        ->check(CLI::IsMember({"direct", "u_space", "g_form", "all"}));
    puncture->add_flag("--min-weight", pargs.check_min_weight, "compute the minimum weight");
    puncture->add_option("--samples", pargs.samples, "random (g, c) pairs checked for membership");
    puncture->add_option("--max-q", pargs.max_q, "largest q accepted by the direct solver");

    auto* construct = app.add_subcommand("construct", "build a Hermitian self-orthogonal code from a polynomial family");
    construct->require_subcommand(1);
    hsogrs::ConstructArgs cargs;
    FieldArgs construct_field;
    const std::pair<const char*, const char*> families[] = {
        {"example1", "g = c X^t f(X^(q+1)), f over F_q (--k --t --f)"},
        {"example2", "g = c X^t prod (X^q + X + r), r in R (--k --t [--R])"},
        {"example3", "g = c X^t prod (X^(q-1) + e), e in R (--k --t [--R])"},
        {"even-min", "minimum-weight witness for even q, q/2 <= k <= q-1 (--k [--R])"},
        {"odd-min", "minimum-weight witness for odd q, (q+1)/2 <= k <= q-1 (--k [--R])"},
        {"qsq-plus-one", "full-length [q^2+1, q-1] code for q = 2^r, r odd >= 3 ([--e])"},
        {"custom", "any g of degree <= (q-k)q-1 and c in F_q (--k --g --c)"},
    };
    for (const auto& [fam, what] : families) {
        auto* sub = construct->add_subcommand(fam, what);
        construct_field.add_to(sub);
        sub->add_option("--k", cargs.k, "code dimension");
        sub->add_option("--t", cargs.t, "exponent t");
        sub->add_option("--f", cargs.f, "f coefficients (element indices, low degree first)");
        sub->add_option("--R", cargs.R, "set R (comma-separated element indices)");
        sub->add_option("--e", cargs.e, "element e");
        sub->add_option("--g", cargs.g, "g coefficients (element indices, low degree first)");
        sub->add_option("--c", cargs.c, "element c of F_q");
        sub->callback([&cargs, sub] { cargs.family = sub->get_name(); });
    }

    auto* verify = app.add_subcommand("verify", "recompute Gram matrix, MDS status and parameters of a code record");
    std::string code_file;
    verify->add_option("code_file", code_file, "JSON code record")->required();

    auto* sweep = app.add_subcommand("sweep", "minimum weight of P(C) for every k <= q");
    FieldArgs sweep_field;
    sweep_field.add_to(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kMalformed;
    }

    json config{{"command", app.get_subcommands().front()->get_name()},
                {"seed", global.seed},
                {"threads", global.threads},
                {"cap", global.cap},
                {"minor_cap", global.minor_cap},
                {"enum_cap", global.enum_cap},
                {"format", format}};

    try {
        if (format == "csv" && !*sweep) throw hsogrs::MalformedInputError("csv output is only available for sweep");
        json result;
        int code = 0;
        if (*field_info) {
            auto [p, h] = field_info_args.resolve();
            config["p"] = p;
            config["h"] = h;
            result = hsogrs::cmd_field_info(p, h);
        } else if (*puncture) {
            std::tie(pargs.p, pargs.h) = puncture_field.resolve();
            config.update({{"p", pargs.p}, {"h", pargs.h}, {"k", pargs.k}, {"method", pargs.method},
                           {"min_weight", pargs.check_min_weight}, {"samples", pargs.samples}, {"max_q", pargs.max_q}});
            result = hsogrs::cmd_puncture(pargs, global);
        } else if (*construct) {
            std::tie(cargs.p, cargs.h) = construct_field.resolve();
            if (cargs.family != "qsq-plus-one" && cargs.k == 0) throw hsogrs::MalformedInputError(cargs.family + " needs --k");
            config.update({{"family", cargs.family}, {"p", cargs.p}, {"h", cargs.h}, {"k", cargs.k}});
            if (cargs.t) config["t"] = *cargs.t;
            for (auto [name, val] : {std::pair{"f", &cargs.f}, {"R", &cargs.R}, {"e", &cargs.e}, {"g", &cargs.g}, {"c", &cargs.c}})
                if (*val) config[name] = **val;
            result = hsogrs::cmd_construct(cargs, global);
        } else if (*verify) {
            config["code_file"] = code_file;
            std::ifstream in(code_file);
            if (!in) throw hsogrs::MalformedInputError("cannot read " + code_file);
            json record;
            try {
                record = json::parse(in);
            } catch (const json::exception& e) {
                throw hsogrs::MalformedInputError(std::string("invalid JSON: ") + e.what());
            }
            auto outcome = hsogrs::cmd_verify(record, global);
            result = outcome.report;
            code = outcome.ok ? 0 : kVerificationFailed;
        } else if (*sweep) {
            auto [p, h] = sweep_field.resolve();
            config["p"] = p;
            config["h"] = h;
            result = hsogrs::cmd_sweep(p, h, global);
            if (format == "csv") {
                emit("# config: " + config.dump() + "\n" + hsogrs::sweep_csv(result), output);
                return code;
            }
        }
        result["config"] = config;
        emit(result.dump(2) + "\n", output);
        return code;
    } catch (const hsogrs::ValidationError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kRefused;
    } catch (const hsogrs::CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const hsogrs::MalformedInputError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return kMalformed;
    } catch (const hsogrs::VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
