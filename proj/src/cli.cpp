#include "drazinkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "drazinkit/json_io.hpp"

namespace drazinkit {

namespace {

using json_io::Json;

struct Outcome {
    Json report;
    int status = kExitOk;
    std::optional<Error> reason;
};

Outcome accepted(Json report) { return Outcome{std::move(report), kExitOk, std::nullopt}; }

Outcome rejected(Json report, ErrorCode code, const std::string& why) {
    return Outcome{std::move(report), kExitRejected, Error(code, why)};
}

int status_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidRing:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::RingMismatch:
        return kExitMalformed;
    default:
        return kExitRejected;
    }
}

Json load_input(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    std::string body;
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[' || text[first] == '"')) {
        body = text;
    } else {
        std::ifstream in(text);
        if (!in) fail(ErrorCode::ParseError, "cannot read input file '" + text + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        body = ss.str();
    }
    try {
        return Json::parse(body);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
}

RingSpec parse_ring_name(const std::string& name) {
    std::string lower(name);
    for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    auto number = [&](std::size_t prefix) -> std::int64_t {
        const std::string digits = lower.substr(prefix);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
            fail(ErrorCode::ParseError, "bad ring name '" + name + "'");
        return std::stoll(digits);
    };
    if (lower == "q") return RingSpec::rationals();
    if (lower == "z") return RingSpec::integers();
    if (lower.rfind("gf", 0) == 0) return RingSpec::prime_field(number(2));
    if (lower.rfind("zmod", 0) == 0) return RingSpec::residue_ring(number(4));
    fail(ErrorCode::ParseError, "unknown ring '" + name + "' (expected q, z, gf<p> or zmod<n>)");
}

std::vector<Rational> parse_lambda_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(' ');
        const auto e = item.find_last_not_of(' ');
        if (b == std::string::npos) fail(ErrorCode::ParseError, "empty entry in lambda list");
        out.push_back(Rational::parse(item.substr(b, e - b + 1)));
    }
    if (out.empty()) fail(ErrorCode::ParseError, "empty lambda list");
    return out;
}

std::uint64_t effective_seed(std::uint64_t flag) {
    const char* env = std::getenv("DRAZINKIT_SEED");
    if (env == nullptr || *env == '\0') return flag;
    const std::string text(env);
    if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 19)
        fail(ErrorCode::ParseError, "DRAZINKIT_SEED must be a nonnegative integer, got '" + text + "'");
    return std::stoull(text);
}

Quadruple quadruple_from_input(const Json& j) {
    const auto m = json_io::quadruple_matrices_from_json(j);
    return make_quadruple(m[0], m[1], m[2], m[3]);
}

/// Quadruples over Z are handled through their image in M_n(Q): the
/// relations survive the embedding and inverses are unique, so any integral
/// answer found over Q is the answer over Z.
Quadruple field_view(const Quadruple& q) {
    if (q.ring().kind() != RingSpec::Kind::Integers) return q;
    const RingSpec qq = RingSpec::rationals();
    return make_quadruple(q.a().embed(qq), q.b().embed(qq), q.c().embed(qq), q.d().embed(qq));
}

Json error_json(const Error& e) { return json_io::error_to_json(e); }

DrazinCertificate field_inverse(const SquareMatrix& a, InverseFlavor flavor) {
    if (flavor == InverseFlavor::Group) return group_inverse(a);
    const DrazinCertificate d = drazin_inverse(a);
    return flavor == InverseFlavor::Drazin ? d : certify(a, d.inverse, flavor);
}

// ---- demo -----------------------------------------------------------------

Json element_with_inverse(const SquareMatrix& m, const char* key, const DrazinCertificate& cert) {
    return Json{{"matrix", json_io::rows_to_json(m)}, {key, json_io::certificate_to_json(cert)}};
}

Outcome demo_2_4() {
    const auto m = fixture_example_2_4();
    const IntertwiningReport report = verify_intertwining(m[0], m[1], m[2], m[3]);
    const SquareMatrix ac = m[0] * m[2];
    Json out{{"example", "2.4"},
             {"ring", "Q"},
             {"input", Json{{"a", json_io::rows_to_json(m[0])},
                            {"b", json_io::rows_to_json(m[1])},
                            {"c", json_io::rows_to_json(m[2])},
                            {"d", json_io::rows_to_json(m[3])}}},
             {"intertwining", json_io::intertwining_to_json(report)},
             {"ac", element_with_inverse(ac, "drazin_inverse", drazin_inverse(ac))}};
    if (report.accepted()) return accepted(std::move(out));
    return rejected(std::move(out), ErrorCode::RelationViolation, report.describe());
}

Outcome demo_2_5() {
    const Quadruple q = fixture_example_2_5();
    const IntertwiningReport report = verify_intertwining(q.a(), q.b(), q.c(), q.d());
    const ClineResult cline = cline_generalized(q, InverseFlavor::Drazin);
    Json out{{"example", "2.5"},
             {"ring", "Q"},
             {"input", json_io::quadruple_to_json(q)},
             {"intertwining", json_io::intertwining_to_json(report)},
             {"ac", element_with_inverse(q.ac(), "drazin_inverse", cline.ac)},
             {"bd", element_with_inverse(q.bd(), "drazin_inverse", cline.bd)},
             {"cline", json_io::cline_to_json(cline)}};
    if (!cline.valid()) return rejected(std::move(out), ErrorCode::FormulaViolation, "certificate failed");
    return accepted(std::move(out));
}

Outcome demo_3_6() {
    const Quadruple q = fixture_example_3_6();
    const IntertwiningReport report = verify_intertwining(q.a(), q.b(), q.c(), q.d());
    const Quadruple over_q = field_view(q);
    const SquareMatrix ac = q.ac();
    const SquareMatrix bd = q.bd();

    // Inverses are found over Q and re-certified over Z.
    const DrazinCertificate ac_group = group_inverse(ac, group_inverse(over_q.ac()).inverse.embed(q.ring()));
    const DrazinCertificate bd_drazin = certify(bd, drazin_inverse(over_q.bd()).inverse.embed(q.ring()),
                                                InverseFlavor::Drazin);
    Json bd_group;
    try {
        bd_group = json_io::certificate_to_json(group_inverse(over_q.bd()));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NoGroupInverse) throw;
        bd_group = error_json(e);
    }
    const ClineResult cline = cline_generalized(over_q, InverseFlavor::Group);

    Json bd_json = element_with_inverse(bd, "drazin_inverse", bd_drazin);
    bd_json["group_inverse"] = std::move(bd_group);
    Json out{{"example", "3.6"},
             {"ring", "Z"},
             {"input", json_io::quadruple_to_json(q)},
             {"intertwining", json_io::intertwining_to_json(report)},
             {"ac", element_with_inverse(ac, "group_inverse", ac_group)},
             {"bd", std::move(bd_json)},
             {"cline_over_Q", json_io::cline_to_json(cline)}};
    if (!report.accepted() || !ac_group.valid || !bd_drazin.valid || !cline.valid())
        return rejected(std::move(out), ErrorCode::FormulaViolation, "certificate failed");
    return accepted(std::move(out));
}

Outcome run_demo(const std::string& example) {
    if (example == "2.4") return demo_2_4();
    if (example == "2.5") return demo_2_5();
    if (example == "3.6") return demo_3_6();
    fail(ErrorCode::ParseError, "unknown example '" + example + "' (expected 2.4, 2.5 or 3.6)");
}

// ---- single-input commands -------------------------------------------------

Outcome run_verify(const Json& input) {
    const auto m = json_io::quadruple_matrices_from_json(input);
    const IntertwiningReport report = verify_intertwining(m[0], m[1], m[2], m[3]);
    Json out = json_io::intertwining_to_json(report);
    if (report.accepted()) return accepted(std::move(out));
    return rejected(std::move(out), ErrorCode::RelationViolation, report.describe());
}

Outcome run_drazin(const Json& input, InverseFlavor flavor) {
    const SquareMatrix a = json_io::matrix_from_json(input);
    if (!a.ring().is_field())
        fail(ErrorCode::NotAField, "construction needs a field; use the oracle command over " + a.ring().name());
    const DrazinCertificate cert = field_inverse(a, flavor);
    Json out = json_io::certificate_to_json(cert);
    if (!cert.valid) return rejected(std::move(out), ErrorCode::FormulaViolation, "certificate failed");
    return accepted(std::move(out));
}

Outcome run_cline(const Json& input, InverseFlavor flavor) {
    const auto m = json_io::quadruple_matrices_from_json(input);
    const IntertwiningReport report = verify_intertwining(m[0], m[1], m[2], m[3]);
    Json out{{"intertwining", json_io::intertwining_to_json(report)}};
    if (!report.accepted()) return rejected(std::move(out), ErrorCode::RelationViolation, report.describe());
    const Quadruple q = field_view(*report.quadruple);
    const ClineResult result = cline_generalized(q, flavor);
    out["computed_over"] = json_io::ring_to_json(q.ring());
    out["cline"] = json_io::cline_to_json(result);
    if (!result.valid()) return rejected(std::move(out), ErrorCode::FormulaViolation, "certificate failed");
    return accepted(std::move(out));
}

Outcome run_jacobson(const Json& input, const std::optional<std::string>& lambda_text) {
    Quadruple q = field_view(quadruple_from_input(input));
    Json out;
    if (lambda_text) {
        const Rational lambda = Rational::parse(*lambda_text);
        q = q.scaled(lambda);
        out["lambda"] = lambda.to_string();
    }
    const SquareMatrix one = SquareMatrix::identity(q.ring(), q.dim());
    out["one_minus_ac"] = json_io::matrix_to_json(one - q.ac());
    out["one_minus_bd"] = json_io::matrix_to_json(one - q.bd());
    out["inverse"] = json_io::matrix_to_json(jacobson_inverse(q));
    out["verified"] = true;
    return accepted(std::move(out));
}

Outcome run_spectrum(const Json& input, const std::optional<std::string>& lambda_text) {
    const Quadruple q = field_view(quadruple_from_input(input));
    const std::vector<Rational> lambdas = lambda_text ? parse_lambda_list(*lambda_text) : default_lambdas(q);
    const SpectrumComparison cmp = nonzero_spectrum_equal(q.ac(), q.bd());
    const InvertibilityTransfer transfer = invertibility_transfer(q, lambdas);
    Json out{{"ac_vs_bd", json_io::comparison_to_json(cmp)}, {"transfer", json_io::transfer_to_json(transfer)}};
    if (!cmp.second_within_first)
        return rejected(std::move(out), ErrorCode::FormulaViolation, "bd has a nonzero eigenvalue that ac lacks");
    if (!transfer.forward_holds())
        return rejected(std::move(out), ErrorCode::FormulaViolation, "invertibility transfer failed");
    return accepted(std::move(out));
}

Outcome run_oracle(const Json& input, const std::optional<std::string>& ring_name, InverseFlavor flavor) {
    SquareMatrix a = [&] {
        if (!ring_name) return json_io::matrix_from_json(input);
        const RingSpec ring = parse_ring_name(*ring_name);
        if (input.is_object() && input.contains("rows")) return json_io::rows_from_json(ring, input["rows"]);
        return json_io::rows_from_json(ring, input);
    }();
    if (!a.ring().is_finite()) fail(ErrorCode::UnsupportedRing, "the oracle enumerates finite rings only");
    const auto found = brute_force_inverse(a, flavor);
    Json inverses = Json::array();
    for (const auto& cert : found) inverses.push_back(json_io::certificate_to_json(cert));
    Json out{{"element", json_io::matrix_to_json(a)},
             {"flavor", std::string(to_string(flavor))},
             {"count", found.size()},
             {"inverses", std::move(inverses)}};
    if (found.empty())
        return rejected(std::move(out), ErrorCode::NoInverse,
                        "no " + std::string(to_string(flavor)) + " inverse exists over " + a.ring().name());
    return accepted(std::move(out));
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Drazin-type inverses under intertwining relations", "drazinkit"};
    app.require_subcommand(1);

    std::string example, in_text, flavor_text = "drazin", ring_text, strategy_text = "exhaustive", out_path;
    std::optional<std::string> lambda_text, lambdas_text, oracle_ring;
    std::size_t dim = 2;
    std::uint64_t budget = kDefaultEnumerationBudget, seed = kDefaultSeed;

    auto* demo = app.add_subcommand("demo", "Replay a worked example");
    demo->add_option("--example", example, "2.4, 2.5 or 3.6")->required();

    auto* verify = app.add_subcommand("verify", "Check bdb = bac and dbd = acd");
    auto* drazin = app.add_subcommand("drazin", "Construct and certify an inverse over a field");
    auto* cline = app.add_subcommand("cline", "Generalized Cline formula for a quadruple");
    auto* jacobson = app.add_subcommand("jacobson", "Invert 1 - bd from (1 - ac)^-1");
    auto* spectrum = app.add_subcommand("spectrum", "Compare nonzero spectra of ac and bd");
    auto* search = app.add_subcommand("search", "Stream intertwined quadruples as JSON lines");
    auto* oracle = app.add_subcommand("oracle", "Brute-force every inverse over a finite ring");

    for (auto* sub : {verify, drazin, cline, jacobson, spectrum, oracle})
        sub->add_option("--in", in_text, "Inline JSON or a path to a JSON file")->required();
    for (auto* sub : {drazin, cline, oracle})
        sub->add_option("--flavor", flavor_text, "drazin, group, pdrazin or gdrazin");
    jacobson->add_option("--lambda", lambda_text, "Scale a and d by 1/lambda first");
    spectrum->add_option("--lambdas", lambdas_text, "Comma-separated nonzero rationals");
    oracle->add_option("--ring", oracle_ring, "Reinterpret the rows over this ring (e.g. zmod4)");

    search->add_option("--ring", ring_text, "gf2, gf3, zmod4, ...")->required();
    search->add_option("--dim", dim, "Matrix size")->check(CLI::Range(1, 8));
    search->add_option("--strategy", strategy_text, "exhaustive or linear-solve");
    search->add_option("--budget", budget, "Maximum number of quadruples");
    search->add_option("--seed", seed, "Sampler seed (DRAZINKIT_SEED overrides)");

    for (auto* sub : app.get_subcommands({})) sub->add_option("--out", out_path, "Write the report here");

    auto report_error = [&](const Error& e) {
        err << error_json(e).dump() << '\n';
        return status_for(e.code());
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        return report_error(Error(ErrorCode::ParseError, e.what()));
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) return report_error(Error(ErrorCode::ParseError, "cannot open '" + out_path + "' for writing"));
    }
    std::ostream& sink = out_path.empty() ? out : file;

    try {
        if (search->parsed()) {
            SearchSpace space;
            space.ring = parse_ring_name(ring_text);
            space.n = dim;
            space.strategy = parse_strategy(strategy_text);
            space.budget = budget;
            space.seed = effective_seed(seed);
            std::uint64_t count = 0;
            enumerate_quadruples(space, [&](const Quadruple& q) {
                Json line = json_io::quadruple_to_json(q);
                line["kind"] = "quadruple";
                sink << line.dump() << '\n';
                ++count;
            });
            sink << Json{{"kind", "summary"},
                         {"ring", json_io::ring_to_json(space.ring)},
                         {"dim", space.n},
                         {"strategy", std::string(to_string(space.strategy))},
                         {"budget", space.budget},
                         {"seed", space.seed},
                         {"count", count}}
                        .dump()
                 << '\n';
            return kExitOk;
        }

        Outcome outcome;
        if (demo->parsed()) {
            outcome = run_demo(example);
        } else {
            const Json input = load_input(in_text);
            const InverseFlavor flavor = parse_flavor(flavor_text);
            if (verify->parsed()) outcome = run_verify(input);
            else if (drazin->parsed()) outcome = run_drazin(input, flavor);
            else if (cline->parsed()) outcome = run_cline(input, flavor);
            else if (jacobson->parsed()) outcome = run_jacobson(input, lambda_text);
            else if (spectrum->parsed()) outcome = run_spectrum(input, lambdas_text);
            else outcome = run_oracle(input, oracle_ring, flavor);
        }
        sink << outcome.report.dump(2) << '\n';
        if (outcome.reason) err << error_json(*outcome.reason).dump() << '\n';
        return outcome.status;
    } catch (const Error& e) {
        return report_error(e);
    }
}

} // namespace drazinkit
