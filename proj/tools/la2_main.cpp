// la2: exact solver and solution counter for LA2-type quadratic Diophantine
// equations. Subcommands: classify, reduce, thresholds, count, enumerate,
// verify, generate.
//
// Exit codes: 0 success, 1 parse/usage, 2 classification rejection (or an
// unsolvable class Z(j), j != 1), 3 region size below the formula threshold
// without --fallback-oracle, 4 internal consistency failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "la2/counting.hpp"
#include "la2/equation.hpp"
#include "la2/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace la2;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRejected = 2;
constexpr int kExitBelowThreshold = 3;
constexpr int kExitInternal = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Integer parse_integer(const std::string& text, const std::string& what) {
    static const std::regex pattern(R"([+-]?[0-9]+)");
    if (!std::regex_match(text, pattern)) {
        throw UsageError(what + ": '" + text + "' is not a decimal integer");
    }
    return Integer(text, 10);
}

// Exact floor of a decimal literal; no binary floating point anywhere on
// the input path. "12.9" -> 12, "-0.5" -> -1, "34" -> 34.
Integer floor_decimal(const std::string& text) {
    static const std::regex pattern(R"(([+-]?)([0-9]*)\.?([0-9]*))");
    std::smatch m;
    if (!std::regex_match(text, m, pattern) ||
        (m[2].str().empty() && m[3].str().empty())) {
        throw UsageError("--x: '" + text + "' is not a decimal number");
    }
    const bool negative = m[1].str() == "-";
    const std::string int_part = m[2].str().empty() ? "0" : m[2].str();
    const std::string frac = m[3].str();
    Integer value(int_part, 10);
    if (negative) {
        value = -value;
        if (frac.find_first_not_of('0') != std::string::npos) {
            value -= 1;
        }
    }
    return value;
}

// ---------------------------------------------------------------------
// Input resolution: six positionals, --coeffs CSV, or --input FILE.json.

struct EquationInput {
    std::vector<std::string> positional;
    std::string coeffs_csv;
    std::string input_file;
};

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

Integer json_coefficient(const json& doc, const std::string& key) {
    if (!doc.contains(key)) {
        throw UsageError("--input: missing coefficient '" + key + "'");
    }
    const json& value = doc.at(key);
    if (value.is_string()) {
        return parse_integer(value.get<std::string>(), "coefficient " + key);
    }
    if (value.is_number_integer()) {
        return Integer(std::to_string(value.get<long long>()));
    }
    throw UsageError("--input: coefficient '" + key +
                     "' must be an integer or a decimal string");
}

LA2Equation equation_from_json(const json& doc) {
    // Accept a bare coefficient object, or the documents emitted by
    // `generate` (coefficients under result.equation).
    const json* coeffs = &doc;
    if (!doc.contains("a") && doc.contains("result") &&
        doc["result"].contains("equation")) {
        coeffs = &doc["result"]["equation"];
    }
    Integer a = json_coefficient(*coeffs, "a");
    if (a <= 0) {
        throw UsageError("coefficient a must be positive");
    }
    return LA2Equation(a, json_coefficient(*coeffs, "b"),
                       json_coefficient(*coeffs, "c"),
                       json_coefficient(*coeffs, "d"),
                       json_coefficient(*coeffs, "e"),
                       json_coefficient(*coeffs, "f"));
}

LA2Equation resolve_equation(const EquationInput& in) {
    static const char* const names[6] = {"a", "b", "c", "d", "e", "f"};
    std::vector<std::string> texts;
    if (!in.input_file.empty()) {
        std::ifstream file(in.input_file);
        if (!file) {
            throw UsageError("--input: cannot open '" + in.input_file + "'");
        }
        json doc;
        try {
            file >> doc;
        } catch (const json::exception& err) {
            throw UsageError("--input: invalid JSON: " +
                             std::string(err.what()));
        }
        return equation_from_json(doc);
    }
    if (!in.coeffs_csv.empty()) {
        texts = split_csv(in.coeffs_csv);
    } else {
        texts = in.positional;
    }
    if (texts.size() != 6) {
        throw UsageError(
            "expected six coefficients a b c d e f (positional, --coeffs "
            "\"a,b,c,d,e,f\", or --input FILE.json)");
    }
    Integer values[6];
    for (int i = 0; i < 6; ++i) {
        values[i] = parse_integer(texts[i], std::string("coefficient ") + names[i]);
    }
    if (values[0] <= 0) {
        throw UsageError("coefficient a must be positive");
    }
    return LA2Equation(values[0], values[1], values[2], values[3], values[4],
                       values[5]);
}

Integer oracle_cap() {
    if (const char* env = std::getenv("LA2_ORACLE_CAP")) {
        return parse_integer(env, "LA2_ORACLE_CAP");
    }
    return kDefaultOracleCap;
}

// ---------------------------------------------------------------------
// JSON rendering. All integers are serialized as decimal strings; Pell
// data overflows 53-bit JSON consumers immediately.

std::string str(const Integer& x) { return x.get_str(); }

json equation_json(const LA2Equation& eq) {
    return json{{"a", str(eq.a)}, {"b", str(eq.b)}, {"c", str(eq.c)},
                {"d", str(eq.d)}, {"e", str(eq.e)}, {"f", str(eq.f)}};
}

json optional_json(const std::optional<Integer>& value) {
    if (value) {
        return str(*value);
    }
    return nullptr;
}

json derived_json(const DerivedQuantities& q) {
    return json{{"D", str(q.D)},
                {"E", str(q.E)},
                {"F", str(q.F)},
                {"N", str(q.N)},
                {"lambda", optional_json(q.lambda)},
                {"tau", optional_json(q.tau)},
                {"E_over_D", optional_json(q.e_over_d)},
                {"half_d", optional_json(q.half_d)},
                {"j", optional_json(q.j)}};
}

json classification_json(const ClassificationReport& report) {
    json failed = json::array();
    for (ClassCondition c : report.failed) {
        failed.push_back(condition_name(c));
    }
    json out{{"verdict", report.la2 ? "LA2" : "NotLA2"},
             {"failed_conditions", failed},
             {"j", optional_json(report.j)},
             {"derived", derived_json(report.derived)}};
    if (report.coefficient_gcd != 1) {
        out["coefficient_gcd"] = str(report.coefficient_gcd);
        out["normalized"] = equation_json(*report.normalized);
    }
    return out;
}

std::string signed_term(const Integer& value) {
    if (value == 0) {
        return "";
    }
    return value > 0 ? " + " + str(value) : " - " + str(-value);
}

std::string lambda_term(const Integer& lambda, const std::string& var) {
    if (lambda == 0) {
        return "";
    }
    if (lambda == 1) {
        return " + " + var;
    }
    if (lambda == -1) {
        return " - " + var;
    }
    return (lambda > 0 ? " + " + str(lambda) : " - " + str(-lambda)) + "*" + var;
}

json reduced_json(const ReducedForm& r) {
    return json{
        {"tau", str(r.tau)},
        {"j", str(r.j)},
        {"lambda", str(r.lambda)},
        {"E_over_D", str(r.e_over_d)},
        {"half_d", str(r.half_d)},
        {"shift_u", str(r.shift_u)},
        {"shift_v", str(r.shift_v)},
        {"forward_map",
         {{"u_tilde", "u" + lambda_term(r.lambda, "v") + signed_term(r.half_d)},
          {"v_tilde", "v" + signed_term(r.e_over_d)}}},
        {"inverse_map",
         {{"u", "u~" + lambda_term(-r.lambda, "v~") + signed_term(r.shift_u)},
          {"v", "v~" + signed_term(r.shift_v)}}}};
}

json quad_json(const QuadInt& x) {
    return json{{"rational", str(x.rational_part())},
                {"surd", str(x.surd_part())},
                {"tau", str(x.tau())}};
}

json branch_json(const BranchParameters& p, long nl, const Integer& m_prime) {
    return json{{"l", std::to_string(p.l)},
                {"P", quad_json(p.P)},
                {"Q", str(p.Q)},
                {"R", std::to_string(p.R)},
                {"side", p.side == BranchSide::Below ? "lambda < (-1)^(l-1) sqrt(tau)"
                                                     : "lambda > (-1)^(l-1) sqrt(tau)"},
                {"N_l", std::to_string(nl)},
                {"M_prime", str(m_prime)}};
}

json points_json(const std::vector<std::pair<Integer, Integer>>& points) {
    json out = json::array();
    for (const auto& [u, v] : points) {
        out.push_back(json::array({str(u), str(v)}));
    }
    return out;
}

// ---------------------------------------------------------------------
// Output document plumbing.

struct Output {
    json doc;
    bool use_json = false;
    std::vector<std::string> human;  // preformatted lines

    explicit Output(const std::string& command, bool json_mode)
        : use_json(json_mode) {
        doc["command"] = command;
        doc["input"] = nullptr;
        doc["result"] = json::object();
        doc["warnings"] = json::array();
    }

    void set_input(const LA2Equation& eq) { doc["input"] = equation_json(eq); }

    void warn(const std::string& message) {
        doc["warnings"].push_back(message);
    }

    void line(const std::string& text) { human.push_back(text); }

    int finish(int exit_code) {
        if (use_json) {
            std::cout << doc.dump(2) << "\n";
        } else {
            for (const auto& text : human) {
                std::cout << text << "\n";
            }
            for (const auto& warning : doc["warnings"]) {
                std::cout << "warning: " << warning.get<std::string>() << "\n";
            }
        }
        return exit_code;
    }
};

std::string render_pell_form(const ReducedForm& r) {
    return "u~^2 - " + str(r.tau) + "*v~^2 = " + str(r.j);
}

void render_classification(Output& out, const ClassificationReport& report) {
    out.doc["result"] = classification_json(report);
    if (report.la2) {
        out.line("LA2-type: yes, class Z(" + str(*report.j) + ")");
    } else {
        std::string conditions;
        for (ClassCondition c : report.failed) {
            conditions += (conditions.empty() ? "" : ", ") + condition_name(c);
        }
        out.line("LA2-type: no (failed: " + conditions + ")");
        if (report.coefficient_gcd != 1) {
            const auto& n = *report.normalized;
            out.line("  coefficient gcd = " + str(report.coefficient_gcd) +
                     "; normalized equation: " + str(n.a) + " " + str(n.b) +
                     " " + str(n.c) + " " + str(n.d) + " " + str(n.e) + " " +
                     str(n.f));
        }
    }
    const auto& q = report.derived;
    out.line("  D = " + str(q.D) + ", E = " + str(q.E) + ", F = " + str(q.F) +
             ", N = " + str(q.N));
}

// ---------------------------------------------------------------------
// Commands.

int cmd_classify(const LA2Equation& eq, Output& out) {
    const ClassificationReport report = classify(eq);
    render_classification(out, report);
    return out.finish(report.la2 ? kExitOk : kExitRejected);
}

int cmd_reduce(const LA2Equation& eq, Output& out) {
    const ReducedForm r = reduce(eq);
    out.doc["result"] = reduced_json(r);
    out.line(render_pell_form(r));
    out.line("  forward: u~ = u" + lambda_term(r.lambda, "v") +
             signed_term(r.half_d) + ", v~ = v" + signed_term(r.e_over_d));
    out.line("  inverse: u = u~" + lambda_term(-r.lambda, "v~") +
             signed_term(r.shift_u) + ", v = v~" + signed_term(r.shift_v));
    if (r.j != 1) {
        out.warn("equation belongs to Z(" + str(r.j) +
                 "); only j = 1 is solvable by count/enumerate");
    }
    return out.finish(kExitOk);
}

int cmd_thresholds(const LA2Equation& eq, Output& out) {
    const ReducedForm r = reduce(eq);
    const PellFundamental fund = fundamental_solution(r.tau);
    const Thresholds thr = compute_thresholds(r, fund);

    json branches = json::array();
    out.line("fundamental solution of u~^2 - " + str(r.tau) +
             "*v~^2 = 1: (alpha, beta) = (" + str(fund.alpha) + ", " +
             str(fund.beta) + ")");
    out.line("N0 = " + std::to_string(thr.n0));
    for (int l = 1; l <= 4; ++l) {
        const BranchParameters params = branch_parameters(r, l);
        branches.push_back(branch_json(params, thr.nl[l - 1],
                                       thr.m_prime[l - 1]));
        out.line("  l=" + std::to_string(l) + ": P = " +
                 params.P.to_string() + ", Q = " + str(params.Q) + ", R = " +
                 std::to_string(params.R) + ", N_l = " +
                 std::to_string(thr.nl[l - 1]) + ", M' = " +
                 str(thr.m_prime[l - 1]));
    }
    out.line("L = " + str(thr.big_l));
    out.doc["result"] = json{{"fundamental",
                              {{"tau", str(fund.tau)},
                               {"alpha", str(fund.alpha)},
                               {"beta", str(fund.beta)}}},
                             {"N0", std::to_string(thr.n0)},
                             {"branches", branches},
                             {"L", str(thr.big_l)}};
    return out.finish(kExitOk);
}

struct RegionQuery {
    Integer x_floor;
    bool fallback_oracle = false;
};

int cmd_count(const LA2Equation& eq, const RegionQuery& query, Output& out) {
    const ReducedForm r = reduce(eq);
    const PellFundamental fund = fundamental_solution(r.tau);
    const Thresholds thr = compute_thresholds(r, fund);

    out.doc["result"]["x_floor"] = str(query.x_floor);
    out.doc["result"]["L"] = str(thr.big_l);

    if (query.x_floor < thr.big_l) {
        if (!query.fallback_oracle) {
            out.doc["result"]["error"] = "below-threshold";
            out.line("error: x = " + str(query.x_floor) +
                     " is below L = " + str(thr.big_l) +
                     "; rerun with --fallback-oracle for a brute-force count");
            return out.finish(kExitBelowThreshold);
        }
        const OracleReport oracle =
            brute_force_solutions(eq, query.x_floor, oracle_cap());
        out.warn("below L: brute force used");
        out.doc["result"]["method"] = "oracle";
        out.doc["result"]["count"] = str(Integer(long(oracle.count())));
        out.line("count = " + std::to_string(oracle.count()) +
                 "  (oracle; below L = " + str(thr.big_l) + ")");
        return out.finish(kExitOk);
    }

    json branches = json::array();
    Integer total = 2;
    out.line("count inside |u| + |v| <= " + str(query.x_floor) + ":");
    out.line("  class 0 contributes 2");
    for (int l = 1; l <= 4; ++l) {
        const BranchParameters params = branch_parameters(r, l);
        const long n = count_branch(r, fund, params, query.x_floor,
                                    thr.m_prime[l - 1]);
        total += n;
        const Integer K = query.x_floor - params.R + 1 - params.Q;
        branches.push_back(json{{"l", std::to_string(l)},
                                {"P", quad_json(params.P)},
                                {"Q", str(params.Q)},
                                {"R", std::to_string(params.R)},
                                {"K", str(K)},
                                {"count", std::to_string(n)}});
        out.line("  l=" + std::to_string(l) + ": P = " + params.P.to_string() +
                 ", Q = " + str(params.Q) + ", R = " +
                 std::to_string(params.R) + ", K = " + str(K) + ", m = 1.." +
                 std::to_string(n));
    }
    out.doc["result"]["method"] = "formula";
    out.doc["result"]["branches"] = branches;
    out.doc["result"]["count"] = str(total);
    out.line("count = " + str(total));
    return out.finish(kExitOk);
}

int cmd_enumerate(const LA2Equation& eq, const RegionQuery& query,
                  Output& out) {
    const ReducedForm r = reduce(eq);
    const PellFundamental fund = fundamental_solution(r.tau);
    const Thresholds thr = compute_thresholds(r, fund);

    out.doc["result"]["x_floor"] = str(query.x_floor);
    out.doc["result"]["L"] = str(thr.big_l);

    std::vector<std::pair<Integer, Integer>> points;
    if (query.x_floor < thr.big_l) {
        if (!query.fallback_oracle) {
            out.doc["result"]["error"] = "below-threshold";
            out.line("error: x = " + str(query.x_floor) +
                     " is below L = " + str(thr.big_l) +
                     "; rerun with --fallback-oracle for a brute-force scan");
            return out.finish(kExitBelowThreshold);
        }
        points = brute_force_solutions(eq, query.x_floor, oracle_cap())
                     .solutions;
        out.warn("below L: brute force used");
        out.doc["result"]["method"] = "oracle";
    } else {
        points = enumerate_solutions(eq, query.x_floor).sorted();
        out.doc["result"]["method"] = "formula";
    }
    out.doc["result"]["count"] = str(Integer(long(points.size())));
    out.doc["result"]["solutions"] = points_json(points);
    out.line("solutions inside |u| + |v| <= " + str(query.x_floor) + ": " +
             std::to_string(points.size()));
    for (const auto& [u, v] : points) {
        out.line("  (" + str(u) + ", " + str(v) + ")");
    }
    return out.finish(kExitOk);
}

int cmd_verify(const LA2Equation& eq, const Integer& from, const Integer& to,
               Output& out) {
    json results = json::array();
    bool all_match = true;
    const Integer cap = oracle_cap();
    for (Integer x = from; x <= to; ++x) {
        const VerificationReport report = verify(eq, x, cap);
        json entry{{"x_floor", str(x)},
                   {"L", str(report.threshold)},
                   {"oracle_count", str(Integer(long(report.oracle.count())))}};
        if (!report.formula_applicable) {
            entry["status"] = "below L - formula not applicable";
            out.line("x = " + str(x) + ": below L = " + str(report.threshold) +
                     ", oracle count " + std::to_string(report.oracle.count()));
        } else {
            entry["formula_count"] = str(*report.formula_count);
            entry["match"] = *report.match;
            entry["missing"] = points_json(report.missing);
            entry["extra"] = points_json(report.extra);
            all_match = all_match && *report.match;
            out.line("x = " + str(x) + ": formula " +
                     str(*report.formula_count) + ", oracle " +
                     std::to_string(report.oracle.count()) +
                     (*report.match ? " -- match" : " -- MISMATCH"));
        }
        results.push_back(entry);
    }
    out.doc["result"]["results"] = results;
    out.doc["result"]["all_match"] = all_match;
    if (!all_match) {
        out.line("MISMATCH between formula and oracle: this is a bug");
        return out.finish(kExitInternal);
    }
    return out.finish(kExitOk);
}

int cmd_generate(const Integer& lambda, const Integer& tau, const Integer& p,
                 const Integer& q, Output& out) {
    const LA2Equation eq = make_z1_equation(lambda, tau, p, q);
    out.set_input(eq);
    out.doc["result"]["equation"] = equation_json(eq);
    // The bare coefficient object is the whole human output so that
    //   la2 generate ... > eq.json; la2 classify --input eq.json
    // works as a pipeline.
    out.line(equation_json(eq).dump(2));
    return out.finish(kExitOk);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and solution counter for LA2-type quadratic "
                 "Diophantine equations a*u^2 + b*uv + c*v^2 + d*u + e*v + f = 0"};
    app.require_subcommand(1);

    struct CommandState {
        EquationInput input;
        std::string x_text;
        std::string x_range;
        bool fallback = false;
        bool json_mode = false;
    };
    CommandState state;

    auto add_equation_options = [&state](CLI::App* cmd) {
        cmd->add_option("coefficients", state.input.positional,
                        "coefficients a b c d e f")
            ->expected(0, 6);
        cmd->add_option("--coeffs", state.input.coeffs_csv,
                        "coefficients as \"a,b,c,d,e,f\"");
        cmd->add_option("--input", state.input.input_file,
                        "JSON file with keys a..f");
        cmd->add_flag("--json", state.json_mode, "machine-readable output");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify",
        "decide LA2-type membership and report the failed conditions");
    add_equation_options(classify_cmd);

    CLI::App* reduce_cmd = app.add_subcommand("reduce",
        "rewrite as u~^2 - tau*v~^2 = j and print both affine maps");
    add_equation_options(reduce_cmd);

    CLI::App* thresholds_cmd = app.add_subcommand("thresholds",
        "compute N0, N_l, M'_l, L and the branch constants P, Q, R");
    add_equation_options(thresholds_cmd);

    CLI::App* count_cmd = app.add_subcommand("count",
        "count solutions inside |u| + |v| <= x");
    add_equation_options(count_cmd);
    count_cmd->add_option("--x", state.x_text, "region size (exact decimal)")
        ->required();
    count_cmd->add_flag("--fallback-oracle", state.fallback,
                        "brute-force count when x < L");

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate",
        "list all solutions inside |u| + |v| <= x, sorted by (u, v)");
    add_equation_options(enumerate_cmd);
    enumerate_cmd->add_option("--x", state.x_text, "region size (exact decimal)")
        ->required();
    enumerate_cmd->add_flag("--fallback-oracle", state.fallback,
                            "brute-force scan when x < L");

    CLI::App* verify_cmd = app.add_subcommand("verify",
        "compare the closed-form count/set against the brute-force oracle");
    add_equation_options(verify_cmd);
    verify_cmd->add_option("--x", state.x_text, "single region size");
    verify_cmd->add_option("--x-range", state.x_range,
                           "inclusive range A..B of region sizes");

    std::string gen_lambda, gen_tau, gen_p, gen_q;
    CLI::App* generate_cmd = app.add_subcommand("generate",
        "construct the Z(1) equation with given lambda, tau, E/D = p, d/2 = q");
    generate_cmd->add_option("--lambda", gen_lambda, "half of b")->required();
    generate_cmd->add_option("--tau", gen_tau, "nonsquare radicand >= 2")
        ->required();
    generate_cmd->add_option("--p", gen_p, "value of E/D")->required();
    generate_cmd->add_option("--q", gen_q, "value of d/2")->required();
    generate_cmd->add_flag("--json", state.json_mode,
                           "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) {
            return app.exit(err);  // --help
        }
        app.exit(err);
        return kExitUsage;
    }

    try {
        if (generate_cmd->parsed()) {
            Output out("generate", state.json_mode);
            return cmd_generate(parse_integer(gen_lambda, "--lambda"),
                                parse_integer(gen_tau, "--tau"),
                                parse_integer(gen_p, "--p"),
                                parse_integer(gen_q, "--q"), out);
        }

        const LA2Equation eq = resolve_equation(state.input);

        if (classify_cmd->parsed()) {
            Output out("classify", state.json_mode);
            out.set_input(eq);
            return cmd_classify(eq, out);
        }
        if (reduce_cmd->parsed()) {
            Output out("reduce", state.json_mode);
            out.set_input(eq);
            return cmd_reduce(eq, out);
        }
        if (thresholds_cmd->parsed()) {
            Output out("thresholds", state.json_mode);
            out.set_input(eq);
            return cmd_thresholds(eq, out);
        }
        if (count_cmd->parsed() || enumerate_cmd->parsed()) {
            const bool counting = count_cmd->parsed();
            if (state.x_text.empty()) {
                throw UsageError("--x is required");
            }
            RegionQuery query{floor_decimal(state.x_text), state.fallback};
            if (query.x_floor < 0) {
                throw UsageError("--x must be nonnegative");
            }
            Output out(counting ? "count" : "enumerate", state.json_mode);
            out.set_input(eq);
            return counting ? cmd_count(eq, query, out)
                            : cmd_enumerate(eq, query, out);
        }
        if (verify_cmd->parsed()) {
            Integer from, to;
            if (!state.x_range.empty()) {
                const auto sep = state.x_range.find("..");
                if (sep == std::string::npos) {
                    throw UsageError("--x-range expects A..B");
                }
                from = floor_decimal(state.x_range.substr(0, sep));
                to = floor_decimal(state.x_range.substr(sep + 2));
            } else if (!state.x_text.empty()) {
                from = to = floor_decimal(state.x_text);
            } else {
                throw UsageError("verify needs --x or --x-range");
            }
            if (from < 0 || to < from) {
                throw UsageError("empty or negative verification range");
            }
            Output out("verify", state.json_mode);
            out.set_input(eq);
            return cmd_verify(eq, from, to, out);
        }
        throw UsageError("no subcommand selected");
    } catch (const UsageError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const ClassificationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        Output out("classification-report", state.json_mode);
        render_classification(out, err.report);
        out.finish(kExitRejected);
        return kExitRejected;
    } catch (const UnsupportedClassError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitRejected;
    } catch (const ThresholdError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitBelowThreshold;
    } catch (const CapExceededError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const InternalError& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kExitInternal;
    }
}
