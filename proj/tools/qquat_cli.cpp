#include "CLI11.hpp"
#include "json.hpp"

#include "qquat/hopf.hpp"
#include "qquat/parser.hpp"
#include "qquat/quaternion.hpp"
#include "qquat/suites.hpp"

#include <iostream>
#include <string>
#include <vector>

using namespace qquat;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
    std::string mode = "gl";
    std::string format = "text";
    std::string q = "1";
    std::uint64_t seed = kDefaultSeed;
    unsigned workers = 0;
};

void emit(const Options& o, const std::string& verb, const std::string& input, const std::string& result) {
    if (o.format == "json") {
        std::cout << json{{"command", verb}, {"mode", o.mode}, {"input", input}, {"result", result}}.dump(2) << "\n";
    } else {
        std::cout << result << "\n";
    }
}

/// Splits "[[a, b], [c, d]]" (or "a, b, c, d") into four entry texts at
/// top-level commas.
std::vector<std::string> matrix_entries(std::string s) {
    std::string body;
    int depth = 0;
    for (char c : s) {
        if (c == '[') continue;
        if (c == ']') {
            body += ',';
            continue;
        }
        if (c == '(') ++depth;
        if (c == ')') --depth;
        body += (c == ',' && depth == 0) ? '\x1f' : c;
    }
    std::vector<std::string> out;
    std::string cur;
    for (char c : body + '\x1f') {
        if (c == '\x1f' || c == ',') {
            if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (out.size() != 4) throw EvalError("det expects four matrix entries, got " + std::to_string(out.size()));
    return out;
}

GaussianRational parse_q(const std::string& s) {
    try {
        mpq_class v(s);
        v.canonicalize();
        return GaussianRational(v);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--q", "expected a rational number such as 1, -2 or 3/4, got '" + s + "'");
    }
}

int run_expression_verb(const std::string& verb, const std::string& input, const Options& o) {
    const SystemPtr& sys = quaternion_system(parse_mode(o.mode));
    if (verb == "det") {
        Matrix2 m = phi(generic_quaternion(sys));
        if (!input.empty()) {
            auto e = matrix_entries(input);
            m = Matrix2{{{{parse_element(e[0], sys), parse_element(e[1], sys)},
                          {parse_element(e[2], sys), parse_element(e[3], sys)}}}};
        }
        emit(o, verb, input.empty() ? m.str() : input, det_q(m).str());
        return kPass;
    }
    Value v = evaluate(input, sys);
    std::string out;
    if (verb == "normalize") {
        out = render(v);
    } else if (verb == "star") {
        out = render(evaluate("(" + input + ")^*", sys));
    } else if (verb == "limit") {
        GaussianRational q0 = parse_q(o.q);
        out = std::visit(
            [&](const auto& x) -> std::string {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, LocalizedElement>) {
                    return LocalizedElement(x.numerator().eval_at(q0), x.power()).str();
                } else {
                    return x.eval_at(q0).str();
                }
            },
            v);
    } else {
        auto e = std::get_if<Element>(&v);
        if (!e) throw EvalError(verb + " expects an algebra element");
        if (verb == "coproduct") out = coproduct(*e).str();
        if (verb == "counit") out = counit(*e).str();
        if (verb == "antipode") out = antipode(*e).str();
    }
    emit(o, verb, input, out);
    return kPass;
}

int run_suite_verb(const std::vector<std::string>& names, const Options& o) {
    SuiteOptions so;
    so.mode = parse_mode(o.mode);
    so.seed = o.seed;
    so.workers = o.workers;
    std::vector<SuiteReport> reports = run_suites(names, so);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed();
    if (o.format == "json") {
        if (reports.size() == 1) {
            std::cout << reports.front().to_json().dump(2) << "\n";
        } else {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(r.to_json());
            std::cout << arr.dump(2) << "\n";
        }
    } else {
        for (const auto& r : reports) std::cout << r.to_text();
        if (reports.size() > 1) {
            std::size_t failed = 0;
            for (const auto& r : reports) failed += !r.passed();
            std::cout << (ok ? "ALL PASS" : "FAILED") << " (" << reports.size() - failed << "/" << reports.size()
                      << " suites)\n";
        }
    }
    return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normal forms, structure maps and verification suites for the q-deformed quaternion algebra"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--mode", o.mode, "gl (full algebra) or sp (unit norm quotient)")
        ->check(CLI::IsMember({"gl", "sp"}))
        ->capture_default_str();
    app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--q", o.q, "rational value of q for `limit`")->capture_default_str();
    app.add_option("--seed", o.seed, "seed for randomized cases")->capture_default_str();
    app.add_option("--workers", o.workers, "suite worker threads (0 = hardware concurrency)")->capture_default_str();
    app.fallthrough();

    std::string input;
    std::string verb;
    auto expr_cmd = [&](const std::string& name, const std::string& help, bool required = true) {
        auto* c = app.add_subcommand(name, help);
        auto* opt = c->add_option("expression", input, "expression, e.g. \"a0*a1 - a1*a0\" or \"(y+)^*\"");
        if (required) opt->required();
        c->callback([&verb, name] { verb = name; });
    };
    expr_cmd("normalize", "print the normal form");
    expr_cmd("star", "apply the star involution");
    expr_cmd("coproduct", "apply the coproduct");
    expr_cmd("counit", "apply the counit");
    expr_cmd("antipode", "apply the antipode (result may carry a power of N in the denominator)");
    expr_cmd("limit", "substitute q := --q");
    expr_cmd("det", "q-determinant ad - q bc of \"[[a, b], [c, d]]\"; without input, of phi(h)", false);

    std::vector<std::string> suites;
    auto* sc = app.add_subcommand("suite", "run verification suites");
    sc->add_option("names", suites, "suite names or `all`")->required();
    sc->callback([&verb] { verb = "suite"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (verb == "suite") {
            for (const auto& n : suites) {
                if (!is_suite_name(n)) {
                    std::cerr << "unknown suite '" << n << "'; choose from:";
                    for (const auto& s : suite_names()) std::cerr << " " << s;
                    std::cerr << " all\n";
                    return kUsage;
                }
            }
            return run_suite_verb(suites, o);
        }
        return run_expression_verb(verb, input, o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const EvalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const ScalarError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const NonTerminationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
