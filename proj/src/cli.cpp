#include "canalg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

#include "canalg/errors.hpp"
#include "canalg/forms.hpp"
#include "canalg/geometry.hpp"
#include "canalg/oracle.hpp"
#include "canalg/report_json.hpp"
#include "canalg/verify.hpp"
#include "canalg/zeroset.hpp"

namespace canalg::cli {
namespace {

struct Options {
    std::string type;
    std::int64_t p = 0;
    std::int64_t pmax = 4;
    std::string format = "text";
    std::uint64_t cap = kDefaultCap;
    std::uint64_t seed = 1;
    int samples = 1000;
    std::string lambdas;
    std::string mu;
};

void print_text(const Json& j, std::ostream& out) {
    for (const auto& [key, value] : j.items()) {
        if (value.is_string()) {
            out << key << ": " << value.get<std::string>() << '\n';
        } else if (value.is_array()) {
            out << key << ":" << (value.empty() ? " []" : "") << '\n';
            for (const auto& v : value) out << "  - " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        } else {
            out << key << ": " << value.dump() << '\n';
        }
    }
}

void emit(const Options& o, const Json& j, std::ostream& out) {
    if (o.format == "json") out << j.dump() << '\n';
    else print_text(j, out);
}

Json classify_report(const CanonicalType& t) {
    const auto c = classify_type(t);
    Json threshold = nullptr;
    if (delta(t) < 1) threshold = json_int(threshold_N(t));
    return Json{{"delta", to_string(delta(t))},
                {"repr_type", to_string(c.representation)},
                {"theorem1", to_string(c.boundary)},
                {"zeroset_threshold", threshold}};
}

Json witness_report(const CanonicalType& t) {
    const Witness w = ci_failure_witness(t);
    const Int q = euler_form(t, w.d, w.d);
    return Json{{"p", json_int(w.p)},
                {"d", w.d.str()},
                {"quadratic", json_int(q)},
                {"criterion_value", json_int(q + w.p * (w.d.d0() - w.d.dinf()))},
                {"violates", classify_type(t).boundary == Boundary::Below ? "complete_intersection" : "normality"}};
}

Json check_json(const CheckResult& c) {
    return Json{{"name", c.name},
                {"passed", c.passed()},
                {"skipped", c.skipped},
                {"cases", c.cases},
                {"failures", c.failures},
                {"detail", c.detail}};
}

oracle::LambdaChoice parse_lambdas(const CanonicalType& t, const std::string& text) {
    if (text.empty()) return oracle::LambdaChoice::defaults(t);
    std::vector<Rational> finite;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) finite.push_back(parse_rational(item));
    return oracle::LambdaChoice(t, std::move(finite));
}

Rational default_mu(const oracle::LambdaChoice& l) {
    Rational mu = 1;
    while (l.is_tube_point(mu)) mu += 1;
    return mu;
}

void require_p(const Options& o) {
    if (o.p < 1) throw InvalidInput("--p must be at least 1");
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& out) {
    const CanonicalType t = CanonicalType::parse(o.type);
    if (cmd == "classify") {
        emit(o, classify_report(t), out);
    } else if (cmd == "ci") {
        require_p(o);
        const auto g = analyze_geometry(t, o.p, 0);
        emit(o, Json{{"is_ci", g.is_ci}, {"is_normal", g.is_normal}, {"components", json_int(g.component_count)}}, out);
    } else if (cmd == "components") {
        require_p(o);
        emit(o, to_json(analyze_geometry(t, o.p, o.cap)), out);
    } else if (cmd == "zeroset") {
        require_p(o);
        emit(o, to_json(analyze_zeroset(t, o.p, {}, o.cap)), out);
    } else if (cmd == "witness") {
        emit(o, witness_report(t), out);
    } else if (cmd == "verify") {
        if (o.pmax < 1) throw InvalidInput("--pmax must be at least 1");
        VerifyOptions vo;
        vo.pmax = o.pmax;
        vo.seed = o.seed;
        vo.samples = o.samples;
        const auto results = verify_type(t, vo);
        Json checks = Json::array();
        bool ok = true;
        for (const auto& c : results) {
            checks.push_back(check_json(c));
            ok = ok && c.passed();
        }
        if (o.format == "json") {
            out << Json{{"type", t.str()}, {"pmax", o.pmax}, {"seed", o.seed}, {"passed", ok}, {"checks", checks}}.dump()
                << '\n';
        } else {
            out << "type: " << t.str() << "\npmax: " << o.pmax << "\nseed: " << o.seed << '\n';
            for (const auto& c : results) {
                out << (c.skipped ? "SKIP " : c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cases
                    << " cases, " << c.failures << " failures)";
                if (!c.detail.empty()) out << ": " << c.detail;
                out << '\n';
            }
            out << "passed: " << (ok ? "true" : "false") << '\n';
        }
        return ok ? 0 : 1;
    } else if (cmd == "oracle") {
        const auto lambdas = parse_lambdas(t, o.lambdas);
        const Rational mu = o.mu.empty() ? default_mu(lambdas) : parse_rational(o.mu);
        if (lambdas.is_tube_point(mu)) throw InvalidInput("--mu must not be a tube point");
        const auto c = check_oracle_equivalence(t, lambdas, mu);
        Json lam = Json::array();
        for (const auto& l : lambdas.finite()) lam.push_back(to_fraction_string(l));
        Json report = check_json(c);
        report["lambdas"] = lam;
        report["mu"] = to_fraction_string(mu);
        emit(o, report, out);
        return c.passed() ? 0 : 1;
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Module varieties over canonical algebras"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"classify", "delta, representation type, boundary position and zero-set threshold"},
        {"ci", "complete intersection, normality and component count of mod(p h)"},
        {"components", "irreducible components of mod(p h)"},
        {"zeroset", "zero set of semi-invariants on mod(p h)"},
        {"witness", "vector violating the criterion on or below the boundary"},
        {"verify", "run the invariant suites"},
        {"oracle", "compare linear-algebra Hom dimensions with the tube formulas"}};
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--type", o.type, "arm lengths, e.g. 2,3,7")->required();
        sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
        if (name == "ci" || name == "components" || name == "zeroset") sub->add_option("--p", o.p)->required();
        if (name == "components" || name == "zeroset") sub->add_option("--cap", o.cap);
        if (name == "verify") {
            sub->add_option("--pmax", o.pmax);
            sub->add_option("--seed", o.seed);
            sub->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
        }
        if (name == "oracle") {
            sub->add_option("--lambdas", o.lambdas, "lambda_3,...,lambda_n as rationals");
            sub->add_option("--mu", o.mu, "point of the homogeneous tubes");
        }
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return dispatch(cmd, o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace canalg::cli
