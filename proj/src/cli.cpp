#include "lfi/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lfi/harness.hpp"
#include "lfi/inequalities.hpp"
#include "lfi/operators.hpp"
#include "lfi/report_io.hpp"

namespace lfi {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitHypothesis = 4;

constexpr const char* kGrammarHelp = R"(Function expressions (one variable, x):
  expr   := term (('+' | '-') term)*
  term   := factor (('*' | '/') factor)*
  factor := atom ('^' factor)?
  atom   := number | 'x' | name '(' expr (',' expr)* ')' | '(' expr ')' | '-' factor
'^' is right-associative and binds tighter than unary minus: -x^2 = -(x^2).
Numbers are decimal literals with an optional exponent (1, 0.5, 2e-3).
Functions: exp log sin cos abs sqrt (one argument), pow (two), min max (two or more).
)";

constexpr const char* kFunctionalHelp = R"(Functionals (--op KIND with parameter flags, or --A/--B "KIND:key=value,..."):
  discrete             points=1;2 [weights=1;1]
  riemann              a, b [n=64, panels=1]
  riemann-liouville    alpha, t [n=64]                       (alias rl)
  hadamard             alpha, t (the evaluation point x > 1) [n=64]
  hypergeometric       alpha, beta, eta, mu, t [n=64]
  saigo                alpha, beta, eta, t [n=64]
  erdelyi-kober        alpha, eta, t [n=64]                   (alias ek)
  q-saigo              alpha, beta, eta, q, t [K=128]         (alias qsaigo)
  q-riemann-liouville  alpha, q, t [K=auto]                   (alias qrl)
  jackson              q, t [K=auto]
  time-scale-delta     points=0;1;3                           (alias delta)
)";

constexpr const char* kCheckerHelp = R"(Checkers and their inputs (functions via flags, constants via --const NAME=VALUE):
  chebyshev-two            f g [--ordering]
  lipschitz-pair           f g h1 h2; M1 M2 [--ordering applies to h1, h2]
  m-g-lipschitz            f g; M
  holder-pair              f g; H1 H2 r s
  variable-bounds          f phi1 phi2
  constant-bounds          f; m M
  near-function            f phi; M
  four-bounds              f g phi1 phi2 psi1 psi2
  four-const-bounds        f g; m M n N
  young-bounds             f phi1 phi2; theta1 [theta2]
  young-square             f; m M
  young-four               f g phi1 phi2 psi1 psi2; theta1 [theta2]
  triple-positive-weight   f g h [--ordering]
  triple-gruss             f g h; m M n N k K
  triple-lipschitz         f1 f2 f3 g; M1 M2 M3
  three-weights            f g [--r] [--ordering]
  hadamard-example         f g; M1 M2 with --alpha --beta --t [--n]
Weights --p, --q (and --r) default to 1. B defaults to A.
Exit codes: 0 HOLDS, 1 VIOLATED, 2 usage error, 3 domain or evaluation error,
4 HYPOTHESIS_FAILED.
)";

double to_double(const std::string& key, const std::string& text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    while (first < last && *first == ' ') ++first;
    if (first < last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw UsageError("'" + key + "' expects a number, got '" + text + "'");
    return v;
}

int to_int(const std::string& key, const std::string& text) {
    const double v = to_double(key, text);
    if (v != static_cast<double>(static_cast<int>(v))) throw UsageError("'" + key + "' expects an integer");
    return static_cast<int>(v);
}

std::vector<double> to_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::string item;
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ';', ' ');
    std::istringstream items(normalized);
    while (items >> item) out.push_back(to_double(key, item));
    if (out.empty()) throw UsageError("'" + key + "' expects a non-empty list");
    return out;
}

class Params {
public:
    explicit Params(const std::map<std::string, std::string>& raw) : raw_(raw) {}

    double real(const std::string& key) const { return to_double(key, need(key)); }
    int integer(const std::string& key, int fallback) const {
        auto it = raw_.find(key);
        used_.push_back(key);
        return it == raw_.end() ? fallback : to_int(key, it->second);
    }
    std::vector<double> list(const std::string& key) const { return to_list(key, need(key)); }
    std::optional<std::vector<double>> maybe_list(const std::string& key) const {
        used_.push_back(key);
        if (!raw_.count(key)) return std::nullopt;
        return to_list(key, raw_.at(key));
    }
    void finish(std::string_view kind) const {
        for (const auto& [k, v] : raw_)
            if (std::find(used_.begin(), used_.end(), k) == used_.end())
                throw UsageError("parameter '" + k + "' does not apply to " + std::string(kind));
    }

private:
    const std::string& need(const std::string& key) const {
        used_.push_back(key);
        auto it = raw_.find(key);
        if (it == raw_.end()) throw UsageError("missing parameter '" + key + "'");
        return it->second;
    }

    const std::map<std::string, std::string>& raw_;
    mutable std::vector<std::string> used_;
};

ScalarFunction parse_function(const std::string& flag, const std::string& text) {
    try {
        return ScalarFunction::parse(text);
    } catch (const expr::ParseError& e) {
        throw expr::ParseError(e.offset(), e.expected(), e.found() + " in --" + flag);
    }
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + path + "'");
    file << text;
}

FunctionalKind kind_arg(std::string_view name) {
    try {
        return functional_kind_from_string(name);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

int exit_for(const std::vector<InequalityReport>& reports) {
    auto any = [&](Verdict v) {
        return std::any_of(reports.begin(), reports.end(), [v](const InequalityReport& r) { return r.verdict == v; });
    };
    if (any(Verdict::Violated)) return kExitViolated;
    if (any(Verdict::HypothesisFailed)) return kExitHypothesis;
    if (any(Verdict::EvalError)) return kExitDomain;
    return kExitOk;
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct FunctionalFlags {
    std::map<std::string, std::string> values;

    void add(CLI::App* app, std::initializer_list<const char*> keys) {
        for (const char* key : keys) {
            app->add_option_function<std::string>(
                std::string("--") + key, [this, key](const std::string& v) { values[key] = v; },
                std::string("functional parameter ") + key);
        }
    }
};

struct EvalCommand {
    std::string op;
    std::string f;
    std::string output;
    FunctionalFlags params;
};

struct CheckCommand {
    std::string checker;
    std::string A, B;
    std::map<std::string, std::string> functions;
    std::vector<std::string> constants;
    std::string ordering = "synchronous";
    std::optional<double> tol_abs, tol_rel;
    int pair_samples = 256;
    std::string output;
    FunctionalFlags params;
};

struct SuiteCommand {
    SuiteConfig config;
    std::string kinds, checkers;
    std::optional<double> tol_abs, tol_rel;
    std::string output, csv;
};

std::optional<ToleranceSpec> tolerance_from(const std::optional<double>& abs, const std::optional<double>& rel,
                                            ToleranceSpec base) {
    if (!abs && !rel) return std::nullopt;
    if (abs) base.abs = *abs;
    if (rel) base.rel = *rel;
    base.validate();
    return base;
}

int cmd_eval(const EvalCommand& c, std::ostream& out) {
    const FunctionalSpec A = build_functional(kind_arg(c.op), c.params.values);
    const ScalarFunction f = parse_function("f", c.f);
    const double value = apply(A, f);
    const nlohmann::json j = {
        {"tool_version", kToolVersion},
        {"command", "eval"},
        {"operator", std::string(to_string(A.kind()))},
        {"functional", A.describe()},
        {"f", f.description()},
        {"value", std::isfinite(value) ? nlohmann::json(value) : nlohmann::json(nullptr)},
        {"nodes", A.size()},
        {"mass", A.mass()},
    };
    write_output(dump(j), c.output, out);
    return std::isfinite(value) ? kExitOk : kExitDomain;
}

int cmd_check(const CheckCommand& c, std::ostream& out) {
    const auto& names = checker_names();
    if (std::find(names.begin(), names.end(), c.checker) == names.end())
        throw UsageError("unknown checker '" + c.checker + "'");

    std::map<std::string, double> consts;
    for (const auto& item : c.constants) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("--const expects NAME=VALUE, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        consts[key] = to_double(key, item.substr(eq + 1));
    }
    auto k = [&](const std::string& key) {
        auto it = consts.find(key);
        if (it == consts.end()) throw UsageError("checker " + c.checker + " needs --const " + key + "=VALUE");
        return it->second;
    };
    auto fn = [&](const std::string& key) {
        auto it = c.functions.find(key);
        if (it == c.functions.end() || it->second.empty())
            throw UsageError("checker " + c.checker + " needs --" + key);
        return parse_function(key, it->second);
    };
    auto weight = [&](const std::string& key) {
        auto it = c.functions.find(key);
        return it == c.functions.end() || it->second.empty() ? ScalarFunction::constant(1.0)
                                                             : parse_function(key, it->second);
    };
    auto thetas = [&] {
        const double t1 = k("theta1");
        return std::pair{t1, consts.count("theta2") ? consts.at("theta2") : t1 / (t1 - 1.0)};
    };
    const Ordering ordering = ordering_from_string(c.ordering);

    std::vector<InequalityReport> reports;
    if (c.checker == "hadamard-example") {
        Params p(c.params.values);
        const double alpha = p.real("alpha"), beta = p.real("beta"), t = p.real("t");
        const int n = p.integer("n", kDefaultNodes);
        p.finish("hadamard-example");
        const ToleranceSpec tol = tolerance_from(c.tol_abs, c.tol_rel, default_tolerance(FunctionalKind::Hadamard))
                                      .value_or(default_tolerance(FunctionalKind::Hadamard));
        reports.push_back(check_hadamard_example(alpha, beta, t, fn("f"), fn("g"), k("M1"), k("M2"), n, tol));
    } else {
        if (c.A.empty()) throw UsageError("checker " + c.checker + " needs --A");
        if (!c.params.values.empty()) throw UsageError("parameter flags apply to eval and hadamard-example; use --A");
        const FunctionalSpec A = parse_functional(c.A);
        const FunctionalSpec B = c.B.empty() ? A : parse_functional(c.B);
        const ToleranceSpec base = default_tolerance(A.kind());
        CheckerContext ctx{.A = A,
                           .B = B,
                           .p = weight("p"),
                           .q = weight("q"),
                           .r = weight("r"),
                           .tolerance = tolerance_from(c.tol_abs, c.tol_rel, base).value_or(base),
                           .pair_samples = c.pair_samples};
        const std::string& n = c.checker;
        if (n == "chebyshev-two") reports = {check_chebyshev_two(ctx, fn("f"), fn("g"), ordering)};
        else if (n == "lipschitz-pair")
            reports = {check_lipschitz_pair(ctx, fn("f"), fn("g"), k("M1"), fn("h1"), k("M2"), fn("h2"), ordering)};
        else if (n == "m-g-lipschitz") reports = {check_m_g_lipschitz(ctx, fn("f"), fn("g"), k("M"))};
        else if (n == "holder-pair")
            reports = {check_holder_pair(ctx, fn("f"), fn("g"), k("H1"), k("H2"), k("r"), k("s"))};
        else if (n == "variable-bounds") reports = {check_variable_bounds(ctx, fn("f"), fn("phi1"), fn("phi2"))};
        else if (n == "constant-bounds") reports = {check_constant_bounds(ctx, fn("f"), k("m"), k("M"))};
        else if (n == "near-function") reports = {check_near_function(ctx, fn("f"), fn("phi"), k("M"))};
        else if (n == "four-bounds")
            reports = check_four_bounds(ctx, fn("f"), fn("g"), fn("phi1"), fn("phi2"), fn("psi1"), fn("psi2"));
        else if (n == "four-const-bounds")
            reports = check_four_const_bounds(ctx, fn("f"), fn("g"), k("m"), k("M"), k("n"), k("N"));
        else if (n == "young-bounds") {
            const auto [t1, t2] = thetas();
            reports = {check_young_bounds(ctx, fn("f"), fn("phi1"), fn("phi2"), t1, t2)};
        } else if (n == "young-square") reports = {check_young_square(ctx, fn("f"), k("m"), k("M"))};
        else if (n == "young-four") {
            const auto [t1, t2] = thetas();
            reports = check_young_four(ctx, fn("f"), fn("g"), fn("phi1"), fn("phi2"), fn("psi1"), fn("psi2"), t1, t2);
        } else if (n == "triple-positive-weight")
            reports = {check_triple_positive_weight(ctx, fn("f"), fn("g"), fn("h"), ordering)};
        else if (n == "triple-gruss")
            reports = {check_triple_gruss(ctx, fn("f"), fn("g"), fn("h"), k("m"), k("M"), k("n"), k("N"), k("k"),
                                          k("K"))};
        else if (n == "triple-lipschitz")
            reports = {check_triple_lipschitz(ctx, fn("f1"), fn("f2"), fn("f3"), fn("g"), k("M1"), k("M2"), k("M3"))};
        else if (n == "three-weights") reports = {check_three_weights(ctx, fn("f"), fn("g"), ordering)};
    }

    ReportDocument doc;
    doc.command = "check";
    doc.reports = reports;
    doc.summary = summarize(reports);
    write_output(dump(document_to_json(doc)), c.output, out);
    return exit_for(reports);
}

int cmd_suite(SuiteCommand c, std::ostream& out) {
    for (const auto& name : split_names(c.kinds)) c.config.kinds.push_back(kind_arg(name));
    c.config.checkers = split_names(c.checkers);
    c.config.tolerance = tolerance_from(c.tol_abs, c.tol_rel, ToleranceSpec{});
    const SuiteReport suite = run_suite(c.config);
    write_output(dump(document_to_json(suite_document(suite, "suite"))), c.output, out);
    if (!c.csv.empty()) write_output(suite_csv(suite), c.csv, out);
    return suite.violations == 0 ? kExitOk : kExitViolated;
}

} // namespace

FunctionalSpec build_functional(FunctionalKind kind, const std::map<std::string, std::string>& params) {
    std::map<std::string, std::string> raw = params;
    if (raw.count("x") && !raw.count("t")) {
        raw["t"] = raw["x"];
        raw.erase("x");
    }
    const Params p(raw);
    auto done = [&](FunctionalSpec spec) {
        p.finish(to_string(kind));
        return spec;
    };
    switch (kind) {
    case FunctionalKind::Discrete: return done(build_discrete(p.list("points"), p.maybe_list("weights")));
    case FunctionalKind::Riemann:
        return done(build_riemann(p.real("a"), p.real("b"), p.integer("n", kDefaultNodes), p.integer("panels", 1)));
    case FunctionalKind::RiemannLiouville:
        return done(build_riemann_liouville(p.real("alpha"), p.real("t"), p.integer("n", kDefaultNodes)));
    case FunctionalKind::Hadamard:
        return done(build_hadamard(p.real("alpha"), p.real("t"), p.integer("n", kDefaultNodes)));
    case FunctionalKind::Hypergeometric:
        return done(build_hypergeometric(p.real("alpha"), p.real("beta"), p.real("eta"), p.real("mu"), p.real("t"),
                                         p.integer("n", kDefaultNodes)));
    case FunctionalKind::Saigo:
        return done(build_saigo(p.real("alpha"), p.real("beta"), p.real("eta"), p.real("t"),
                                p.integer("n", kDefaultNodes)));
    case FunctionalKind::ErdelyiKober:
        return done(build_erdelyi_kober(p.real("alpha"), p.real("eta"), p.real("t"), p.integer("n", kDefaultNodes)));
    case FunctionalKind::QSaigo:
        return done(build_q_saigo(p.real("alpha"), p.real("beta"), p.real("eta"), p.real("q"), p.real("t"),
                                  p.integer("K", kDefaultQSaigoTerms)));
    case FunctionalKind::QRiemannLiouville:
        return done(build_q_riemann_liouville(p.real("alpha"), p.real("q"), p.real("t"), p.integer("K", 0)));
    case FunctionalKind::Jackson: return done(build_jackson(p.real("q"), p.real("t"), p.integer("K", 0)));
    case FunctionalKind::TimeScaleDelta: return done(build_time_scale_delta(p.list("points")));
    }
    throw UsageError("unsupported functional kind");
}

FunctionalSpec parse_functional(std::string_view descriptor) {
    const auto colon = descriptor.find(':');
    const FunctionalKind kind = kind_arg(descriptor.substr(0, colon));
    std::map<std::string, std::string> params;
    if (colon != std::string_view::npos) {
        std::istringstream is{std::string(descriptor.substr(colon + 1))};
        std::string item;
        while (std::getline(is, item, ',')) {
            if (item.empty()) continue;
            const auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0)
                throw UsageError("functional descriptor expects key=value, got '" + item + "'");
            params[item.substr(0, eq)] = item.substr(eq + 1);
        }
    }
    return build_functional(kind, params);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Isotonic linear functionals and Chebyshev-type inequalities", "lfi"};
    app.require_subcommand(1);
    app.footer(kGrammarHelp);

    EvalCommand ev;
    CLI::App* eval = app.add_subcommand("eval", "apply one functional to a function");
    eval->add_option("--op", ev.op, "functional kind")->required();
    eval->add_option("--f", ev.f, "function expression")->required();
    eval->add_option("-o,--output", ev.output, "write JSON here instead of stdout");
    ev.params.add(eval, {"alpha", "beta", "eta", "mu", "q", "t", "a", "b", "n", "K", "panels", "points", "weights"});
    eval->footer(std::string(kFunctionalHelp) + "\n" + kGrammarHelp);

    CheckCommand ck;
    CLI::App* check = app.add_subcommand("check", "run one inequality checker");
    check->set_help_flag("--help", "Print this help message and exit");
    check->add_option("--checker", ck.checker, "checker name")->required();
    check->add_option("--A", ck.A, "first functional, KIND:key=value,...");
    check->add_option("--B", ck.B, "second functional (defaults to A)");
    for (const char* name : {"f", "g", "h", "f1", "f2", "f3", "h1", "h2", "phi", "phi1", "phi2", "psi1", "psi2", "p",
                             "q", "r"}) {
        check->add_option_function<std::string>(
            std::string("--") + name, [&ck, name](const std::string& v) { ck.functions[name] = v; },
            std::string("function ") + name);
    }
    check->add_option("--const", ck.constants, "constant NAME=VALUE (repeatable)");
    check->add_option("--ordering", ck.ordering, "synchronous or asynchronous");
    check->add_option("--tol-abs", ck.tol_abs, "absolute tolerance");
    check->add_option("--tol-rel", ck.tol_rel, "relative tolerance");
    check->add_option("--pair-samples", ck.pair_samples, "points used for pairwise hypotheses")
        ->check(CLI::PositiveNumber);
    check->add_option("-o,--output", ck.output, "write JSON here instead of stdout");
    ck.params.add(check, {"alpha", "beta", "t", "n"});
    check->footer(std::string(kCheckerHelp) + "\n" + kFunctionalHelp + "\n" + kGrammarHelp);

    SuiteCommand su;
    CLI::App* suite = app.add_subcommand("suite", "run the randomized inequality suite");
    suite->add_option("--trials", su.config.trials, "trials per checker and kind")->check(CLI::PositiveNumber);
    suite->add_option("--seed", su.config.seed, "master seed");
    suite->add_option("--kinds", su.kinds, "comma-separated functional kinds");
    suite->add_option("--checkers", su.checkers, "comma-separated checkers (default all)");
    suite->add_option("--threads", su.config.threads, "worker threads")->check(CLI::PositiveNumber);
    suite->add_option("--resolution", su.config.resolution, "node count or truncation (0 = per-kind default)")
        ->check(CLI::NonNegativeNumber);
    suite->add_option("--max-doublings", su.config.max_doublings, "resolution doublings before a violation counts")
        ->check(CLI::NonNegativeNumber);
    suite->add_flag("--corrupt", su.config.corrupt, "break each hypothesis (negative control)");
    suite->add_option("--tol-abs", su.tol_abs, "absolute tolerance override");
    suite->add_option("--tol-rel", su.tol_rel, "relative tolerance override");
    suite->add_option("-o,--output", su.output, "write JSON here instead of stdout");
    suite->add_option("--csv", su.csv, "also write one CSV row per report");
    suite->footer(kGrammarHelp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eval) return cmd_eval(ev, out);
        if (*check) return cmd_check(ck, out);
        return cmd_suite(su, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const expr::ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

} // namespace lfi
