#include "lfi/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <sstream>
#include <utility>

#include "lfi/chebyshev.hpp"
#include "lfi/operators.hpp"
#include "lfi/special_functions.hpp"

namespace lfi {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kRatioSlack = 1e-10;

using Span = std::span<const double>;
using Sides = std::pair<double, double>;

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

bool same(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

std::vector<double> node_union(const FunctionalSpec& A, const FunctionalSpec& B) {
    std::vector<double> xs(A.nodes().begin(), A.nodes().end());
    xs.insert(xs.end(), B.nodes().begin(), B.nodes().end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

std::vector<double> thin(const std::vector<double>& xs, int limit) {
    if (limit < 2 || static_cast<int>(xs.size()) <= limit) return xs;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(limit));
    const double step = static_cast<double>(xs.size() - 1) / (limit - 1);
    for (int i = 0; i < limit; ++i) out.push_back(xs[static_cast<std::size_t>(std::llround(i * step))]);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<double> values(const ScalarFunction& f, const std::vector<double>& xs) {
    std::vector<double> v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        v[i] = f(xs[i]);
        if (!std::isfinite(v[i])) throw EvalError(f.description() + " is not finite at x = " + num(xs[i]));
    }
    return v;
}

std::vector<double> map2(const std::vector<double>& x, const std::vector<double>& y,
                         const std::function<double(double, double)>& op) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = op(x[i], y[i]);
    return out;
}

std::vector<double> map1(const std::vector<double>& x, const std::function<double(double)>& op) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = op(x[i]);
    return out;
}

PairSamples combine(const PairSamples& x, const PairSamples& y, const std::function<double(double, double)>& op) {
    return {map2(x.a, y.a, op), map2(x.b, y.b, op)};
}

PairSamples transform(const PairSamples& x, const std::function<double(double)>& op) {
    return {map1(x.a, op), map1(x.b, op)};
}

double young_power(double v, double theta) { return std::pow(std::max(0.0, v), theta); }

// Collects hypothesis checks and evaluates both sides once they all pass.
class Run {
public:
    Run(const CheckerContext& ctx, std::string theorem, Direction direction) : ctx_(ctx) {
        report_.theorem = std::move(theorem);
        report_.direction = direction;
        report_.tolerance = ctx.tolerance;
        report_.instance["A"] = ctx.A.describe();
        report_.instance["B"] = ctx.B.describe();
    }

    const CheckerContext& ctx() const { return ctx_; }
    void describe(const std::string& key, const std::string& value) { report_.instance[key] = value; }
    void describe(const std::string& key, const ScalarFunction& f) { report_.instance[key] = f.description(); }
    void describe(const std::string& key, double v) { report_.instance[key] = num(v); }

    void constants(const std::string& name, bool ok) {
        report_.hypothesis_checks.push_back({name, ok, ok ? 0.0 : -1.0, 0});
    }

    /// margin(x) >= 0 at every node of A and B.
    void pointwise(const std::string& name, const std::function<double(double)>& margin) {
        ensure_points();
        HypothesisCheck c{name, true, std::numeric_limits<double>::infinity(), static_cast<int>(all_.size())};
        for (double x : all_) c.worst_margin = std::min(c.worst_margin, margin(x));
        c.passed = c.worst_margin >= 0.0;
        report_.hypothesis_checks.push_back(c);
    }

    /// margin(i, j) >= 0 over all pairs of the thinned point set (indices into pair_points()).
    void pairwise(const std::string& name, const std::function<double(std::size_t, std::size_t)>& margin) {
        ensure_points();
        const std::size_t m = pairs_.size();
        HypothesisCheck c{name, true, std::numeric_limits<double>::infinity(), static_cast<int>(m * (m - 1) / 2)};
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) c.worst_margin = std::min(c.worst_margin, margin(i, j));
        if (m < 2) c.worst_margin = 0.0;
        c.passed = c.worst_margin >= 0.0;
        report_.hypothesis_checks.push_back(c);
    }

    const std::vector<double>& pair_points() {
        ensure_points();
        return pairs_;
    }

    void weights(bool include_r = false) {
        const double tol = ctx_.tolerance.abs;
        pointwise("p >= 0", [&](double x) { return ctx_.p(x) + tol; });
        pointwise("q >= 0", [&](double x) { return ctx_.q(x) + tol; });
        if (include_r) pointwise("r >= 0", [&](double x) { return ctx_.r(x) + tol; });
    }

    void ordered(const std::string& name, const ScalarFunction& f, const ScalarFunction& g, Ordering o) {
        const std::vector<double> fv = values(f, pair_points());
        const std::vector<double> gv = values(g, pair_points());
        const double sign = o == Ordering::Synchronous ? 1.0 : -1.0;
        const double tol = ctx_.tolerance.abs;
        pairwise(name, [&](std::size_t i, std::size_t j) { return sign * (fv[i] - fv[j]) * (gv[i] - gv[j]) + tol; });
    }

    /// |f(x)-f(y)| <= M |h(x)-h(y)|.
    void lipschitz(const std::string& name, const ScalarFunction& f, double M, const ScalarFunction& h) {
        const std::vector<double> fv = values(f, pair_points());
        const std::vector<double> hv = values(h, pair_points());
        const double tol = ctx_.tolerance.abs;
        pairwise(name, [&](std::size_t i, std::size_t j) {
            return M * std::abs(hv[i] - hv[j]) * (1.0 + kRatioSlack) + tol - std::abs(fv[i] - fv[j]);
        });
    }

    /// |f(x)-f(y)| <= H |x-y|^r.
    void holder(const std::string& name, const ScalarFunction& f, double H, double r) {
        const std::vector<double>& xs = pair_points();
        const std::vector<double> fv = values(f, xs);
        const double tol = ctx_.tolerance.abs;
        pairwise(name, [&](std::size_t i, std::size_t j) {
            return H * std::pow(std::abs(xs[i] - xs[j]), r) * (1.0 + kRatioSlack) + tol - std::abs(fv[i] - fv[j]);
        });
    }

    /// lo(x) <= f(x) <= hi(x) at every node.
    void bounded(const std::string& name, const ScalarFunction& f, const ScalarFunction& lo, const ScalarFunction& hi) {
        const double tol = ctx_.tolerance.abs;
        pointwise(name, [&](double x) {
            const double v = f(x);
            return std::min(v - lo(x), hi(x) - v) + tol;
        });
    }

    void bounded(const std::string& name, const ScalarFunction& f, double lo, double hi) {
        bounded(name, f, ScalarFunction::constant(lo), ScalarFunction::constant(hi));
    }

    PairSamples sample(const ScalarFunction& f) const { return sample_pair(ctx_.A, ctx_.B, f); }
    double a(std::initializer_list<Span> factors) const { return weighted_product(ctx_.A, factors); }
    double b(std::initializer_list<Span> factors) const { return weighted_product(ctx_.B, factors); }

    InequalityReport finish(const std::function<Sides()>& sides) {
        for (const auto& c : report_.hypothesis_checks) {
            if (!c.passed) {
                report_.verdict = Verdict::HypothesisFailed;
                report_.lhs = report_.rhs = report_.slack = kNaN;
                return report_;
            }
        }
        const auto [lhs, rhs] = sides();
        report_.lhs = lhs;
        report_.rhs = rhs;
        report_.slack = report_.direction == Direction::GreaterEqual ? lhs - rhs : rhs - lhs;
        report_.verdict = judge(lhs, rhs, report_.slack, report_.tolerance);
        return report_;
    }

    InequalityReport fail(const std::string& message) {
        report_.verdict = Verdict::EvalError;
        report_.lhs = report_.rhs = report_.slack = kNaN;
        report_.instance["error"] = message;
        return report_;
    }

private:
    void ensure_points() {
        if (!all_.empty()) return;
        all_ = node_union(ctx_.A, ctx_.B);
        pairs_ = thin(all_, ctx_.pair_samples);
    }

    const CheckerContext& ctx_;
    InequalityReport report_;
    std::vector<double> all_;
    std::vector<double> pairs_;
};

template <class Body>
InequalityReport guarded(Run& run, Body&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return run.fail(e.what());
    }
}

Direction oriented(Ordering o) { return o == Ordering::Synchronous ? Direction::GreaterEqual : Direction::LessEqual; }

} // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Violated: return "VIOLATED";
    case Verdict::HypothesisFailed: return "HYPOTHESIS_FAILED";
    case Verdict::EvalError: return "EVAL_ERROR";
    }
    return "EVAL_ERROR";
}

std::string_view to_string(Direction d) { return d == Direction::GreaterEqual ? ">=" : "<="; }

std::string_view to_string(Ordering o) { return o == Ordering::Synchronous ? "synchronous" : "asynchronous"; }

Verdict verdict_from_string(std::string_view s) {
    for (Verdict v : {Verdict::Holds, Verdict::Violated, Verdict::HypothesisFailed, Verdict::EvalError})
        if (to_string(v) == s) return v;
    throw DomainError("unknown verdict '" + std::string(s) + "'");
}

Direction direction_from_string(std::string_view s) {
    if (s == ">=") return Direction::GreaterEqual;
    if (s == "<=") return Direction::LessEqual;
    throw DomainError("unknown direction '" + std::string(s) + "'");
}

Ordering ordering_from_string(std::string_view s) {
    if (s == "synchronous" || s == "sync") return Ordering::Synchronous;
    if (s == "asynchronous" || s == "async") return Ordering::Asynchronous;
    throw DomainError("unknown ordering '" + std::string(s) + "'");
}

bool InequalityReport::operator==(const InequalityReport& o) const {
    return theorem == o.theorem && same(lhs, o.lhs) && same(rhs, o.rhs) && same(slack, o.slack) &&
           direction == o.direction && tolerance.abs == o.tolerance.abs && tolerance.rel == o.tolerance.rel &&
           verdict == o.verdict && hypothesis_checks.size() == o.hypothesis_checks.size() &&
           std::equal(hypothesis_checks.begin(), hypothesis_checks.end(), o.hypothesis_checks.begin(),
                      [](const HypothesisCheck& x, const HypothesisCheck& y) {
                          return x.name == y.name && x.passed == y.passed && same(x.worst_margin, y.worst_margin) &&
                                 x.samples == y.samples;
                      }) &&
           instance == o.instance;
}

Verdict judge(double lhs, double rhs, double slack, const ToleranceSpec& tol) {
    if (!std::isfinite(lhs) || !std::isfinite(rhs) || !std::isfinite(slack)) return Verdict::EvalError;
    return slack >= -tol.bound(lhs, rhs) ? Verdict::Holds : Verdict::Violated;
}

void BoundSpec::validate() const {
    auto ordered_pair = [](const std::optional<double>& lo, const std::optional<double>& hi, const char* what) {
        if (lo && hi && !(*lo <= *hi)) throw DomainError(std::string("BoundSpec: requires ") + what);
    };
    ordered_pair(m, M, "m <= M");
    ordered_pair(n, N, "n <= N");
    ordered_pair(k, K, "k <= K");
    if (theta1 || theta2) {
        if (!(theta1 && theta2)) throw DomainError("BoundSpec: theta1 and theta2 must be given together");
        if (!(*theta1 > 0.0 && *theta2 > 0.0)) throw DomainError("BoundSpec: theta1, theta2 must be positive");
        if (std::abs(1.0 / *theta1 + 1.0 / *theta2 - 1.0) > 1e-12)
            throw DomainError("BoundSpec: requires 1/theta1 + 1/theta2 = 1");
    }
    for (const auto& e : {r, s})
        if (e && !(*e > 0.0 && *e <= 1.0)) throw DomainError("BoundSpec: Holder exponents must lie in (0, 1]");
    for (const auto& h : {H1, H2})
        if (h && !(*h > 0.0)) throw DomainError("BoundSpec: Holder constants must be positive");
    if (proximity && !(*proximity > 0.0)) throw DomainError("BoundSpec: proximity constant must be positive");
}

std::vector<double> hypothesis_points(const CheckerContext& ctx) {
    return thin(node_union(ctx.A, ctx.B), ctx.pair_samples);
}

// ---------------------------------------------------------------------------

InequalityReport check_chebyshev_two(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& g,
                                     Ordering ordering) {
    Run run(ctx, "chebyshev-two", oriented(ordering));
    return guarded(run, [&] {
        run.describe("f", f);
        run.describe("g", g);
        run.describe("ordering", std::string(to_string(ordering)));
        run.weights();
        run.ordered("f, g " + std::string(to_string(ordering)), f, g, ordering);
        return run.finish([&] {
            const auto p = run.sample(ctx.p), q = run.sample(ctx.q), fs = run.sample(f), gs = run.sample(g);
            const double lhs = run.a({p.a, fs.a, gs.a}) * run.b({q.b}) + run.a({p.a}) * run.b({q.b, fs.b, gs.b});
            const double rhs = run.a({p.a, fs.a}) * run.b({q.b, gs.b}) + run.a({p.a, gs.a}) * run.b({q.b, fs.b});
            return Sides{lhs, rhs};
        });
    });
}

InequalityReport check_lipschitz_pair(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& g,
                                      double M1, const ScalarFunction& h1, double M2, const ScalarFunction& h2,
                                      Ordering h_ordering) {
    Run run(ctx, "lipschitz-pair", Direction::LessEqual);
    return guarded(run, [&] {
        run.describe("f", f);
        run.describe("g", g);
        run.describe("h1", h1);
        run.describe("h2", h2);
        run.describe("M1", M1);
        run.describe("M2", M2);
        run.describe("h_ordering", std::string(to_string(h_ordering)));
        run.weights();
        run.constants("M1, M2 >= 0", M1 >= 0.0 && M2 >= 0.0);
        run.lipschitz("f is M1-h1-Lipschitz", f, M1, h1);
        run.lipschitz("g is M2-h2-Lipschitz", g, M2, h2);
        run.ordered("h1, h2 " + std::string(to_string(h_ordering)), h1, h2, h_ordering);
        return run.finish([&] {
            const auto p = run.sample(ctx.p), q = run.sample(ctx.q);
            const double t_fg = chebyshev_difference(ctx.A, ctx.B, p, q, run.sample(f), run.sample(g));
            const double t_h = chebyshev_difference(ctx.A, ctx.B, p, q, run.sample(h1), run.sample(h2));
            const double sign = h_ordering == Ordering::Synchronous ? 1.0 : -1.0;
            return Sides{std::abs(t_fg), sign * M1 * M2 * t_h};
        });
    });
}

InequalityReport check_m_g_lipschitz(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& g,
                                     double M) {
    Run run(ctx, "m-g-lipschitz", Direction::LessEqual);
    return guarded(run, [&] {
        run.describe("f", f);
        run.describe("g", g);
        run.describe("M", M);
        run.describe("normalized_display", "B(qfh) read as B(qfg)");
        run.weights();
        run.constants("M >= 0", M >= 0.0);
        run.lipschitz("f is M-g-Lipschitz", f, M, g);
        return run.finish([&] {
            const auto p = run.sample(ctx.p), q = run.sample(ctx.q), fs = run.sample(f), gs = run.sample(g);
            const double lhs = std::abs(chebyshev_difference(ctx.A, ctx.B, p, q, fs, gs));
            const double rhs = M * (run.a({p.a, gs.a, gs.a}) * run.b({q.b}) - 2.0 * run.a({p.a, gs.a}) * run.b({q.b, gs.b}) +
                                    run.a({p.a}) * run.b({q.b, gs.b, gs.b}));
            return Sides{lhs, rhs};
        });
    });
}

InequalityReport check_holder_pair(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& g,
                                   double H1, double H2, double r, double s) {
    Run run(ctx, "holder-pair", Direction::LessEqual);
    return guarded(run, [&] {
        run.describe("f", f);
        run.describe("g", g);
        run.describe("H1", H1);
        run.describe("H2", H2);
        run.describe("r", r);
        run.describe("s", s);
        run.weights();
        run.constants("H1, H2 > 0", H1 > 0.0 && H2 > 0.0);
        run.constants("r, s in (0, 1]", r > 0.0 && r <= 1.0 && s > 0.0 && s <= 1.0);
        run.holder("f is r-Holder with H1", f, H1, r);
        run.holder("g is s-Holder with H2", g, H2, s);
        return run.finish([&] {
            const auto p = run.sample(ctx.p), q = run.sample(ctx.q);
            const double lhs = std::abs(chebyshev_difference(ctx.A, ctx.B, p, q, run.sample(f), run.sample(g)));
            const auto xa = ctx.A.nodes();
            const auto yb = ctx.B.nodes();
            const double e = r + s;
            const double factor = tensor_sum(ctx.A, ctx.B, [&](std::size_t i, std::size_t j) {
                return p.a[i] * q.b[j] * std::pow(std::abs(xa[i] - yb[j]), e);
            });
            return Sides{lhs, H1 * H2 * factor};
        });
    });
}

InequalityReport check_variable_bounds(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& phi1,
                                       const ScalarFunction& phi2) {
    Run run(ctx, "variable-bounds", Direction::GreaterEqual);
    return guarded(run, [&] {
        run.describe("f", f);
        run.describe("phi1", phi1);
        run.describe("phi2", phi2);
        run.weights();
        run.bounded("phi1 <= f <= phi2", f, phi1, phi2);
        return run.finish([&] {
            const auto p = run.sample(ctx.p), q = run.sample(ctx.q), fs = run.sample(f);
            const auto l = run.sample(phi1), u = run.sample(phi2);
            const double lhs = run.a({p.a, u.a}) * run.b({q.b, fs.b}) + run.a({p.a, fs.a}) * run.b({q.b, l.b});
            const double rhs = run.a({p.a, u.a}) * run.b({q.b, l.b}) + run.a({p.a, fs.a}) * run.b({q.b, fs.b});
            return Sides{lhs, rhs};
        });
    });
}

InequalityReport check_constant_bounds(const CheckerContext& ctx, const ScalarFunction& f, double m, double M) {
    Run run(ctx, "constant-bounds", Direction::GreaterEqual);
    return guarded(run, [&] {
        run.describe("f", f);
        run.describe("m", m);
        run.describe("M", M);
        run.weights();
        run.constants("m <= M", m <= M);
        run.bounded("m <= f <= M", f, m, M);
        return run.finish([&] {
            const auto p = run.sample(ctx.p), q = run.sample(ctx.q), fs = run.sample(f);
            const double ap = run.a({p.a}), bq = run.b({q.b});
            const double apf = run.a({p.a, fs.a}), bqf = run.b({q.b, fs.b});
            return Sides{M * ap * bqf + m * apf * bq, M * m * ap * bq + apf * bqf};
        });
    });
}

InequalityReport check_near_function(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& phi,
                                     double M) {
    Run run(ctx, "near-function", Direction::GreaterEqual);
    return guarded(run, [&] {
        run.describe("f", f);
        run.describe("phi", phi);
        run.describe("M", M);
        run.weights();
        run.constants("M > 0", M > 0.0);
        const double tol = ctx.tolerance.abs;
        run.pointwise("|f - phi| < M", [&](double x) { return M - tol - std::abs(f(x) - phi(x)); });
        return run.finish([&] {
            const auto p = run.sample(ctx.p), q = run.sample(ctx.q), fs = run.sample(f), ph = run.sample(phi);
            const double ap = run.a({p.a}), bq = run.b({q.b});
            const double apf = run.a({p.a, fs.a}), bqf = run.b({q.b, fs.b});
            const double aph = run.a({p.a, ph.a}), bph = run.b({q.b, ph.b});
            const double lhs = aph * bqf + apf * bph + M * ap * bqf + M * aph * bq + M * M * ap * bq;
            const double rhs = aph * bph + M * ap * bph + M * apf * bq + apf * bqf;
            return Sides{lhs, rhs};
        });
    });
}

namespace {

// The four companion displays shared by the variable- and constant-bound forms.
std::vector<InequalityReport> four_reports(const CheckerContext& ctx, const std::string& id,
                                           const std::function<void(Run&)>& hypotheses, const ScalarFunction& f,
                                           const ScalarFunction& g, const ScalarFunction& phi1,
                                           const ScalarFunction& phi2, const ScalarFunction& psi1,
                                           const ScalarFunction& psi2) {
    static const Direction dirs[4] = {Direction::GreaterEqual, Direction::LessEqual, Direction::LessEqual,
                                      Direction::GreaterEqual};
    std::vector<InequalityReport> out;
    for (int k = 0; k < 4; ++k) {
        Run run(ctx, id + "/" + std::to_string(k + 1), dirs[k]);
        out.push_back(guarded(run, [&] {
            hypotheses(run);
            return run.finish([&] {
                const auto p = run.sample(ctx.p), q = run.sample(ctx.q), fs = run.sample(f), gs = run.sample(g);
                const auto phi = run.sample(k < 2 ? phi1 : phi2);
                const auto psi = run.sample(k % 2 == 0 ? psi1 : psi2);
                const double apphi = run.a({p.a, phi.a}), apf = run.a({p.a, fs.a});
                const double bqpsi = run.b({q.b, psi.b}), bqg = run.b({q.b, gs.b});
                return Sides{apphi * bqpsi + apf * bqg, apphi * bqg + apf * bqpsi};
            });
        }));
    }
    return out;
}

} // namespace

std::vector<InequalityReport> check_four_bounds(const CheckerContext& ctx, const ScalarFunction& f,
                                                const ScalarFunction& g, const ScalarFunction& phi1,
                                                const ScalarFunction& phi2, const ScalarFunction& psi1,
                                                const ScalarFunction& psi2) {
    auto hyp = [&](Run& run) {
        run.describe("f", f);
        run.describe("g", g);
        run.describe("phi1", phi1);
        run.describe("phi2", phi2);
        run.describe("psi1", psi1);
        run.describe("psi2", psi2);
        run.weights();
        run.bounded("phi1 <= f <= phi2", f, phi1, phi2);
        run.bounded("psi1 <= g <= psi2", g, psi1, psi2);
    };
    return four_reports(ctx, "four-bounds", hyp, f, g, phi1, phi2, psi1, psi2);
}

std::vector<InequalityReport> check_four_const_bounds(const CheckerContext& ctx, const ScalarFunction& f,
                                                      const ScalarFunction& g, double m, double M, double n, double N) {
    auto hyp = [&](Run& run) {
        run.describe("f", f);
        run.describe("g", g);
        run.describe("m", m);
        run.describe("M", M);
        run.describe("n", n);
        run.describe("N", N);
        run.weights();
        run.constants("m <= M, n <= N", m <= M && n <= N);
        run.bounded("m <= f <= M", f, m, M);
        run.bounded("n <= g <= N", g, n, N);
    };
    return four_reports(ctx, "four-const-bounds", hyp, f, g, ScalarFunction::constant(m), ScalarFunction::constant(M),
                        ScalarFunction::constant(n), ScalarFunction::constant(N));
}

InequalityReport check_young_bounds(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& phi1,
                                    const ScalarFunction& phi2, double theta1, double theta2) {
    Run run(ctx, "young-bounds", Direction::GreaterEqual);
    return guarded(run, [&] {
        run.describe("f", f);
        run.describe("phi1", phi1);
        run.describe("phi2", phi2);
        run.describe("theta1", theta1);
        run.describe("theta2", theta2);
        run.weights();
        run.constants("theta1, theta2 > 0, 1/theta1 + 1/theta2 = 1",
                      theta1 > 0.0 && theta2 > 0.0 && std::abs(1.0 / theta1 + 1.0 / theta2 - 1.0) <= 1e-12);
        run.bounded("phi1 <= f <= phi2", f, phi1, phi2);
        return run.finish([&] {
            const auto p = run.sample(ctx.p), q = run.sample(ctx.q), fs = run.sample(f);
            const auto l = run.sample(phi1), u = run.sample(phi2);
            const auto upper_gap = transform(combine(u, fs, std::minus<>()),
                                             [&](double v) { return young_power(v, theta1); });
            const auto lower_gap = transform(combine(fs, l, std::minus<>()),
                                             [&](double v) { return young_power(v, theta2); });
            const double ap = run.a({p.a}), bq = run.b({q.b});
            const double lhs = bq * run.a({p.a, upper_gap.a}) / theta1 + ap * run.b({q.b, lower_gap.b}) / theta2 +
                               run.a({p.a, u.a}) * run.b({q.b, l.b}) + run.a({p.a, fs.a}) * run.b({q.b, fs.b});
            const double rhs = run.a({p.a, u.a}) * run.b({q.b, fs.b}) + run.a({p.a, fs.a}) * run.b({q.b, l.b});
            return Sides{lhs, rhs};
        });
    });
}

InequalityReport check_young_square(const CheckerContext& ctx, const ScalarFunction& f, double m, double M) {
    Run run(ctx, "young-square", Direction::GreaterEqual);
    return guarded(run, [&] {
        run.describe("f", f);
        run.describe("m", m);
        run.describe("M", M);
        run.describe("normalized_display", "m, n read as m, M");
        run.weights();
        run.constants("m <= M", m <= M);
        run.bounded("m <= f <= M", f, m, M);
        return run.finish([&] {
            const auto p = run.sample(ctx.p), q = run.sample(ctx.q), fs = run.sample(f);
            const double ap = run.a({p.a}), bq = run.b({q.b});
            const double apf = run.a({p.a, fs.a}), bqf = run.b({q.b, fs.b});
            const double s = M + m;
            const double lhs = s * s * ap * bq + run.a({p.a, fs.a, fs.a}) * bq + 2.0 * apf * bqf +
                               ap * run.b({q.b, fs.b, fs.b});
            const double rhs = 2.0 * s * (ap * bqf + apf * bq);
            return Sides{lhs, rhs};
        });
    });
}

std::vector<InequalityReport> check_young_four(const CheckerContext& ctx, const ScalarFunction& f,
                                               const ScalarFunction& g, const ScalarFunction& phi1,
                                               const ScalarFunction& phi2, const ScalarFunction& psi1,
                                               const ScalarFunction& psi2, double theta1, double theta2) {
    std::vector<InequalityReport> out;
    for (int k = 0; k < 4; ++k) {
        Run run(ctx, "young-four/" + std::to_string(k + 1), Direction::GreaterEqual);
        out.push_back(guarded(run, [&] {
            run.describe("f", f);
            run.describe("g", g);
            run.describe("phi1", phi1);
            run.describe("phi2", phi2);
            run.describe("psi1", psi1);
            run.describe("psi2", psi2);
            run.describe("theta1", theta1);
            run.describe("theta2", theta2);
            run.weights();
            run.constants("theta1, theta2 > 0, 1/theta1 + 1/theta2 = 1",
                          theta1 > 0.0 && theta2 > 0.0 && std::abs(1.0 / theta1 + 1.0 / theta2 - 1.0) <= 1e-12);
            run.bounded("phi1 <= f <= phi2", f, phi1, phi2);
            run.bounded("psi1 <= g <= psi2", g, psi1, psi2);
            return run.finish([&] {
                const auto p = run.sample(ctx.p), q = run.sample(ctx.q), fs = run.sample(f), gs = run.sample(g);
                // k = 0: (phi2-f, psi2-g), 1: (phi2-f, g-psi1), 2: (f-phi1, psi2-g), 3: (f-phi1, g-psi1)
                const PairSamples x = k < 2 ? combine(run.sample(phi2), fs, std::minus<>())
                                            : combine(fs, run.sample(phi1), std::minus<>());
                const PairSamples y = k % 2 == 0 ? combine(run.sample(psi2), gs, std::minus<>())
                                                 : combine(gs, run.sample(psi1), std::minus<>());
                const auto xp = transform(x, [&](double v) { return young_power(v, theta1); });
                const auto yp = transform(y, [&](double v) { return young_power(v, theta2); });
                const double lhs = run.a({p.a, xp.a}) * run.b({q.b}) / theta1 + run.a({p.a}) * run.b({q.b, yp.b}) / theta2;
                const double rhs = run.a({p.a, x.a}) * run.b({q.b, y.b});
                return Sides{lhs, rhs};
            });
        }));
    }
    return out;
}

InequalityReport check_triple_positive_weight(const CheckerContext& ctx, const ScalarFunction& f,
                                              const ScalarFunction& g, const ScalarFunction& h, Ordering ordering) {
    Run run(ctx, "triple-positive-weight", oriented(ordering));
    return guarded(run, [&] {
        run.describe("f", f);
        run.describe("g", g);
        run.describe("h", h);
        run.describe("ordering", std::string(to_string(ordering)));
        run.weights();
        run.ordered("f, g " + std::string(to_string(ordering)), f, g, ordering);
        const double tol = ctx.tolerance.abs;
        run.pointwise("h > 0", [&](double x) { return h(x) - tol; });
        return run.finish([&] {
            const auto p = run.sample(ctx.p), q = run.sample(ctx.q);
            const auto fs = run.sample(f), gs = run.sample(g), hs = run.sample(h);
            const double lhs = run.a({p.a, fs.a, gs.a, hs.a}) * run.b({q.b}) +
                               run.a({p.a, fs.a, gs.a}) * run.b({q.b, hs.b}) +
                               run.a({p.a, hs.a}) * run.b({q.b, fs.b, gs.b}) +
                               run.a({p.a}) * run.b({q.b, fs.b, gs.b, hs.b});
            const double rhs = run.a({p.a, fs.a, hs.a}) * run.b({q.b, gs.b}) +
                               run.a({p.a, fs.a}) * run.b({q.b, gs.b, hs.b}) +
                               run.a({p.a, gs.a, hs.a}) * run.b({q.b, fs.b}) +
                               run.a({p.a, gs.a}) * run.b({q.b, fs.b, hs.b});
            return Sides{lhs, rhs};
        });
    });
}

InequalityReport check_triple_gruss(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& g,
                                    const ScalarFunction& h, double m, double M, double n, double N, double k,
                                    double K) {
    Run run(ctx, "triple-gruss", Direction::LessEqual);
    return guarded(run, [&] {
        run.describe("f", f);
        run.describe("g", g);
        run.describe("h", h);
        run.describe("bounds", num(m) + "," + num(M) + "," + num(n) + "," + num(N) + "," + num(k) + "," + num(K));
        run.describe("normalized_display", "B(fgh) read as B(qfgh)");
        run.weights();
        run.constants("m <= M, n <= N, k <= K", m <= M && n <= N && k <= K);
        run.bounded("m <= f <= M", f, m, M);
        run.bounded("n <= g <= N", g, n, N);
        run.bounded("k <= h <= K", h, k, K);
        return run.finish([&] {
            const auto p = run.sample(ctx.p), q = run.sample(ctx.q);
            const double lhs =
                std::abs(triple_expansion(ctx.A, ctx.B, p, q, run.sample(f), run.sample(g), run.sample(h)));
            const double rhs = (M - m) * (N - n) * (K - k) * run.a({p.a}) * run.b({q.b});
            return Sides{lhs, rhs};
        });
    });
}

InequalityReport check_triple_lipschitz(const CheckerContext& ctx, const ScalarFunction& f1, const ScalarFunction& f2,
                                        const ScalarFunction& f3, const ScalarFunction& g, double M1, double M2,
                                        double M3) {
    Run run(ctx, "triple-lipschitz", Direction::LessEqual);
    return guarded(run, [&] {
        run.describe("f1", f1);
        run.describe("f2", f2);
        run.describe("f3", f3);
        run.describe("g", g);
        run.describe("M1", M1);
        run.describe("M2", M2);
        run.describe("M3", M3);
        run.weights();
        run.constants("M1, M2, M3 >= 0", M1 >= 0.0 && M2 >= 0.0 && M3 >= 0.0);
        run.lipschitz("f1 is M1-g-Lipschitz", f1, M1, g);
        run.lipschitz("f2 is M2-g-Lipschitz", f2, M2, g);
        run.lipschitz("f3 is M3-g-Lipschitz", f3, M3, g);
        return run.finish([&] {
            const auto p = run.sample(ctx.p), q = run.sample(ctx.q), gs = run.sample(g);
            const double lhs =
                std::abs(triple_expansion(ctx.A, ctx.B, p, q, run.sample(f1), run.sample(f2), run.sample(f3)));
            const double factor = tensor_sum(ctx.A, ctx.B, [&](std::size_t i, std::size_t j) {
                const double d = std::abs(gs.a[i] - gs.b[j]);
                return p.a[i] * q.b[j] * d * d * d;
            });
            return Sides{lhs, M1 * M2 * M3 * factor};
        });
    });
}

InequalityReport check_three_weights(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& g,
                                     Ordering ordering) {
    Run run(ctx, "three-weights", oriented(ordering));
    return guarded(run, [&] {
        run.describe("f", f);
        run.describe("g", g);
        run.describe("r", ctx.r);
        run.describe("ordering", std::string(to_string(ordering)));
        run.weights(true);
        run.ordered("f, g " + std::string(to_string(ordering)), f, g, ordering);
        return run.finish([&] {
            const auto p = run.sample(ctx.p), q = run.sample(ctx.q), r = run.sample(ctx.r);
            const auto fs = run.sample(f), gs = run.sample(g);
            const double ap = run.a({p.a}), aq = run.a({q.a}), ar = run.a({r.a});
            const double bq = run.b({q.b}), br = run.b({r.b});
            const double apfg = run.a({p.a, fs.a, gs.a}), aqfg = run.a({q.a, fs.a, gs.a});
            const double bqfg = run.b({q.b, fs.b, gs.b}), brfg = run.b({r.b, fs.b, gs.b});
            const double lhs = ap * (2.0 * aq * brfg + ar * bqfg + br * aqfg) + apfg * (aq * br + ar * bq);
            const double rhs =
                ap * (run.a({q.a, fs.a}) * run.b({r.b, gs.b}) + run.a({q.a, gs.a}) * run.b({r.b, fs.b})) +
                aq * (run.a({p.a, fs.a}) * run.b({r.b, gs.b}) + run.a({p.a, gs.a}) * run.b({r.b, fs.b})) +
                ar * (run.a({p.a, fs.a}) * run.b({q.b, gs.b}) + run.a({p.a, gs.a}) * run.b({q.b, fs.b}));
            return Sides{lhs, rhs};
        });
    });
}

double hadamard_example_rhs(double alpha, double beta, double t, double M1, double M2) {
    const double L = std::log(t);
    const double bracket = std::pow(L, alpha) * lower_incomplete_gamma(beta, 2.0 * L) / (std::pow(2.0, beta) * alpha) +
                           std::pow(L, beta) * lower_incomplete_gamma(alpha, 2.0 * L) / (std::pow(2.0, alpha) * beta) -
                           2.0 * lower_incomplete_gamma(alpha, L) * lower_incomplete_gamma(beta, L);
    return M1 * M2 * t * t / (gamma(alpha) * gamma(beta)) * bracket;
}

InequalityReport check_hadamard_example(double alpha, double beta, double t, const ScalarFunction& f,
                                        const ScalarFunction& g, double M1, double M2, int n,
                                        const ToleranceSpec& tol) {
    FunctionalSpec A = build_hadamard(alpha, t, n);
    FunctionalSpec B = build_hadamard(beta, t, n);
    const CheckerContext ctx{.A = A, .B = B, .tolerance = tol};
    Run run(ctx, "hadamard-example", Direction::LessEqual);
    return guarded(run, [&] {
        run.describe("f", f);
        run.describe("g", g);
        run.describe("M1", M1);
        run.describe("M2", M2);
        run.describe("alpha", alpha);
        run.describe("beta", beta);
        run.describe("t", t);
        const ScalarFunction id = ScalarFunction::identity();
        run.constants("M1, M2 >= 0", M1 >= 0.0 && M2 >= 0.0);
        run.lipschitz("f is M1-Lipschitz", f, M1, id);
        run.lipschitz("g is M2-Lipschitz", g, M2, id);
        return run.finish([&] {
            const double L = std::log(t);
            const auto fs = run.sample(f), gs = run.sample(g);
            const double lhs = std::pow(L, beta) / gamma(beta + 1.0) * run.a({fs.a, gs.a}) +
                               std::pow(L, alpha) / gamma(alpha + 1.0) * run.b({fs.b, gs.b}) -
                               run.a({fs.a}) * run.b({gs.b}) - run.a({gs.a}) * run.b({fs.b});
            return Sides{lhs, hadamard_example_rhs(alpha, beta, t, M1, M2)};
        });
    });
}

const std::vector<std::string>& checker_names() {
    static const std::vector<std::string> names = {
        "chebyshev-two",   "lipschitz-pair",    "m-g-lipschitz", "holder-pair",
        "variable-bounds", "constant-bounds",   "near-function", "four-bounds",
        "four-const-bounds", "young-bounds",    "young-square",  "young-four",
        "triple-positive-weight", "triple-gruss", "triple-lipschitz", "three-weights",
        "hadamard-example",
    };
    return names;
}

} // namespace lfi
