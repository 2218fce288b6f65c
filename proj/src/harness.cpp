#include "lfi/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "lfi/operators.hpp"

namespace lfi {

namespace {

constexpr int kKnots = 16;
constexpr int kRangeSamples = 257;
constexpr int kMinResolution = 4;
constexpr int kHadamardExampleNodes = 32;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Portable draws: the standard distributions are implementation-defined.
double unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * unit(rng); }
int uniform_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::vector<double> knots_on(double lo, double hi) {
    std::vector<double> k(kKnots);
    for (int i = 0; i < kKnots; ++i) k[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (kKnots - 1);
    k.back() = hi;
    return k;
}

// Piecewise-linear function on [lo, hi] whose slopes are drawn from [smin, smax].
ScalarFunction random_slopes(Rng& rng, double lo, double hi, double smin, double smax, double start) {
    std::vector<double> k = knots_on(lo, hi);
    std::vector<double> v(k.size());
    v[0] = start;
    for (std::size_t i = 1; i < k.size(); ++i) v[i] = v[i - 1] + uniform(rng, smin, smax) * (k[i] - k[i - 1]);
    return ScalarFunction::piecewise_linear(std::move(k), std::move(v));
}

ScalarFunction scaled(const ScalarFunction& f, double a) {
    if (a == 1.0) return f;
    return ScalarFunction::builtin(num(a) + "*(" + f.description() + ")", [f, a](double x) { return a * f(x); });
}

ScalarFunction shifted(const ScalarFunction& f, double c) {
    return ScalarFunction::builtin("(" + f.description() + ")+" + num(c), [f, c](double x) { return f(x) + c; });
}

ScalarFunction negated(const ScalarFunction& f) {
    return ScalarFunction::builtin("-(" + f.description() + ")", [f](double x) { return -f(x); });
}

ScalarFunction plus(const ScalarFunction& f, const ScalarFunction& g) {
    return ScalarFunction::builtin("(" + f.description() + ")+(" + g.description() + ")",
                                   [f, g](double x) { return f(x) + g(x); });
}

double clip01(double v) { return std::clamp(v, 0.0, 1.0); }

// lo + (hi - lo) clip(s) for lo <= hi pointwise.
ScalarFunction between(Rng& rng, const ScalarFunction& lo, const ScalarFunction& gap, const Domain& d) {
    const ScalarFunction s = random_piecewise(rng, d.lower(), d.upper(), -0.25, 1.25);
    return ScalarFunction::builtin("between(" + lo.description() + ")",
                                   [lo, gap, s](double x) { return lo(x) + gap(x) * clip01(s(x)); });
}

// Half the largest sampled ratio (|f(x)-f(y)| - 2 tol) / dh(x, y); -1 when f is flat there.
double corrupted_constant(const std::vector<double>& xs, const ScalarFunction& f,
                          const std::function<double(double, double)>& dh, double tol) {
    std::vector<double> fv(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) fv[i] = f(xs[i]);
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            const double d = dh(xs[i], xs[j]);
            if (d > 0.0) worst = std::max(worst, (std::abs(fv[i] - fv[j]) - 2.0 * tol) / d);
        }
    return worst > 0.0 ? 0.5 * worst : -1.0;
}

// An upper constant bound that f exceeds at some sample; below m when f is flat there.
double corrupted_upper(const std::vector<double>& xs, const ScalarFunction& f, double m, double tol) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double x : xs) {
        lo = std::min(lo, f(x));
        hi = std::max(hi, f(x));
    }
    return hi - lo > 4.0 * tol ? 0.5 * (lo + hi) : m - 1.0;
}

// Random draws for one instance. Parameters shrink toward the centre of their range.
struct Draw {
    Rng rng;
    double shrink;
    double amp;

    double u(double lo, double hi) { return uniform(rng, lo, hi); }
    double param(double lo, double hi) {
        const double c = 0.5 * (lo + hi);
        return c + shrink * (uniform(rng, lo, hi) - c);
    }
    bool coin(double p = 0.5) { return unit(rng) < p; }
    int integer(int lo, int hi) { return uniform_int(rng, lo, hi); }
};

std::vector<double> random_points(Draw& d, int count, double lo, double hi) {
    std::vector<double> xs;
    while (static_cast<int>(xs.size()) < count) {
        xs.push_back(d.u(lo, hi));
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    }
    return xs;
}

FunctionalSpec build_one(Draw& d, FunctionalKind kind, int n) {
    switch (kind) {
    case FunctionalKind::Discrete: {
        const int count = d.integer(3, 12);
        std::vector<double> xs = random_points(d, count, 0.0, 4.0);
        std::vector<double> ws(xs.size());
        for (double& w : ws) w = d.u(0.1, 2.0);
        return build_discrete(std::move(xs), std::move(ws));
    }
    case FunctionalKind::Riemann: {
        const double a = d.param(0.0, 0.9);
        const double b = d.param(a + 0.2, 2.0);
        return build_riemann(a, b, n);
    }
    case FunctionalKind::RiemannLiouville: {
        const double alpha = d.param(0.3, 2.5);
        return build_riemann_liouville(alpha, d.param(0.5, 2.0), n);
    }
    case FunctionalKind::Hadamard: {
        const double alpha = d.param(0.3, 2.5);
        return build_hadamard(alpha, d.param(1.5, 5.0), n);
    }
    case FunctionalKind::Hypergeometric:
    case FunctionalKind::Saigo: {
        const double alpha = d.param(0.3, 2.5);
        const double mu = kind == FunctionalKind::Saigo ? 0.0 : d.param(0.0, 1.0);
        const double beta = d.param(-0.9 * alpha, 0.9);
        auto eta_draw = [&] { return (beta - 1.0) * d.param(0.1, 0.9); };
        // c - a - b = eta - beta - mu must stay clear of the integers
        auto near_integer = [&](double eta) { return std::abs(eta - beta - mu - std::round(eta - beta - mu)) < 0.05; };
        double eta = eta_draw();
        for (int i = 0; i < 64 && near_integer(eta); ++i) eta = eta_draw();
        if (near_integer(eta)) eta = std::round(eta - beta - mu) + 0.25 + beta + mu;
        const double t = d.param(0.5, 2.0);
        return kind == FunctionalKind::Saigo ? build_saigo(alpha, beta, eta, t, n)
                                             : build_hypergeometric(alpha, beta, eta, mu, t, n);
    }
    case FunctionalKind::ErdelyiKober: {
        const double alpha = d.param(0.3, 2.5);
        const double eta = d.param(-0.9, -0.1);
        return build_erdelyi_kober(alpha, eta, d.param(0.5, 2.0), n);
    }
    case FunctionalKind::QSaigo: {
        const double alpha = d.param(0.3, 2.5);
        const double beta = d.param(-0.9 * alpha, 0.6);
        const double eta = d.param(std::max(beta - 0.7, -2.0), -0.05);
        const double q = d.param(0.3, 0.8);
        return build_q_saigo(alpha, beta, eta, q, d.param(0.5, 2.0), n);
    }
    case FunctionalKind::QRiemannLiouville: {
        const double alpha = d.param(0.3, 2.5);
        const double q = d.param(0.5, 0.9);
        return build_q_riemann_liouville(alpha, q, d.param(0.5, 2.0), n);
    }
    case FunctionalKind::Jackson: {
        const double q = d.param(0.5, 0.9);
        return build_jackson(q, d.param(0.5, 2.0), n);
    }
    case FunctionalKind::TimeScaleDelta:
        return build_time_scale_delta(random_points(d, d.integer(4, 16), 0.0, 4.0));
    }
    throw DomainError("unsupported functional kind");
}

Domain kind_domain(FunctionalKind kind) {
    switch (kind) {
    case FunctionalKind::Discrete:
    case FunctionalKind::TimeScaleDelta: return Domain::interval(0.0, 4.0);
    case FunctionalKind::Hadamard: return Domain::interval(1.0, 5.0);
    default: return Domain::interval(0.0, 2.0);
    }
}

bool uses_resolution(FunctionalKind kind) {
    return kind != FunctionalKind::Discrete && kind != FunctionalKind::TimeScaleDelta;
}

int effective_resolution(const InstanceSpec& spec) {
    if (spec.checker == "hadamard-example" && is_exact_kind(spec.kind)) {
        const int base = spec.resolution > 0 ? spec.resolution : kHadamardExampleNodes;
        return base << spec.refine;
    }
    const int base = spec.resolution > 0 ? spec.resolution : default_resolution(spec.kind);
    return base > 0 ? base << spec.refine : 0;
}

bool refinable(const InstanceSpec& spec) { return spec.checker == "hadamard-example" || !is_exact_kind(spec.kind); }

ScalarFunction weight(Draw& d, const Domain& dom) {
    return random_piecewise(d.rng, dom.lower(), dom.upper(), 0.05, 2.0);
}

std::vector<InequalityReport> hadamard_instance(Draw& d, const InstanceSpec& spec, int n) {
    const double alpha = d.param(0.3, 2.5);
    const double beta = d.param(0.3, 2.5);
    const double t = d.param(1.5, 5.0);
    const Domain dom = Domain::interval(1.0, t);
    const ScalarFunction id = ScalarFunction::identity();
    double M1 = d.param(0.2, 2.0) * d.amp;
    const double M2 = d.param(0.2, 2.0) * d.amp;
    const ScalarFunction f = gen_lipschitz(d.rng, M1, id, dom, d.coin(0.125)).value;
    const ScalarFunction g = gen_lipschitz(d.rng, M2, id, dom, d.coin(0.125)).value;
    const ToleranceSpec tol = spec.tolerance.value_or(default_tolerance(FunctionalKind::Hadamard));
    if (spec.corrupt) {
        const CheckerContext ctx{.A = build_hadamard(alpha, t, n), .B = build_hadamard(beta, t, n), .tolerance = tol};
        M1 = corrupted_constant(hypothesis_points(ctx), f, [](double x, double y) { return std::abs(x - y); },
                                tol.abs);
    }
    return {check_hadamard_example(alpha, beta, t, f, g, M1, M2, n, tol)};
}

std::vector<InequalityReport> realize(const InstanceSpec& spec) {
    Draw d{Rng(spec.seed), spec.param_shrink, spec.amplitude};
    const int n = effective_resolution(spec);
    if (spec.checker == "hadamard-example") return hadamard_instance(d, spec, n);

    const Domain dom = kind_domain(spec.kind);
    FunctionalSpec A = build_one(d, spec.kind, n);
    FunctionalSpec B = build_one(d, spec.kind, n);
    CheckerContext ctx{.A = A, .B = B, .tolerance = spec.tolerance.value_or(default_tolerance(spec.kind))};
    ctx.p = weight(d, dom);
    ctx.q = weight(d, dom);
    ctx.r = weight(d, dom);
    const double tol = ctx.tolerance.abs;
    const bool bad = spec.corrupt;
    const double amp = d.amp;
    const std::string& name = spec.checker;
    auto points = [&] { return hypothesis_points(ctx); };
    auto lipschitz_dh = [](const ScalarFunction& h) {
        return [h](double x, double y) { return std::abs(h(x) - h(y)); };
    };
    auto bounds = [&](ScalarFunction& lo, ScalarFunction& hi) {
        lo = scaled(random_piecewise(d.rng, dom.lower(), dom.upper(), -1.0, 0.0), amp);
        const ScalarFunction gap = scaled(random_piecewise(d.rng, dom.lower(), dom.upper(), 0.0, 1.5), amp);
        hi = plus(lo, gap);
        return between(d.rng, lo, gap, dom);
    };
    auto const_bounds = [&](double& m, double& M) {
        m = d.param(-2.0, 0.0) * amp;
        M = m + d.param(0.1, 2.0) * amp;
        return gen_bounded(d.rng, m, M, dom).value;
    };
    auto pair = [&](Ordering o) {
        auto p = gen_synchronous_pair(d.rng, dom, o == Ordering::Synchronous).value;
        return FunctionPair{scaled(p.first, amp), scaled(p.second, amp)};
    };
    auto flip = [](Ordering o) { return o == Ordering::Synchronous ? Ordering::Asynchronous : Ordering::Synchronous; };
    auto thetas = [&](double& t1, double& t2) {
        t1 = d.param(1.2, 5.0);
        t2 = t1 / (t1 - 1.0);
    };

    if (name == "chebyshev-two") {
        const Ordering o = d.coin() ? Ordering::Synchronous : Ordering::Asynchronous;
        const auto [f, g] = pair(o);
        return {check_chebyshev_two(ctx, f, g, bad ? flip(o) : o)};
    }
    if (name == "lipschitz-pair") {
        const Ordering o = d.coin() ? Ordering::Synchronous : Ordering::Asynchronous;
        const auto h = gen_synchronous_pair(d.rng, dom, o == Ordering::Synchronous).value;
        double M1 = d.param(0.2, 2.0) * amp;
        const double M2 = d.param(0.2, 2.0) * amp;
        const ScalarFunction f = gen_lipschitz(d.rng, M1, h.first, dom, d.coin(0.125)).value;
        const ScalarFunction g = gen_lipschitz(d.rng, M2, h.second, dom, d.coin(0.125)).value;
        if (bad) M1 = corrupted_constant(points(), f, lipschitz_dh(h.first), tol);
        return {check_lipschitz_pair(ctx, f, g, M1, h.first, M2, h.second, o)};
    }
    if (name == "m-g-lipschitz") {
        const ScalarFunction g = random_piecewise(d.rng, dom.lower(), dom.upper(), -1.0, 1.0);
        double M = d.param(0.2, 2.0) * amp;
        const ScalarFunction f = gen_lipschitz(d.rng, M, g, dom, d.coin(0.125)).value;
        if (bad) M = corrupted_constant(points(), f, lipschitz_dh(g), tol);
        return {check_m_g_lipschitz(ctx, f, g, M)};
    }
    if (name == "holder-pair") {
        const double r = d.param(0.2, 1.0), s = d.param(0.2, 1.0);
        double H1 = d.param(0.2, 2.0) * amp;
        const double H2 = d.param(0.2, 2.0) * amp;
        const ScalarFunction f = gen_holder(d.rng, H1, r, dom).value;
        const ScalarFunction g = gen_holder(d.rng, H2, s, dom).value;
        if (bad) {
            H1 = corrupted_constant(points(), f, [r](double x, double y) { return std::pow(std::abs(x - y), r); }, tol);
            if (!(H1 > 0.0)) H1 = 0.0;
        }
        return {check_holder_pair(ctx, f, g, H1, H2, r, s)};
    }
    if (name == "variable-bounds") {
        ScalarFunction lo, hi;
        const ScalarFunction f = bounds(lo, hi);
        if (bad) hi = shifted(lo, -amp);
        return {check_variable_bounds(ctx, f, lo, hi)};
    }
    if (name == "constant-bounds") {
        double m, M;
        const ScalarFunction f = const_bounds(m, M);
        if (bad) M = corrupted_upper(points(), f, m, tol);
        return {check_constant_bounds(ctx, f, m, M)};
    }
    if (name == "near-function") {
        const ScalarFunction phi = scaled(random_piecewise(d.rng, dom.lower(), dom.upper(), -1.0, 1.0), amp);
        double M = d.param(0.1, 1.0) * amp;
        const ScalarFunction w = scaled(random_piecewise(d.rng, dom.lower(), dom.upper(), -1.0, 1.0), 0.9 * M);
        const ScalarFunction f = plus(phi, w);
        if (bad) {
            double worst = 0.0;
            for (double x : points()) worst = std::max(worst, std::abs(f(x) - phi(x)));
            M = 0.5 * worst;
        }
        return {check_near_function(ctx, f, phi, M)};
    }
    if (name == "four-bounds" || name == "young-four") {
        ScalarFunction phi1, phi2, psi1, psi2;
        const ScalarFunction f = bounds(phi1, phi2);
        const ScalarFunction g = bounds(psi1, psi2);
        if (bad) psi2 = shifted(psi1, -amp);
        if (name == "four-bounds") return check_four_bounds(ctx, f, g, phi1, phi2, psi1, psi2);
        double t1, t2;
        thetas(t1, t2);
        return check_young_four(ctx, f, g, phi1, phi2, psi1, psi2, t1, t2);
    }
    if (name == "four-const-bounds") {
        double m, M, n2, N;
        const ScalarFunction f = const_bounds(m, M);
        const ScalarFunction g = const_bounds(n2, N);
        if (bad) M = corrupted_upper(points(), f, m, tol);
        return check_four_const_bounds(ctx, f, g, m, M, n2, N);
    }
    if (name == "young-bounds") {
        ScalarFunction lo, hi;
        const ScalarFunction f = bounds(lo, hi);
        double t1, t2;
        thetas(t1, t2);
        if (bad) hi = shifted(lo, -amp);
        return {check_young_bounds(ctx, f, lo, hi, t1, t2)};
    }
    if (name == "young-square") {
        double m, M;
        const ScalarFunction f = const_bounds(m, M);
        if (bad) M = corrupted_upper(points(), f, m, tol);
        return {check_young_square(ctx, f, m, M)};
    }
    if (name == "triple-positive-weight") {
        const Ordering o = d.coin() ? Ordering::Synchronous : Ordering::Asynchronous;
        const auto [f, g] = pair(o);
        ScalarFunction h = scaled(random_piecewise(d.rng, dom.lower(), dom.upper(), 0.1, 2.0), amp);
        if (bad) h = negated(h);
        return {check_triple_positive_weight(ctx, f, g, h, o)};
    }
    if (name == "triple-gruss") {
        double m, M, n2, N, k, K;
        const ScalarFunction f = const_bounds(m, M);
        const ScalarFunction g = const_bounds(n2, N);
        const ScalarFunction h = const_bounds(k, K);
        if (bad) K = corrupted_upper(points(), h, k, tol);
        return {check_triple_gruss(ctx, f, g, h, m, M, n2, N, k, K)};
    }
    if (name == "triple-lipschitz") {
        const ScalarFunction g = random_piecewise(d.rng, dom.lower(), dom.upper(), -1.0, 1.0);
        double M1 = d.param(0.2, 2.0) * amp;
        const double M2 = d.param(0.2, 2.0) * amp, M3 = d.param(0.2, 2.0) * amp;
        const ScalarFunction f1 = gen_lipschitz(d.rng, M1, g, dom, d.coin(0.125)).value;
        const ScalarFunction f2 = gen_lipschitz(d.rng, M2, g, dom, d.coin(0.125)).value;
        const ScalarFunction f3 = gen_lipschitz(d.rng, M3, g, dom, d.coin(0.125)).value;
        if (bad) M1 = corrupted_constant(points(), f1, lipschitz_dh(g), tol);
        return {check_triple_lipschitz(ctx, f1, f2, f3, g, M1, M2, M3)};
    }
    if (name == "three-weights") {
        const Ordering o = d.coin() ? Ordering::Synchronous : Ordering::Asynchronous;
        const auto [f, g] = pair(o);
        if (bad) ctx.r = negated(ctx.r);
        return {check_three_weights(ctx, f, g, o)};
    }
    throw DomainError("unknown checker '" + name + "'");
}

bool any_violated(const std::vector<InequalityReport>& reports) {
    return std::any_of(reports.begin(), reports.end(),
                       [](const InequalityReport& r) { return r.verdict == Verdict::Violated; });
}

int severity(Verdict v) {
    switch (v) {
    case Verdict::Violated: return 3;
    case Verdict::EvalError: return 2;
    case Verdict::HypothesisFailed: return 1;
    case Verdict::Holds: return 0;
    }
    return 0;
}

// True when `a` should replace `b` as the worst report of a cell.
bool worse(const InequalityReport& a, const InequalityReport& b) {
    if (severity(a.verdict) != severity(b.verdict)) return severity(a.verdict) > severity(b.verdict);
    return a.slack < b.slack;
}

struct TrialResult {
    std::vector<InequalityReport> reports;
    InstanceSpec spec;
    bool doubled = false;
};

TrialResult run_trial(InstanceSpec spec, int max_doublings) {
    TrialResult out;
    out.reports = run_instance(spec);
    if (refinable(spec) && uses_resolution(spec.kind)) {
        for (int k = 1; k <= max_doublings && any_violated(out.reports); ++k) {
            spec.refine = k;
            out.reports = run_instance(spec);
            out.doubled = true;
        }
    }
    out.spec = spec;
    return out;
}

} // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view kind, std::string_view checker, int trial) {
    std::uint64_t h = splitmix(seed);
    h = splitmix(h ^ fnv1a(kind));
    h = splitmix(h ^ fnv1a(checker));
    return splitmix(h ^ static_cast<std::uint64_t>(trial));
}

ScalarFunction random_piecewise(Rng& rng, double lo, double hi, double vlo, double vhi) {
    std::vector<double> k = knots_on(lo, hi);
    std::vector<double> v(k.size());
    for (double& x : v) x = uniform(rng, vlo, vhi);
    return ScalarFunction::piecewise_linear(std::move(k), std::move(v));
}

Certified<FunctionPair> gen_synchronous_pair(Rng& rng, const Domain& domain, bool synchronous) {
    const ScalarFunction u = random_piecewise(rng, domain.lower(), domain.upper(), 0.0, 1.0);
    const ScalarFunction phi1 = random_slopes(rng, 0.0, 1.0, 0.2, 2.0, uniform(rng, -1.0, 1.0));
    const ScalarFunction phi2 = random_slopes(rng, 0.0, 1.0, 0.2, 2.0, uniform(rng, -1.0, 1.0));
    const double sign = synchronous ? 1.0 : -1.0;
    ScalarFunction f = ScalarFunction::builtin("phi1(u(x))", [phi1, u](double x) { return phi1(u(x)); });
    ScalarFunction g = ScalarFunction::builtin(synchronous ? "phi2(u(x))" : "-phi2(u(x))",
                                               [phi2, u, sign](double x) { return sign * phi2(u(x)); });
    return {{std::move(f), std::move(g)},
            {"increasing maps of a shared function", {{"synchronous", synchronous ? 1.0 : 0.0}}}};
}

Certified<ScalarFunction> gen_bounded(Rng& rng, double m, double M, const Domain& domain) {
    if (!(m <= M)) throw DomainError("gen_bounded: requires m <= M");
    const ScalarFunction s = random_piecewise(rng, domain.lower(), domain.upper(), -0.25, 1.25);
    ScalarFunction f = ScalarFunction::builtin("bounded[" + num(m) + "," + num(M) + "]",
                                               [s, m, M](double x) { return m + (M - m) * clip01(s(x)); });
    return {std::move(f), {"clipped interpolation", {{"m", m}, {"M", M}}}};
}

Certified<ScalarFunction> gen_lipschitz(Rng& rng, double M, const ScalarFunction& h, const Domain& domain,
                                        bool tight) {
    Certificate cert{tight ? "multiple of h" : "1-Lipschitz map of h", {{"M", M}}};
    if (tight) {
        return {ScalarFunction::builtin(num(M) + "*h", [h, M](double x) { return M * h(x); }), std::move(cert)};
    }
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double x : domain.sample(kRangeSamples)) {
        lo = std::min(lo, h(x));
        hi = std::max(hi, h(x));
    }
    if (!(hi - lo > 1e-9)) {
        lo -= 1.0;
        hi += 1.0;
    }
    const ScalarFunction s = random_slopes(rng, lo, hi, -1.0, 1.0, uniform(rng, -1.0, 1.0));
    return {ScalarFunction::builtin(num(M) + "*s(h)", [h, s, M](double x) { return M * s(h(x)); }), std::move(cert)};
}

Certified<ScalarFunction> gen_holder(Rng& rng, double H, double r, const Domain& domain) {
    const double lo = domain.lower(), hi = domain.upper();
    const double c = uniform(rng, lo, hi);
    const double lambda = unit(rng);
    const ScalarFunction s = random_slopes(rng, lo, hi, -1.0, 1.0, uniform(rng, -1.0, 1.0));
    const double scale = std::pow(hi - lo, 1.0 - r);
    ScalarFunction f = ScalarFunction::builtin("holder[" + num(r) + "]", [=](double x) {
        return H * (lambda * std::pow(std::abs(x - c), r) + (1.0 - lambda) * s(x) / scale);
    });
    return {std::move(f), {"power cusp plus scaled Lipschitz part", {{"H", H}, {"r", r}}}};
}

int default_resolution(FunctionalKind kind) {
    switch (kind) {
    case FunctionalKind::Discrete:
    case FunctionalKind::TimeScaleDelta:
    case FunctionalKind::Jackson:
    case FunctionalKind::QRiemannLiouville: return 0;
    case FunctionalKind::QSaigo: return kDefaultQSaigoTerms;
    default: return 32;
    }
}

std::vector<InequalityReport> run_instance(const InstanceSpec& spec) {
    std::vector<InequalityReport> reports;
    try {
        reports = realize(spec);
    } catch (const std::exception& e) {
        InequalityReport r;
        r.theorem = spec.checker;
        r.lhs = r.rhs = r.slack = kNaN;
        r.verdict = Verdict::EvalError;
        r.tolerance = spec.tolerance.value_or(default_tolerance(spec.kind));
        r.instance["error"] = e.what();
        reports.push_back(std::move(r));
    }
    for (auto& r : reports) {
        r.instance["kind"] = std::string(to_string(spec.kind));
        r.instance["seed"] = std::to_string(spec.seed);
        r.instance["trial"] = std::to_string(spec.trial);
        if (const int n = effective_resolution(spec); n > 0) r.instance["resolution"] = std::to_string(n);
        if (spec.amplitude != 1.0) r.instance["amplitude"] = num(spec.amplitude);
        if (spec.param_shrink != 1.0) r.instance["param_shrink"] = num(spec.param_shrink);
        if (spec.corrupt) r.instance["corrupted"] = "true";
    }
    return reports;
}

InstanceSpec shrink(const InstanceSpec& spec, int max_steps) {
    if (!any_violated(run_instance(spec))) return spec;
    InstanceSpec best = spec;
    for (int step = 0; step < max_steps; ++step) {
        std::vector<InstanceSpec> candidates;
        InstanceSpec c = best;
        c.amplitude *= 0.5;
        candidates.push_back(c);
        const int n = effective_resolution(best);
        if (uses_resolution(best.kind) && n / 2 >= kMinResolution) {
            c = best;
            c.resolution = n / 2;
            c.refine = 0;
            candidates.push_back(c);
        }
        if (best.param_shrink > 1e-3) {
            c = best;
            c.param_shrink *= 0.5;
            candidates.push_back(c);
        }
        bool moved = false;
        for (const auto& cand : candidates) {
            if (any_violated(run_instance(cand))) {
                best = cand;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    return best;
}

std::vector<FunctionalKind> SuiteConfig::default_kinds() {
    return {FunctionalKind::Discrete, FunctionalKind::Riemann, FunctionalKind::RiemannLiouville,
            FunctionalKind::Hadamard, FunctionalKind::Saigo,   FunctionalKind::Jackson,
            FunctionalKind::QSaigo,   FunctionalKind::TimeScaleDelta};
}

void SuiteConfig::validate() const {
    if (trials < 1) throw DomainError("suite: trials must be >= 1");
    if (threads < 1) throw DomainError("suite: threads must be >= 1");
    if (resolution < 0) throw DomainError("suite: resolution must be >= 0");
    if (max_doublings < 0) throw DomainError("suite: max_doublings must be >= 0");
    if (tolerance) tolerance->validate();
    const auto& known = checker_names();
    for (const auto& c : checkers)
        if (std::find(known.begin(), known.end(), c) == known.end())
            throw DomainError("suite: unknown checker '" + c + "'");
}

SuiteReport run_suite(const SuiteConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    const std::vector<FunctionalKind> kinds = config.kinds.empty() ? SuiteConfig::default_kinds() : config.kinds;
    const std::vector<std::string> checkers = config.checkers.empty() ? checker_names() : config.checkers;

    SuiteReport out;
    out.seed = config.seed;
    out.trials = config.trials;
    out.min_slack = kNaN;

    for (const auto& checker : checkers) {
        for (FunctionalKind kind : kinds) {
            std::vector<TrialResult> results(static_cast<std::size_t>(config.trials));
            std::atomic<int> next{0};
            auto worker = [&] {
                for (int t = next++; t < config.trials; t = next++) {
                    InstanceSpec spec;
                    spec.seed = derive_seed(config.seed, to_string(kind), checker, t);
                    spec.kind = kind;
                    spec.checker = checker;
                    spec.trial = t;
                    spec.resolution = config.resolution;
                    spec.tolerance = config.tolerance;
                    spec.corrupt = config.corrupt;
                    results[static_cast<std::size_t>(t)] = run_trial(spec, config.max_doublings);
                }
            };
            const int nthreads = std::min(config.threads, config.trials);
            if (nthreads <= 1) {
                worker();
            } else {
                std::vector<std::thread> pool;
                for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
                for (auto& th : pool) th.join();
            }

            CellSummary cell;
            cell.checker = checker;
            cell.kind = kind;
            cell.trials = config.trials;
            cell.min_slack = kNaN;
            double slack_sum = 0.0;
            int finite = 0;
            for (const auto& res : results) {
                if (res.doubled) ++cell.doubled;
                for (const auto& r : res.reports) {
                    ++cell.reports;
                    switch (r.verdict) {
                    case Verdict::Holds: ++cell.holds; break;
                    case Verdict::Violated: ++cell.violations; break;
                    case Verdict::HypothesisFailed: ++cell.hypothesis_failures; break;
                    case Verdict::EvalError: ++cell.eval_errors; break;
                    }
                    if (std::isfinite(r.slack)) {
                        slack_sum += r.slack;
                        ++finite;
                        if (!(r.slack >= cell.min_slack)) cell.min_slack = r.slack;
                    }
                    if (!cell.worst || worse(r, *cell.worst)) {
                        cell.worst = r;
                        cell.worst_instance = res.spec;
                    }
                    out.rows.push_back({r.theorem, kind, res.spec.trial, r.lhs, r.rhs, r.slack, r.verdict});
                }
            }
            cell.mean_slack = finite > 0 ? slack_sum / finite : kNaN;
            out.violations += cell.violations;
            out.hypothesis_failures += cell.hypothesis_failures;
            out.eval_errors += cell.eval_errors;
            if (std::isfinite(cell.min_slack) && !(cell.min_slack >= out.min_slack)) out.min_slack = cell.min_slack;
            out.cells.push_back(std::move(cell));
        }
    }
    out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

} // namespace lfi
