#include "lfi/functional.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <utility>

namespace lfi {

// ---------------------------------------------------------------------------
// Domain

Domain Domain::interval(double a, double b) {
    if (!(std::isfinite(a) && std::isfinite(b) && a < b)) throw DomainError("Domain: interval requires a < b");
    Domain d;
    d.kind_ = Kind::Interval;
    d.lo_ = a;
    d.hi_ = b;
    return d;
}

Domain Domain::point_set(std::vector<double> points) {
    if (points.empty()) throw DomainError("Domain: point set must be non-empty");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!(points[i - 1] < points[i])) throw DomainError("Domain: points must be strictly increasing");
    Domain d;
    d.kind_ = Kind::PointSet;
    d.lo_ = points.front();
    d.hi_ = points.back();
    d.points_ = std::move(points);
    return d;
}

Domain Domain::q_grid(double t, double q, int count) {
    if (!(t > 0.0)) throw DomainError("Domain: q-grid requires t > 0");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("Domain: q-grid requires 0 < q < 1");
    if (count < 1) throw DomainError("Domain: q-grid requires at least one point");
    std::vector<double> pts(static_cast<std::size_t>(count));
    double v = t;
    for (int k = 0; k < count; ++k, v *= q) pts[static_cast<std::size_t>(count - 1 - k)] = v;
    // underflow can collapse the deepest points; keep strictly increasing ones
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Domain d;
    d.kind_ = Kind::QGrid;
    d.lo_ = pts.front();
    d.hi_ = pts.back();
    d.points_ = std::move(pts);
    return d;
}

std::vector<double> Domain::sample(int samples) const {
    if (samples < 2) throw DomainError("Domain::sample: need at least 2 samples");
    std::vector<double> out;
    if (kind_ == Kind::Interval) {
        out.reserve(static_cast<std::size_t>(samples));
        for (int i = 0; i < samples; ++i) out.push_back(lo_ + (hi_ - lo_) * i / (samples - 1));
        out.back() = hi_;
        return out;
    }
    if (points_.size() <= static_cast<std::size_t>(samples)) return points_;
    const std::size_t n = points_.size();
    for (int i = 0; i < samples; ++i) out.push_back(points_[(n - 1) * static_cast<std::size_t>(i) / (samples - 1)]);
    return out;
}

// ---------------------------------------------------------------------------
// ScalarFunction

struct ScalarFunction::Impl {
    std::function<double(double)> fn;
    std::string description;
};

ScalarFunction::ScalarFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

ScalarFunction::ScalarFunction() : ScalarFunction(constant(0.0)) {}

namespace {

std::string number_text(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

ScalarFunction ScalarFunction::constant(double c) {
    return ScalarFunction(std::make_shared<const Impl>(Impl{[c](double) { return c; }, number_text(c)}));
}

ScalarFunction ScalarFunction::identity() {
    return ScalarFunction(std::make_shared<const Impl>(Impl{[](double x) { return x; }, "x"}));
}

ScalarFunction ScalarFunction::from_expr(expr::Expr e, std::string source) {
    if (source.empty()) source = expr::print(e);
    return ScalarFunction(
        std::make_shared<const Impl>(Impl{[e = std::move(e)](double x) { return e(x); }, std::move(source)}));
}

ScalarFunction ScalarFunction::parse(std::string_view text) {
    return from_expr(expr::parse(text), std::string(text));
}

ScalarFunction ScalarFunction::builtin(std::string name, std::function<double(double)> fn) {
    if (!fn) throw ConstructionError("ScalarFunction: empty built-in");
    return ScalarFunction(std::make_shared<const Impl>(Impl{std::move(fn), std::move(name)}));
}

ScalarFunction ScalarFunction::tabulated(std::vector<double> points, std::vector<double> values) {
    if (points.size() != values.size() || points.empty())
        throw ConstructionError("ScalarFunction: tabulated points and values must be non-empty and equal length");
    std::vector<std::pair<double, double>> table;
    for (std::size_t i = 0; i < points.size(); ++i) table.emplace_back(points[i], values[i]);
    std::sort(table.begin(), table.end());
    for (std::size_t i = 1; i < table.size(); ++i)
        if (table[i - 1].first == table[i].first) throw ConstructionError("ScalarFunction: duplicate tabulated point");

    std::ostringstream desc;
    desc << "table{";
    for (std::size_t i = 0; i < table.size(); ++i) desc << (i ? "," : "") << table[i].first << ":" << table[i].second;
    desc << "}";

    auto fn = [table = std::move(table)](double x) {
        auto it = std::lower_bound(table.begin(), table.end(), x,
                                   [](const std::pair<double, double>& e, double v) { return e.first < v; });
        if (it == table.end() || it->first != x)
            throw EvalError("tabulated function evaluated off its point set at x = " + number_text(x));
        return it->second;
    };
    return ScalarFunction(std::make_shared<const Impl>(Impl{std::move(fn), desc.str()}));
}

ScalarFunction ScalarFunction::piecewise_linear(std::vector<double> knots, std::vector<double> values) {
    if (knots.size() != values.size() || knots.empty())
        throw ConstructionError("ScalarFunction: piecewise-linear knots and values must be non-empty and equal length");
    for (std::size_t i = 1; i < knots.size(); ++i)
        if (!(knots[i - 1] < knots[i])) throw ConstructionError("ScalarFunction: knots must be strictly increasing");
    const std::string desc = "pwl[" + std::to_string(knots.size()) + " knots on " + number_text(knots.front()) +
                             ".." + number_text(knots.back()) + "]";
    auto fn = [k = std::move(knots), v = std::move(values)](double x) {
        if (x <= k.front()) return v.front();
        if (x >= k.back()) return v.back();
        const auto it = std::upper_bound(k.begin(), k.end(), x);
        const std::size_t j = static_cast<std::size_t>(it - k.begin());
        const double s = (x - k[j - 1]) / (k[j] - k[j - 1]);
        return v[j - 1] + s * (v[j] - v[j - 1]);
    };
    return ScalarFunction(std::make_shared<const Impl>(Impl{std::move(fn), desc}));
}

double ScalarFunction::operator()(double x) const { return impl_->fn(x); }

const std::string& ScalarFunction::description() const { return impl_->description; }

// ---------------------------------------------------------------------------
// Tolerances

void ToleranceSpec::validate() const {
    if (!(abs >= 0.0) || !(rel >= 0.0)) throw DomainError("ToleranceSpec: tolerances must be non-negative");
    if (abs == 0.0 && rel == 0.0) throw DomainError("ToleranceSpec: tol_abs and tol_rel cannot both be zero");
}

double ToleranceSpec::bound(double a, double b) const { return abs + rel * std::max(std::abs(a), std::abs(b)); }

// ---------------------------------------------------------------------------
// Kinds

namespace {

struct KindName {
    FunctionalKind kind;
    std::string_view name;
    std::string_view alias;
};

constexpr KindName kKindNames[] = {
    {FunctionalKind::Discrete, "discrete", "discrete"},
    {FunctionalKind::Riemann, "riemann", "riemann"},
    {FunctionalKind::RiemannLiouville, "riemann-liouville", "rl"},
    {FunctionalKind::Hadamard, "hadamard", "hadamard"},
    {FunctionalKind::Hypergeometric, "hypergeometric", "hypergeometric"},
    {FunctionalKind::Saigo, "saigo", "saigo"},
    {FunctionalKind::ErdelyiKober, "erdelyi-kober", "ek"},
    {FunctionalKind::QSaigo, "q-saigo", "qsaigo"},
    {FunctionalKind::QRiemannLiouville, "q-riemann-liouville", "qrl"},
    {FunctionalKind::Jackson, "jackson", "jackson"},
    {FunctionalKind::TimeScaleDelta, "time-scale-delta", "delta"},
};

} // namespace

std::string_view to_string(FunctionalKind kind) {
    for (const auto& k : kKindNames)
        if (k.kind == kind) return k.name;
    return "unknown";
}

FunctionalKind functional_kind_from_string(std::string_view name) {
    for (const auto& k : kKindNames)
        if (k.name == name || k.alias == name) return k.kind;
    throw DomainError("unknown functional kind '" + std::string(name) + "'");
}

bool is_exact_kind(FunctionalKind kind) {
    switch (kind) {
    case FunctionalKind::Discrete:
    case FunctionalKind::Jackson:
    case FunctionalKind::TimeScaleDelta:
    case FunctionalKind::QSaigo:
    case FunctionalKind::QRiemannLiouville:
        return true;
    default:
        return false;
    }
}

ToleranceSpec default_tolerance(FunctionalKind kind) {
    if (is_exact_kind(kind)) return {1e-10, 1e-8};
    return {1e-7, 1e-5};
}

// ---------------------------------------------------------------------------
// FunctionalSpec

struct FunctionalSpec::Data {
    FunctionalKind kind;
    FunctionalParams params;
    std::vector<double> nodes;
    std::vector<double> weights;
    Domain domain;
    double mass;
};

FunctionalSpec::FunctionalSpec(FunctionalKind kind, FunctionalParams params, std::vector<double> nodes,
                               std::vector<double> weights, Domain domain) {
    if (nodes.empty()) throw ConstructionError("FunctionalSpec: no nodes");
    if (nodes.size() != weights.size()) throw ConstructionError("FunctionalSpec: nodes/weights length mismatch");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!std::isfinite(nodes[i])) throw ConstructionError("FunctionalSpec: non-finite node");
        if (!std::isfinite(weights[i])) throw ConstructionError("FunctionalSpec: non-finite weight");
        if (weights[i] < 0.0)
            throw ConstructionError("FunctionalSpec: negative weight " + number_text(weights[i]) + " at node " +
                                    std::to_string(i) + " (" + std::string(to_string(kind)) + ")");
    }
    const double mass = pairwise_sum(weights);
    d_ = std::make_shared<const Data>(
        Data{kind, params, std::move(nodes), std::move(weights), std::move(domain), mass});
}

FunctionalKind FunctionalSpec::kind() const noexcept { return d_->kind; }
const FunctionalParams& FunctionalSpec::params() const noexcept { return d_->params; }
std::span<const double> FunctionalSpec::nodes() const noexcept { return d_->nodes; }
std::span<const double> FunctionalSpec::weights() const noexcept { return d_->weights; }
std::size_t FunctionalSpec::size() const noexcept { return d_->nodes.size(); }
const Domain& FunctionalSpec::domain() const noexcept { return d_->domain; }
double FunctionalSpec::mass() const noexcept { return d_->mass; }

std::string FunctionalSpec::describe() const {
    const auto& p = d_->params;
    std::ostringstream os;
    os.precision(17);
    os << to_string(d_->kind) << "(";
    switch (d_->kind) {
    case FunctionalKind::Discrete:
    case FunctionalKind::TimeScaleDelta:
        os << "points=" << d_->domain.points().size();
        break;
    case FunctionalKind::Riemann:
        os << "a=" << p.a << ",b=" << p.b;
        if (p.panels > 1) os << ",panels=" << p.panels;
        break;
    case FunctionalKind::RiemannLiouville:
    case FunctionalKind::Hadamard:
        os << "alpha=" << p.alpha << ",t=" << p.t;
        break;
    case FunctionalKind::Hypergeometric:
    case FunctionalKind::Saigo:
    case FunctionalKind::ErdelyiKober:
        os << "alpha=" << p.alpha << ",beta=" << p.beta << ",eta=" << p.eta << ",mu=" << p.mu << ",t=" << p.t;
        break;
    case FunctionalKind::QSaigo:
        os << "alpha=" << p.alpha << ",beta=" << p.beta << ",eta=" << p.eta << ",q=" << p.q << ",t=" << p.t;
        break;
    case FunctionalKind::QRiemannLiouville:
        os << "alpha=" << p.alpha << ",q=" << p.q << ",t=" << p.t;
        break;
    case FunctionalKind::Jackson:
        os << "q=" << p.q << ",t=" << p.t;
        break;
    }
    os << ",nodes=" << d_->nodes.size() << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Node-sum algebra

double pairwise_sum(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

std::vector<double> sample_at_nodes(const FunctionalSpec& A, const ScalarFunction& f) {
    const auto nodes = A.nodes();
    std::vector<double> out(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        try {
            out[i] = f(nodes[i]);
        } catch (const Error& e) {
            throw EvalError("at node " + std::to_string(i) + " (x = " + number_text(nodes[i]) + "): " + e.what());
        }
        if (!std::isfinite(out[i]))
            throw EvalError("at node " + std::to_string(i) + " (x = " + number_text(nodes[i]) + "): non-finite value of " +
                            f.description());
    }
    return out;
}

double weighted_product(const FunctionalSpec& A, std::initializer_list<std::span<const double>> factors) {
    const auto w = A.weights();
    for (const auto& f : factors)
        if (f.size() != w.size()) throw Error("weighted_product: factor length does not match node count");
    std::vector<double> terms(w.begin(), w.end());
    for (const auto& f : factors)
        for (std::size_t i = 0; i < terms.size(); ++i) terms[i] *= f[i];
    return pairwise_sum(terms);
}

double apply(const FunctionalSpec& A, const ScalarFunction& f) {
    const auto values = sample_at_nodes(A, f);
    return weighted_product(A, {values});
}

double tensor_sum(const FunctionalSpec& A, const FunctionalSpec& B,
                  const std::function<double(std::size_t, std::size_t)>& term) {
    const auto wa = A.weights();
    const auto wb = B.weights();
    std::vector<double> inner(wa.size());
    std::vector<double> outer(wb.size());
    for (std::size_t j = 0; j < wb.size(); ++j) {
        for (std::size_t i = 0; i < wa.size(); ++i) inner[i] = wa[i] * term(i, j);
        outer[j] = wb[j] * pairwise_sum(inner);
    }
    return pairwise_sum(outer);
}

double tensor_apply(const FunctionalSpec& A, const FunctionalSpec& B, const TwoVarFunction& F) {
    const auto xa = A.nodes();
    const auto yb = B.nodes();
    return tensor_sum(A, B, [&](std::size_t i, std::size_t j) {
        const double v = F(xa[i], yb[j]);
        if (!std::isfinite(v))
            throw EvalError("two-variable function non-finite at (" + number_text(xa[i]) + ", " + number_text(yb[j]) +
                            ")");
        return v;
    });
}

// ---------------------------------------------------------------------------
// Axiom checks

namespace {

struct Poly {
    std::vector<double> c;
    double operator()(double x) const {
        double r = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }
};

Poly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 5);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    Poly p;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) p.c.push_back(coef(rng));
    return p;
}

} // namespace

AxiomReport check_linearity(const FunctionalSpec& A, int trials, std::uint64_t seed, const ToleranceSpec& tol) {
    if (trials < 1) throw DomainError("check_linearity: trials must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> scalar(-10.0, 10.0);
    AxiomReport report;
    report.trials = trials;
    report.passed = true;
    for (int k = 0; k < trials; ++k) {
        const Poly f = random_poly(rng);
        const Poly g = random_poly(rng);
        const double a = scalar(rng);
        const double b = scalar(rng);
        const auto fv = sample_at_nodes(A, ScalarFunction::builtin("f", f));
        const auto gv = sample_at_nodes(A, ScalarFunction::builtin("g", g));
        const double combined = apply(A, ScalarFunction::builtin("af+bg", [&](double x) { return a * f(x) + b * g(x); }));
        const double separate = a * weighted_product(A, {fv}) + b * weighted_product(A, {gv});
        std::vector<double> mag(fv.size());
        for (std::size_t i = 0; i < mag.size(); ++i) mag[i] = std::abs(a * fv[i]) + std::abs(b * gv[i]);
        const double scale = weighted_product(A, {mag});
        const double dev = std::abs(combined - separate);
        report.statistic = std::max(report.statistic, dev);
        report.scale = std::max(report.scale, scale);
        if (dev > tol.abs + tol.rel * scale) report.passed = false;
    }
    return report;
}

AxiomReport check_linearity(const FunctionalSpec& A, int trials, std::uint64_t seed) {
    return check_linearity(A, trials, seed, ToleranceSpec{0.0, 1e-12});
}

AxiomReport check_isotonicity(const FunctionalSpec& A, int trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("check_isotonicity: trials must be >= 1");
    for (double w : A.weights())
        if (w < 0.0) throw ConstructionError("check_isotonicity: negative weight in " + A.describe());
    std::mt19937_64 rng(seed);
    AxiomReport report;
    report.trials = trials;
    report.statistic = std::numeric_limits<double>::infinity();
    for (int k = 0; k < trials; ++k) {
        const Poly p = random_poly(rng);
        const double v = apply(A, ScalarFunction::builtin("p^2", [&](double x) {
                                   const double y = p(x);
                                   return y * y;
                               }));
        report.statistic = std::min(report.statistic, v);
        report.scale = std::max(report.scale, std::abs(v));
    }
    report.passed = report.statistic >= 0.0;
    return report;
}

bool check_synchronous(const ScalarFunction& f, const ScalarFunction& g, const Domain& d, int samples,
                       double tol_abs) {
    if (samples < 2) throw DomainError("check_synchronous: samples must be >= 2");
    const auto pts = d.sample(samples);
    std::vector<double> fv(pts.size()), gv(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        fv[i] = f(pts[i]);
        gv[i] = g(pts[i]);
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if ((fv[i] - fv[j]) * (gv[i] - gv[j]) < -tol_abs) return false;
    return true;
}

} // namespace lfi
