#include "lfi/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "lfi/quadrature.hpp"

namespace lfi {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void require(bool ok, const std::string& message) {
    if (!ok) throw DomainError(message);
}

void require_q(double q) { require(q > 0.0 && q < 1.0, "q must lie in (0, 1), got " + num(q)); }

// (q^(k+1); q)_(alpha-1) for k = 0..K-1, by downward recursion from the deepest node:
// R_k = R_(k+1) (1 - q^(k+1)) / (1 - q^(k+alpha)).
std::vector<double> q_kernel_factors(double alpha, double q, int K, const SeriesConfig& cfg) {
    std::vector<double> r(static_cast<std::size_t>(K));
    r.back() = q_pochhammer(std::pow(q, K), q, alpha - 1.0, cfg);
    for (int k = K - 2; k >= 0; --k) {
        const double num_factor = 1.0 - std::pow(q, k + 1);
        const double den_factor = 1.0 - std::pow(q, k + alpha);
        if (den_factor == 0.0) throw DomainError("q-kernel: zero denominator factor");
        r[static_cast<std::size_t>(k)] = r[static_cast<std::size_t>(k + 1)] * num_factor / den_factor;
    }
    return r;
}

FunctionalSpec hypergeometric_kind(FunctionalKind kind, double alpha, double beta, double eta, double mu, double t,
                                   int n, const SeriesConfig& cfg) {
    require(t > 0.0, "hypergeometric operator: t must be positive");
    require(alpha > 0.0, "hypergeometric operator: alpha must be positive");
    // closed at alpha + beta + mu = 0 and eta = 0: the kernel's 2F1 factor is then identically 1
    require(alpha + beta + mu >= 0.0, "hypergeometric operator: requires alpha > -beta-mu (alpha=" + num(alpha) +
                                          ", beta=" + num(beta) + ", mu=" + num(mu) + ")");
    require(mu > -1.0, "hypergeometric operator: requires mu > -1");
    require(beta - 1.0 < eta && eta <= 0.0, "hypergeometric operator: requires beta-1 < eta < 0 (beta=" +
                                                 num(beta) + ", eta=" + num(eta) + ")");
    require(n >= 4, "hypergeometric operator: n must be >= 4");

    const double a = alpha + beta + mu;
    const double b = -eta;
    const double c = alpha;
    // the 2F1 factor behaves like u^(c-a-b) at u = 0 when c-a-b < 0
    const double inner = mu + std::min(0.0, c - a - b);
    const UnitRule rule = singular_unit_rule(n, alpha, mu, inner);
    const double prefactor = std::pow(t, -beta - mu) / gamma(alpha);

    std::vector<double> nodes(rule.nodes.size());
    std::vector<double> weights(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double u = rule.nodes[i];
        const double kernel = (a == 0.0 || b == 0.0) ? 1.0 : gauss_2f1_complement(a, b, c, u, cfg);
        nodes[i] = t * u;
        weights[i] = prefactor * rule.weights[i] * kernel;
    }
    FunctionalParams p;
    p.alpha = alpha;
    p.beta = beta;
    p.eta = eta;
    p.mu = mu;
    p.t = t;
    p.resolution = n;
    return FunctionalSpec(kind, p, std::move(nodes), std::move(weights), Domain::interval(0.0, t));
}

} // namespace

FunctionalSpec build_discrete(std::vector<double> points, std::optional<std::vector<double>> weights) {
    if (points.empty()) throw ConstructionError("build_discrete: no points");
    std::vector<double> w = weights ? std::move(*weights) : std::vector<double>(points.size(), 1.0);
    if (w.size() != points.size()) throw ConstructionError("build_discrete: weights length differs from points");
    for (double v : w)
        if (v < 0.0) throw ConstructionError("build_discrete: negative weight " + num(v));

    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return points[i] < points[j]; });
    std::vector<double> xs, ws;
    for (std::size_t i : order) {
        if (!xs.empty() && xs.back() == points[i]) throw ConstructionError("build_discrete: duplicate point " + num(points[i]));
        xs.push_back(points[i]);
        ws.push_back(w[i]);
    }
    FunctionalParams p;
    p.resolution = static_cast<int>(xs.size());
    Domain d = Domain::point_set(xs);
    return FunctionalSpec(FunctionalKind::Discrete, p, std::move(xs), std::move(ws), std::move(d));
}

FunctionalSpec build_riemann(double a, double b, int n, int panels) {
    require(a < b, "build_riemann: requires a < b");
    require(n >= 2, "build_riemann: n must be >= 2");
    require(panels >= 1, "build_riemann: panels must be >= 1");
    const auto rule = gauss_legendre(n);
    const QuadratureRule& r = *rule;
    const double width = (b - a) / panels;
    std::vector<double> nodes, weights;
    nodes.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(panels));
    weights.reserve(nodes.capacity());
    for (int k = 0; k < panels; ++k) {
        const double lo = a + k * width;
        const double hi = k + 1 == panels ? b : lo + width;
        const double c = 0.5 * (lo + hi);
        const double h = 0.5 * (hi - lo);
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            nodes.push_back(c + h * r.nodes[i]);
            weights.push_back(h * r.weights[i]);
        }
    }
    FunctionalParams p;
    p.a = a;
    p.b = b;
    p.resolution = n;
    p.panels = panels;
    return FunctionalSpec(FunctionalKind::Riemann, p, std::move(nodes), std::move(weights), Domain::interval(a, b));
}

FunctionalSpec build_riemann_liouville(double alpha, double t, int n) {
    require(alpha > 0.0, "build_riemann_liouville: alpha must be positive, got " + num(alpha));
    require(t > 0.0, "build_riemann_liouville: t must be positive, got " + num(t));
    require(n >= 4, "build_riemann_liouville: n must be >= 4");
    const UnitRule rule = singular_unit_rule(n, alpha, 0.0);
    const double prefactor = std::pow(t, alpha) / gamma(alpha);
    std::vector<double> nodes(rule.nodes.size()), weights(rule.nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        nodes[i] = t * rule.nodes[i];
        weights[i] = prefactor * rule.weights[i];
    }
    FunctionalParams p;
    p.alpha = alpha;
    p.t = t;
    p.resolution = n;
    return FunctionalSpec(FunctionalKind::RiemannLiouville, p, std::move(nodes), std::move(weights),
                          Domain::interval(0.0, t));
}

FunctionalSpec build_hadamard(double alpha, double x, int n) {
    require(alpha > 0.0, "build_hadamard: alpha must be positive, got " + num(alpha));
    require(x > 1.0, "build_hadamard: requires x > 1, got " + num(x));
    const FunctionalSpec rl = build_riemann_liouville(alpha, std::log(x), n);
    std::vector<double> nodes(rl.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = std::exp(rl.nodes()[i]);
    std::vector<double> weights(rl.weights().begin(), rl.weights().end());
    FunctionalParams p;
    p.alpha = alpha;
    p.t = x;
    p.resolution = n;
    return FunctionalSpec(FunctionalKind::Hadamard, p, std::move(nodes), std::move(weights), Domain::interval(1.0, x));
}

FunctionalSpec build_hypergeometric(double alpha, double beta, double eta, double mu, double t, int n,
                                    const SeriesConfig& cfg) {
    return hypergeometric_kind(FunctionalKind::Hypergeometric, alpha, beta, eta, mu, t, n, cfg);
}

FunctionalSpec build_saigo(double alpha, double beta, double eta, double t, int n, const SeriesConfig& cfg) {
    return hypergeometric_kind(FunctionalKind::Saigo, alpha, beta, eta, 0.0, t, n, cfg);
}

FunctionalSpec build_erdelyi_kober(double alpha, double eta, double t, int n, const SeriesConfig& cfg) {
    return hypergeometric_kind(FunctionalKind::ErdelyiKober, alpha, 0.0, eta, 0.0, t, n, cfg);
}

int jackson_truncation(double q, double t, double tol) {
    require_q(q);
    require(t > 0.0, "jackson_truncation: t must be positive");
    require(tol > 0.0, "jackson_truncation: tol must be positive");
    const double k = std::ceil(std::log(tol / t) / std::log(q));
    if (k > 1e7) throw TruncationError("jackson_truncation: more than 1e7 nodes required");
    return std::max(1, static_cast<int>(k));
}

FunctionalSpec build_jackson(double q, double t, int K) {
    require_q(q);
    require(t > 0.0, "build_jackson: t must be positive");
    if (K <= 0) K = jackson_truncation(q, t);
    std::vector<double> nodes(static_cast<std::size_t>(K)), weights(static_cast<std::size_t>(K));
    double qk = 1.0;
    for (int k = 0; k < K; ++k, qk *= q) {
        nodes[static_cast<std::size_t>(k)] = t * qk;
        weights[static_cast<std::size_t>(k)] = t * (1.0 - q) * qk;
    }
    FunctionalParams p;
    p.q = q;
    p.t = t;
    p.resolution = K;
    return FunctionalSpec(FunctionalKind::Jackson, p, std::move(nodes), std::move(weights), Domain::q_grid(t, q, K));
}

double q_saigo_inner_series(double alpha, double beta, double eta, double q, int k, int series_cap,
                            const SeriesConfig& cfg) {
    // term_m = c_m q^((eta-beta) m) prod_{j<m} (1 - q^(k-j)), where
    // c_m = (q^(alpha+beta);q)_m (q^-eta;q)_m / ((q^alpha;q)_m (q;q)_m).
    // The product is q^(-m(m-1)/2) (-1)^m (q^k - 1)_q^m rewritten without
    // intermediate under/overflow; it vanishes for m > k.
    const double qe = std::pow(q, eta - beta);
    const double qab = std::pow(q, alpha + beta);
    const double qne = std::pow(q, -eta);
    const double qa = std::pow(q, alpha);
    double term = 1.0;
    double sum = 1.0;
    int small_in_a_row = 0;
    const int last = std::min(k, series_cap);
    double qm = 1.0; // q^m
    for (int m = 0; m < last; ++m, qm *= q) {
        const double ratio = (1.0 - qab * qm) * (1.0 - qne * qm) / ((1.0 - qa * qm) * (1.0 - q * qm)) * qe *
                             (1.0 - std::pow(q, k - m));
        term *= ratio;
        sum += term;
        if (std::abs(term) <= cfg.rel_tol * std::abs(sum)) {
            if (++small_in_a_row == 2) return sum;
        } else {
            small_in_a_row = 0;
        }
    }
    if (k > series_cap)
        throw TruncationError("q-Saigo inner series did not converge within " + std::to_string(series_cap) +
                              " terms at node " + std::to_string(k));
    return sum;
}

FunctionalSpec build_q_saigo(double alpha, double beta, double eta, double q, double t, int K, int series_cap,
                             const SeriesConfig& cfg) {
    require_q(q);
    require(t > 0.0, "build_q_saigo: t must be positive");
    require(alpha > 0.0, "build_q_saigo: alpha must be positive");
    require(alpha + beta > 0.0, "build_q_saigo: requires alpha + beta > 0");
    require(eta < 0.0, "build_q_saigo: requires eta < 0");
    require(K >= 1 && series_cap >= 1, "build_q_saigo: K and series cap must be >= 1");

    const double prefactor = std::pow(t, -beta - 1.0) / q_gamma(q, alpha, cfg);
    const std::vector<double> kernel = q_kernel_factors(alpha, q, K, cfg);
    std::vector<double> nodes(static_cast<std::size_t>(K)), weights(static_cast<std::size_t>(K));
    double qk = 1.0;
    for (int k = 0; k < K; ++k, qk *= q) {
        const std::size_t i = static_cast<std::size_t>(k);
        nodes[i] = t * qk;
        const double jackson = t * (1.0 - q) * qk;
        weights[i] = prefactor * jackson * kernel[i] * q_saigo_inner_series(alpha, beta, eta, q, k, series_cap, cfg);
    }
    FunctionalParams p;
    p.alpha = alpha;
    p.beta = beta;
    p.eta = eta;
    p.q = q;
    p.t = t;
    p.resolution = K;
    p.series_cap = series_cap;
    return FunctionalSpec(FunctionalKind::QSaigo, p, std::move(nodes), std::move(weights), Domain::q_grid(t, q, K));
}

FunctionalSpec build_q_riemann_liouville(double alpha, double q, double t, int K, const SeriesConfig& cfg) {
    require_q(q);
    require(alpha > 0.0, "build_q_riemann_liouville: alpha must be positive");
    require(t > 0.0, "build_q_riemann_liouville: t must be positive");
    if (K <= 0) K = jackson_truncation(q, t);

    const double prefactor = std::pow(t, alpha - 1.0) / q_gamma(q, alpha, cfg);
    const std::vector<double> kernel = q_kernel_factors(alpha, q, K, cfg);
    std::vector<double> nodes(static_cast<std::size_t>(K)), weights(static_cast<std::size_t>(K));
    double qk = 1.0;
    for (int k = 0; k < K; ++k, qk *= q) {
        const std::size_t i = static_cast<std::size_t>(k);
        nodes[i] = t * qk;
        weights[i] = prefactor * t * (1.0 - q) * qk * kernel[i];
    }
    FunctionalParams p;
    p.alpha = alpha;
    p.q = q;
    p.t = t;
    p.resolution = K;
    return FunctionalSpec(FunctionalKind::QRiemannLiouville, p, std::move(nodes), std::move(weights),
                          Domain::q_grid(t, q, K));
}

FunctionalSpec build_time_scale_delta(std::vector<double> points) {
    if (points.size() < 2) throw ConstructionError("build_time_scale_delta: need at least two points");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!(points[i - 1] < points[i]))
            throw ConstructionError("build_time_scale_delta: points must be strictly increasing");
    std::vector<double> nodes(points.begin(), points.end() - 1);
    std::vector<double> weights(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) weights[i] = points[i + 1] - points[i];
    FunctionalParams p;
    p.resolution = static_cast<int>(points.size());
    Domain d = Domain::point_set(std::move(points));
    return FunctionalSpec(FunctionalKind::TimeScaleDelta, p, std::move(nodes), std::move(weights), std::move(d));
}

FunctionalSpec rebuild_with_resolution(const FunctionalSpec& spec, int resolution) {
    const FunctionalParams& p = spec.params();
    switch (spec.kind()) {
    case FunctionalKind::Discrete:
    case FunctionalKind::TimeScaleDelta:
        return spec;
    case FunctionalKind::Riemann:
        return build_riemann(p.a, p.b, resolution, p.panels);
    case FunctionalKind::RiemannLiouville:
        return build_riemann_liouville(p.alpha, p.t, resolution);
    case FunctionalKind::Hadamard:
        return build_hadamard(p.alpha, p.t, resolution);
    case FunctionalKind::Hypergeometric:
        return build_hypergeometric(p.alpha, p.beta, p.eta, p.mu, p.t, resolution);
    case FunctionalKind::Saigo:
        return build_saigo(p.alpha, p.beta, p.eta, p.t, resolution);
    case FunctionalKind::ErdelyiKober:
        return build_erdelyi_kober(p.alpha, p.eta, p.t, resolution);
    case FunctionalKind::QSaigo:
        return build_q_saigo(p.alpha, p.beta, p.eta, p.q, p.t, resolution, p.series_cap);
    case FunctionalKind::QRiemannLiouville:
        return build_q_riemann_liouville(p.alpha, p.q, p.t, resolution);
    case FunctionalKind::Jackson:
        return build_jackson(p.q, p.t, resolution);
    }
    return spec;
}

} // namespace lfi
