#include "lfi/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "lfi/errors.hpp"
#include "lfi/special_functions.hpp"

namespace lfi {

namespace {

// Graded panels toward u = 0.
constexpr double kGradingRatio = 0.15;
constexpr int kGradedPanels = 12;
constexpr std::size_t kCacheLimit = 512;

QuadratureRule golub_welsch(int n, double a, double b) {
    if (n < 1) throw DomainError("gauss_jacobi: n must be >= 1");
    if (!(a > -1.0 && b > -1.0)) throw DomainError("gauss_jacobi: exponents must exceed -1");

    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 0));
    const double ab = a + b;
    diag(0) = (b - a) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + ab;
        diag(k) = (b * b - a * a) / (s * (s + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + ab;
        double beta = 0.0;
        if (k == 1)
            beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        else
            beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
        sub(k - 1) = std::sqrt(beta);
    }

    const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + log_gamma(a + 1.0) + log_gamma(b + 1.0) -
                                log_gamma(ab + 2.0));

    QuadratureRule rule;
    rule.family = (a == 0.0 && b == 0.0) ? QuadratureRule::Family::GaussLegendre : QuadratureRule::Family::GaussJacobi;
    rule.n = n;
    rule.p_exp = a;
    rule.q_exp = b;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));

    if (n == 1) {
        rule.nodes[0] = diag(0);
        rule.weights[0] = mu0;
        return rule;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw Error("gauss_jacobi: eigen decomposition failed");
    for (int i = 0; i < n; ++i) {
        const double v0 = solver.eigenvectors()(0, i);
        rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
        rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
    }
    for (double w : rule.weights)
        if (!(w > 0.0)) throw ConstructionError("gauss_jacobi: non-positive weight");
    for (double x : rule.nodes)
        if (!(x > -1.0 && x < 1.0)) throw ConstructionError("gauss_jacobi: node outside (-1, 1)");
    return rule;
}

} // namespace

std::shared_ptr<const QuadratureRule> gauss_jacobi(int n, double p_exp, double q_exp) {
    static std::mutex mutex;
    static std::map<std::tuple<int, double, double>, std::shared_ptr<const QuadratureRule>> cache;
    const auto key = std::make_tuple(n, p_exp, q_exp);
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto rule = std::make_shared<const QuadratureRule>(golub_welsch(n, p_exp, q_exp));
    std::lock_guard<std::mutex> lock(mutex);
    if (cache.size() >= kCacheLimit) cache.clear();
    return cache.emplace(key, std::move(rule)).first->second;
}

std::shared_ptr<const QuadratureRule> gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

UnitRule singular_unit_rule(int n, double alpha, double mu) { return singular_unit_rule(n, alpha, mu, mu); }

UnitRule singular_unit_rule(int n, double alpha, double mu, double inner_exponent) {
    if (n < 4) throw DomainError("singular_unit_rule: n must be >= 4");
    if (!(alpha > 0.0)) throw DomainError("singular_unit_rule: alpha must be positive");
    if (!(mu > -1.0)) throw DomainError("singular_unit_rule: mu must exceed -1");
    if (!(inner_exponent > -1.0)) throw DomainError("singular_unit_rule: inner exponent must exceed -1");

    const int m = std::max(12, n / 4);
    UnitRule out;
    out.nodes.reserve(static_cast<std::size_t>(n + (kGradedPanels + 1) * m));
    out.weights.reserve(out.nodes.capacity());

    // innermost panel [0, b_L] carries u^inner_exponent exactly
    double inner_end = 0.5;
    for (int k = 0; k < kGradedPanels; ++k) inner_end *= kGradingRatio;
    {
        const auto rule = gauss_jacobi(m, 0.0, inner_exponent);
        const QuadratureRule& r = *rule;
        const double half = inner_end / 2.0;
        const double scale = std::pow(half, inner_exponent + 1.0);
        for (int i = 0; i < m; ++i) {
            const double u = half * (1.0 + r.nodes[static_cast<std::size_t>(i)]);
            out.nodes.push_back(u);
            out.weights.push_back(r.weights[static_cast<std::size_t>(i)] * scale * std::pow(u, mu - inner_exponent) *
                                  std::pow(1.0 - u, alpha - 1.0));
        }
    }

    // graded Gauss-Legendre panels [b_{k+1}, b_k], innermost first
    {
        const auto rule = gauss_legendre(m);
        const QuadratureRule& r = *rule;
        double lo = inner_end;
        for (int k = 0; k < kGradedPanels; ++k) {
            const double hi = lo / kGradingRatio;
            const double c = 0.5 * (lo + hi);
            const double h = 0.5 * (hi - lo);
            for (int i = 0; i < m; ++i) {
                const double u = c + h * r.nodes[static_cast<std::size_t>(i)];
                out.nodes.push_back(u);
                out.weights.push_back(r.weights[static_cast<std::size_t>(i)] * h * std::pow(u, mu) *
                                      std::pow(1.0 - u, alpha - 1.0));
            }
            lo = hi;
        }
    }

    // [1/2, 1] carries (1-u)^(alpha-1) exactly
    {
        const auto rule = gauss_jacobi(n, alpha - 1.0, 0.0);
        const QuadratureRule& r = *rule;
        const double scale = std::pow(0.25, alpha);
        for (int i = 0; i < n; ++i) {
            const double u = 0.75 + 0.25 * r.nodes[static_cast<std::size_t>(i)];
            out.nodes.push_back(u);
            out.weights.push_back(r.weights[static_cast<std::size_t>(i)] * scale * std::pow(u, mu));
        }
    }
    return out;
}

double unit_rule_mass(double alpha, double mu) {
    return std::exp(log_gamma(mu + 1.0) + log_gamma(alpha) - log_gamma(mu + alpha + 1.0));
}

} // namespace lfi
