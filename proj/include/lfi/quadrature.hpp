#pragma once

#include <memory>
#include <string_view>
#include <vector>

namespace lfi {

/// Gauss rule on the reference interval [-1, 1] for the weight
/// (1-x)^p_exp (1+x)^q_exp (Gauss-Legendre when both exponents are zero).
struct QuadratureRule {
    enum class Family { GaussLegendre, GaussJacobi };

    Family family = Family::GaussLegendre;
    int n = 0;
    double p_exp = 0.0;
    double q_exp = 0.0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Golub-Welsch from the Jacobi three-term recurrence. Requires n >= 1 and
/// both exponents > -1. Recently used rules are cached per (n, p_exp, q_exp).
std::shared_ptr<const QuadratureRule> gauss_jacobi(int n, double p_exp, double q_exp);
std::shared_ptr<const QuadratureRule> gauss_legendre(int n);

/// Nodes and weights on [0, 1] for the weight u^mu (1-u)^(alpha-1).
///
/// The interval is split into a Gauss-Jacobi panel on [1/2, 1] carrying the
/// (1-u)^(alpha-1) factor, geometrically graded Gauss-Legendre panels toward 0,
/// and an innermost Gauss-Jacobi panel carrying u^mu. The grading resolves
/// algebraic endpoint behaviour of the integrand at u = 0.
struct UnitRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

UnitRule singular_unit_rule(int n, double alpha, double mu);

/// As above, but the innermost panel is exact for u^inner_exponent instead of
/// u^mu, for integrands that carry an extra algebraic factor at u = 0.
UnitRule singular_unit_rule(int n, double alpha, double mu, double inner_exponent);

/// Integral of u^mu (1-u)^(alpha-1) over [0, 1], i.e. B(mu+1, alpha).
double unit_rule_mass(double alpha, double mu);

} // namespace lfi
