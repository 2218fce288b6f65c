#pragma once

// One checker per inequality. Each checker samples its hypotheses, evaluates
// both sides on the node sums of A and B and returns an oriented slack with a
// tolerance-aware verdict.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lfi/functional.hpp"

namespace lfi {

enum class Verdict { Holds, Violated, HypothesisFailed, EvalError };
/// GreaterEqual: the inequality claims lhs >= rhs, so slack = lhs - rhs.
enum class Direction { GreaterEqual, LessEqual };
enum class Ordering { Synchronous, Asynchronous };

std::string_view to_string(Verdict v);
std::string_view to_string(Direction d);
std::string_view to_string(Ordering o);
Verdict verdict_from_string(std::string_view s);
Direction direction_from_string(std::string_view s);
Ordering ordering_from_string(std::string_view s);

struct HypothesisCheck {
    std::string name;
    bool passed = true;
    /// Worst sampled margin (negative when the hypothesis fails).
    double worst_margin = 0.0;
    int samples = 0;

    bool operator==(const HypothesisCheck&) const = default;
};

struct InequalityReport {
    std::string theorem;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    Direction direction = Direction::GreaterEqual;
    ToleranceSpec tolerance;
    Verdict verdict = Verdict::Holds;
    std::vector<HypothesisCheck> hypothesis_checks;
    /// Free-form description: functionals, parameters, notes, error text.
    std::map<std::string, std::string> instance;

    bool operator==(const InequalityReport& o) const;
};

/// Verdict rule: HOLDS iff slack >= -(tol.abs + tol.rel * max(|lhs|, |rhs|)).
Verdict judge(double lhs, double rhs, double slack, const ToleranceSpec& tol);

/// Hypothesis data for the bounded and Lipschitz-type theorems.
struct BoundSpec {
    std::optional<double> m, M, n, N, k, K;
    std::optional<ScalarFunction> phi1, phi2, psi1, psi2;
    std::optional<double> M1, M2, M3;
    std::optional<ScalarFunction> h1, h2;
    std::optional<double> H1, H2, r, s;
    std::optional<double> theta1, theta2;
    /// Proximity constant in |f - phi| < M.
    std::optional<double> proximity;

    /// Checks m <= M, n <= N, k <= K, 1/theta1 + 1/theta2 = 1, r, s in (0, 1],
    /// H1, H2 > 0. Throws DomainError.
    void validate() const;
};

struct CheckerContext {
    FunctionalSpec A;
    FunctionalSpec B;
    ScalarFunction p = ScalarFunction::constant(1.0);
    ScalarFunction q = ScalarFunction::constant(1.0);
    /// Third weight, used only by check_three_weights.
    ScalarFunction r = ScalarFunction::constant(1.0);
    ToleranceSpec tolerance;
    /// Pairwise hypotheses are sampled on at most this many node abscissae.
    int pair_samples = 256;
};

/// The abscissae used for pairwise hypothesis checks: the union of the nodes
/// of A and B, thinned evenly to ctx.pair_samples.
std::vector<double> hypothesis_points(const CheckerContext& ctx);

InequalityReport check_chebyshev_two(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& g,
                                     Ordering ordering = Ordering::Synchronous);

/// |T(f, g)| <= M1 M2 |T(h1, h2)|, h1 and h2 ordered as stated.
InequalityReport check_lipschitz_pair(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& g,
                                      double M1, const ScalarFunction& h1, double M2, const ScalarFunction& h2,
                                      Ordering h_ordering = Ordering::Synchronous);

InequalityReport check_m_g_lipschitz(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& g,
                                     double M);

InequalityReport check_holder_pair(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& g,
                                   double H1, double H2, double r, double s);

InequalityReport check_variable_bounds(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& phi1,
                                       const ScalarFunction& phi2);

InequalityReport check_constant_bounds(const CheckerContext& ctx, const ScalarFunction& f, double m, double M);

InequalityReport check_near_function(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& phi,
                                     double M);

std::vector<InequalityReport> check_four_bounds(const CheckerContext& ctx, const ScalarFunction& f,
                                                const ScalarFunction& g, const ScalarFunction& phi1,
                                                const ScalarFunction& phi2, const ScalarFunction& psi1,
                                                const ScalarFunction& psi2);

std::vector<InequalityReport> check_four_const_bounds(const CheckerContext& ctx, const ScalarFunction& f,
                                                      const ScalarFunction& g, double m, double M, double n, double N);

InequalityReport check_young_bounds(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& phi1,
                                    const ScalarFunction& phi2, double theta1, double theta2);

InequalityReport check_young_square(const CheckerContext& ctx, const ScalarFunction& f, double m, double M);

std::vector<InequalityReport> check_young_four(const CheckerContext& ctx, const ScalarFunction& f,
                                               const ScalarFunction& g, const ScalarFunction& phi1,
                                               const ScalarFunction& phi2, const ScalarFunction& psi1,
                                               const ScalarFunction& psi2, double theta1, double theta2);

InequalityReport check_triple_positive_weight(const CheckerContext& ctx, const ScalarFunction& f,
                                              const ScalarFunction& g, const ScalarFunction& h,
                                              Ordering ordering = Ordering::Synchronous);

InequalityReport check_triple_gruss(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& g,
                                    const ScalarFunction& h, double m, double M, double n, double N, double k,
                                    double K);

InequalityReport check_triple_lipschitz(const CheckerContext& ctx, const ScalarFunction& f1, const ScalarFunction& f2,
                                        const ScalarFunction& f3, const ScalarFunction& g, double M1, double M2,
                                        double M3);

/// Uses ctx.p, ctx.q and ctx.r as the three weights.
InequalityReport check_three_weights(const CheckerContext& ctx, const ScalarFunction& f, const ScalarFunction& g,
                                     Ordering ordering = Ordering::Synchronous);

/// Hadamard operators of orders alpha and beta at t > 1, unit weights, f and g
/// M1- and M2-Lipschitz. The right side is the incomplete-gamma closed form.
InequalityReport check_hadamard_example(double alpha, double beta, double t, const ScalarFunction& f,
                                        const ScalarFunction& g, double M1, double M2, int n,
                                        const ToleranceSpec& tol);

/// Closed-form right side of the Hadamard example.
double hadamard_example_rhs(double alpha, double beta, double t, double M1, double M2);

/// Names of the 17 checkers, in suite order.
const std::vector<std::string>& checker_names();

} // namespace lfi
