#pragma once

// Isotonic linear functionals realised as positive-weight node sums.
//
// Every functional is materialised once into (nodes, weights) with all weights
// non-negative. Linearity and isotonicity then hold exactly at the node level,
// and the two-variable composition B_y A_x is a plain double sum.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lfi/errors.hpp"
#include "lfi/expression.hpp"

namespace lfi {

// ---------------------------------------------------------------------------
// Domain

class Domain {
public:
    enum class Kind { Interval, PointSet, QGrid };

    static Domain interval(double a, double b);
    /// Points must be non-empty and strictly increasing.
    static Domain point_set(std::vector<double> points);
    /// {t q^k : k = 0..count-1}.
    static Domain q_grid(double t, double q, int count);

    Kind kind() const noexcept { return kind_; }
    double lower() const noexcept { return lo_; }
    double upper() const noexcept { return hi_; }
    /// Point list for PointSet and QGrid (ascending); empty for Interval.
    const std::vector<double>& points() const noexcept { return points_; }

    /// Interval: uniform grid with endpoints. Finite sets: the points themselves,
    /// thinned evenly when there are more than `samples`.
    std::vector<double> sample(int samples) const;

private:
    Kind kind_ = Kind::Interval;
    double lo_ = 0.0;
    double hi_ = 1.0;
    std::vector<double> points_;
};

// ---------------------------------------------------------------------------
// ScalarFunction

/// Real function of one variable: parsed expression, named built-in, values
/// tabulated on a finite point set, or a piecewise-linear interpolant.
/// Immutable and cheap to copy.
class ScalarFunction {
public:
    ScalarFunction(); // the zero function

    static ScalarFunction constant(double c);
    static ScalarFunction identity();
    static ScalarFunction from_expr(expr::Expr e, std::string source = {});
    /// Throws expr::ParseError.
    static ScalarFunction parse(std::string_view text);
    static ScalarFunction builtin(std::string name, std::function<double(double)> fn);
    /// Exact lookup on a point set; evaluating off the set throws EvalError.
    static ScalarFunction tabulated(std::vector<double> points, std::vector<double> values);
    /// Linear interpolation through strictly increasing knots, constant beyond the ends.
    static ScalarFunction piecewise_linear(std::vector<double> knots, std::vector<double> values);

    double operator()(double x) const;
    const std::string& description() const;

private:
    struct Impl;
    explicit ScalarFunction(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

/// F(x, y) for the composition B_y A_x.
using TwoVarFunction = std::function<double(double, double)>;

// ---------------------------------------------------------------------------
// Tolerances

struct ToleranceSpec {
    double abs = 1e-10;
    double rel = 1e-8;

    /// Throws DomainError when negative or both zero.
    void validate() const;
    double bound(double a, double b) const;
};

// ---------------------------------------------------------------------------
// FunctionalSpec

enum class FunctionalKind {
    Discrete,
    Riemann,
    RiemannLiouville,
    Hadamard,
    Hypergeometric,
    Saigo,
    ErdelyiKober,
    QSaigo,
    QRiemannLiouville,
    Jackson,
    TimeScaleDelta,
};

std::string_view to_string(FunctionalKind kind);
/// Accepts the names produced by to_string and their kebab-case forms.
FunctionalKind functional_kind_from_string(std::string_view name);

/// Exact node sums (no discretisation error): Discrete, Jackson, TimeScaleDelta and the q-operators.
bool is_exact_kind(FunctionalKind kind);
ToleranceSpec default_tolerance(FunctionalKind kind);

struct FunctionalParams {
    double alpha = 0.0;
    double beta = 0.0;
    double eta = 0.0;
    double mu = 0.0;
    double q = 0.0;
    /// Evaluation point (t, or x for Hadamard).
    double t = 0.0;
    /// Interval endpoints for Riemann.
    double a = 0.0;
    double b = 0.0;
    /// Node count n or truncation K.
    int resolution = 0;
    /// Inner-series cap for q-Saigo.
    int series_cap = 0;
    /// Panel count for composite Riemann rules.
    int panels = 1;
};

class FunctionalSpec {
public:
    /// Validates: equal lengths, non-empty, finite nodes, finite weights >= 0.
    /// A negative weight raises ConstructionError.
    FunctionalSpec(FunctionalKind kind, FunctionalParams params, std::vector<double> nodes,
                   std::vector<double> weights, Domain domain);

    FunctionalKind kind() const noexcept;
    const FunctionalParams& params() const noexcept;
    std::span<const double> nodes() const noexcept;
    std::span<const double> weights() const noexcept;
    std::size_t size() const noexcept;
    /// The set E the functional acts on.
    const Domain& domain() const noexcept;
    /// A(1).
    double mass() const noexcept;
    std::string describe() const;

private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

// ---------------------------------------------------------------------------
// Node-sum algebra

/// Deterministic pairwise summation.
double pairwise_sum(std::span<const double> values);

/// f evaluated at every node of A. Evaluation errors are rethrown as EvalError
/// naming the node index and abscissa.
std::vector<double> sample_at_nodes(const FunctionalSpec& A, const ScalarFunction& f);

/// sum_i w_i prod_k factors[k][i]; every factor must have A.size() entries.
double weighted_product(const FunctionalSpec& A, std::initializer_list<std::span<const double>> factors);

/// A(f) = sum_i w_i f(sigma_i).
double apply(const FunctionalSpec& A, const ScalarFunction& f);

/// sum_j v_j sum_i w_i term(i, j), each level reduced pairwise.
double tensor_sum(const FunctionalSpec& A, const FunctionalSpec& B,
                  const std::function<double(std::size_t, std::size_t)>& term);

/// B_y A_x (F): apply A in x first, then B in y.
double tensor_apply(const FunctionalSpec& A, const FunctionalSpec& B, const TwoVarFunction& F);

// ---------------------------------------------------------------------------
// Axiom checks

struct AxiomReport {
    int trials = 0;
    /// Linearity: max |A(af+bg) - aA(f) - bA(g)|. Isotonicity: min A(f).
    double statistic = 0.0;
    /// Magnitude the statistic is judged against.
    double scale = 0.0;
    bool passed = false;
};

/// Random a, b in [-10, 10] and random polynomials f, g of degree <= 5.
/// Passes when the max deviation is <= tol.abs + tol.rel * scale.
AxiomReport check_linearity(const FunctionalSpec& A, int trials, std::uint64_t seed, const ToleranceSpec& tol);
AxiomReport check_linearity(const FunctionalSpec& A, int trials, std::uint64_t seed);

/// Random non-negative f (squares of random polynomials); passes when min A(f) >= 0.
/// Re-verifies weight non-negativity and throws ConstructionError if violated.
AxiomReport check_isotonicity(const FunctionalSpec& A, int trials, std::uint64_t seed);

/// (f(x)-f(y))(g(x)-g(y)) >= -tol_abs over all pairs of `samples` points of d.
/// Sampled, not certified.
bool check_synchronous(const ScalarFunction& f, const ScalarFunction& g, const Domain& d, int samples,
                       double tol_abs = 1e-10);

} // namespace lfi
