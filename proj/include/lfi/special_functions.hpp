#pragma once

// Classical and q-deformed special functions used by the operator kernels.
//
// All functions are pure. Series and infinite products are truncated under the
// policy held in SeriesConfig; failures surface as lfi::TruncationError rather
// than silently inaccurate values.

#include <vector>

namespace lfi {

struct SeriesConfig {
    /// Series stop ratio: |term| <= rel_tol * |partial sum| for two consecutive terms.
    double rel_tol = 1e-14;
    int max_terms = 10000;
    /// Infinite q-products stop once |a| q^k drops below this bound.
    double product_tail_tol = 1e-16;

    /// Throws DomainError if rel_tol is outside (0, 1e-3] or max_terms < 100.
    void validate() const;
};

double gamma(double x);
double log_gamma(double x);

/// gamma(s, x) = integral_0^x t^(s-1) e^(-t) dt.
double lower_incomplete_gamma(double s, double x);

/// Gauss hypergeometric 2F1(a, b; c; z) for real arguments with |z| < 1.
///
/// Uses the defining series for |z| <= 0.5, the Pfaff transformation for
/// z < -0.5 and the 1-z connection formula for z > 0.5. The connection formula
/// has no finite form when c-a-b is an integer; that case raises
/// UnsupportedError unless the series terminates. Within 1e-4 of an integer
/// the defining series is summed directly, and UnsupportedError is raised if
/// it does not converge within max_terms.
double gauss_2f1(double a, double b, double c, double z, const SeriesConfig& cfg = {});

/// 2F1(a, b; c; 1 - w), keeping full relative precision in w as w -> 0.
double gauss_2f1_complement(double a, double b, double c, double w, const SeriesConfig& cfg = {});

/// First `count` partial sums of the defining 2F1 series (no transformation applied).
std::vector<double> gauss_2f1_partial_sums(double a, double b, double c, double z, int count);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), (a)_0 = 1.
double pochhammer(double a, int n);

/// (a; q)_alpha as the quotient of the infinite products
/// prod (1 - a q^k) / prod (1 - a q^(alpha+k)).
double q_pochhammer(double a, double q, double alpha, const SeriesConfig& cfg = {});

/// (t - a)_q^n = t^n (a/t; q)_n.
double q_bracket_power(double t, double a, double q, int n);

/// Gamma_q(x) = (q;q)_inf / (q^x;q)_inf * (1-q)^(1-x).
double q_gamma(double q, double x, const SeriesConfig& cfg = {});

} // namespace lfi
