#pragma once

// Builders for the concrete isotonic functionals. Each returns a materialised
// FunctionalSpec whose weights are verified non-negative at construction.

#include <optional>
#include <vector>

#include "lfi/functional.hpp"
#include "lfi/special_functions.hpp"

namespace lfi {

inline constexpr int kDefaultNodes = 64;
inline constexpr int kDefaultQSaigoTerms = 128;
inline constexpr int kDefaultQSaigoSeriesCap = 512;
inline constexpr double kDefaultJacksonTailTol = 1e-13;

/// sum_i w_i f(x_i); unit weights when none are given. Points are sorted
/// together with their weights; duplicates are rejected.
FunctionalSpec build_discrete(std::vector<double> points, std::optional<std::vector<double>> weights = std::nullopt);

/// Composite Gauss-Legendre on [a, b]: `panels` equal panels of n points each,
/// exact for polynomials of degree <= 2n-1.
FunctionalSpec build_riemann(double a, double b, int n = kDefaultNodes, int panels = 1);

/// J^alpha f(t) = 1/Gamma(alpha) int_0^t (t-s)^(alpha-1) f(s) ds.
FunctionalSpec build_riemann_liouville(double alpha, double t, int n = kDefaultNodes);

/// Hadamard integral at x > 1, mapped onto J^alpha at log x through y = e^u.
FunctionalSpec build_hadamard(double alpha, double x, int n = kDefaultNodes);

/// Fractional hypergeometric operator with kernel
/// t^(-alpha-beta-2mu)/Gamma(alpha) s^mu (t-s)^(alpha-1) 2F1(alpha+beta+mu, -eta; alpha; 1-s/t).
/// Requires t > 0, alpha > max(0, -beta-mu), mu > -1, beta-1 < eta < 0.
FunctionalSpec build_hypergeometric(double alpha, double beta, double eta, double mu, double t,
                                    int n = kDefaultNodes, const SeriesConfig& cfg = {});

/// Hypergeometric operator with mu = 0.
FunctionalSpec build_saigo(double alpha, double beta, double eta, double t, int n = kDefaultNodes,
                           const SeriesConfig& cfg = {});

/// Hypergeometric operator with beta = mu = 0 (so -1 < eta < 0).
FunctionalSpec build_erdelyi_kober(double alpha, double eta, double t, int n = kDefaultNodes,
                                   const SeriesConfig& cfg = {});

/// Smallest K with t q^K below `tol`.
int jackson_truncation(double q, double t, double tol = kDefaultJacksonTailTol);

/// t (1-q) sum_{k<K} q^k f(t q^k). K <= 0 selects jackson_truncation(q, t).
FunctionalSpec build_jackson(double q, double t, int K = 0);

/// q-analogue of Saigo's operator on the nodes t q^k, k < K.
/// Requires alpha > 0, alpha + beta > 0, eta < 0, 0 < q < 1.
FunctionalSpec build_q_saigo(double alpha, double beta, double eta, double q, double t,
                             int K = kDefaultQSaigoTerms, int series_cap = kDefaultQSaigoSeriesCap,
                             const SeriesConfig& cfg = {});

/// t^(alpha-1)/Gamma_q(alpha) int_0^t (q tau/t; q)_(alpha-1) f(tau) d_q tau.
/// K <= 0 selects jackson_truncation(q, t).
FunctionalSpec build_q_riemann_liouville(double alpha, double q, double t, int K = 0, const SeriesConfig& cfg = {});

/// Delta-integral over the discrete time scale {t_0 < ... < t_m}:
/// sum_{i<m} f(t_i) (t_{i+1} - t_i).
FunctionalSpec build_time_scale_delta(std::vector<double> points);

/// The q-Saigo inner series at node t q^k in product form; exposed for tests.
double q_saigo_inner_series(double alpha, double beta, double eta, double q, int k, int series_cap,
                            const SeriesConfig& cfg = {});

/// Rebuilds a functional of the same kind and parameters at a new resolution.
/// Discrete and time-scale functionals are returned unchanged.
FunctionalSpec rebuild_with_resolution(const FunctionalSpec& spec, int resolution);

} // namespace lfi
