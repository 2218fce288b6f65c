#include "lfi/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lfi/errors.hpp"

namespace lfi {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kNearIntegerGap = 1e-4;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Distance from x to the nearest integer.
double integer_gap(double x) { return std::abs(x - std::nearbyint(x)); }

// sin(pi x) with exact zeros at the integers.
double sin_pi(double x) {
    double r = std::fmod(x, 2.0);
    if (r < 0.0) r += 2.0;
    if (r == 0.0 || r == 1.0) return 0.0;
    if (r > 1.0) return -std::sin(kPi * (r - 1.0));
    return std::sin(kPi * r);
}

double lanczos_sum(double z) {
    double a = kLanczosCoef[0];
    for (std::size_t i = 1; i < kLanczosCoef.size(); ++i) a += kLanczosCoef[i] / (z + static_cast<double>(i));
    return a;
}

// Gamma for x >= 0.5.
double gamma_positive(double x) {
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    const double a = lanczos_sum(z);
    // split the power to delay overflow near x = 171
    const double half = std::pow(t, (z + 0.5) / 2.0);
    const double value = std::sqrt(2.0 * kPi) * a * (half * std::exp(-t)) * half;
    if (!std::isfinite(value)) throw RangeError("gamma: overflow at x = " + std::to_string(x));
    return value;
}

// 1/Gamma(x), zero at the poles.
double recip_gamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    return 1.0 / gamma(x);
}

double series_2f1(double a, double b, double c, double z, const SeriesConfig& cfg) {
    double term = 1.0;
    double sum = 1.0;
    int small_in_a_row = 0;
    for (int n = 0; n < cfg.max_terms; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        sum += term;
        if (term == 0.0) return sum;
        if (std::abs(term) <= cfg.rel_tol * std::abs(sum)) {
            if (++small_in_a_row == 2) return sum;
        } else {
            small_in_a_row = 0;
        }
    }
    throw TruncationError("gauss_2f1: series did not converge within " + std::to_string(cfg.max_terms) +
                          " terms");
}

bool terminates(double a, double b) { return is_nonpositive_integer(a) || is_nonpositive_integer(b); }

} // namespace

void SeriesConfig::validate() const {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-3)) throw DomainError("SeriesConfig: rel_tol must lie in (0, 1e-3]");
    if (max_terms < 100) throw DomainError("SeriesConfig: max_terms must be >= 100");
    if (!(product_tail_tol > 0.0)) throw DomainError("SeriesConfig: product_tail_tol must be positive");
}

double gamma(double x) {
    if (std::isnan(x)) throw DomainError("gamma: NaN argument");
    if (is_nonpositive_integer(x)) throw DomainError("gamma: pole at x = " + std::to_string(x));
    if (x > 171.62) throw RangeError("gamma: overflow at x = " + std::to_string(x));
    if (x < 0.5) {
        // reflection
        const double s = sin_pi(x);
        const double g = gamma_positive(1.0 - x);
        return kPi / (s * g);
    }
    return gamma_positive(x);
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma: requires x > 0");
    if (x < 0.5) return std::log(kPi / std::abs(sin_pi(x))) - log_gamma(1.0 - x);
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

double lower_incomplete_gamma(double s, double x) {
    if (!(s > 0.0)) throw DomainError("lower_incomplete_gamma: requires s > 0");
    if (!(x >= 0.0)) throw DomainError("lower_incomplete_gamma: requires x >= 0");
    if (x == 0.0) return 0.0;

    constexpr double eps = 1e-16;
    constexpr int max_iter = 100000;
    const double log_prefactor = s * std::log(x) - x;

    if (x < s + 1.0) {
        double term = 1.0 / s;
        double sum = term;
        for (int n = 1; n < max_iter; ++n) {
            term *= x / (s + n);
            sum += term;
            if (std::abs(term) < std::abs(sum) * eps) return sum * std::exp(log_prefactor);
        }
        throw TruncationError("lower_incomplete_gamma: series did not converge");
    }

    // Modified Lentz evaluation of the continued fraction for the upper function.
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < max_iter; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) {
            const double upper = std::exp(log_prefactor) * h;
            return gamma(s) - upper;
        }
    }
    throw TruncationError("lower_incomplete_gamma: continued fraction did not converge");
}

namespace {

// z and w = 1 - z are both supplied so callers that know w exactly keep its
// relative precision near z = 1.
double gauss_2f1_impl(double a, double b, double c, double z, double w, const SeriesConfig& cfg) {
    cfg.validate();
    if (is_nonpositive_integer(c)) throw DomainError("gauss_2f1: c must not be a non-positive integer");
    if (!(std::abs(z) < 1.0) || !(w > 0.0)) throw DomainError("gauss_2f1: requires |z| < 1");
    if (a == 0.0 || b == 0.0 || z == 0.0) return 1.0;

    if (std::abs(z) <= 0.5 || terminates(a, b)) return series_2f1(a, b, c, z, cfg);

    if (z < 0.0) {
        // Pfaff: maps z in (-1, -0.5) to z/(z-1) in (1/3, 1/2).
        return std::pow(w, -a) * series_2f1(a, c - b, c, z / (z - 1.0), cfg);
    }

    const double d = c - a - b;
    const double gap = integer_gap(d);
    if (gap <= 1e-12 * std::max(1.0, std::abs(a) + std::abs(b) + std::abs(c))) {
        throw UnsupportedError("gauss_2f1: logarithmic case c-a-b = " + std::to_string(d) + " with z > 0.5");
    }
    if (gap < kNearIntegerGap) {
        // The connection formula cancels catastrophically here; the defining
        // series still converges for |z| < 1.
        try {
            return series_2f1(a, b, c, z, cfg);
        } catch (const TruncationError&) {
            throw UnsupportedError("gauss_2f1: c-a-b = " + std::to_string(d) +
                                   " is too close to an integer for z = " + std::to_string(z));
        }
    }
    const double gc = gamma(c);
    const double first = gc * gamma(d) * recip_gamma(c - a) * recip_gamma(c - b);
    const double second = gc * gamma(-d) * recip_gamma(a) * recip_gamma(b);
    double value = 0.0;
    if (first != 0.0) value += first * series_2f1(a, b, 1.0 - d, w, cfg);
    if (second != 0.0) value += second * std::pow(w, d) * series_2f1(c - a, c - b, 1.0 + d, w, cfg);
    return value;
}

} // namespace

double gauss_2f1(double a, double b, double c, double z, const SeriesConfig& cfg) {
    return gauss_2f1_impl(a, b, c, z, 1.0 - z, cfg);
}

double gauss_2f1_complement(double a, double b, double c, double w, const SeriesConfig& cfg) {
    if (!(w > 0.0 && w < 2.0)) throw DomainError("gauss_2f1_complement: requires 0 < w < 2");
    return gauss_2f1_impl(a, b, c, 1.0 - w, w, cfg);
}

std::vector<double> gauss_2f1_partial_sums(double a, double b, double c, double z, int count) {
    if (is_nonpositive_integer(c)) throw DomainError("gauss_2f1: c must not be a non-positive integer");
    std::vector<double> sums;
    sums.reserve(static_cast<std::size_t>(std::max(count, 0)));
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < count; ++n) {
        sums.push_back(sum);
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        sum += term;
    }
    return sums;
}

double pochhammer(double a, int n) {
    if (n < 0) throw DomainError("pochhammer: n must be non-negative");
    double value = 1.0;
    for (int k = 0; k < n; ++k) value *= a + k;
    return value;
}

double q_pochhammer(double a, double q, double alpha, const SeriesConfig& cfg) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q_pochhammer: requires 0 < q < 1");
    if (alpha == 0.0 || a == 0.0) return 1.0;

    // Both products are run to the index where the larger of |a| q^k and
    // |a| q^(alpha+k) falls below the tail tolerance.
    const double lead = std::abs(a) * std::max(1.0, std::pow(q, alpha));
    const double needed = std::ceil(std::log(cfg.product_tail_tol / lead) / std::log(q));
    if (needed > 1e8) throw TruncationError("q_pochhammer: product truncation index too large");
    const long terms = std::max(1L, static_cast<long>(needed) + 1);

    double value = 1.0;
    double qk = 1.0;
    const double qa = std::pow(q, alpha);
    for (long k = 0; k < terms; ++k) {
        const double num = 1.0 - a * qk;
        const double den = 1.0 - a * qa * qk;
        if (den == 0.0) throw DomainError("q_pochhammer: zero factor in denominator product");
        value *= num / den;
        qk *= q;
    }
    return value;
}

double q_bracket_power(double t, double a, double q, int n) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q_bracket_power: requires 0 < q < 1");
    if (n < 0) throw DomainError("q_bracket_power: n must be non-negative");
    if (n == 0) return 1.0;
    if (t == 0.0 && a != 0.0) throw DomainError("q_bracket_power: t = 0 with a != 0");
    // t^n (a/t; q)_n = prod_{k<n} (t - a q^k)
    double value = 1.0;
    double qk = 1.0;
    for (int k = 0; k < n; ++k) {
        value *= t - a * qk;
        qk *= q;
    }
    return value;
}

double q_gamma(double q, double x, const SeriesConfig& cfg) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q_gamma: requires 0 < q < 1");
    if (!(x > 0.0)) throw DomainError("q_gamma: requires x > 0");
    // (q;q)_inf / (q^x;q)_inf == (q;q)_(x-1)
    return q_pochhammer(q, q, x - 1.0, cfg) * std::pow(1.0 - q, 1.0 - x);
}

} // namespace lfi
