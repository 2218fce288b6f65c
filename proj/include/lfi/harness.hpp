#pragma once

// Random instances whose hypotheses hold by construction, and the suite that
// runs every checker over every functional kind.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lfi/functional.hpp"
#include "lfi/inequalities.hpp"

namespace lfi {

using Rng = std::mt19937_64;

/// Deterministic per-instance seed from the suite seed and the instance coordinates.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view kind, std::string_view checker, int trial);

/// Constants a generator used to guarantee its hypothesis.
struct Certificate {
    std::string recipe;
    std::map<std::string, double> constants;
};

template <class T>
struct Certified {
    T value;
    Certificate certificate;
};

using FunctionPair = std::pair<ScalarFunction, ScalarFunction>;

/// Random piecewise-linear function on [lo, hi] with 16 equally spaced knots
/// and values uniform in [vlo, vhi]; constant beyond the ends.
ScalarFunction random_piecewise(Rng& rng, double lo, double hi, double vlo, double vhi);

/// f = phi1(u), g = phi2(u) with phi1, phi2 increasing piecewise-linear maps
/// (slopes in [0.2, 2]) and u a shared random function. `synchronous = false`
/// negates g, which yields an oppositely ordered pair.
Certified<FunctionPair> gen_synchronous_pair(Rng& rng, const Domain& domain, bool synchronous = true);

/// f = m + (M - m) clip(s, 0, 1). Throws DomainError when m > M.
Certified<ScalarFunction> gen_bounded(Rng& rng, double m, double M, const Domain& domain);

/// f = M s(h(x)) with s piecewise-linear, slopes in [-1, 1]; f is M-h-Lipschitz.
/// `tight` uses s = id.
Certified<ScalarFunction> gen_lipschitz(Rng& rng, double M, const ScalarFunction& h, const Domain& domain,
                                        bool tight = false);

/// f = H (lambda |x - c|^r + (1 - lambda) s(x) / D^(1-r)) with s 1-Lipschitz and D
/// the domain diameter; f is r-Holder with constant H.
Certified<ScalarFunction> gen_holder(Rng& rng, double H, double r, const Domain& domain);

struct InstanceSpec {
    std::uint64_t seed = 0;
    FunctionalKind kind = FunctionalKind::Discrete;
    std::string checker;
    int trial = 0;
    /// Node count or truncation; 0 selects the suite default for the kind.
    int resolution = 0;
    /// Resolution doublings applied on top of `resolution`.
    int refine = 0;
    /// Scale applied to every generated function and its certificate.
    double amplitude = 1.0;
    /// 1 draws parameters over the full range, 0 pins them to the range centre.
    double param_shrink = 1.0;
    std::optional<ToleranceSpec> tolerance;
    /// Negative control: break the checker's hypothesis after generation.
    bool corrupt = false;
};

/// Default resolution: 32 quadrature nodes, 128 q-Saigo terms, automatic
/// Jackson truncation; unused for Discrete and Delta.
int default_resolution(FunctionalKind kind);

/// Builds the functionals, functions and constants of an instance and runs its
/// checker. Returns one report, or four for the four-display checkers.
std::vector<InequalityReport> run_instance(const InstanceSpec& spec);

/// Greedy reduction of a violating instance: halves amplitude, resolution and
/// the parameter range while some report stays VIOLATED. Non-violating
/// instances are returned unchanged.
InstanceSpec shrink(const InstanceSpec& spec, int max_steps = 40);

struct SuiteConfig {
    int trials = 1000;
    std::uint64_t seed = 1;
    std::vector<FunctionalKind> kinds;
    /// Empty selects all checkers.
    std::vector<std::string> checkers;
    std::optional<ToleranceSpec> tolerance;
    /// 0 selects the per-kind default.
    int resolution = 0;
    /// Resolution doublings allowed on quadrature kinds before a violation is reported.
    int max_doublings = 2;
    int threads = 1;
    bool corrupt = false;

    /// The kinds of the default acceptance run.
    static std::vector<FunctionalKind> default_kinds();
    /// Throws DomainError on invalid settings.
    void validate() const;
};

/// One flattened report row.
struct ReportRow {
    std::string theorem;
    FunctionalKind kind = FunctionalKind::Discrete;
    int trial = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    Verdict verdict = Verdict::Holds;
};

struct CellSummary {
    std::string checker;
    FunctionalKind kind = FunctionalKind::Discrete;
    int trials = 0;
    int reports = 0;
    int holds = 0;
    int violations = 0;
    int hypothesis_failures = 0;
    int eval_errors = 0;
    /// Trials that needed at least one resolution doubling.
    int doubled = 0;
    double min_slack = 0.0;
    double mean_slack = 0.0;
    /// Report with the smallest slack (or the first non-HOLDS report).
    std::optional<InequalityReport> worst;
    std::optional<InstanceSpec> worst_instance;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<CellSummary> cells;
    std::vector<ReportRow> rows;
    int violations = 0;
    int hypothesis_failures = 0;
    int eval_errors = 0;
    double min_slack = 0.0;
    double wall_seconds = 0.0;
};

SuiteReport run_suite(const SuiteConfig& config);

} // namespace lfi
