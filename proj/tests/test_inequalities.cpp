#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lfi/chebyshev.hpp"
#include "lfi/inequalities.hpp"
#include "lfi/operators.hpp"

using namespace lfi;
using doctest::Approx;

namespace {

const ScalarFunction kOne = ScalarFunction::constant(1.0);
const ScalarFunction kX = ScalarFunction::identity();

ScalarFunction on12(double a, double b) { return ScalarFunction::tabulated({1.0, 2.0}, {a, b}); }
ScalarFunction fn(const char* text) { return ScalarFunction::parse(text); }

CheckerContext discrete12() {
    const auto D = build_discrete({1.0, 2.0});
    return CheckerContext{.A = D, .B = D, .tolerance = {}};
}

CheckerContext unit_riemann() {
    const auto R = build_riemann(0.0, 1.0);
    return CheckerContext{.A = R, .B = R, .tolerance = default_tolerance(FunctionalKind::Riemann)};
}

void holds(const InequalityReport& r) {
    CAPTURE(r.theorem);
    CAPTURE(r.lhs);
    CAPTURE(r.rhs);
    CHECK(r.verdict == Verdict::Holds);
}

void holds(const std::vector<InequalityReport>& rs) {
    for (const auto& r : rs) holds(r);
}

void tight(const InequalityReport& r) {
    holds(r);
    CHECK(std::abs(r.slack) <= r.tolerance.abs);
}

} // namespace

TEST_SUITE("inequalities") {

TEST_CASE("verdict rule") {
    const ToleranceSpec tol{1e-10, 1e-8};
    CHECK(judge(1.0, 1.0, 0.0, tol) == Verdict::Holds);
    CHECK(judge(1.0, 1.0, -5e-9, tol) == Verdict::Holds);
    CHECK(judge(1.0, 1.0, -2e-8, tol) == Verdict::Violated);
    CHECK(judge(0.0, 0.0, -2e-10, tol) == Verdict::Violated);
}

TEST_CASE("enum names round trip") {
    for (auto v : {Verdict::Holds, Verdict::Violated, Verdict::HypothesisFailed, Verdict::EvalError})
        CHECK(verdict_from_string(to_string(v)) == v);
    CHECK(to_string(Verdict::HypothesisFailed) == "HYPOTHESIS_FAILED");
    for (auto d : {Direction::GreaterEqual, Direction::LessEqual}) CHECK(direction_from_string(to_string(d)) == d);
    for (auto o : {Ordering::Synchronous, Ordering::Asynchronous}) CHECK(ordering_from_string(to_string(o)) == o);
}

TEST_CASE("chebyshev-two") {
    const auto r = check_chebyshev_two(discrete12(), on12(1, 2), on12(1, 3));
    holds(r);
    CHECK(r.lhs == Approx(28.0));
    CHECK(r.rhs == Approx(24.0));
    CHECK(r.slack == Approx(4.0));
    tight(check_chebyshev_two(discrete12(), ScalarFunction::constant(3.0), on12(1, 3)));
    const auto rev = check_chebyshev_two(discrete12(), on12(1, 2), on12(-1, -2), Ordering::Asynchronous);
    holds(rev);
    CHECK(rev.direction == Direction::LessEqual);
    const auto wrong = check_chebyshev_two(discrete12(), on12(1, 2), on12(-1, -2));
    CHECK(wrong.verdict == Verdict::HypothesisFailed);
    const auto rr = check_chebyshev_two(unit_riemann(), kX, kX);
    CHECK(std::abs(rr.slack - 1.0 / 6.0) <= 1e-9);
}

TEST_CASE("lipschitz-pair") {
    tight(check_lipschitz_pair(unit_riemann(), kX, kX, 1.0, kX, 1.0, kX));
    holds(check_lipschitz_pair(unit_riemann(), fn("sin(x)"), kX, 1.0, kX, 1.0, kX));
    const auto bad = check_lipschitz_pair(unit_riemann(), kX, kX, 0.1, kX, 1.0, kX);
    CHECK(bad.verdict == Verdict::HypothesisFailed);
    bool flagged = false;
    for (const auto& c : bad.hypothesis_checks) flagged |= !c.passed;
    CHECK(flagged);
}

TEST_CASE("m-g-lipschitz") {
    const auto same = check_m_g_lipschitz(unit_riemann(), fn("x^2"), fn("x^2"), 1.0);
    holds(same);
    CHECK(same.slack >= 0.0);
    holds(check_m_g_lipschitz(unit_riemann(), ScalarFunction::constant(2.0), fn("exp(x)"), 1.0));
    const auto D = build_discrete({1.0, 2.0, 3.0});
    const CheckerContext ctx{.A = D, .B = D, .tolerance = {}};
    const auto pts = std::vector<double>{1.0, 2.0, 3.0};
    holds(check_m_g_lipschitz(ctx, ScalarFunction::tabulated(pts, {1, 2, 2}), ScalarFunction::tabulated(pts, {1, 2, 3}),
                              1.0));
}

TEST_CASE("holder-pair") {
    holds(check_holder_pair(unit_riemann(), kX, kX, 1.0, 1.0, 1.0, 1.0));
    const auto flat = check_holder_pair(unit_riemann(), ScalarFunction::constant(1.0), kX, 1.0, 1.0, 0.5, 0.5);
    holds(flat);
    CHECK(flat.lhs == 0.0);
    holds(check_holder_pair(unit_riemann(), fn("sqrt(x)"), fn("x^0.7"), 1.0, 1.0, 0.5, 0.7));
    CHECK(check_holder_pair(unit_riemann(), kX, kX, 1.0, 1.0, 1.5, 1.0).verdict == Verdict::HypothesisFailed);
}

TEST_CASE("variable-bounds") {
    tight(check_variable_bounds(unit_riemann(), kX, kX, kX));
    holds(check_variable_bounds(discrete12(), on12(1, 2), on12(0, 1), on12(2, 3)));
    holds(check_variable_bounds(unit_riemann(), kX, fn("x - 0.1"), fn("x + 0.1")));
    CHECK(check_variable_bounds(unit_riemann(), kX, fn("x + 0.1"), fn("x + 0.2")).verdict ==
          Verdict::HypothesisFailed);
}

TEST_CASE("constant-bounds") {
    tight(check_constant_bounds(discrete12(), ScalarFunction::constant(1.5), 1.5, 1.5));
    const auto r = check_constant_bounds(discrete12(), on12(1, 2), 1.0, 2.0);
    holds(r);
    CHECK(r.lhs == Approx(18.0));
    CHECK(r.rhs == Approx(17.0));
    holds(check_constant_bounds(unit_riemann(), kX, 0.0, 1.0));
    CHECK(check_constant_bounds(unit_riemann(), kX, 0.0, 0.5).verdict == Verdict::HypothesisFailed);
}

TEST_CASE("near-function") {
    holds(check_near_function(unit_riemann(), fn("exp(x)"), fn("exp(x)"), 0.3));
    holds(check_near_function(discrete12(), on12(1, 2), on12(1.1, 1.9), 0.2));
    CHECK(check_near_function(discrete12(), on12(1, 2), on12(1.1, 1.9), 0.0).verdict == Verdict::HypothesisFailed);
}

TEST_CASE("four-bounds") {
    const auto rs = check_four_bounds(discrete12(), on12(1, 2), on12(2, 3), on12(0, 1), on12(2, 3), on12(1, 2),
                                      on12(3, 4));
    REQUIRE(rs.size() == 4);
    holds(rs);
    for (const auto& r : check_four_bounds(unit_riemann(), kX, fn("x^2"), kX, fn("x + 1"), fn("x^2"),
                                           fn("x^2 + 1")))
        holds(r);
    holds(check_four_bounds(unit_riemann(), kX, fn("x^2"), fn("x - 0.2"), fn("x + 0.2"), fn("x^2 - 0.2"),
                            fn("x^2 + 0.2")));
}

TEST_CASE("four-bounds equality witnesses") {
    // phi1 = f and psi1 = g zero the first three reports; the last one pairs phi2 with psi2
    const auto rs = check_four_bounds(unit_riemann(), kX, fn("x^2"), kX, fn("x + 1"), fn("x^2"), fn("x^2 + 1"));
    for (int k = 0; k < 3; ++k) CHECK(std::abs(rs[k].slack) <= rs[k].tolerance.abs);
    CHECK(rs[3].slack == Approx(1.0).epsilon(1e-12));
    for (const auto& r : check_four_bounds(unit_riemann(), kX, fn("x^2"), kX, kX, fn("x^2"), fn("x^2")))
        tight(r);
}

TEST_CASE("four-const-bounds") {
    holds(check_four_const_bounds(discrete12(), on12(1, 2), on12(2, 3), 1, 2, 2, 3));
    holds(check_four_const_bounds(unit_riemann(), kX, fn("x^2"), 0, 1, 0, 1));
    for (const auto& r : check_four_const_bounds(discrete12(), ScalarFunction::constant(1.0),
                                                 ScalarFunction::constant(2.0), 1, 1, 2, 2))
        tight(r);
}

TEST_CASE("young-bounds") {
    tight(check_young_bounds(unit_riemann(), kX, kX, kX, 2.0, 2.0));
    holds(check_young_bounds(discrete12(), on12(1, 2), on12(0, 1), on12(2, 3), 2.0, 2.0));
    holds(check_young_bounds(unit_riemann(), kX, fn("x - 0.3"), fn("x + 0.3"), 3.0, 1.5));
    CHECK(check_young_bounds(unit_riemann(), kX, kX, kX, 2.0, 3.0).verdict == Verdict::HypothesisFailed);
}

TEST_CASE("young-square") {
    tight(check_young_square(discrete12(), ScalarFunction::constant(2.0), 2.0, 2.0));
    holds(check_young_square(discrete12(), on12(1, 2), 1.0, 2.0));
    holds(check_young_square(unit_riemann(), kX, 0.0, 1.0));
}

TEST_CASE("young-four") {
    const auto f = on12(1, 2), g = on12(2, 3);
    const auto first = check_young_four(discrete12(), f, g, on12(0, 1), f, on12(1, 2), g, 2.0, 2.0);
    REQUIRE(first.size() == 4);
    tight(first[0]);
    holds(check_young_four(discrete12(), f, g, on12(0, 1), on12(2, 3), on12(1, 2), on12(3, 4), 2.0, 2.0));
    holds(check_young_four(unit_riemann(), kX, fn("x^2"), fn("x - 0.2"), fn("x + 0.2"), fn("x^2 - 0.2"),
                           fn("x^2 + 0.2"), 3.0, 1.5));
}

TEST_CASE("triple-positive-weight") {
    const auto f = on12(1, 2), g = on12(1, 3);
    const auto r = check_triple_positive_weight(discrete12(), f, g, kOne);
    holds(r);
    const auto two = check_chebyshev_two(discrete12(), f, g);
    CHECK(std::abs(r.slack - 2.0 * two.slack) <= 1e-10 * std::abs(two.slack));
    const auto rr = check_triple_positive_weight(unit_riemann(), fn("exp(x)"), fn("x^3"), kOne);
    const auto tr = check_chebyshev_two(unit_riemann(), fn("exp(x)"), fn("x^3"));
    CHECK(std::abs(rr.slack - 2.0 * tr.slack) <= 1e-10 * std::abs(tr.slack));
    CHECK(check_triple_positive_weight(discrete12(), f, g, on12(0, 1)).verdict == Verdict::HypothesisFailed);
    CHECK(check_triple_positive_weight(discrete12(), f, g, on12(-1, 1)).verdict == Verdict::HypothesisFailed);
}

TEST_CASE("triple-gruss") {
    holds(check_triple_gruss(discrete12(), ScalarFunction::constant(1.0), on12(1, 3), on12(0, 1), 1, 1, 1, 3, 0, 1));
    CHECK(check_triple_gruss(discrete12(), ScalarFunction::constant(1.0), on12(1, 3), on12(0, 1), 1, 1, 1, 3, 0, 1)
              .lhs == Approx(0.0));
    holds(check_triple_gruss(discrete12(), on12(1, 2), on12(1, 3), on12(0, 1), 1, 2, 1, 3, 0, 1));
    holds(check_triple_gruss(unit_riemann(), kX, fn("x^2"), fn("x^3"), 0, 1, 0, 1, 0, 1));
}

TEST_CASE("triple-lipschitz") {
    holds(check_triple_lipschitz(unit_riemann(), kX, kX, kX, kX, 1, 1, 1));
    const auto flat = check_triple_lipschitz(unit_riemann(), ScalarFunction::constant(0.5), kX, kX, kX, 1, 1, 1);
    holds(flat);
    CHECK(std::abs(flat.lhs) <= 1e-14);
    const auto s = fn("sin(x)");
    holds(check_triple_lipschitz(unit_riemann(), s, s, s, kX, 1, 1, 1));
    CHECK(check_triple_lipschitz(unit_riemann(), fn("3*x"), kX, kX, kX, 1, 1, 1).verdict ==
          Verdict::HypothesisFailed);
}

TEST_CASE("three-weights") {
    auto ctx = discrete12();
    const auto f = on12(1, 2), g = on12(1, 3);
    const auto r = check_three_weights(ctx, f, g);
    holds(r);
    tight(check_three_weights(ctx, ScalarFunction::constant(4.0), g));
    holds(check_three_weights(ctx, f, on12(3, 1), Ordering::Asynchronous));
    CHECK(check_three_weights(ctx, f, on12(3, 1)).verdict == Verdict::HypothesisFailed);
}

TEST_CASE("three-weights slack decomposes into pairwise chebyshev slacks") {
    const auto R = build_riemann_liouville(0.8, 2.0, 32);
    const auto S = build_riemann(0.0, 2.0, 32);
    CheckerContext ctx{.A = R, .B = S, .tolerance = {}};
    ctx.p = fn("1 + x");
    ctx.q = fn("exp(-x)");
    ctx.r = fn("2 + sin(x)");
    const auto f = fn("x^2"), g = fn("exp(x)");
    const auto r = check_three_weights(ctx, f, g);
    holds(r);
    const double s1 = chebyshev_difference(R, S, ctx.q, ctx.r, f, g);
    const double s2 = chebyshev_difference(R, S, ctx.p, ctx.r, f, g);
    const double s3 = chebyshev_difference(R, S, ctx.p, ctx.q, f, g);
    const double expected = apply(R, ctx.p) * s1 + apply(R, ctx.q) * s2 + apply(R, ctx.r) * s3;
    CHECK(std::abs(r.slack - expected) <= 1e-10 * std::abs(expected));
    auto d = discrete12();
    const auto dr = check_three_weights(d, on12(1, 2), on12(1, 3));
    const double two = chebyshev_difference(d.A, d.B, kOne, kOne, on12(1, 2), on12(1, 3));
    CHECK(dr.slack == Approx(3.0 * 2.0 * two));
}

TEST_CASE("negative weights are a hypothesis failure") {
    auto ctx = discrete12();
    ctx.p = on12(1, -1);
    CHECK(check_chebyshev_two(ctx, on12(1, 2), on12(1, 3)).verdict == Verdict::HypothesisFailed);
}

TEST_CASE("evaluation errors become reports") {
    const auto r = check_chebyshev_two(unit_riemann(), fn("log(x - 0.5)"), kX);
    CHECK(r.verdict == Verdict::EvalError);
    CHECK(r.instance.count("error") == 1);
}

TEST_CASE("hadamard example") {
    holds(check_hadamard_example(1.0, 1.0, std::numbers::e, kX, kX, 1.0, 1.0, 64, {1e-7, 1e-5}));
    const auto c = check_hadamard_example(0.5, 2.0, 3.0, ScalarFunction::constant(1.0), kX, 1.0, 1.0, 64,
                                          {1e-7, 1e-5});
    holds(c);
    CHECK(std::abs(c.lhs) <= 1e-12);
    for (double a : {0.5, 1.0, 2.0})
        for (double b : {1.0, 2.0}) {
            const double t = 2.5;
            const auto A = build_hadamard(a, t, 64), B = build_hadamard(b, t, 64);
            const double direct = tensor_apply(A, B, [](double x, double y) { return (x - y) * (x - y); });
            CHECK(std::abs(hadamard_example_rhs(a, b, t, 1.0, 1.0) - direct) <= 1e-8 * direct);
        }
    CHECK(check_hadamard_example(1.0, 1.0, 2.0, fn("3*x"), kX, 1.0, 1.0, 64, {1e-7, 1e-5}).verdict ==
          Verdict::HypothesisFailed);
}

TEST_CASE("bound spec validation") {
    BoundSpec b;
    b.m = 2.0;
    b.M = 1.0;
    CHECK_THROWS_AS(b.validate(), DomainError);
    b = {};
    b.theta1 = 2.0;
    b.theta2 = 2.0;
    CHECK_NOTHROW(b.validate());
    b.r = 1.5;
    CHECK_THROWS_AS(b.validate(), DomainError);
}

TEST_CASE("checker names") {
    CHECK(checker_names().size() == 17);
    CHECK(checker_names().front() == "chebyshev-two");
    CHECK(checker_names().back() == "hadamard-example");
}

TEST_CASE("reports are deterministic") {
    const auto a = check_young_four(unit_riemann(), kX, fn("x^2"), fn("x - 0.2"), fn("x + 0.2"),
                                    fn("x^2 - 0.2"), fn("x^2 + 0.2"), 3.0, 1.5);
    const auto b = check_young_four(unit_riemann(), kX, fn("x^2"), fn("x - 0.2"), fn("x + 0.2"),
                                    fn("x^2 - 0.2"), fn("x^2 + 0.2"), 3.0, 1.5);
    CHECK(a == b);
}

}
