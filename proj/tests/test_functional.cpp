#include <doctest.h>

#include <cmath>
#include <random>

#include "lfi/functional.hpp"
#include "lfi/operators.hpp"

using namespace lfi;
using doctest::Approx;

TEST_SUITE("functional") {

TEST_CASE("domains") {
    const auto d = Domain::interval(0.0, 2.0);
    const auto s = d.sample(5);
    REQUIRE(s.size() == 5);
    CHECK(s.front() == 0.0);
    CHECK(s.back() == 2.0);
    CHECK_THROWS(Domain::interval(1.0, 1.0));
    CHECK_THROWS(Domain::point_set({}));
    CHECK_THROWS(Domain::point_set({1.0, 1.0}));
    const auto g = Domain::q_grid(1.0, 0.5, 4);
    REQUIRE(g.points().size() == 4);
    CHECK(g.points().front() == Approx(0.125));
    CHECK(g.points().back() == Approx(1.0));
}

TEST_CASE("scalar function variants") {
    CHECK(ScalarFunction()(3.0) == 0.0);
    CHECK(ScalarFunction::constant(2.5)(-7.0) == 2.5);
    CHECK(ScalarFunction::identity()(1.25) == 1.25);
    CHECK(ScalarFunction::parse("x^2")(3.0) == 9.0);
    const auto tab = ScalarFunction::tabulated({1.0, 2.0}, {5.0, 7.0});
    CHECK(tab(2.0) == 7.0);
    CHECK_THROWS_AS(tab(1.5), EvalError);
    const auto pl = ScalarFunction::piecewise_linear({0.0, 1.0, 2.0}, {0.0, 2.0, 1.0});
    CHECK(pl(0.5) == Approx(1.0));
    CHECK(pl(1.5) == Approx(1.5));
    CHECK(pl(-1.0) == 0.0);
    CHECK(pl(5.0) == 1.0);
    CHECK(ScalarFunction::builtin("sq", [](double x) { return x * x; })(4.0) == 16.0);
}

TEST_CASE("tolerance spec") {
    ToleranceSpec t;
    CHECK_NOTHROW(t.validate());
    CHECK(t.bound(2.0, -3.0) == Approx(1e-10 + 3e-8));
    t.abs = -1.0;
    CHECK_THROWS_AS(t.validate(), DomainError);
    t = {0.0, 0.0};
    CHECK_THROWS_AS(t.validate(), DomainError);
    CHECK(default_tolerance(FunctionalKind::Discrete).abs == 1e-10);
    CHECK(default_tolerance(FunctionalKind::QSaigo).rel == 1e-8);
    CHECK(default_tolerance(FunctionalKind::Riemann).abs == 1e-7);
    CHECK(default_tolerance(FunctionalKind::Hadamard).rel == 1e-5);
}

TEST_CASE("kind names round trip") {
    for (auto k : {FunctionalKind::Discrete, FunctionalKind::Riemann, FunctionalKind::RiemannLiouville,
                   FunctionalKind::Hadamard, FunctionalKind::Hypergeometric, FunctionalKind::Saigo,
                   FunctionalKind::ErdelyiKober, FunctionalKind::QSaigo, FunctionalKind::QRiemannLiouville,
                   FunctionalKind::Jackson, FunctionalKind::TimeScaleDelta})
        CHECK(functional_kind_from_string(to_string(k)) == k);
    CHECK_THROWS(functional_kind_from_string("nope"));
    CHECK(is_exact_kind(FunctionalKind::Jackson));
    CHECK_FALSE(is_exact_kind(FunctionalKind::Saigo));
}

TEST_CASE("construction rejects negative or non-finite weights") {
    const FunctionalParams p;
    CHECK_THROWS_AS(FunctionalSpec(FunctionalKind::Discrete, p, {1.0, 2.0}, {1.0, -1e-3},
                                   Domain::point_set({1.0, 2.0})),
                    ConstructionError);
    CHECK_THROWS(FunctionalSpec(FunctionalKind::Discrete, p, {1.0, 2.0}, {1.0},
                                Domain::point_set({1.0, 2.0})));
    CHECK_THROWS(FunctionalSpec(FunctionalKind::Discrete, p, {1.0}, {NAN}, Domain::point_set({1.0})));
}

TEST_CASE("apply") {
    const auto D = build_discrete({1.0, 2.0, 3.0});
    CHECK(apply(D, ScalarFunction::identity()) == 6.0);
    CHECK(apply(D, ScalarFunction()) == 0.0);
    CHECK(D.mass() == 3.0);
    const auto R = build_riemann(0.0, 1.0);
    CHECK(std::abs(apply(R, ScalarFunction::parse("x^2")) - 1.0 / 3.0) <= 1e-12);
    CHECK(apply(R, ScalarFunction()) == 0.0);
}

TEST_CASE("evaluation failures at a node name the node") {
    const auto R = build_riemann(0.0, 1.0, 8);
    try {
        apply(R, ScalarFunction::parse("log(x - 0.5)"));
        FAIL("expected an evaluation error");
    } catch (const EvalError& e) {
        CHECK(std::string(e.what()).find("node") != std::string::npos);
    }
}

TEST_CASE("pairwise sum") {
    std::vector<double> v(1000, 0.1);
    CHECK(pairwise_sum(v) == Approx(100.0).epsilon(1e-14));
    CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
}

TEST_CASE("tensor apply") {
    const auto A = build_riemann(0.0, 1.0);
    const auto B = build_discrete({1.0, 2.0}, std::vector<double>{0.5, 1.5});
    const auto f = ScalarFunction::parse("exp(x)");
    const auto g = ScalarFunction::parse("x^2 + 1");
    const double sep = tensor_apply(A, B, [&](double x, double y) { return f(x) * g(y); });
    const double prod = apply(A, f) * apply(B, g);
    CHECK(std::abs(sep - prod) <= 1e-12 * std::abs(prod));
    const double one = tensor_apply(A, B, [](double, double) { return 1.0; });
    CHECK(std::abs(one - A.mass() * B.mass()) <= 1e-12 * A.mass() * B.mass());
    const double fx = tensor_apply(A, B, [&](double x, double) { return f(x); });
    CHECK(std::abs(fx - apply(A, f) * B.mass()) <= 1e-12 * std::abs(fx));
    // |x - y| on the unit square integrates to 1/3
    const auto R = build_riemann(0.0, 1.0, 16, 64);
    CHECK(tensor_apply(R, R, [](double x, double y) { return std::abs(x - y); }) == Approx(1.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("linearity on every kind") {
    const std::vector<FunctionalSpec> specs = {
        build_discrete({0.5, 1.0, 2.0}),
        build_riemann(0.0, 1.0),
        build_riemann_liouville(0.5, 1.0, 64),
        build_hadamard(1.5, 3.0),
        build_hypergeometric(1.2, 0.3, -0.4, 0.2, 1.5),
        build_saigo(1.2, 0.3, -0.4, 1.5),
        build_erdelyi_kober(0.7, -0.35, 1.0),
        build_q_saigo(0.8, 0.5, -0.5, 0.5, 1.0),
        build_q_riemann_liouville(0.5, 0.7, 1.0),
        build_jackson(0.6, 1.0),
        build_time_scale_delta({0.0, 0.5, 1.5, 2.0}),
    };
    for (const auto& A : specs) {
        CAPTURE(A.describe());
        const auto rep = check_linearity(A, 50, 3, {1e-10, 1e-10});
        CHECK(rep.passed);
        CHECK(rep.statistic <= 1e-12 * std::max(1.0, rep.scale));
    }
    const auto zero = check_linearity(build_discrete({1.0}), 1, 0);
    CHECK(zero.passed);
}

TEST_CASE("isotonicity") {
    const auto QS = build_q_saigo(0.8, 0.5, -0.5, 0.5, 1.0);
    for (double w : QS.weights()) CHECK(w >= 0.0);
    const auto rep = check_isotonicity(QS, 100, 17);
    CHECK(rep.passed);
    CHECK(rep.statistic >= 0.0);
    CHECK(apply(build_riemann(0.0, 1.0), ScalarFunction::constant(1.0)) > 0.0);
}

TEST_CASE("synchronous sampling") {
    const auto d = Domain::interval(0.0, 1.0);
    const auto x = ScalarFunction::identity();
    CHECK(check_synchronous(x, x, d, 100));
    CHECK(check_synchronous(x, ScalarFunction::parse("x^3"), d, 100));
    CHECK_FALSE(check_synchronous(x, ScalarFunction::parse("-x"), d, 100));
}

}
