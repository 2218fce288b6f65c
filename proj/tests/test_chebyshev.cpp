#include <doctest.h>

#include <cmath>
#include <random>

#include "lfi/chebyshev.hpp"
#include "lfi/operators.hpp"

using namespace lfi;

namespace {

const ScalarFunction kOne = ScalarFunction::constant(1.0);
const ScalarFunction kX = ScalarFunction::identity();

ScalarFunction on12(double a, double b) { return ScalarFunction::tabulated({1.0, 2.0}, {a, b}); }

ScalarFunction random_pl(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> V(lo, hi);
    std::vector<double> k, v;
    for (int i = 0; i <= 8; ++i) {
        k.push_back(i * 0.5);
        v.push_back(V(rng));
    }
    return ScalarFunction::piecewise_linear(k, v);
}

double rel_dev(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

} // namespace

TEST_SUITE("chebyshev") {

TEST_CASE("canonical values") {
    const auto D = build_discrete({1.0, 2.0});
    CHECK(chebyshev_difference(D, D, kOne, kOne, on12(1, 2), on12(1, 3)) == doctest::Approx(4.0).epsilon(1e-12));
    const auto R = build_riemann(0.0, 1.0);
    CHECK(std::abs(chebyshev_difference(R, R, kOne, kOne, kX, kX) - 1.0 / 6.0) <= 1e-12);
    CHECK(std::abs(chebyshev_difference_single(R, kOne, kX, kX) - 1.0 / 12.0) <= 1e-12);
}

TEST_CASE("constant factors cancel") {
    const auto A = build_riemann(0.0, 2.0, 16);
    const auto B = build_jackson(0.7, 2.0);
    const auto p = ScalarFunction::parse("1 + x"), q = ScalarFunction::parse("exp(-x)");
    const auto g = ScalarFunction::parse("sin(x)"), c = ScalarFunction::constant(2.5);
    CHECK(std::abs(chebyshev_difference(A, B, p, q, c, g)) <= 1e-13);
    CHECK(std::abs(chebyshev_difference_single(A, p, c, g)) <= 1e-13);
    CHECK(std::abs(triple_expansion(A, B, p, q, kX, g, c)) <= 1e-12);
    CHECK(std::abs(triple_expansion(A, B, p, q, c, g, kX)) <= 1e-12);
    CHECK(triple_tensor(A, B, p, q, g, g, kOne) == 0.0);
}

TEST_CASE("triple expansion on a two-point domain") {
    const auto D = build_discrete({1.0, 2.0});
    const double direct = triple_tensor(D, D, kOne, kOne, kX, kX, kX);
    double brute = 0.0;
    for (double x : {1.0, 2.0})
        for (double y : {1.0, 2.0}) brute += std::pow(x - y, 3);
    CHECK(direct == brute);
    CHECK(std::abs(triple_expansion(D, D, kOne, kOne, kX, kX, kX) - brute) <= 1e-12);
}

TEST_CASE("expansion matches the double sum") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 50; ++t) {
        std::vector<double> pa, pb;
        for (int i = 0; i < 6; ++i) pa.push_back(0.6 * i + 0.1 * (rng() % 5));
        for (int i = 0; i < 5; ++i) pb.push_back(0.7 * i + 0.1 * (rng() % 6));
        const auto A = build_discrete(pa);
        const auto B = build_discrete(pb);
        const auto p = random_pl(rng, 0.1, 2), q = random_pl(rng, 0.1, 2);
        const auto f = random_pl(rng, -1, 1), g = random_pl(rng, -1, 1), h = random_pl(rng, -1, 1);
        const auto P = sample_pair(A, B, p), Q = sample_pair(A, B, q);
        const auto F = sample_pair(A, B, f), G = sample_pair(A, B, g), H = sample_pair(A, B, h);
        double scale = 0.0;
        for (double v : triple_expansion_terms(A, B, P, Q, F, G, H)) scale += std::abs(v);
        CHECK(std::abs(triple_tensor(A, B, P, Q, F, G, H) - triple_expansion(A, B, P, Q, F, G, H)) <=
              1e-10 * scale);
        CHECK(std::abs(triple_tensor(A, B, P, Q, F, G, H) - triple_tensor(A, B, P, Q, G, F, H)) <= 1e-12 * scale);
    }
}

TEST_CASE("sign, bilinearity and symmetry") {
    std::mt19937_64 rng(5);
    const auto A = build_riemann_liouville(0.7, 2.0, 32);
    const auto B = build_riemann(0.0, 2.0, 32);
    const auto p = random_pl(rng, 0.1, 2), q = random_pl(rng, 0.1, 2);
    const auto f = ScalarFunction::parse("x^2"), g = ScalarFunction::parse("exp(x)");
    const auto gneg = ScalarFunction::parse("-exp(x)");
    CHECK(chebyshev_difference(A, B, p, q, f, g) >= 0.0);
    CHECK(chebyshev_difference(A, B, p, q, f, gneg) <= 0.0);
    const double base = chebyshev_difference(A, B, p, q, f, g);
    const auto p2 = ScalarFunction::builtin("3p", [p](double x) { return 3.0 * p(x); });
    const auto q2 = ScalarFunction::builtin("q/2", [q](double x) { return 0.5 * q(x); });
    CHECK(rel_dev(chebyshev_difference(A, B, p2, q, f, g), 3.0 * base) <= 1e-10);
    CHECK(rel_dev(chebyshev_difference(A, B, p, q2, f, g), 0.5 * base) <= 1e-10);
    CHECK(rel_dev(chebyshev_difference(B, A, q, p, f, g), base) <= 1e-12);
}

TEST_CASE("sampled form equals function form") {
    const auto A = build_riemann(0.0, 1.0, 12);
    const auto B = build_discrete({0.2, 0.5, 0.9});
    const auto f = ScalarFunction::parse("x^3"), g = ScalarFunction::parse("cos(x)");
    CHECK(chebyshev_difference(A, B, kOne, kX, f, g) ==
          chebyshev_difference(A, B, sample_pair(A, B, kOne), sample_pair(A, B, kX), sample_pair(A, B, f),
                               sample_pair(A, B, g)));
}

}
