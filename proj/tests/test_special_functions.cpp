#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lfi/errors.hpp"
#include "lfi/special_functions.hpp"

using namespace lfi;
using doctest::Approx;

namespace {

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

} // namespace

TEST_SUITE("special_functions") {

TEST_CASE("gamma at integers and one half") {
    CHECK(lfi::gamma(1.0) == Approx(1.0).epsilon(1e-15));
    CHECK(lfi::gamma(5.0) == Approx(24.0).epsilon(1e-14));
    CHECK(close(lfi::gamma(0.5), std::sqrt(std::numbers::pi), 1e-13));
    CHECK(close(lfi::gamma(0.01), 99.43258511915060, 1e-12));
    CHECK(close(lfi::gamma(170.0), 4.269068009004705e304, 1e-12));
}

TEST_CASE("gamma poles and overflow") {
    CHECK_THROWS_AS(lfi::gamma(0.0), DomainError);
    CHECK_THROWS_AS(lfi::gamma(-3.0), DomainError);
    CHECK_THROWS_AS(lfi::gamma(172.0), RangeError);
}

TEST_CASE("gamma recurrence on random arguments") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(0.1, 50.0);
    for (int i = 0; i < 100; ++i) {
        const double x = U(rng);
        CHECK(std::abs(lfi::gamma(x + 1.0) - x * lfi::gamma(x)) <= 1e-10 * lfi::gamma(x + 1.0));
    }
}

TEST_CASE("log_gamma agrees with gamma") {
    for (double x : {0.3, 1.7, 12.5, 80.0}) CHECK(close(std::exp(log_gamma(x)), lfi::gamma(x), 1e-12));
}

TEST_CASE("lower incomplete gamma") {
    CHECK(lower_incomplete_gamma(2.5, 0.0) == 0.0);
    for (double x : {0.5, 1.0, 2.0}) CHECK(close(lower_incomplete_gamma(1.0, x), 1.0 - std::exp(-x), 1e-12));
    CHECK(close(lower_incomplete_gamma(2.0, 1.0), 0.264241117657115356809, 1e-12));
    CHECK(close(lower_incomplete_gamma(0.5, 2.0), 1.691806732945198336510, 1e-12));
    CHECK(close(lower_incomplete_gamma(3.5, 10.0), 3.304840958802281964850, 1e-12));
    CHECK_THROWS_AS(lower_incomplete_gamma(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(lower_incomplete_gamma(-1.0, 1.0), DomainError);
}

TEST_CASE("lower incomplete gamma is nondecreasing and tends to gamma") {
    for (double s : {0.5, 1.0, 3.3, 10.0}) {
        double prev = 0.0;
        for (double x = 0.0; x <= 50.0; x += 0.25) {
            const double v = lower_incomplete_gamma(s, x);
            CHECK(v >= prev);
            prev = v;
        }
        CHECK(std::abs(lower_incomplete_gamma(s, 50.0) - lfi::gamma(s)) <= 1e-8 * lfi::gamma(s));
    }
}

TEST_CASE("gauss_2f1 trivial and closed-form cases") {
    CHECK(gauss_2f1(1.3, 0.7, 2.1, 0.0) == 1.0);
    CHECK(gauss_2f1(0.0, 0.7, 2.1, 0.8) == 1.0);
    CHECK(close(gauss_2f1(1.0, 1.0, 2.0, 0.5), 2.0 * std::log(2.0), 1e-13));
    for (double z : {-0.9, -0.3, 0.2, 0.45})
        CHECK(close(gauss_2f1(1.0, 1.0, 2.0, z), -std::log(1.0 - z) / z, 1e-11));
}

TEST_CASE("gauss_2f1 against high-precision reference values") {
    CHECK(close(gauss_2f1(1.5, 0.4, 1.2, 0.3), 1.198760171221285341, 1e-12));
    CHECK(close(gauss_2f1(1.5, 0.4, 1.2, 0.9), 3.591255778146400904, 1e-11));
    CHECK(close(gauss_2f1(1.5, 0.4, 1.2, 0.99), 15.888526211215139497, 1e-10));
    CHECK(close(gauss_2f1(1.5, 0.4, 1.2, -0.7), 0.771707080660906558, 1e-12));
    CHECK(close(gauss_2f1(1.5, 0.4, 1.2, -0.95), 0.723063614859991353, 1e-11));
    CHECK(close(gauss_2f1(2.3, -0.6, 0.7 + 2e-5, 0.8), -2.202228712088380051, 1e-9));
    CHECK(close(gauss_2f1(1.3, 0.7, 2.0 + 1e-6, 0.9), 2.380438643852774956, 1e-9));
}

TEST_CASE("gauss_2f1_complement keeps precision near z = 1") {
    CHECK(close(gauss_2f1_complement(1.5, 0.4, 1.2, 1e-12), 152292315.876104598963, 1e-9));
    CHECK(close(gauss_2f1_complement(1.5, 0.4, 1.2, 1e-6), 9609.766740799212915, 1e-9));
    CHECK(close(gauss_2f1_complement(1.5, 0.4, 1.2, 0.1), 3.591255778146400297, 1e-12));
    CHECK_THROWS_AS(gauss_2f1_complement(1.5, 0.4, 1.2, 0.0), DomainError);
}

TEST_CASE("gauss_2f1 errors") {
    CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, -2.0, 0.3), DomainError);
    CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 2.0, 1.0), DomainError);
    // c - a - b = 0 has a logarithmic connection formula
    CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 2.0, 0.9), UnsupportedError);
    CHECK_THROWS_AS(gauss_2f1(2.3, -0.6, 0.7, 0.8), UnsupportedError);
    SeriesConfig tiny;
    tiny.max_terms = 100;
    CHECK_THROWS_AS(gauss_2f1(200.0, 200.0, 0.5, 0.45, tiny), TruncationError);
}

TEST_CASE("gauss_2f1 partial sums increase for positive parameters") {
    const auto sums = gauss_2f1_partial_sums(0.7, 1.3, 2.2, 0.45, 40);
    REQUIRE(sums.size() == 40);
    for (std::size_t i = 1; i < sums.size(); ++i) CHECK(sums[i] > sums[i - 1]);
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(2.7, 0) == 1.0);
    CHECK(pochhammer(3.0, 2) == 12.0);
    CHECK(pochhammer(0.5, 3) == Approx(1.875).epsilon(1e-15));
}

TEST_CASE("q-pochhammer") {
    CHECK(q_pochhammer(0.4, 0.6, 0.0) == 1.0);
    CHECK(q_pochhammer(0.0, 0.6, 2.7) == 1.0);
    CHECK(close(q_pochhammer(0.3, 0.5, 2.0), 0.7 * 0.85, 1e-14));
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> A(-0.9, 0.9), Q(0.05, 0.95);
    for (int i = 0; i < 100; ++i) {
        const double a = A(rng), q = Q(rng);
        const int n = static_cast<int>(rng() % 8);
        double prod = 1.0;
        for (int k = 0; k < n; ++k) prod *= 1.0 - a * std::pow(q, k);
        CHECK(std::abs(q_pochhammer(a, q, n) - prod) <= 1e-10 * std::max(1.0, std::abs(prod)));
    }
}

TEST_CASE("q bracket power") {
    CHECK(close(q_bracket_power(1.7, 0.0, 0.4, 3), std::pow(1.7, 3), 1e-15));
    CHECK(q_bracket_power(1.7, 0.6, 0.4, 0) == 1.0);
    CHECK(close(q_bracket_power(1.7, 0.6, 0.4, 1), 1.1, 1e-14));
    CHECK(close(q_bracket_power(2.0, 0.5, 0.5, 2), (2.0 - 0.5) * (2.0 - 0.25), 1e-14));
    CHECK_THROWS_AS(q_bracket_power(0.0, 0.5, 0.5, 2), DomainError);
}

TEST_CASE("q-gamma") {
    CHECK(close(q_gamma(0.3, 1.0), 1.0, 1e-13));
    CHECK(close(q_gamma(0.3, 2.0), 1.0, 1e-13));
    CHECK(close(q_gamma(0.7, 1.2), 0.93065256599055156, 1e-12));
    CHECK(std::abs(q_gamma(0.999, 3.0) - 2.0) <= 1e-2);
    for (double q : {0.2, 0.5, 0.9})
        for (double x : {0.4, 1.3, 3.7})
            CHECK(close(q_gamma(q, x + 1.0), (1.0 - std::pow(q, x)) / (1.0 - q) * q_gamma(q, x), 1e-9));
}

TEST_CASE("series configuration validation") {
    SeriesConfig c;
    CHECK_NOTHROW(c.validate());
    c.rel_tol = 0.1;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = SeriesConfig{};
    c.max_terms = 10;
    CHECK_THROWS_AS(c.validate(), DomainError);
}

}
