#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "lfi/expression.hpp"

using namespace lfi;
using namespace lfi::expr;

namespace {

struct Golden {
    const char* text;
    double x;
    double value;
};

// Hand-evaluated reference values.
const Golden kGolden[] = {
    {"x^2+1", 2.0, 5.0},
    {"2+3*x", 1.0, 5.0},
    {"exp(0)", 7.0, 1.0},
    {"abs(x)", -3.0, 3.0},
    {"x^0.5", 4.0, 2.0},
    {"-x^2", 3.0, -9.0},
    {"2^-x", 1.0, 0.5},
    {"2^3^2", 0.0, 512.0},
    {"(1+x)*(1-x)", 3.0, -8.0},
    {"10/4/5", 0.0, 0.5},
    {"8-3-2", 0.0, 3.0},
    {"1.5e2+x", 0.5, 150.5},
    {"2.5E-1*x", 4.0, 1.0},
    {"sqrt(x)+log(1)", 9.0, 3.0},
    {"pow(x, 3)", 2.0, 8.0},
    {"min(x, 2, -1)", 5.0, -1.0},
    {"max(x, 2)", 5.0, 5.0},
    {"sin(0)+cos(0)", 1.3, 1.0},
    {"--x", 4.0, 4.0},
    {"x*-2", 4.0, -8.0},
};

NodePtr random_ast(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
    std::uniform_real_distribution<double> num(-3.0, 3.0);
    switch (pick(rng)) {
    case 0: return make_constant(std::round(num(rng) * 100.0) / 100.0);
    case 1: return make_variable();
    case 2: return make_negate(random_ast(rng, depth - 1));
    case 3: return make_binary('+', random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    case 4: return make_binary('-', random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    case 5: return make_binary('*', random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    case 6: {
        const char* names[] = {"sin", "cos", "exp", "abs"};
        return make_call(names[rng() % 4], {random_ast(rng, depth - 1)});
    }
    default:
        return make_call(rng() % 2 ? "min" : "max", {random_ast(rng, depth - 1), random_ast(rng, depth - 1)});
    }
}

bool same_value(double a, double b) {
    if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
    return a == b || std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}

double eval_or_nan(const Expr& e, double x) {
    try {
        return eval(e, x);
    } catch (const EvalError&) {
        return std::nan("");
    }
}

} // namespace

TEST_SUITE("expression") {

TEST_CASE("golden table") {
    for (const auto& g : kGolden) {
        CAPTURE(g.text);
        CHECK(eval(parse(g.text), g.x) == doctest::Approx(g.value).epsilon(1e-14));
    }
}

TEST_CASE("parse errors carry the offset") {
    try {
        parse("log(");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("2x"), ParseError);
    CHECK_THROWS_AS(parse("x +"), ParseError);
    CHECK_THROWS_AS(parse("foo(x)"), ParseError);
    CHECK_THROWS_AS(parse("sin(x, x)"), ParseError);
    CHECK_THROWS_AS(parse("pow(x)"), ParseError);
    CHECK_THROWS_AS(parse("0x1f"), ParseError);
    CHECK_THROWS_AS(parse("(x"), ParseError);
    CHECK_THROWS_AS(parse("x)"), ParseError);
}

TEST_CASE("evaluation errors name the failing sub-expression") {
    CHECK_THROWS_AS(eval(parse("log(x)"), -1.0), EvalError);
    CHECK_THROWS_AS(eval(parse("sqrt(x)"), -1.0), EvalError);
    CHECK_THROWS_AS(eval(parse("1/x"), 0.0), EvalError);
    try {
        eval(parse("1 + log(x - 2)"), 1.0);
        FAIL("expected an evaluation error");
    } catch (const EvalError& e) {
        CHECK(std::string(e.what()).find("log") != std::string::npos);
    }
}

TEST_CASE("print round trip on random trees") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> X(-2.0, 2.0);
    for (int t = 0; t < 100; ++t) {
        const Expr original(random_ast(rng, 5));
        const std::string text = print(original);
        CAPTURE(text);
        const Expr reparsed = parse(text);
        for (int i = 0; i < 100; ++i) {
            const double x = X(rng);
            CHECK(same_value(eval_or_nan(original, x), eval_or_nan(reparsed, x)));
        }
    }
}

TEST_CASE("parsing is total") {
    const std::string alphabet = "x0123456789.eE+-*/^(),sincoexplgabqrtmwd ";
    std::mt19937_64 rng(99);
    int parsed = 0, rejected = 0;
    for (int t = 0; t < 20000; ++t) {
        std::string s;
        const int len = static_cast<int>(rng() % 16);
        for (int i = 0; i < len; ++i) s += alphabet[rng() % alphabet.size()];
        try {
            parse(s);
            ++parsed;
        } catch (const ParseError&) {
            ++rejected;
        }
    }
    CHECK(parsed + rejected == 20000);
    CHECK(parsed > 0);
}

TEST_CASE("known functions") {
    for (const char* name : {"exp", "log", "sin", "cos", "abs", "sqrt", "pow", "min", "max"})
        CHECK(is_known_function(name));
    CHECK_FALSE(is_known_function("tan"));
}

TEST_CASE("expressions are shareable across copies") {
    const Expr e = parse("x^2");
    const Expr copy = e;
    CHECK(copy(3.0) == 9.0);
    CHECK(e(3.0) == 9.0);
}

}
