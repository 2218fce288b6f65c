#include "lfi/expression.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <utility>

namespace lfi::expr {

namespace {

constexpr int kMaxDepth = 200;

struct FunctionInfo {
    std::string_view name;
    int min_args;
    int max_args; // -1: unbounded
};

constexpr std::array<FunctionInfo, 9> kFunctions = {{
    {"exp", 1, 1},
    {"log", 1, 1},
    {"sin", 1, 1},
    {"cos", 1, 1},
    {"abs", 1, 1},
    {"sqrt", 1, 1},
    {"pow", 2, 2},
    {"min", 2, -1},
    {"max", 2, -1},
}};

const FunctionInfo* find_function(std::string_view name) {
    for (const auto& f : kFunctions)
        if (f.name == name) return &f;
    return nullptr;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse_all() {
        NodePtr e = parse_expr(0);
        skip_ws();
        if (pos_ < text_.size()) fail("operator or end of input");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::string expected) const { fail_at(pos_, std::move(expected)); }

    [[noreturn]] void fail_at(std::size_t at, std::string expected) const {
        std::string found = at < text_.size() ? "'" + std::string(1, text_[at]) + "'" : "end of input";
        throw ParseError(at, std::move(expected), std::move(found));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail("'" + std::string(1, c) + "'");
    }

    void check_depth(int depth) const {
        if (depth > kMaxDepth) fail("shallower nesting (limit " + std::to_string(kMaxDepth) + ")");
    }

    NodePtr parse_expr(int depth) {
        check_depth(depth);
        NodePtr lhs = parse_term(depth + 1);
        for (;;) {
            skip_ws();
            if (accept('+'))
                lhs = make_binary('+', lhs, parse_term(depth + 1));
            else if (accept('-'))
                lhs = make_binary('-', lhs, parse_term(depth + 1));
            else
                return lhs;
        }
    }

    NodePtr parse_term(int depth) {
        check_depth(depth);
        NodePtr lhs = parse_factor(depth + 1);
        for (;;) {
            if (accept('*'))
                lhs = make_binary('*', lhs, parse_factor(depth + 1));
            else if (accept('/'))
                lhs = make_binary('/', lhs, parse_factor(depth + 1));
            else
                return lhs;
        }
    }

    NodePtr parse_factor(int depth) {
        check_depth(depth);
        NodePtr base = parse_atom(depth + 1);
        if (accept('^')) return make_binary('^', base, parse_factor(depth + 1));
        return base;
    }

    NodePtr parse_atom(int depth) {
        check_depth(depth);
        skip_ws();
        if (pos_ >= text_.size()) fail("number, 'x', function call, '(' or '-'");
        const char c = text_[pos_];

        if (c == '-') {
            ++pos_;
            return make_negate(parse_factor(depth + 1));
        }
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr(depth + 1);
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name(depth);
        fail("number, 'x', function call, '(' or '-'");
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        std::size_t digits = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_, ++digits;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_, ++digits;
        }
        if (digits == 0) fail_at(start, "digit");
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
            if (p >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[p]))) {
                pos_ = p;
                fail("exponent digits");
            }
            while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
            pos_ = p;
        }
        const std::string literal(text_.substr(start, pos_ - start));
        const double v = std::strtod(literal.c_str(), nullptr);
        if (!std::isfinite(v)) fail_at(start, "finite number");
        return make_constant(v);
    }

    NodePtr parse_name(int depth) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        if (name == "x") return make_variable();

        const FunctionInfo* info = find_function(name);
        if (info == nullptr) {
            throw ParseError(start, "'x' or a known function (exp log sin cos abs sqrt pow min max)",
                             "'" + name + "'");
        }
        const std::size_t paren = pos_;
        expect('(');
        std::vector<NodePtr> args;
        args.push_back(parse_expr(depth + 1));
        while (accept(',')) args.push_back(parse_expr(depth + 1));
        expect(')');

        const int n = static_cast<int>(args.size());
        if (n < info->min_args || (info->max_args >= 0 && n > info->max_args)) {
            throw ParseError(paren, name + " with " + std::to_string(info->min_args) +
                                        (info->max_args == info->min_args ? "" : "+") + " argument(s)",
                             std::to_string(n) + " argument(s)");
        }
        return make_call(name, std::move(args));
    }
};

[[noreturn]] void eval_fail(const Node& n, const std::string& why) {
    throw EvalError(why + " in '" + print(n) + "'");
}

double eval_node(const Node& n, double x) {
    switch (n.kind) {
    case NodeKind::Constant:
        return n.value;
    case NodeKind::Variable:
        return x;
    case NodeKind::Negate:
        return -eval_node(*n.children[0], x);
    case NodeKind::Binary: {
        const double a = eval_node(*n.children[0], x);
        const double b = eval_node(*n.children[1], x);
        double r = 0.0;
        switch (n.op) {
        case '+': r = a + b; break;
        case '-': r = a - b; break;
        case '*': r = a * b; break;
        case '/':
            if (b == 0.0) eval_fail(n, "division by zero");
            r = a / b;
            break;
        case '^':
            if (a < 0.0 && b != std::floor(b)) eval_fail(n, "negative base with non-integer exponent");
            if (a == 0.0 && b < 0.0) eval_fail(n, "zero to a negative power");
            r = std::pow(a, b);
            break;
        default:
            eval_fail(n, "unknown operator");
        }
        if (!std::isfinite(r)) eval_fail(n, "non-finite result");
        return r;
    }
    case NodeKind::Call: {
        std::vector<double> args;
        args.reserve(n.children.size());
        for (const auto& c : n.children) args.push_back(eval_node(*c, x));
        double r = 0.0;
        const std::string& f = n.name;
        if (f == "exp") {
            r = std::exp(args[0]);
        } else if (f == "log") {
            if (args[0] <= 0.0) eval_fail(n, "log of a non-positive number");
            r = std::log(args[0]);
        } else if (f == "sin") {
            r = std::sin(args[0]);
        } else if (f == "cos") {
            r = std::cos(args[0]);
        } else if (f == "abs") {
            r = std::abs(args[0]);
        } else if (f == "sqrt") {
            if (args[0] < 0.0) eval_fail(n, "sqrt of a negative number");
            r = std::sqrt(args[0]);
        } else if (f == "pow") {
            if (args[0] < 0.0 && args[1] != std::floor(args[1]))
                eval_fail(n, "negative base with non-integer exponent");
            if (args[0] == 0.0 && args[1] < 0.0) eval_fail(n, "zero to a negative power");
            r = std::pow(args[0], args[1]);
        } else if (f == "min") {
            r = *std::min_element(args.begin(), args.end());
        } else if (f == "max") {
            r = *std::max_element(args.begin(), args.end());
        } else {
            eval_fail(n, "unknown function");
        }
        if (!std::isfinite(r)) eval_fail(n, "non-finite result");
        return r;
    }
    }
    eval_fail(n, "malformed node");
}

} // namespace

ParseError::ParseError(std::size_t offset, std::string expected, std::string found)
    : Error("parse error at offset " + std::to_string(offset) + ": expected " + expected + ", found " + found),
      offset_(offset), expected_(std::move(expected)), found_(std::move(found)) {}

NodePtr make_constant(double v) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Constant;
    n->value = v;
    return n;
}

NodePtr make_variable() {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Variable;
    return n;
}

NodePtr make_negate(NodePtr operand) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Negate;
    n->children.push_back(std::move(operand));
    return n;
}

NodePtr make_binary(char op, NodePtr lhs, NodePtr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Binary;
    n->op = op;
    n->children.push_back(std::move(lhs));
    n->children.push_back(std::move(rhs));
    return n;
}

NodePtr make_call(std::string name, std::vector<NodePtr> args) {
    const FunctionInfo* info = find_function(name);
    if (info == nullptr) throw ParseError(0, "known function", "'" + name + "'");
    const int count = static_cast<int>(args.size());
    if (count < info->min_args || (info->max_args >= 0 && count > info->max_args))
        throw ParseError(0, "valid arity for " + name, std::to_string(count) + " argument(s)");
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Call;
    n->name = std::move(name);
    n->children = std::move(args);
    return n;
}

bool is_known_function(std::string_view name) { return find_function(name) != nullptr; }

Expr::Expr(NodePtr root) : root_(std::move(root)) {
    if (!root_) throw Error("Expr: null root");
}

double Expr::operator()(double x) const { return eval_node(*root_, x); }

Expr parse(std::string_view text) { return Expr(Parser(text).parse_all()); }

double eval(const Expr& e, double x) { return e(x); }

std::string print(const Node& n) {
    switch (n.kind) {
    case NodeKind::Constant:
        return n.value < 0.0 ? "(-" + format_number(-n.value) + ")" : format_number(n.value);
    case NodeKind::Variable:
        return "x";
    case NodeKind::Negate:
        return "(-" + print(*n.children[0]) + ")";
    case NodeKind::Binary:
        return "(" + print(*n.children[0]) + std::string(1, n.op) + print(*n.children[1]) + ")";
    case NodeKind::Call: {
        std::string s = n.name + "(";
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            if (i) s += ",";
            s += print(*n.children[i]);
        }
        return s + ")";
    }
    }
    return "?";
}

std::string print(const Expr& e) { return print(e.root()); }

} // namespace lfi::expr
