#pragma once

// Single-variable expression language for user-supplied functions.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := atom ('^' factor)?
//   atom   := number | 'x' | name '(' expr (',' expr)* ')' | '(' expr ')' | '-' factor
//
// '^' is right-associative and binds tighter than unary minus, so -x^2 is
// -(x^2) and 2^-x is 2^(-x). Numbers are decimal literals with an optional
// exponent. Functions: exp log sin cos abs sqrt (one argument), pow (two),
// min max (two or more).

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lfi/errors.hpp"

namespace lfi::expr {

class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::string expected, std::string found);

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    std::size_t offset_;
    std::string expected_;
    std::string found_;
};

enum class NodeKind { Constant, Variable, Negate, Binary, Call };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind = NodeKind::Constant;
    double value = 0.0;      // Constant
    char op = 0;             // Binary: + - * / ^
    std::string name;        // Call
    std::vector<NodePtr> children;
};

NodePtr make_constant(double v);
NodePtr make_variable();
NodePtr make_negate(NodePtr operand);
NodePtr make_binary(char op, NodePtr lhs, NodePtr rhs);
/// Throws ParseError (offset 0) for an unknown name or wrong arity.
NodePtr make_call(std::string name, std::vector<NodePtr> args);

/// Immutable parsed expression; cheap to copy and safe to share across threads.
class Expr {
public:
    explicit Expr(NodePtr root);

    const Node& root() const { return *root_; }
    const NodePtr& root_ptr() const { return root_; }

    double operator()(double x) const;

private:
    NodePtr root_;
};

Expr parse(std::string_view text);

/// Evaluates at x. Throws EvalError naming the failing sub-expression on
/// log/sqrt of a negative number, division by zero or any non-finite result.
double eval(const Expr& e, double x);

/// Fully parenthesised text that parses back to an equivalent tree.
std::string print(const Expr& e);
std::string print(const Node& n);

bool is_known_function(std::string_view name);

} // namespace lfi::expr
