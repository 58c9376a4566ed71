#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jungck {

/// Arithmetic expression over a declared variable list.
///
/// Grammar (lowest to highest precedence):
///
///     expr    := or
///     or      := and ( "||" and )*
///     and     := cmp ( "&&" cmp )*
///     cmp     := sum ( ( "<" | "<=" | ">" | ">=" | "==" | "!=" ) sum )?
///     sum     := product ( ( "+" | "-" ) product )*
///     product := unary ( ( "*" | "/" ) unary )*
///     unary   := ( "-" | "+" | "!" ) unary | power
///     power   := primary ( "^" unary )?
///     primary := number | variable | func "(" expr ( "," expr )* ")" | "(" expr ")"
///     func    := "min" | "max" | "abs"
///
/// Comparisons and logical operators yield 1 or 0, which lets order relations
/// be written as predicates. Evaluation throws DomainError on division by
/// zero, invalid powers or non-finite intermediate values.
class Expr {
public:
    enum class Op {
        Number, Var, Neg, Not,
        Add, Sub, Mul, Div, Pow,
        Lt, Le, Gt, Ge, Eq, Ne, And, Or,
        Min, Max, Abs,
    };

    struct Node {
        Op op = Op::Number;
        double number = 0;
        std::size_t var = 0;
        std::vector<Node> args;

        friend bool operator==(const Node&, const Node&) = default;
    };

    /// `line` and `column` locate the text inside a larger document so errors
    /// point at the right place.
    static Expr parse(std::string_view text, std::vector<std::string> variables,
                      std::size_t line = 1, std::size_t column = 1);

    double operator()(std::span<const double> args) const;
    double operator()(std::initializer_list<double> args) const {
        return (*this)(std::span<const double>(args.begin(), args.size()));
    }

    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const Node& root() const noexcept { return root_; }

    /// True when the expression is exactly the variable at position k.
    bool is_variable(std::size_t k) const noexcept { return root_.op == Op::Var && root_.var == k; }

    /// Fully parenthesized canonical form; parse(to_string()) reproduces the AST.
    std::string to_string() const;

    friend bool operator==(const Expr&, const Expr&) = default;

private:
    Expr(Node root, std::vector<std::string> variables)
        : root_(std::move(root)), variables_(std::move(variables)) {}

    Node root_;
    std::vector<std::string> variables_;
};

}  // namespace jungck
