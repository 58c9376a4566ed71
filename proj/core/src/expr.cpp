#include "jungck/expr.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

#include "jungck/error.hpp"

namespace jungck {

namespace {

using Op = Expr::Op;
using Node = Expr::Node;

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars, std::size_t line, std::size_t column)
        : text_(text), vars_(vars), line_(line), column_(column) {}

    Node parse() {
        skip_ws();
        if (pos_ == text_.size()) fail<SyntaxError>("empty expression");
        Node n = parse_or();
        skip_ws();
        if (pos_ != text_.size()) fail<SyntaxError>("unexpected '" + std::string(1, text_[pos_]) + "'");
        return n;
    }

private:
    template <class E>
    [[noreturn]] void fail(const std::string& msg) const {
        throw E(msg, line_, column_ + pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(std::string_view(&c, 1))) {
            if (pos_ >= text_.size()) fail<SyntaxError>(std::string("expected '") + c + "' before end of input");
            fail<SyntaxError>(std::string("expected '") + c + "'");
        }
    }

    static Node binary(Op op, Node a, Node b) {
        Node n;
        n.op = op;
        n.args.push_back(std::move(a));
        n.args.push_back(std::move(b));
        return n;
    }

    Node parse_or() {
        Node lhs = parse_and();
        while (accept("||")) lhs = binary(Op::Or, std::move(lhs), parse_and());
        return lhs;
    }

    Node parse_and() {
        Node lhs = parse_cmp();
        while (accept("&&")) lhs = binary(Op::And, std::move(lhs), parse_cmp());
        return lhs;
    }

    Node parse_cmp() {
        Node lhs = parse_sum();
        // Two-character operators first so "<=" is not read as "<".
        static constexpr std::pair<std::string_view, Op> kOps[] = {
            {"<=", Op::Le}, {">=", Op::Ge}, {"==", Op::Eq}, {"!=", Op::Ne}, {"<", Op::Lt}, {">", Op::Gt},
        };
        for (const auto& [tok, op] : kOps)
            if (accept(tok)) return binary(op, std::move(lhs), parse_sum());
        return lhs;
    }

    Node parse_sum() {
        Node lhs = parse_product();
        for (;;) {
            if (accept("+")) lhs = binary(Op::Add, std::move(lhs), parse_product());
            else if (accept("-")) lhs = binary(Op::Sub, std::move(lhs), parse_product());
            else return lhs;
        }
    }

    Node parse_product() {
        Node lhs = parse_unary();
        for (;;) {
            if (accept("*")) lhs = binary(Op::Mul, std::move(lhs), parse_unary());
            else if (accept("/")) lhs = binary(Op::Div, std::move(lhs), parse_unary());
            else return lhs;
        }
    }

    Node parse_unary() {
        skip_ws();
        if (accept("-")) {
            Node n;
            n.op = Op::Neg;
            n.args.push_back(parse_unary());
            return n;
        }
        if (accept("+")) return parse_unary();
        // "!" but not "!=".
        if (pos_ < text_.size() && text_[pos_] == '!' && text_.substr(pos_, 2) != "!=") {
            ++pos_;
            Node n;
            n.op = Op::Not;
            n.args.push_back(parse_unary());
            return n;
        }
        return parse_power();
    }

    Node parse_power() {
        Node base = parse_primary();
        if (accept("^")) return binary(Op::Pow, std::move(base), parse_unary());
        return base;
    }

    Node parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail<SyntaxError>("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Node inner = parse_or();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        fail<SyntaxError>("unexpected '" + std::string(1, c) + "'");
    }

    Node parse_number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
            if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
                pos_ = p;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
        }
        const std::string lexeme(text_.substr(start, pos_ - start));
        if (lexeme == ".") {
            pos_ = start;
            fail<SyntaxError>("malformed number");
        }
        Node n;
        n.op = Op::Number;
        n.number = std::strtod(lexeme.c_str(), nullptr);
        return n;
    }

    Node parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            Op op;
            if (name == "min") op = Op::Min;
            else if (name == "max") op = Op::Max;
            else if (name == "abs") op = Op::Abs;
            else {
                pos_ = start;
                fail<SyntaxError>("unknown function '" + name + "'");
            }
            const std::size_t call_pos = start;
            ++pos_;
            Node n;
            n.op = op;
            skip_ws();
            if (!accept(")")) {
                n.args.push_back(parse_or());
                while (accept(",")) n.args.push_back(parse_or());
                expect(')');
            }
            const bool ok = op == Op::Abs ? n.args.size() == 1 : !n.args.empty();
            if (!ok) {
                pos_ = call_pos;
                fail<ArityError>(name + (op == Op::Abs ? " takes exactly one argument"
                                                       : " takes at least one argument") +
                                 ", got " + std::to_string(n.args.size()));
            }
            return n;
        }
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            if (vars_[k] == name) {
                Node n;
                n.op = Op::Var;
                n.var = k;
                return n;
            }
        }
        pos_ = start;
        std::string allowed;
        for (const auto& v : vars_) allowed += (allowed.empty() ? "" : ", ") + v;
        fail<SyntaxError>("unknown variable '" + name + "' (allowed: " + allowed + ")");
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t line_;
    std::size_t column_;
    std::size_t pos_ = 0;
};

[[noreturn]] void domain_error(const std::string& what, std::span<const double> args) {
    throw DomainError(what, std::vector<double>(args.begin(), args.end()));
}

double eval(const Node& n, std::span<const double> args) {
    auto arg = [&](std::size_t k) { return eval(n.args[k], args); };
    double r = 0;
    switch (n.op) {
        case Op::Number: return n.number;
        case Op::Var: return args[n.var];
        case Op::Neg: return -arg(0);
        case Op::Not: return arg(0) == 0 ? 1.0 : 0.0;
        case Op::Add: r = arg(0) + arg(1); break;
        case Op::Sub: r = arg(0) - arg(1); break;
        case Op::Mul: r = arg(0) * arg(1); break;
        case Op::Div: {
            const double a = arg(0);
            const double b = arg(1);
            if (b == 0) domain_error("division by zero", args);
            r = a / b;
            break;
        }
        case Op::Pow: {
            const double a = arg(0);
            const double b = arg(1);
            if (a == 0 && b < 0) domain_error("zero raised to a negative power", args);
            if (a < 0 && b != std::floor(b)) domain_error("negative base with non-integer exponent", args);
            r = std::pow(a, b);
            break;
        }
        case Op::Lt: return arg(0) < arg(1) ? 1.0 : 0.0;
        case Op::Le: return arg(0) <= arg(1) ? 1.0 : 0.0;
        case Op::Gt: return arg(0) > arg(1) ? 1.0 : 0.0;
        case Op::Ge: return arg(0) >= arg(1) ? 1.0 : 0.0;
        case Op::Eq: return arg(0) == arg(1) ? 1.0 : 0.0;
        case Op::Ne: return arg(0) != arg(1) ? 1.0 : 0.0;
        case Op::And: return (arg(0) != 0 && arg(1) != 0) ? 1.0 : 0.0;
        case Op::Or: return (arg(0) != 0 || arg(1) != 0) ? 1.0 : 0.0;
        case Op::Min:
        case Op::Max: {
            r = arg(0);
            for (std::size_t k = 1; k < n.args.size(); ++k) {
                const double v = arg(k);
                r = n.op == Op::Min ? std::min(r, v) : std::max(r, v);
            }
            return r;
        }
        case Op::Abs: return std::abs(arg(0));
    }
    if (!std::isfinite(r)) domain_error("non-finite intermediate value", args);
    return r;
}

void print(const Node& n, const std::vector<std::string>& vars, std::string& out) {
    auto bin = [&](const char* op) {
        out += '(';
        print(n.args[0], vars, out);
        out += ' ';
        out += op;
        out += ' ';
        print(n.args[1], vars, out);
        out += ')';
    };
    auto call = [&](const char* name) {
        out += name;
        out += '(';
        for (std::size_t k = 0; k < n.args.size(); ++k) {
            if (k) out += ", ";
            print(n.args[k], vars, out);
        }
        out += ')';
    };
    switch (n.op) {
        case Op::Number: {
            char buf[40];
            *std::to_chars(buf, buf + sizeof buf - 1, n.number).ptr = '\0';
            out += buf;
            return;
        }
        case Op::Var: out += vars[n.var]; return;
        case Op::Neg:
            out += "(-";
            print(n.args[0], vars, out);
            out += ')';
            return;
        case Op::Not:
            out += "(!";
            print(n.args[0], vars, out);
            out += ')';
            return;
        case Op::Add: bin("+"); return;
        case Op::Sub: bin("-"); return;
        case Op::Mul: bin("*"); return;
        case Op::Div: bin("/"); return;
        case Op::Pow: bin("^"); return;
        case Op::Lt: bin("<"); return;
        case Op::Le: bin("<="); return;
        case Op::Gt: bin(">"); return;
        case Op::Ge: bin(">="); return;
        case Op::Eq: bin("=="); return;
        case Op::Ne: bin("!="); return;
        case Op::And: bin("&&"); return;
        case Op::Or: bin("||"); return;
        case Op::Min: call("min"); return;
        case Op::Max: call("max"); return;
        case Op::Abs: call("abs"); return;
    }
}

}  // namespace

Expr Expr::parse(std::string_view text, std::vector<std::string> variables, std::size_t line,
                 std::size_t column) {
    Node root = Parser(text, variables, line, column).parse();
    return Expr(std::move(root), std::move(variables));
}

double Expr::operator()(std::span<const double> args) const {
    if (args.size() != variables_.size())
        throw DomainError("expression expects " + std::to_string(variables_.size()) + " arguments",
                          std::vector<double>(args.begin(), args.end()));
    return eval(root_, args);
}

std::string Expr::to_string() const {
    std::string out;
    print(root_, variables_, out);
    return out;
}

}  // namespace jungck
