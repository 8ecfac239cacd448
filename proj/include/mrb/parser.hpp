#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrb/rational.hpp"

namespace mrb {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(col_)),
          line(line_), col(col_) {}
};

/// Expression AST for the CLI front end.
struct Expr {
    enum class Kind {
        Number,    // rational literal
        Ident,     // variable or generator
        Sum,       // args[0] + args[1]
        Diff,      // args[0] - args[1]
        Prod,      // args[0] * args[1]
        OpApply,   // P<name>(args[0])
        DendLeft,  // args[0] <:name args[1]
        DendRight, // args[0] :>name args[1]
        Call,      // builtin name(args...)
    };

    Kind kind;
    Rational number;
    std::string name;
    std::vector<std::shared_ptr<const Expr>> args;
    int line = 0, col = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

inline bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.name != b.name || a.number != b.number ||
        a.args.size() != b.args.size())
        return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!expr_equal(*a.args[i], *b.args[i]))
            return false;
    return true;
}

namespace detail {

struct Token {
    enum class Type { Number, Ident, Symbol, End };
    Type type;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            bump();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_ = {Token::Type::End, "", line_, col_};
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string t;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                t += take_char();
            // rational literal n/d
            if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
                t += take_char();
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    t += take_char();
            }
            tok_ = {Token::Type::Number, t, tok_.line, tok_.col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string t;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                t += take_char();
            tok_ = {Token::Type::Ident, t, tok_.line, tok_.col};
            return;
        }
        if ((c == '<' || c == ':') && pos_ + 1 < src_.size()) {
            std::string two = src_.substr(pos_, 2);
            if (two == "<:" || two == ":>") {
                take_char();
                take_char();
                tok_ = {Token::Type::Symbol, two, tok_.line, tok_.col};
                return;
            }
        }
        if (std::string("+-*(),^").find(c) != std::string::npos) {
            tok_ = {Token::Type::Symbol, std::string(1, take_char()), tok_.line, tok_.col};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }

    char take_char() {
        char c = src_[pos_];
        bump();
        return c;
    }
    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_{Token::Type::End, "", 1, 1};
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        auto& t = lex_.peek();
        if (t.type != Token::Type::End)
            throw ParseError("unexpected token '" + t.text + "'", t.line, t.col);
        return e;
    }

private:
    static std::shared_ptr<Expr> node(Expr::Kind k, const Token& at) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->line = at.line;
        e->col = at.col;
        return e;
    }

    ExprPtr expr() {
        ExprPtr lhs = dend();
        while (is_symbol("+") || is_symbol("-")) {
            Token op = lex_.take();
            auto e = node(op.text == "+" ? Expr::Kind::Sum : Expr::Kind::Diff, op);
            e->args = {lhs, dend()};
            lhs = e;
        }
        return lhs;
    }

    ExprPtr dend() {
        ExprPtr lhs = term();
        while (is_symbol("<:") || is_symbol(":>")) {
            Token op = lex_.take();
            auto e = node(op.text == "<:" ? Expr::Kind::DendLeft : Expr::Kind::DendRight, op);
            e->name = decoration_name();
            e->args = {lhs, term()};
            lhs = e;
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (is_symbol("*")) {
            Token op = lex_.take();
            auto e = node(Expr::Kind::Prod, op);
            e->args = {lhs, factor()};
            lhs = e;
        }
        return lhs;
    }

    ExprPtr factor() {
        const Token& t = lex_.peek();
        if (t.type == Token::Type::Number) {
            Token n = lex_.take();
            auto e = node(Expr::Kind::Number, n);
            e->number = parse_rational(n.text);
            return e;
        }
        if (t.type == Token::Type::Symbol && t.text == "(") {
            lex_.take();
            ExprPtr e = expr();
            expect(")");
            return e;
        }
        if (t.type == Token::Type::Ident) {
            Token id = lex_.take();
            if (is_symbol("(")) {
                if (id.text.size() > 1 && id.text[0] == 'P' && !is_builtin(id.text)) {
                    auto e = node(Expr::Kind::OpApply, id);
                    e->name = id.text.substr(1);
                    lex_.take();
                    e->args = {expr()};
                    expect(")");
                    return e;
                }
                if (is_builtin(id.text)) {
                    auto e = node(Expr::Kind::Call, id);
                    e->name = id.text;
                    lex_.take();
                    if (!is_symbol(")")) {
                        e->args.push_back(expr());
                        while (is_symbol(",")) {
                            lex_.take();
                            e->args.push_back(expr());
                        }
                    }
                    expect(")");
                    return e;
                }
                throw ParseError("unknown function '" + id.text + "'", id.line, id.col);
            }
            auto e = node(Expr::Kind::Ident, id);
            e->name = id.text;
            return e;
        }
        throw ParseError(t.type == Token::Type::End
                             ? "unexpected end of input"
                             : "unexpected token '" + t.text + "'",
                         t.line, t.col);
    }

    std::string decoration_name() {
        const Token& t = lex_.peek();
        if (t.type != Token::Type::Number && t.type != Token::Type::Ident)
            throw ParseError("expected decoration name", t.line, t.col);
        return lex_.take().text;
    }

    static bool is_builtin(const std::string& n) {
        return n == "shuffle" || n == "star" || n == "lift" || n == "picard" || n == "base";
    }

    bool is_symbol(const std::string& s) const {
        return lex_.peek().type == Token::Type::Symbol && lex_.peek().text == s;
    }
    void expect(const std::string& s) {
        const Token& t = lex_.peek();
        if (!is_symbol(s))
            throw ParseError("expected '" + s + "'", t.line, t.col);
        lex_.take();
    }

    Lexer lex_;
};

} // namespace detail

inline ExprPtr parse_expression(const std::string& text) {
    return detail::Parser(text).parse();
}

/// Deterministic rendering; parse(render(e)) reproduces e structurally.
inline std::string render_expression(const Expr& e) {
    auto paren = [](const Expr& c, const std::string& s) {
        switch (c.kind) {
        case Expr::Kind::Number:
        case Expr::Kind::Ident:
        case Expr::Kind::OpApply:
        case Expr::Kind::Call:
            return s;
        default:
            return "(" + s + ")";
        }
    };
    switch (e.kind) {
    case Expr::Kind::Number:
        return to_string(e.number);
    case Expr::Kind::Ident:
        return e.name;
    case Expr::Kind::Sum:
        return render_expression(*e.args[0]) + " + " +
               paren(*e.args[1], render_expression(*e.args[1]));
    case Expr::Kind::Diff:
        return render_expression(*e.args[0]) + " - " +
               paren(*e.args[1], render_expression(*e.args[1]));
    case Expr::Kind::Prod: {
        auto lhs = e.args[0]->kind == Expr::Kind::Prod
                       ? render_expression(*e.args[0])
                       : paren(*e.args[0], render_expression(*e.args[0]));
        return lhs + " * " + paren(*e.args[1], render_expression(*e.args[1]));
    }
    case Expr::Kind::OpApply:
        return "P" + e.name + "(" + render_expression(*e.args[0]) + ")";
    case Expr::Kind::DendLeft:
    case Expr::Kind::DendRight: {
        auto op = e.kind == Expr::Kind::DendLeft ? "<:" : ":>";
        auto lhs = e.args[0]->kind == e.kind
                       ? render_expression(*e.args[0])
                       : paren(*e.args[0], render_expression(*e.args[0]));
        return lhs + " " + op + e.name + " " +
               paren(*e.args[1], render_expression(*e.args[1]));
    }
    case Expr::Kind::Call: {
        std::string s = e.name + "(";
        for (std::size_t i = 0; i < e.args.size(); ++i)
            s += (i ? ", " : "") + render_expression(*e.args[i]);
        return s + ")";
    }
    }
    return {};
}

} // namespace mrb
