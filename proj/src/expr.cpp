#include "crooked/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

#include "crooked/error.hpp"

namespace crooked {

struct Expr::Node {
    enum class Kind { Number, Var, Neg, Add, Mul, Exp, Cosh, Sinh } kind;
    double value = 0;
    std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make(Expr::Node::Kind k, std::vector<NodePtr> args = {}, double value = 0) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = k;
    n->args = std::move(args);
    n->value = value;
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parse() {
        NodePtr n = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("expression '" + s_ + "' at " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        NodePtr n = term();
        while (eat('+')) n = make(Expr::Node::Kind::Add, {n, term()});
        return n;
    }
    NodePtr term() {
        NodePtr n = factor();
        while (eat('*')) n = make(Expr::Node::Kind::Mul, {n, factor()});
        return n;
    }
    NodePtr factor() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (eat('-')) return make(Expr::Node::Kind::Neg, {factor()});
        if (eat('(')) {
            NodePtr n = expr();
            if (!eat(')')) fail("expected ')'");
            return n;
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) ++end;
            const std::string name = s_.substr(pos_, end - pos_);
            pos_ = end;
            if (name == "t") return make(Expr::Node::Kind::Var);
            Expr::Node::Kind k;
            if (name == "exp")
                k = Expr::Node::Kind::Exp;
            else if (name == "cosh")
                k = Expr::Node::Kind::Cosh;
            else if (name == "sinh")
                k = Expr::Node::Kind::Sinh;
            else
                fail("unknown name '" + name + "'");
            if (!eat('(')) fail("expected '(' after " + name);
            NodePtr arg = expr();
            if (!eat(')')) fail("expected ')'");
            return make(k, {arg});
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
    NodePtr number() {
        double v = 0;
        const char* first = s_.data() + pos_;
        const char* last = s_.data() + s_.size();
        auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc()) fail("bad number");
        pos_ += static_cast<std::size_t>(res.ptr - first);
        return make(Expr::Node::Kind::Number, {}, v);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

double eval(const Expr::Node& n, double t) {
    using K = Expr::Node::Kind;
    switch (n.kind) {
        case K::Number: return n.value;
        case K::Var: return t;
        case K::Neg: return -eval(*n.args[0], t);
        case K::Add: return eval(*n.args[0], t) + eval(*n.args[1], t);
        case K::Mul: return eval(*n.args[0], t) * eval(*n.args[1], t);
        case K::Exp: return std::exp(eval(*n.args[0], t));
        case K::Cosh: return std::cosh(eval(*n.args[0], t));
        case K::Sinh: return std::sinh(eval(*n.args[0], t));
    }
    return 0;
}

}  // namespace

Expr Expr::parse(const std::string& text) {
    Expr e;
    e.root_ = Parser(text).parse();
    e.text_ = text;
    return e;
}

Expr Expr::constant(double value) {
    Expr e;
    e.root_ = make(Node::Kind::Number, {}, value);
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, value);
    e.text_.assign(buf, res.ptr);
    return e;
}

double Expr::operator()(double t) const {
    return eval(*root_, t);
}

}  // namespace crooked
