#pragma once

#include <memory>
#include <string>

namespace crooked {

/// Coefficient expression in one variable t. Grammar:
///   expr   := term ('+' term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | number | 't' | func '(' expr ')' | '(' expr ')'
///   func   := exp | cosh | sinh
class Expr {
public:
    /// Throws ParseError on malformed input.
    static Expr parse(const std::string& text);
    static Expr constant(double value);

    double operator()(double t) const;
    /// The source text, as given.
    const std::string& text() const { return text_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

}  // namespace crooked
