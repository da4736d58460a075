#ifndef HH_EXPR_HPP
#define HH_EXPR_HPP

#include "hh/jet.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace hh {

enum class Op
{
    constant,
    variable,
    neg,
    exp,
    log,
    sqrt,
    abs,
    sin,
    cos,
    add,
    sub,
    mul,
    div,
    pow, // base in lhs, constant exponent in value
    hyp, // sqrt(lhs^2 + value^2)
};

int arity(Op op) noexcept;

struct Node
{
    Op op;
    double value = 0.0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

/// Immutable univariate expression in the variable `x`.
///
/// Grammar, loosest binding first:
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := '-' unary | power
///     power   := primary ('^' unary)?        exponent must be constant
///     primary := number | 'x' | 'pi' | 'e' | '(' expr ')'
///              | fn '(' expr ')' | 'hyp' '(' expr ',' expr ')'
///     fn      := exp | log | sqrt | abs | sin | cos
///
/// So `-x^2` is `-(x^2)` and `2^3^2` is `2^(3^2)`. The second argument of
/// `hyp` must be constant, like an exponent.
class Expression
{
public:
    /// Throws ParseError carrying the 0-based byte offset of the fault.
    static Expression parse(std::string_view text);

    /// Value at x. Throws DomainError for log of a non-positive number,
    /// division by ~0, sqrt of a negative, a non-integer power of a negative
    /// base, or a non-finite result.
    double operator()(double x) const;

    /// Taylor jet of the given order at x. With `domain_guard` set, domain
    /// violations and unbounded derivatives throw DomainError; without it,
    /// IEEE non-finite values propagate into the coefficients.
    Jet4 jet(double x, int order = Jet4::max_order, bool domain_guard = true) const;

    /// Fully parenthesized text that parses back to the same tree.
    std::string to_string() const;

    const Node& root() const { return *root_; }

    friend bool operator==(const Expression& a, const Expression& b);

private:
    explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

    std::shared_ptr<const Node> root_;
};

bool structurally_equal(const Node& a, const Node& b);

inline Expression parse(std::string_view text)
{
    return Expression::parse(text);
}

inline Jet4 eval_jet(const Expression& f, double x, bool domain_guard = true)
{
    return f.jet(x, Jet4::max_order, domain_guard);
}

} // namespace hh

#endif
