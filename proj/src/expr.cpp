#include "hh/expr.hpp"

#include "hh/error.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

namespace hh {

namespace {

using NodePtr = std::shared_ptr<const Node>;

// Denominators below this magnitude count as division by zero.
constexpr double kDivisionFloor = 1e-300;

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr, double value = 0.0)
{
    return std::make_shared<const Node>(Node{op, value, std::move(lhs), std::move(rhs)});
}

bool depends_on_variable(const Node& n)
{
    if (n.op == Op::variable)
        return true;
    return (n.lhs && depends_on_variable(*n.lhs)) || (n.rhs && depends_on_variable(*n.rhs));
}

bool is_integer(double v)
{
    return std::isfinite(v) && std::trunc(v) == v;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse_all()
    {
        skip_space();
        if (at_end())
            throw ParseError("empty expression", pos_);
        NodePtr n = parse_expr();
        skip_space();
        if (!at_end())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return n;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            if (at_end())
                throw ParseError(std::string("expected '") + c + "' before end of input", pos_);
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
    }

    NodePtr parse_expr()
    {
        NodePtr lhs = parse_term();
        for (;;) {
            if (accept('+'))
                lhs = make(Op::add, lhs, parse_term());
            else if (accept('-'))
                lhs = make(Op::sub, lhs, parse_term());
            else
                return lhs;
        }
    }

    NodePtr parse_term()
    {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (accept('*'))
                lhs = make(Op::mul, lhs, parse_unary());
            else if (accept('/'))
                lhs = make(Op::div, lhs, parse_unary());
            else
                return lhs;
        }
    }

    NodePtr parse_unary()
    {
        if (accept('-'))
            return make(Op::neg, parse_unary());
        return parse_power();
    }

    NodePtr parse_power()
    {
        NodePtr base = parse_primary();
        skip_space();
        if (accept('^')) {
            skip_space();
            const std::size_t at = pos_;
            const double exponent = fold_constant(parse_unary(), at, "exponent");
            return make(Op::pow, base, nullptr, exponent);
        }
        return base;
    }

    double fold_constant(const NodePtr& n, std::size_t at, const char* what)
    {
        if (depends_on_variable(*n))
            throw ParseError(std::string(what) + " must be constant", at);
        try {
            return evaluate_constant(n);
        } catch (const DomainError&) {
            throw ParseError(std::string(what) + " is not a finite number", at);
        }
    }

    static double evaluate_constant(const NodePtr& n);

    NodePtr parse_primary()
    {
        skip_space();
        if (at_end())
            throw ParseError("expected operand before end of input", pos_);

        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return parse_identifier();
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            expect(')');
            return inner;
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    NodePtr parse_number()
    {
        const std::size_t start = pos_;
        std::size_t end = pos_;
        auto digits = [&] {
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
                ++end;
        };
        digits();
        if (end < text_.size() && text_[end] == '.') {
            ++end;
            digits();
        }
        if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
            std::size_t exp_end = end + 1;
            if (exp_end < text_.size() && (text_[exp_end] == '+' || text_[exp_end] == '-'))
                ++exp_end;
            if (exp_end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[exp_end]))) {
                end = exp_end;
                digits();
            }
        }

        double v = 0.0;
        const char* first = text_.data() + start;
        const char* last = text_.data() + end;
        const auto [ptr, ec] = std::from_chars(first, last, v, std::chars_format::general);
        if (ec != std::errc{} || ptr != last)
            throw ParseError("malformed number", start);
        pos_ = end;
        return make(Op::constant, nullptr, nullptr, v);
    }

    NodePtr parse_identifier()
    {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);

        if (name == "x")
            return make(Op::variable);
        if (name == "pi")
            return make(Op::constant, nullptr, nullptr, std::numbers::pi);
        if (name == "e")
            return make(Op::constant, nullptr, nullptr, std::numbers::e);

        static constexpr std::array<std::pair<std::string_view, Op>, 6> unary{{
            {"exp", Op::exp},
            {"log", Op::log},
            {"sqrt", Op::sqrt},
            {"abs", Op::abs},
            {"sin", Op::sin},
            {"cos", Op::cos},
        }};
        for (const auto& [fn, op] : unary) {
            if (name == fn) {
                expect('(');
                NodePtr arg = parse_expr();
                expect(')');
                return make(op, arg);
            }
        }
        if (name == "hyp") {
            expect('(');
            NodePtr arg = parse_expr();
            expect(',');
            skip_space();
            const std::size_t at = pos_;
            const double eps = fold_constant(parse_expr(), at, "hyp smoothing width");
            expect(')');
            return make(Op::hyp, arg, nullptr, eps);
        }
        throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Point evaluation
// ---------------------------------------------------------------------------

double eval_value(const Node& n, double x)
{
    switch (n.op) {
    case Op::constant:
        return n.value;
    case Op::variable:
        return x;
    case Op::neg:
        return -eval_value(*n.lhs, x);
    case Op::exp:
        return std::exp(eval_value(*n.lhs, x));
    case Op::log: {
        const double u = eval_value(*n.lhs, x);
        if (!(u > 0.0))
            throw DomainError("log of non-positive value");
        return std::log(u);
    }
    case Op::sqrt: {
        const double u = eval_value(*n.lhs, x);
        if (u < 0.0)
            throw DomainError("sqrt of negative value");
        return std::sqrt(u);
    }
    case Op::abs:
        return std::abs(eval_value(*n.lhs, x));
    case Op::sin:
        return std::sin(eval_value(*n.lhs, x));
    case Op::cos:
        return std::cos(eval_value(*n.lhs, x));
    case Op::add:
        return eval_value(*n.lhs, x) + eval_value(*n.rhs, x);
    case Op::sub:
        return eval_value(*n.lhs, x) - eval_value(*n.rhs, x);
    case Op::mul:
        return eval_value(*n.lhs, x) * eval_value(*n.rhs, x);
    case Op::div: {
        const double num = eval_value(*n.lhs, x);
        const double den = eval_value(*n.rhs, x);
        if (std::abs(den) < kDivisionFloor)
            throw DomainError("division by zero");
        return num / den;
    }
    case Op::pow: {
        const double u = eval_value(*n.lhs, x);
        if (u < 0.0 && !is_integer(n.value))
            throw DomainError("non-integer power of negative base");
        if (u == 0.0 && n.value < 0.0)
            throw DomainError("negative power of zero");
        return std::pow(u, n.value);
    }
    case Op::hyp:
        return std::hypot(eval_value(*n.lhs, x), n.value);
    }
    throw DomainError("corrupt expression node");
}

double Parser::evaluate_constant(const NodePtr& n)
{
    const double v = eval_value(*n, 0.0);
    if (!std::isfinite(v))
        throw DomainError("constant is not finite");
    return v;
}

// ---------------------------------------------------------------------------
// Jet evaluation
// ---------------------------------------------------------------------------

using Outer = std::array<double, Jet4::max_order + 1>;

class JetEvaluator
{
public:
    JetEvaluator(double x, int order, bool guard) : x_(x), order_(order), guard_(guard) {}

    Jet4 eval(const Node& n) const
    {
        switch (n.op) {
        case Op::constant:
            return Jet4::constant(n.value, x_, order_);
        case Op::variable:
            return Jet4::variable(x_, order_);
        case Op::neg:
            return -eval(*n.lhs);
        case Op::exp: {
            const Jet4 u = eval(*n.lhs);
            const double e = std::exp(u.c[0]);
            return compose(u, {e, e, e, e, e});
        }
        case Op::log: {
            const Jet4 u = eval(*n.lhs);
            const double v = u.c[0];
            if (!(v > 0.0))
                fail("log of non-positive value");
            const double r = 1.0 / v;
            return compose(u, {std::log(v), r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r});
        }
        case Op::sqrt: {
            const Jet4 u = eval(*n.lhs);
            if (u.c[0] < 0.0)
                fail("sqrt of negative value");
            return power(u, 0.5);
        }
        case Op::abs: {
            const Jet4 u = eval(*n.lhs);
            if (u.c[0] == 0.0 && u.order >= 1)
                fail("abs is not differentiable at zero");
            return u.c[0] < 0.0 ? -u : u;
        }
        case Op::sin: {
            const Jet4 u = eval(*n.lhs);
            const double s = std::sin(u.c[0]);
            const double c = std::cos(u.c[0]);
            return compose(u, {s, c, -s, -c, s});
        }
        case Op::cos: {
            const Jet4 u = eval(*n.lhs);
            const double s = std::sin(u.c[0]);
            const double c = std::cos(u.c[0]);
            return compose(u, {c, -s, -c, s, c});
        }
        case Op::add:
            return eval(*n.lhs) + eval(*n.rhs);
        case Op::sub:
            return eval(*n.lhs) - eval(*n.rhs);
        case Op::mul:
            return eval(*n.lhs) * eval(*n.rhs);
        case Op::div: {
            const Jet4 num = eval(*n.lhs);
            const Jet4 den = eval(*n.rhs);
            if (std::abs(den.c[0]) < kDivisionFloor)
                fail("division by zero");
            return num / den;
        }
        case Op::pow: {
            const Jet4 u = eval(*n.lhs);
            if (u.c[0] < 0.0 && !is_integer(n.value))
                fail("non-integer power of negative base");
            if (u.c[0] == 0.0 && n.value < 0.0)
                fail("negative power of zero");
            return power(u, n.value);
        }
        case Op::hyp: {
            const Jet4 u = eval(*n.lhs);
            const Jet4 w = u * u + Jet4::constant(n.value * n.value, x_, order_);
            if (w.c[0] == 0.0 && w.order >= 1)
                fail("hyp with zero width is not differentiable at zero");
            return power(w, 0.5);
        }
        }
        fail("corrupt expression node");
        return {};
    }

private:
    // u^p for constant p. At u == 0 a derivative whose falling factorial is
    // nonzero and whose remaining exponent is negative is unbounded.
    Jet4 power(const Jet4& u, double p) const
    {
        const double base = u.c[0];
        Outer outer{};
        double falling = 1.0;
        for (int k = 0; k <= u.order; ++k) {
            if (k > 0)
                falling *= p - (k - 1);
            if (falling == 0.0) {
                outer[k] = 0.0;
                continue;
            }
            const double e = p - k;
            if (base == 0.0) {
                if (e < 0.0)
                    fail("derivative of power is unbounded at zero");
                outer[k] = e == 0.0 ? falling : 0.0;
            } else {
                outer[k] = falling * std::pow(base, e);
            }
        }
        return compose(u, outer);
    }

    void fail(const char* what) const
    {
        if (guard_)
            throw DomainError(what);
    }

    double x_;
    int order_;
    bool guard_;
};

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

std::string format_number(double v)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

void print(const Node& n, std::string& out)
{
    auto binary = [&](const char* op) {
        out += '(';
        print(*n.lhs, out);
        out += op;
        print(*n.rhs, out);
        out += ')';
    };
    auto call = [&](const char* fn) {
        out += fn;
        out += '(';
        print(*n.lhs, out);
        out += ')';
    };

    switch (n.op) {
    case Op::constant:
        out += format_number(n.value);
        return;
    case Op::variable:
        out += 'x';
        return;
    case Op::neg:
        out += "(-";
        print(*n.lhs, out);
        out += ')';
        return;
    case Op::exp: return call("exp");
    case Op::log: return call("log");
    case Op::sqrt: return call("sqrt");
    case Op::abs: return call("abs");
    case Op::sin: return call("sin");
    case Op::cos: return call("cos");
    case Op::add: return binary(" + ");
    case Op::sub: return binary(" - ");
    case Op::mul: return binary(" * ");
    case Op::div: return binary(" / ");
    case Op::pow:
        out += '(';
        print(*n.lhs, out);
        out += '^';
        out += format_number(n.value);
        out += ')';
        return;
    case Op::hyp:
        out += "hyp(";
        print(*n.lhs, out);
        out += ", ";
        out += format_number(n.value);
        out += ')';
        return;
    }
}

} // namespace

int arity(Op op) noexcept
{
    switch (op) {
    case Op::constant:
    case Op::variable:
        return 0;
    case Op::add:
    case Op::sub:
    case Op::mul:
    case Op::div:
        return 2;
    default:
        return 1;
    }
}

bool structurally_equal(const Node& a, const Node& b)
{
    if (a.op != b.op)
        return false;
    if ((a.op == Op::constant || a.op == Op::pow || a.op == Op::hyp) && a.value != b.value)
        return false;
    if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs) ||
        static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs))
        return false;
    return (!a.lhs || structurally_equal(*a.lhs, *b.lhs)) &&
           (!a.rhs || structurally_equal(*a.rhs, *b.rhs));
}

bool operator==(const Expression& a, const Expression& b)
{
    return structurally_equal(*a.root_, *b.root_);
}

Expression Expression::parse(std::string_view text)
{
    return Expression(Parser(text).parse_all());
}

double Expression::operator()(double x) const
{
    const double v = eval_value(*root_, x);
    if (!std::isfinite(v))
        throw DomainError("value is not finite");
    return v;
}

Jet4 Expression::jet(double x, int order, bool domain_guard) const
{
    if (order < 0 || order > Jet4::max_order)
        throw InvalidArgument("jet order must be in [0, 4]");
    if (!std::isfinite(x))
        throw InvalidArgument("evaluation point must be finite");
    Jet4 j = JetEvaluator(x, order, domain_guard).eval(*root_);
    if (domain_guard) {
        for (int k = 0; k <= j.order; ++k) {
            if (!std::isfinite(j.c[k]))
                throw DomainError("jet coefficient is not finite");
        }
    }
    return j;
}

std::string Expression::to_string() const
{
    std::string out;
    print(*root_, out);
    return out;
}

} // namespace hh
