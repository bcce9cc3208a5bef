#include <prearith/expression.hpp>

#include <cctype>
#include <sstream>

namespace prearith
{

namespace
{

class Parser
{
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Expression parse()
    {
        skip_space();
        if (pos_ == src_.size()) {
            fail({"number", "M", "-", "("}, "empty expression");
        }
        Expression e = expr();
        skip_space();
        if (pos_ != src_.size()) {
            fail({"+", "*", "end of input"}, "unexpected '" + std::string(1, src_[pos_]) + "'");
        }
        return e;
    }

private:
    Expression expr()
    {
        Expression lhs = product();
        while (accept('+')) {
            lhs = Expression::add(std::move(lhs), product());
        }
        return lhs;
    }

    Expression product()
    {
        Expression lhs = term();
        while (accept('*')) {
            lhs = Expression::mul(std::move(lhs), term());
        }
        return lhs;
    }

    Expression term()
    {
        skip_space();
        if (pos_ == src_.size()) {
            fail({"number", "M", "-", "("}, "unexpected end of input");
        }
        const char c = src_[pos_];
        if (c == '-') {
            ++pos_;
            return Expression::neg(term());
        }
        if (c == 'M') {
            ++pos_;
            return Expression::m();
        }
        if (c == '(') {
            ++pos_;
            Expression inner = expr();
            if (!accept(')')) {
                fail({"+", "*", ")"}, "missing ')'");
            }
            return Expression::paren(std::move(inner));
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '.') {
            return number();
        }
        fail({"number", "M", "-", "("}, "unexpected '" + std::string(1, c) + "'");
    }

    Expression number()
    {
        const std::size_t start = pos_;
        const auto is_number_char = [](char ch) {
            return std::isdigit(static_cast<unsigned char>(ch)) != 0 || ch == '.' || ch == '/' || ch == 'e'
                || ch == 'E';
        };
        while (pos_ < src_.size()) {
            const char ch = src_[pos_];
            // exponent sign
            const bool exp_sign = (ch == '+' || ch == '-') && pos_ > start
                               && (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E');
            if (!is_number_char(ch) && !exp_sign) {
                break;
            }
            ++pos_;
        }
        const auto text = src_.substr(start, pos_ - start);
        try {
            return Expression::number(Rational::parse(text));
        } catch (const Error &) {
            pos_ = start;
            fail({"number"}, "malformed number '" + std::string(text) + "'");
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_space()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])) != 0) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(std::vector<std::string> expected, const std::string &msg) const
    {
        std::string what = "parse error at offset " + std::to_string(pos_) + ": " + msg + " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            what += (i == 0 ? "" : ", ") + expected[i];
        }
        what += ')';
        throw ParseError(pos_, std::move(expected), what);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

bool is_term(const Expression &e)
{
    using K = Expression::Kind;
    return e.kind == K::literal || e.kind == K::m_constant || e.kind == K::neg || e.kind == K::paren;
}

std::string print_term(const Expression &e)
{
    return is_term(e) ? print_expression(e) : "(" + print_expression(e) + ")";
}

[[noreturn]] void class_error(const RunConfig &cfg)
{
    throw Error(Errc::class_error, "negation is only defined in class amm, not " + std::string(to_string(cfg.arithmetic)));
}

template <class Value, class Make, class Add, class Mul, class Neg>
Value eval_with(const Expression &e, const Make &make, const Add &add, const Mul &mul, const Neg &neg)
{
    using K = Expression::Kind;
    const auto rec = [&](const Expression &x) { return eval_with<Value>(x, make, add, mul, neg); };
    switch (e.kind) {
        case K::literal:
            return make(&e.literal);
        case K::m_constant:
            return make(nullptr);
        case K::add:
            return add(rec(e.operands[0]), rec(e.operands[1]));
        case K::mul:
            return mul(rec(e.operands[0]), rec(e.operands[1]));
        case K::neg:
            return neg(rec(e.operands[0]));
        case K::paren:
            return rec(e.operands[0]);
    }
    throw Error(Errc::domain_error, "malformed expression");
}

} // namespace

Expression Expression::number(Rational value)
{
    Expression e;
    e.kind = Kind::literal;
    e.literal = std::move(value);
    return e;
}

Expression Expression::m()
{
    Expression e;
    e.kind = Kind::m_constant;
    return e;
}

Expression Expression::add(Expression lhs, Expression rhs)
{
    Expression e;
    e.kind = Kind::add;
    e.operands.push_back(std::move(lhs));
    e.operands.push_back(std::move(rhs));
    return e;
}

Expression Expression::mul(Expression lhs, Expression rhs)
{
    Expression e;
    e.kind = Kind::mul;
    e.operands.push_back(std::move(lhs));
    e.operands.push_back(std::move(rhs));
    return e;
}

Expression Expression::neg(Expression operand)
{
    Expression e;
    e.kind = Kind::neg;
    e.operands.push_back(std::move(operand));
    return e;
}

Expression Expression::paren(Expression inner)
{
    Expression e;
    e.kind = Kind::paren;
    e.operands.push_back(std::move(inner));
    return e;
}

Expression parse_expression(std::string_view src)
{
    return Parser(src).parse();
}

std::string print_expression(const Expression &e)
{
    using K = Expression::Kind;
    switch (e.kind) {
        case K::literal:
            return e.literal.to_string();
        case K::m_constant:
            return "M";
        case K::add: {
            const auto &rhs = e.operands[1];
            return print_expression(e.operands[0]) + " + "
                 + (rhs.kind == K::add ? "(" + print_expression(rhs) + ")" : print_expression(rhs));
        }
        case K::mul: {
            const auto &rhs = e.operands[1];
            const auto &lhs = e.operands[0];
            return (lhs.kind == K::add ? "(" + print_expression(lhs) + ")" : print_expression(lhs)) + " * "
                 + print_term(rhs);
        }
        case K::neg:
            return "-" + print_term(e.operands[0]);
        case K::paren:
            return "(" + print_expression(e.operands[0]) + ")";
    }
    return {};
}

Rational RunConfig::magnitude_value() const
{
    try {
        return Rational::parse(magnitude);
    } catch (const Error &) {
        throw Error(Errc::invalid_magnitude, "invalid magnitude '" + magnitude + "'");
    }
}

ClampMagnitude RunConfig::clamp_magnitude() const
{
    return ClampMagnitude(magnitude_value());
}

ProjectiveMagnitude RunConfig::projective_magnitude() const
{
    const auto v = magnitude_value();
    if (v.sign() <= 0) {
        throw Error(Errc::invalid_magnitude, "bm magnitude must be > 0");
    }
    return ProjectiveMagnitude(v.to_double());
}

void RunConfig::validate() const
{
    if (arithmetic == ArithmeticClass::bm) {
        (void)projective_magnitude();
    } else {
        (void)clamp_magnitude();
    }
}

std::string to_string(const ClassValue &v)
{
    if (const auto *a = std::get_if<AmValue>(&v)) {
        return a->value().to_string();
    }
    if (const auto *a = std::get_if<AmmValue>(&v)) {
        return a->value().to_string();
    }
    return ExtendedReal::finite(std::get<BmValue>(v).value()).to_string();
}

ClassValue eval_expression(const Expression &e, const RunConfig &cfg)
{
    switch (cfg.arithmetic) {
        case ArithmeticClass::am: {
            const auto m = cfg.clamp_magnitude();
            return eval_with<AmValue>(
                e, [&](const Rational *lit) { return lit ? AmValue(*lit, m) : AmValue::top(m); }, am_add, am_mul,
                [&](const AmValue &) -> AmValue { class_error(cfg); });
        }
        case ArithmeticClass::amm: {
            const auto m = cfg.clamp_magnitude();
            return eval_with<AmmValue>(
                e, [&](const Rational *lit) { return lit ? AmmValue(*lit, m) : AmmValue(m.value(), m); }, amm_add,
                amm_mul, [](const AmmValue &a) { return -a; });
        }
        case ArithmeticClass::bm:
            break;
    }
    const auto m = cfg.projective_magnitude();
    const auto mode = cfg.mode;
    return eval_with<BmValue>(
        e, [&](const Rational *lit) { return BmValue(lit ? lit->to_double() : m.value(), m); },
        [&](const BmValue &a, const BmValue &b) { return bm_add(a, b, mode); },
        [&](const BmValue &a, const BmValue &b) { return bm_mul(a, b, mode); },
        [&](const BmValue &) -> BmValue { class_error(cfg); });
}

std::string run_demo(std::string_view name, const std::optional<std::string> &magnitude_override)
{
    std::string magnitude;
    std::string headline;
    if (name == "sorites") {
        magnitude = "1000000";
        headline = "Sorites: one million grains make a heap, and one more grain leaves a heap.";
    } else if (name == "machine-infinity") {
        magnitude = "2147483647";
        headline = "Machine infinity: the largest 32-bit signed integer absorbs +1 without contradiction.";
    } else if (name == "raindrop") {
        magnitude = "1";
        headline = "Raindrops: one raindrop added to another gives one raindrop.";
    } else if (name == "lion-rabbit") {
        magnitude = "1";
        headline = "Lion and rabbit: put both in a cage and later find one animal.";
    } else {
        throw Error(Errc::unknown_demo, "unknown demo '" + std::string(name) + "'");
    }
    if (magnitude_override) {
        magnitude = *magnitude_override;
    }
    const ClampMagnitude m(Rational::parse(magnitude));
    const AmValue top = AmValue::top(m);
    const AmValue one = AmValue::one(m);
    const AmValue sum = am_add(top, one);

    std::ostringstream os;
    os << headline << '\n'
       << "class am, M = " << m.value() << '\n'
       << top.value() << " ⊕ " << one.value() << " = " << sum.value() << '\n';
    return os.str();
}

} // namespace prearith
