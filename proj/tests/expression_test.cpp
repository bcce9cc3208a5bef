#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include <prearith/expression.hpp>

using namespace prearith;

namespace
{

RunConfig config(ArithmeticClass cls, std::string m, Mode mode = Mode::total)
{
    RunConfig cfg;
    cfg.arithmetic = cls;
    cfg.magnitude = std::move(m);
    cfg.mode = mode;
    return cfg;
}

std::string eval(const std::string &src, const RunConfig &cfg)
{
    return to_string(eval_expression(parse_expression(src), cfg));
}

Errc eval_error(const std::string &src, const RunConfig &cfg)
{
    try {
        (void)eval_expression(parse_expression(src), cfg);
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error for " << src;
    return Errc::io_error;
}

// Random sentence of the grammar, with redundant spacing and parentheses.
std::string random_expression(std::mt19937_64 &rng, int depth)
{
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 6);
    switch (pick(rng)) {
        case 0:
            return std::to_string(rng() % 20);
        case 1:
            return "M";
        case 2:
            return std::to_string(rng() % 7) + "/" + std::to_string(1 + rng() % 5);
        case 3:
            return "-" + random_expression(rng, depth - 1);
        case 4:
            return "( " + random_expression(rng, depth - 1) + " )";
        case 5:
            return random_expression(rng, depth - 1) + " + " + random_expression(rng, depth - 1);
        default:
            return random_expression(rng, depth - 1) + "*" + random_expression(rng, depth - 1);
    }
}

} // namespace

TEST(ParseExpression, PrecedenceAndAssociativity)
{
    using E = Expression;
    EXPECT_EQ(parse_expression("1 + 2 + 3"), E::add(E::add(E::number(1), E::number(2)), E::number(3)));
    EXPECT_EQ(parse_expression("1 + 2 * M"), E::add(E::number(1), E::mul(E::number(2), E::m())));
    EXPECT_EQ(parse_expression("-2 + (M + 1)"),
              E::add(E::neg(E::number(2)), E::paren(E::add(E::m(), E::number(1)))));
    EXPECT_EQ(parse_expression(" 3/4*0.5 "), E::mul(E::number(Rational(3, 4)), E::number(Rational(1, 2))));
}

TEST(ParseExpression, ErrorsCarryOffsetAndExpectations)
{
    try {
        (void)parse_expression("1 + ");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.code(), Errc::parse_error);
        EXPECT_EQ(e.offset(), 4u);
        EXPECT_EQ(e.expected(), (std::vector<std::string>{"number", "M", "-", "("}));
    }
    try {
        (void)parse_expression("(1 + 2");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.offset(), 6u);
    }
    try {
        (void)parse_expression("1 2");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.offset(), 2u);
        EXPECT_EQ(e.expected(), (std::vector<std::string>{"+", "*", "end of input"}));
    }
    for (const char *bad : {"", "+", "1 +* 2", "x", "1/0", "()", "M M"}) {
        EXPECT_THROW((void)parse_expression(bad), Error) << bad;
    }
}

TEST(PrintExpression, RoundTripsRandomSentences)
{
    std::mt19937_64 rng(99);
    for (int i = 0; i < 2000; ++i) {
        const auto src = random_expression(rng, 5);
        const auto e = parse_expression(src);
        const auto printed = print_expression(e);
        ASSERT_EQ(parse_expression(printed), e) << src << " -> " << printed;
        ASSERT_EQ(print_expression(parse_expression(printed)), printed);
    }
}

TEST(EvalExpression, Examples)
{
    EXPECT_EQ(eval("1 + 1", config(ArithmeticClass::am, "1")), "1");
    EXPECT_EQ(eval("M + 1", config(ArithmeticClass::am, "1000000")), "1000000");
    EXPECT_EQ(eval("1/2 * 1/2 + 1/4", config(ArithmeticClass::am, "1")), "1/2");
    EXPECT_EQ(eval("-2 + (M + 1)", config(ArithmeticClass::amm, "5")), "3");
    EXPECT_EQ(eval("(-2 + M) + 1", config(ArithmeticClass::amm, "5")), "4");
    EXPECT_EQ(eval("-2 + M + 1", config(ArithmeticClass::amm, "5")), "4");
    EXPECT_EQ(eval("2 + 3", config(ArithmeticClass::bm, "4")), "3");
    EXPECT_EQ(eval("M + 0", config(ArithmeticClass::bm, "4")), "4");
}

TEST(EvalExpression, AmmChainMatchesFold)
{
    const ClampMagnitude m(Rational(5));
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> v(-5, 5);
    for (int i = 0; i < 500; ++i) {
        std::vector<AmmValue> xs;
        std::string src;
        for (int k = 0; k < 2 + i % 6; ++k) {
            const long x = v(rng);
            xs.emplace_back(Rational(x), m);
            src += (k ? " + " : "") + std::to_string(x);
        }
        ASSERT_EQ(eval(src, config(ArithmeticClass::amm, "5")), amm_fold(xs).value().to_string()) << src;
    }
}

TEST(EvalExpression, Errors)
{
    EXPECT_EQ(eval_error("-1", config(ArithmeticClass::am, "1")), Errc::class_error);
    EXPECT_EQ(eval_error("2", config(ArithmeticClass::am, "1")), Errc::domain_error);
    EXPECT_EQ(eval_error("6", config(ArithmeticClass::amm, "5")), Errc::domain_error);
    EXPECT_EQ(eval_error("5", config(ArithmeticClass::bm, "4")), Errc::domain_error);
    EXPECT_EQ(eval_error("-1", config(ArithmeticClass::bm, "4")), Errc::class_error);
    EXPECT_EQ(eval_error("M + 0", config(ArithmeticClass::bm, "4", Mode::strict)), Errc::indeterminate_form);
    EXPECT_EQ(eval_error("1", config(ArithmeticClass::am, "1/2")), Errc::invalid_magnitude);
    EXPECT_EQ(eval_error("1", config(ArithmeticClass::bm, "0")), Errc::invalid_magnitude);
}

TEST(RunDemo, Examples)
{
    const auto sorites = run_demo("sorites");
    EXPECT_NE(sorites.find("M = 1000000"), std::string::npos);
    EXPECT_NE(sorites.find("1000000 ⊕ 1 = 1000000"), std::string::npos);
    EXPECT_NE(run_demo("machine-infinity").find("2147483647 ⊕ 1 = 2147483647"), std::string::npos);
    EXPECT_NE(run_demo("raindrop").find("1 ⊕ 1 = 1"), std::string::npos);
    EXPECT_NE(run_demo("lion-rabbit").find("1 ⊕ 1 = 1"), std::string::npos);
    EXPECT_NE(run_demo("sorites", "7").find("7 ⊕ 1 = 7"), std::string::npos);
    EXPECT_THROW((void)run_demo("zeno"), Error);
}
