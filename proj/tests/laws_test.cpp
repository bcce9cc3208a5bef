#include <gtest/gtest.h>

#include <prearith/laws.hpp>

#include "oracles.hpp"

using namespace prearith;

namespace
{

std::vector<Number> rationals(std::initializer_list<Rational> xs)
{
    return {xs.begin(), xs.end()};
}

Rational as_q(const Number &n)
{
    return std::get<Rational>(n);
}

} // namespace

TEST(LawNames, RoundTrip)
{
    for (Law law : all_laws) {
        EXPECT_EQ(parse_law(to_string(law)), law);
    }
    try {
        (void)parse_law("mul-inverse");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::unsupported_law);
    }
    EXPECT_EQ(parse_class("amm"), ArithmeticClass::amm);
    EXPECT_THROW((void)parse_class("cm"), Error);
    EXPECT_EQ(arity(Law::add_comm), 2u);
    EXPECT_EQ(arity(Law::identity_0), 1u);
    EXPECT_EQ(arity(Law::order_compat), 3u);
}

TEST(CheckLaw, LeftDistribViolationInAm)
{
    const auto v = check_law(ArithmeticClass::am, Rational(2), Law::left_distrib,
                             rationals({Rational(1, 2), 2, 2}));
    ASSERT_TRUE(v);
    EXPECT_EQ(as_q(v->lhs), Rational(1));
    EXPECT_EQ(as_q(v->rhs), Rational(2));
}

TEST(CheckLaw, AddAssocViolationInAmm)
{
    const auto v = check_law(ArithmeticClass::amm, Rational(5), Law::add_assoc, rationals({-2, 5, 1}));
    ASSERT_TRUE(v);
    EXPECT_NE(compare(v->lhs, v->rhs), std::strong_ordering::equal);
}

TEST(CheckLaw, OrderCompatSkipsTuplesOutsideItsDomain)
{
    EXPECT_FALSE(check_law(ArithmeticClass::am, Rational(2), Law::order_compat, rationals({2, 1, 1})));
}

TEST(CheckLaw, AgreesWithOracleOnAmGrid)
{
    const Rational m(3);
    const auto mq = oracle::q(3);
    for (long a = 0; a <= 12; ++a) {
        for (long b = 0; b <= 12; ++b) {
            for (long c = 0; c <= 12; ++c) {
                const auto qa = oracle::q(a, 4), qb = oracle::q(b, 4), qc = oracle::q(c, 4);
                const auto lhs = oracle::clamp_mul(mq, qa, oracle::clamp_add(mq, qb, qc));
                const auto rhs = oracle::clamp_add(mq, oracle::clamp_mul(mq, qa, qb), oracle::clamp_mul(mq, qa, qc));
                const auto mul_l = oracle::clamp_mul(mq, oracle::clamp_mul(mq, qa, qb), qc);
                const auto mul_r = oracle::clamp_mul(mq, qa, oracle::clamp_mul(mq, qb, qc));
                const std::vector<Number> t{Rational(a, 4), Rational(b, 4), Rational(c, 4)};
                ASSERT_EQ(check_law(ArithmeticClass::am, m, Law::left_distrib, t).has_value(), lhs != rhs);
                ASSERT_EQ(check_law(ArithmeticClass::am, m, Law::mul_assoc, t).has_value(), mul_l != mul_r);
                ASSERT_FALSE(check_law(ArithmeticClass::am, m, Law::add_assoc, t).has_value());
            }
        }
    }
}

TEST(FindCounterexample, LexicographicallySmallest)
{
    const auto grid = rationals({0, Rational(1, 2), 1, Rational(3, 2), 2});
    const auto v = find_counterexample(ArithmeticClass::am, Rational(2), Law::left_distrib, grid);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->inputs, rationals({Rational(1, 2), Rational(1, 2), 2}));

    const auto narrow = find_counterexample(ArithmeticClass::am, Rational(2), Law::left_distrib,
                                            rationals({Rational(1, 2), 2}));
    ASSERT_TRUE(narrow);
    EXPECT_EQ(narrow->inputs, rationals({Rational(1, 2), Rational(1, 2), 2}));
    EXPECT_EQ(as_q(narrow->lhs), Rational(1));
    EXPECT_EQ(as_q(narrow->rhs), Rational(5, 4));

    const auto mul = find_counterexample(ArithmeticClass::am, Rational(2), Law::mul_assoc,
                                         rationals({Rational(1, 2), 2}));
    ASSERT_TRUE(mul);
    EXPECT_EQ(mul->inputs, rationals({Rational(1, 2), 2, 2}));
}

TEST(FindCounterexample, NoneForHoldingLaws)
{
    const auto am_grid = audit_grid(ArithmeticClass::am, Rational(2));
    for (Law law : {Law::add_assoc, Law::add_comm, Law::mul_comm, Law::order_compat, Law::absorbing_m,
                    Law::identity_0, Law::identity_1, Law::annihilator_0}) {
        EXPECT_FALSE(find_counterexample(ArithmeticClass::am, Rational(2), law, am_grid)) << to_string(law);
    }
    const auto amm_grid = audit_grid(ArithmeticClass::amm, Rational(2));
    EXPECT_FALSE(find_counterexample(ArithmeticClass::amm, Rational(2), Law::add_comm, amm_grid));
    EXPECT_TRUE(find_counterexample(ArithmeticClass::amm, Rational(2), Law::add_assoc, amm_grid));
}

TEST(AuditGrid, Shape)
{
    const auto am = audit_grid(ArithmeticClass::am, Rational(2));
    EXPECT_EQ(am.size(), 9u);
    EXPECT_EQ(as_q(am.front()), Rational(0));
    EXPECT_EQ(as_q(am.back()), Rational(2));
    const auto amm = audit_grid(ArithmeticClass::amm, Rational(2));
    EXPECT_EQ(amm.size(), 17u);
    EXPECT_EQ(as_q(amm.front()), Rational(-2));
    const auto bm = audit_grid(ArithmeticClass::bm, Rational(4));
    EXPECT_TRUE(std::holds_alternative<double>(bm.front()));
}

TEST(AuditLaws, ClampClassesAtM2)
{
    const std::vector<Law> laws(std::begin(all_laws), std::end(all_laws));
    AuditOptions opts;
    opts.budget = 5000;
    opts.seed = 7;
    const auto reports = audit_laws(ArithmeticClass::am, Rational(2), laws, opts);
    ASSERT_EQ(reports.size(), laws.size());
    for (const auto &r : reports) {
        const bool should_fail = r.law == Law::mul_assoc || r.law == Law::left_distrib || r.law == Law::right_distrib;
        EXPECT_EQ(r.held(), !should_fail) << to_string(r.law);
        EXPECT_GE(r.samples_checked, opts.budget);
        EXPECT_TRUE(std::is_sorted(r.violations.begin(), r.violations.end(), [](const auto &x, const auto &y) {
            return std::lexicographical_compare(x.inputs.begin(), x.inputs.end(), y.inputs.begin(), y.inputs.end(),
                                                [](const Number &a, const Number &b) { return compare(a, b) < 0; });
        }));
    }
}

TEST(AuditLaws, DeterministicForFixedSeed)
{
    const std::vector<Law> laws{Law::mul_assoc, Law::left_distrib, Law::add_assoc};
    AuditOptions opts;
    opts.budget = 3000;
    opts.seed = 12345;
    const auto a = audit_laws(ArithmeticClass::amm, Rational(3), laws, opts);
    const auto b = audit_laws(ArithmeticClass::amm, Rational(3), laws, opts);
    EXPECT_EQ(a, b);
    for (const auto &r : a) {
        EXPECT_EQ(r.seed, 12345u);
    }
}

TEST(AuditLaws, ProjectiveInterior)
{
    const std::vector<Law> laws{Law::add_assoc, Law::add_comm, Law::mul_comm, Law::identity_0,
                                Law::identity_1, Law::annihilator_0};
    AuditOptions opts;
    opts.budget = 4000;
    for (const auto &r : audit_laws(ArithmeticClass::bm, Rational(4), laws, opts)) {
        EXPECT_TRUE(r.held()) << to_record(r);
    }
}

TEST(AuditLaws, RejectsZeroBudget)
{
    AuditOptions opts;
    opts.budget = 0;
    const Law law[] = {Law::add_comm};
    EXPECT_THROW((void)audit_laws(ArithmeticClass::am, Rational(2), law, opts), Error);
}

TEST(ToRecord, Format)
{
    AuditOptions opts;
    opts.budget = 10;
    opts.seed = 3;
    const Law laws[] = {Law::add_comm, Law::left_distrib};
    const auto reports = audit_laws(ArithmeticClass::am, Rational(2), laws, opts);
    const auto held = to_record(reports[0]);
    EXPECT_EQ(held.rfind("class=am M=2 law=add-comm samples=", 0), 0u) << held;
    EXPECT_NE(held.find(" violations=0 seed=3 status=held"), std::string::npos) << held;
    EXPECT_EQ(held.find("example="), std::string::npos);
    const auto failed = to_record(reports[1]);
    EXPECT_NE(failed.find("status=violated example=("), std::string::npos) << failed;
    EXPECT_NE(failed.find(" lhs="), std::string::npos);
    EXPECT_EQ(failed.find('\n'), std::string::npos);
}
