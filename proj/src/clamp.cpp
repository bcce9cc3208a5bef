#include <prearith/clamp.hpp>

#include <algorithm>

namespace prearith
{

namespace
{

void require_same(const ClampMagnitude &a, const ClampMagnitude &b)
{
    if (!(a == b)) {
        throw Error(Errc::magnitude_mismatch,
                    "magnitude mismatch: " + a.value().to_string() + " vs " + b.value().to_string());
    }
}

Rational clamp_signed(const Rational &x, const Rational &m)
{
    if (x > m) {
        return m;
    }
    if (x < -m) {
        return -m;
    }
    return x;
}

} // namespace

AmValue::AmValue(Rational value, ClampMagnitude magnitude) : value_(std::move(value)), magnitude_(std::move(magnitude))
{
    if (value_.sign() < 0 || value_ > magnitude_.value()) {
        throw Error(Errc::domain_error,
                    value_.to_string() + " is outside [0, " + magnitude_.value().to_string() + "]");
    }
}

AmmValue::AmmValue(Rational value, ClampMagnitude magnitude) : value_(std::move(value)), magnitude_(std::move(magnitude))
{
    if (value_ < -magnitude_.value() || value_ > magnitude_.value()) {
        throw Error(Errc::domain_error, value_.to_string() + " is outside [-" + magnitude_.value().to_string() + ", "
                                            + magnitude_.value().to_string() + "]");
    }
}

AmmValue operator-(const AmmValue &a)
{
    return {-a.value(), a.magnitude()};
}

AmValue am_add(const AmValue &a, const AmValue &b)
{
    require_same(a.magnitude(), b.magnitude());
    return {std::min(a.magnitude().value(), a.value() + b.value()), a.magnitude()};
}

AmValue am_mul(const AmValue &a, const AmValue &b)
{
    require_same(a.magnitude(), b.magnitude());
    return {std::min(a.magnitude().value(), a.value() * b.value()), a.magnitude()};
}

AmValue am_coproject(const Rational &x, const ClampMagnitude &m)
{
    if (x.sign() < 0) {
        throw Error(Errc::negative_input, "A_M coprojector is defined on [0, inf), got " + x.to_string());
    }
    return {std::min(m.value(), x), m};
}

AmValue am_coproject(Infinity x, const ClampMagnitude &m)
{
    if (x == Infinity::negative) {
        throw Error(Errc::negative_input, "A_M coprojector is defined on [0, inf), got -inf");
    }
    return AmValue::top(m);
}

AmmValue amm_add(const AmmValue &a, const AmmValue &b)
{
    require_same(a.magnitude(), b.magnitude());
    return {clamp_signed(a.value() + b.value(), a.magnitude().value()), a.magnitude()};
}

AmmValue amm_mul(const AmmValue &a, const AmmValue &b)
{
    require_same(a.magnitude(), b.magnitude());
    return {clamp_signed(a.value() * b.value(), a.magnitude().value()), a.magnitude()};
}

AmmValue amm_coproject(const Rational &x, const ClampMagnitude &m)
{
    return {clamp_signed(x, m.value()), m};
}

AmmValue amm_coproject(Infinity x, const ClampMagnitude &m)
{
    return {x == Infinity::positive ? m.value() : -m.value(), m};
}

AmmValue amm_fold(std::span<const AmmValue> terms)
{
    if (terms.empty()) {
        throw Error(Errc::empty_sequence, "cannot fold an empty sequence");
    }
    AmmValue acc = terms.front();
    for (const auto &t : terms.subspan(1)) {
        acc = amm_add(acc, t);
    }
    return acc;
}

ExpansionResult greedy_expansion(const Rational &z, const Rational &x, unsigned stages, const ClampMagnitude &m)
{
    if (z.sign() <= 0 || z > m.value()) {
        throw Error(Errc::domain_error, "z must lie in (0, M], got " + z.to_string());
    }
    if (x.sign() <= 0 || x >= Rational(1)) {
        throw Error(Errc::domain_error, "x must lie in (0, 1), got " + x.to_string());
    }
    if (stages == 0) {
        throw Error(Errc::domain_error, "at least one stage is required");
    }

    ExpansionResult result;
    result.counts.reserve(stages);
    Rational power(1);
    for (unsigned n = 1; n <= stages; ++n) {
        power *= x;
        // Largest k >= 0 with k * x^n < z - partial; the gap is always positive.
        const Rational k = ((z - result.partial_sum) / power).ceil() - Rational(1);
        result.partial_sum += k * power;
        result.counts.push_back(k);
    }
    result.error_bound = power;
    return result;
}

} // namespace prearith
