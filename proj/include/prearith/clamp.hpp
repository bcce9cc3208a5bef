#pragma once

#include <span>
#include <vector>

#include <prearith/scalar.hpp>

namespace prearith
{

// Element of A_M = ([0,M], min(M, a+b), min(M, a*b), <=).
class AmValue
{
public:
    // Throws Errc::domain_error unless 0 <= value <= M.
    AmValue(Rational value, ClampMagnitude magnitude);

    static AmValue zero(const ClampMagnitude &m)
    {
        return {Rational(0), m};
    }
    static AmValue one(const ClampMagnitude &m)
    {
        return {Rational(1), m};
    }
    static AmValue top(const ClampMagnitude &m)
    {
        return {m.value(), m};
    }

    [[nodiscard]] const Rational &value() const noexcept
    {
        return value_;
    }
    [[nodiscard]] const ClampMagnitude &magnitude() const noexcept
    {
        return magnitude_;
    }

    friend bool operator==(const AmValue &, const AmValue &) = default;

private:
    Rational value_;
    ClampMagnitude magnitude_;
};

// Element of A_{-M,M} = ([-M,M], clamped sum, clamped product, <=).
class AmmValue
{
public:
    // Throws Errc::domain_error unless -M <= value <= M.
    AmmValue(Rational value, ClampMagnitude magnitude);

    [[nodiscard]] const Rational &value() const noexcept
    {
        return value_;
    }
    [[nodiscard]] const ClampMagnitude &magnitude() const noexcept
    {
        return magnitude_;
    }

    friend bool operator==(const AmmValue &, const AmmValue &) = default;

private:
    Rational value_;
    ClampMagnitude magnitude_;
};

// The carrier is closed under negation.
AmmValue operator-(const AmmValue &a);

AmValue am_add(const AmValue &a, const AmValue &b);
AmValue am_mul(const AmValue &a, const AmValue &b);

// Coprojector R+ -> A_M, h(x) = min(M, x). Negative input is Errc::negative_input.
AmValue am_coproject(const Rational &x, const ClampMagnitude &m);
AmValue am_coproject(Infinity x, const ClampMagnitude &m);

AmmValue amm_add(const AmmValue &a, const AmmValue &b);
AmmValue amm_mul(const AmmValue &a, const AmmValue &b);

// Coprojector R -> A_{-M,M}: clamp into [-M, M].
AmmValue amm_coproject(const Rational &x, const ClampMagnitude &m);
AmmValue amm_coproject(Infinity x, const ClampMagnitude &m);

// Strict left fold ((t1 + t2) + t3) + ... . Addition in A_{-M,M} is not
// associative, so the order of `terms` is part of the result.
AmmValue amm_fold(std::span<const AmmValue> terms);

struct ExpansionResult {
    std::vector<Rational> counts; // k_1 .. k_m, each a nonnegative integer
    Rational partial_sum;         // sum_n k_n x^n
    Rational error_bound;         // x^m
};

// Greedy base-x digits of z: at stage n, k_n is the largest integer k >= 0 with
// partial + k x^n < z. Afterwards partial < z and z - partial <= x^m.
// Requires 0 < z <= M and 0 < x < 1, stages >= 1; otherwise Errc::domain_error.
ExpansionResult greedy_expansion(const Rational &z, const Rational &x, unsigned stages, const ClampMagnitude &m);

} // namespace prearith
