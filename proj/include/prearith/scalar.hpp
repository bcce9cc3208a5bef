#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <prearith/error.hpp>

namespace prearith
{

// Exact rational number, always in lowest terms with a positive denominator.
class Rational
{
public:
    Rational() = default;
    Rational(long value) : q_(value) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    // Accepts "p/q", integers and finite decimals ("-12.375", "1e-3", "2.5E2").
    // Decimals convert exactly.
    static Rational parse(std::string_view text);
    // Exact value of a binary64 (finite only).
    static Rational from_double(double value);

    [[nodiscard]] const mpq_class &raw() const noexcept
    {
        return q_;
    }
    [[nodiscard]] std::string numerator() const;
    [[nodiscard]] std::string denominator() const;
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const noexcept
    {
        return sgn(q_);
    }
    [[nodiscard]] double to_double() const
    {
        return q_.get_d();
    }
    // "p/q", or "p" for integers.
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] Rational floor() const;
    [[nodiscard]] Rational ceil() const;
    [[nodiscard]] Rational abs() const;

    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }
    friend Rational operator-(const Rational &a)
    {
        return Rational(mpq_class(-a.q_));
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return cmp(a.q_, b.q_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        return cmp(a.q_, b.q_) <=> 0;
    }

private:
    mpq_class q_;
};

Rational pow(const Rational &base, unsigned exponent);
std::ostream &operator<<(std::ostream &os, const Rational &r);

enum class Infinity { negative, positive };

// Indeterminate forms: total mode applies the documented conventions,
// strict mode raises Errc::indeterminate_form.
enum class Mode { total, strict };

// Element of [-inf, +inf] backed by binary64.
class ExtendedReal
{
public:
    enum class Kind { neg_inf, finite, pos_inf };

    // Overflowed values (+-inf encodings) map to the matching infinite tag; NaN is rejected.
    static ExtendedReal finite(double value);
    static ExtendedReal pos_inf() noexcept
    {
        return ExtendedReal(Kind::pos_inf, 0.0);
    }
    static ExtendedReal neg_inf() noexcept
    {
        return ExtendedReal(Kind::neg_inf, 0.0);
    }
    static ExtendedReal infinity(Infinity inf) noexcept
    {
        return inf == Infinity::positive ? pos_inf() : neg_inf();
    }

    [[nodiscard]] Kind kind() const noexcept
    {
        return kind_;
    }
    [[nodiscard]] bool is_finite() const noexcept
    {
        return kind_ == Kind::finite;
    }
    // Throws Errc::domain_error for infinite values.
    [[nodiscard]] double value() const;
    // +-infinity encodings for the infinite tags.
    [[nodiscard]] double to_double() const noexcept;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const ExtendedReal &a, const ExtendedReal &b) noexcept
    {
        return a.kind_ == b.kind_ && a.value_ == b.value_;
    }
    friend std::partial_ordering operator<=>(const ExtendedReal &a, const ExtendedReal &b) noexcept
    {
        if (a.kind_ != b.kind_) {
            return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        }
        return a.value_ <=> b.value_;
    }

private:
    ExtendedReal(Kind kind, double value) noexcept : kind_(kind), value_(value) {}

    Kind kind_;
    double value_;
};

std::ostream &operator<<(std::ostream &os, const ExtendedReal &x);

// Sum in the extended reals. +inf + -inf is +inf in total mode.
ExtendedReal ext_add(const ExtendedReal &a, const ExtendedReal &b, Mode mode = Mode::total);
// Product in the extended reals. +-inf * 0 is 0 in total mode.
ExtendedReal ext_mul(const ExtendedReal &a, const ExtendedReal &b, Mode mode = Mode::total);

// Parameter M of A_M and A_{-M,M}: an exact rational, M >= 1.
class ClampMagnitude
{
public:
    explicit ClampMagnitude(Rational value);

    [[nodiscard]] const Rational &value() const noexcept
    {
        return value_;
    }

    friend bool operator==(const ClampMagnitude &, const ClampMagnitude &) = default;

private:
    Rational value_;
};

// Parameter M of B_M: a finite binary64, M > 0.
class ProjectiveMagnitude
{
public:
    explicit ProjectiveMagnitude(double value);

    [[nodiscard]] double value() const noexcept
    {
        return value_;
    }

    friend bool operator==(const ProjectiveMagnitude &, const ProjectiveMagnitude &) = default;

private:
    double value_;
};

} // namespace prearith
