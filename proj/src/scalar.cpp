#include <prearith/scalar.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace prearith
{

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

[[noreturn]] void bad_number(std::string_view text)
{
    throw Error(Errc::parse_error, "invalid number '" + std::string(text) + "'");
}

mpz_class pow10(unsigned long exponent)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
    return r;
}

} // namespace

Rational::Rational(long num, long den)
{
    if (den == 0) {
        throw Error(Errc::domain_error, "zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q))
{
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    mpq_class q;
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        const auto num = body.substr(0, slash);
        const auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            bad_number(text);
        }
        mpz_class n(std::string(num), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) {
            throw Error(Errc::domain_error, "zero denominator in '" + std::string(text) + "'");
        }
        q = mpq_class(n, d);
    } else {
        long exponent = 0;
        if (const auto e = body.find_first_of("eE"); e != std::string_view::npos) {
            auto exp_text = body.substr(e + 1);
            if (!exp_text.empty() && exp_text.front() == '+') {
                exp_text.remove_prefix(1);
            }
            const auto *first = exp_text.data();
            const auto *last = first + exp_text.size();
            const auto [ptr, ec] = std::from_chars(first, last, exponent);
            if (exp_text.empty() || ec != std::errc{} || ptr != last || exponent > 100000 || exponent < -100000) {
                bad_number(text);
            }
            body = body.substr(0, e);
        }
        std::string_view int_part = body;
        std::string_view frac_part;
        if (const auto dot = body.find('.'); dot != std::string_view::npos) {
            int_part = body.substr(0, dot);
            frac_part = body.substr(dot + 1);
            if (!frac_part.empty() && !all_digits(frac_part)) {
                bad_number(text);
            }
        }
        if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part))) {
            bad_number(text);
        }
        std::string digits(int_part);
        digits.append(frac_part);
        mpz_class n(digits.empty() ? std::string("0") : digits, 10);
        exponent -= static_cast<long>(frac_part.size());
        if (exponent >= 0) {
            q = mpq_class(n * pow10(static_cast<unsigned long>(exponent)));
        } else {
            q = mpq_class(n, pow10(static_cast<unsigned long>(-exponent)));
        }
    }
    q.canonicalize();
    if (negative) {
        q = -q;
    }
    return Rational(std::move(q));
}

Rational Rational::from_double(double value)
{
    if (!std::isfinite(value)) {
        throw Error(Errc::domain_error, "non-finite value has no rational form");
    }
    // mpq_set_d is exact for binary64 inputs.
    return Rational(mpq_class(value));
}

std::string Rational::numerator() const
{
    return q_.get_num().get_str();
}

std::string Rational::denominator() const
{
    return q_.get_den().get_str();
}

bool Rational::is_integer() const
{
    return q_.get_den() == 1;
}

std::string Rational::to_string() const
{
    return is_integer() ? q_.get_num().get_str() : q_.get_str();
}

Rational Rational::floor() const
{
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return Rational(mpq_class(r));
}

Rational Rational::ceil() const
{
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return Rational(mpq_class(r));
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(q_)));
}

Rational &Rational::operator+=(const Rational &o)
{
    q_ += o.q_;
    return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
    q_ -= o.q_;
    return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
    q_ *= o.q_;
    return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.sign() == 0) {
        throw Error(Errc::domain_error, "division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational pow(const Rational &base, unsigned exponent)
{
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.to_string();
}

ExtendedReal ExtendedReal::finite(double value)
{
    if (std::isnan(value)) {
        throw Error(Errc::domain_error, "NaN is not an extended real");
    }
    if (std::isinf(value)) {
        return value > 0 ? pos_inf() : neg_inf();
    }
    return ExtendedReal(Kind::finite, value);
}

double ExtendedReal::value() const
{
    if (kind_ != Kind::finite) {
        throw Error(Errc::domain_error, "infinite extended real has no finite value");
    }
    return value_;
}

double ExtendedReal::to_double() const noexcept
{
    switch (kind_) {
        case Kind::neg_inf:
            return -std::numeric_limits<double>::infinity();
        case Kind::pos_inf:
            return std::numeric_limits<double>::infinity();
        case Kind::finite:
            break;
    }
    return value_;
}

std::string ExtendedReal::to_string() const
{
    switch (kind_) {
        case Kind::neg_inf:
            return "-inf";
        case Kind::pos_inf:
            return "+inf";
        case Kind::finite:
            break;
    }
    std::ostringstream os;
    os.precision(17);
    os << value_;
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const ExtendedReal &x)
{
    return os << x.to_string();
}

ExtendedReal ext_add(const ExtendedReal &a, const ExtendedReal &b, Mode mode)
{
    using K = ExtendedReal::Kind;
    const bool has_pos = a.kind() == K::pos_inf || b.kind() == K::pos_inf;
    const bool has_neg = a.kind() == K::neg_inf || b.kind() == K::neg_inf;
    if (has_pos && has_neg && mode == Mode::strict) {
        throw Error(Errc::indeterminate_form, "+inf + -inf");
    }
    if (has_pos) {
        return ExtendedReal::pos_inf();
    }
    if (has_neg) {
        return ExtendedReal::neg_inf();
    }
    return ExtendedReal::finite(a.value() + b.value());
}

ExtendedReal ext_mul(const ExtendedReal &a, const ExtendedReal &b, Mode mode)
{
    if (a.is_finite() && b.is_finite()) {
        return ExtendedReal::finite(a.value() * b.value());
    }
    const auto sign_of = [](const ExtendedReal &x) {
        switch (x.kind()) {
            case ExtendedReal::Kind::neg_inf:
                return -1;
            case ExtendedReal::Kind::pos_inf:
                return 1;
            case ExtendedReal::Kind::finite:
                break;
        }
        return x.value() > 0 ? 1 : (x.value() < 0 ? -1 : 0);
    };
    const int sa = sign_of(a);
    const int sb = sign_of(b);
    if (sa == 0 || sb == 0) {
        if (mode == Mode::strict) {
            throw Error(Errc::indeterminate_form, "inf * 0");
        }
        return ExtendedReal::finite(0.0);
    }
    return sa * sb > 0 ? ExtendedReal::pos_inf() : ExtendedReal::neg_inf();
}

ClampMagnitude::ClampMagnitude(Rational value) : value_(std::move(value))
{
    if (value_ < Rational(1)) {
        throw Error(Errc::invalid_magnitude, "clamp magnitude must be >= 1, got " + value_.to_string());
    }
}

ProjectiveMagnitude::ProjectiveMagnitude(double value) : value_(value)
{
    if (!std::isfinite(value) || !(value > 0.0)) {
        throw Error(Errc::invalid_magnitude, "projective magnitude must be finite and > 0");
    }
}

} // namespace prearith
