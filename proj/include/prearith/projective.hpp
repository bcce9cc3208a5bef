#pragma once

#include <prearith/scalar.hpp>

namespace prearith
{

// Element of B_M = ([0,M], f(f^-1(a) + f^-1(b)), f(f^-1(a) * f^-1(b)), <=)
// with generator f(x) = M (arctan(x) / pi + 1/2).
class BmValue
{
public:
    // Throws Errc::domain_error unless 0 <= value <= M.
    BmValue(double value, ProjectiveMagnitude magnitude);

    [[nodiscard]] double value() const noexcept
    {
        return value_;
    }
    [[nodiscard]] const ProjectiveMagnitude &magnitude() const noexcept
    {
        return magnitude_;
    }
    [[nodiscard]] bool is_bottom() const noexcept
    {
        return value_ == 0.0;
    }
    [[nodiscard]] bool is_top() const noexcept
    {
        return value_ == magnitude_.value();
    }

    friend bool operator==(const BmValue &, const BmValue &) = default;

private:
    double value_;
    ProjectiveMagnitude magnitude_;
};

// Generator f: [-inf, inf] -> [0, M]. Infinite inputs map to 0 and M without
// evaluating arctan.
BmValue bm_forward(const ExtendedReal &x, const ProjectiveMagnitude &m);
// f^-1: [0, M] -> [-inf, inf]. The endpoints map to -inf and +inf by tag.
ExtendedReal bm_inverse(const BmValue &a);

BmValue bm_add(const BmValue &a, const BmValue &b, Mode mode = Mode::total);
BmValue bm_mul(const BmValue &a, const BmValue &b, Mode mode = Mode::total);

// |a - b| <= rel_tol * M, for tests and audits.
bool approx_equal(const BmValue &a, const BmValue &b, double rel_tol = 1e-9);

} // namespace prearith
