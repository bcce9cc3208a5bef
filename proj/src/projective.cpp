#include <prearith/projective.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace prearith
{

namespace
{

void require_same(const ProjectiveMagnitude &a, const ProjectiveMagnitude &b)
{
    if (!(a == b)) {
        throw Error(Errc::magnitude_mismatch, "B_M magnitude mismatch");
    }
}

} // namespace

BmValue::BmValue(double value, ProjectiveMagnitude magnitude) : value_(value), magnitude_(magnitude)
{
    if (!(value_ >= 0.0 && value_ <= magnitude_.value())) {
        throw Error(Errc::domain_error, "value is outside [0, M]");
    }
}

BmValue bm_forward(const ExtendedReal &x, const ProjectiveMagnitude &m)
{
    switch (x.kind()) {
        case ExtendedReal::Kind::pos_inf:
            return {m.value(), m};
        case ExtendedReal::Kind::neg_inf:
            return {0.0, m};
        case ExtendedReal::Kind::finite:
            break;
    }
    const double y = m.value() * (std::atan(x.value()) / std::numbers::pi + 0.5);
    return {std::clamp(y, 0.0, m.value()), m};
}

ExtendedReal bm_inverse(const BmValue &a)
{
    if (a.is_top()) {
        return ExtendedReal::pos_inf();
    }
    if (a.is_bottom()) {
        return ExtendedReal::neg_inf();
    }
    const double m = a.magnitude().value();
    return ExtendedReal::finite(std::tan(std::numbers::pi / m * (a.value() - m / 2)));
}

BmValue bm_add(const BmValue &a, const BmValue &b, Mode mode)
{
    require_same(a.magnitude(), b.magnitude());
    return bm_forward(ext_add(bm_inverse(a), bm_inverse(b), mode), a.magnitude());
}

BmValue bm_mul(const BmValue &a, const BmValue &b, Mode mode)
{
    require_same(a.magnitude(), b.magnitude());
    return bm_forward(ext_mul(bm_inverse(a), bm_inverse(b), mode), a.magnitude());
}

bool approx_equal(const BmValue &a, const BmValue &b, double rel_tol)
{
    return a.magnitude() == b.magnitude() && std::abs(a.value() - b.value()) <= rel_tol * a.magnitude().value();
}

} // namespace prearith
