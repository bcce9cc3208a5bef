#include <prearith/laws.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <prearith/clamp.hpp>
#include <prearith/projective.hpp>

namespace prearith
{

namespace
{

Rational as_rational(const Number &n)
{
    if (const auto *r = std::get_if<Rational>(&n)) {
        return *r;
    }
    return Rational::from_double(std::get<double>(n));
}

double as_double(const Number &n)
{
    if (const auto *d = std::get_if<double>(&n)) {
        return *d;
    }
    return std::get<Rational>(n).to_double();
}

// Adapters giving the three classes a common shape for the law checks.
struct AmAlgebra {
    using value_type = AmValue;
    ClampMagnitude m;

    [[nodiscard]] AmValue make(const Number &n) const
    {
        return {as_rational(n), m};
    }
    [[nodiscard]] static Number out(const AmValue &v)
    {
        return v.value();
    }
    [[nodiscard]] static AmValue add(const AmValue &a, const AmValue &b)
    {
        return am_add(a, b);
    }
    [[nodiscard]] static AmValue mul(const AmValue &a, const AmValue &b)
    {
        return am_mul(a, b);
    }
    [[nodiscard]] AmValue zero() const
    {
        return AmValue::zero(m);
    }
    [[nodiscard]] AmValue one() const
    {
        return AmValue::one(m);
    }
    [[nodiscard]] AmValue top() const
    {
        return AmValue::top(m);
    }
    [[nodiscard]] static bool eq(const AmValue &a, const AmValue &b)
    {
        return a.value() == b.value();
    }
    [[nodiscard]] static bool le(const AmValue &a, const AmValue &b)
    {
        return a.value() <= b.value();
    }
};

struct AmmAlgebra {
    using value_type = AmmValue;
    ClampMagnitude m;

    [[nodiscard]] AmmValue make(const Number &n) const
    {
        return {as_rational(n), m};
    }
    [[nodiscard]] static Number out(const AmmValue &v)
    {
        return v.value();
    }
    [[nodiscard]] static AmmValue add(const AmmValue &a, const AmmValue &b)
    {
        return amm_add(a, b);
    }
    [[nodiscard]] static AmmValue mul(const AmmValue &a, const AmmValue &b)
    {
        return amm_mul(a, b);
    }
    [[nodiscard]] AmmValue zero() const
    {
        return {Rational(0), m};
    }
    [[nodiscard]] AmmValue one() const
    {
        return {Rational(1), m};
    }
    [[nodiscard]] AmmValue top() const
    {
        return {m.value(), m};
    }
    [[nodiscard]] static bool eq(const AmmValue &a, const AmmValue &b)
    {
        return a.value() == b.value();
    }
    [[nodiscard]] static bool le(const AmmValue &a, const AmmValue &b)
    {
        return a.value() <= b.value();
    }
};

struct BmAlgebra {
    using value_type = BmValue;
    ProjectiveMagnitude m;
    double tolerance;

    [[nodiscard]] BmValue make(const Number &n) const
    {
        return {as_double(n), m};
    }
    [[nodiscard]] static Number out(const BmValue &v)
    {
        return v.value();
    }
    [[nodiscard]] static BmValue add(const BmValue &a, const BmValue &b)
    {
        return bm_add(a, b);
    }
    [[nodiscard]] static BmValue mul(const BmValue &a, const BmValue &b)
    {
        return bm_mul(a, b);
    }
    [[nodiscard]] BmValue zero() const
    {
        return bm_forward(ExtendedReal::finite(0.0), m);
    }
    [[nodiscard]] BmValue one() const
    {
        return bm_forward(ExtendedReal::finite(1.0), m);
    }
    [[nodiscard]] BmValue top() const
    {
        return {m.value(), m};
    }
    [[nodiscard]] bool eq(const BmValue &a, const BmValue &b) const
    {
        return approx_equal(a, b, tolerance);
    }
    [[nodiscard]] bool le(const BmValue &a, const BmValue &b) const
    {
        return a.value() <= b.value() + tolerance * m.value();
    }
};

template <class Alg>
std::optional<Violation> check_with(const Alg &alg, Law law, std::span<const Number> inputs)
{
    if (inputs.size() != arity(law)) {
        throw Error(Errc::domain_error, std::string(to_string(law)) + " takes " + std::to_string(arity(law))
                                            + " operands");
    }
    using V = typename Alg::value_type;
    std::vector<V> x;
    x.reserve(inputs.size());
    for (const auto &n : inputs) {
        x.push_back(alg.make(n));
    }
    const std::vector<Number> in(inputs.begin(), inputs.end());
    const auto verdict = [&](const V &lhs, const V &rhs) -> std::optional<Violation> {
        if (alg.eq(lhs, rhs)) {
            return std::nullopt;
        }
        return Violation{in, Alg::out(lhs), Alg::out(rhs)};
    };

    switch (law) {
        case Law::add_assoc:
            return verdict(alg.add(alg.add(x[0], x[1]), x[2]), alg.add(x[0], alg.add(x[1], x[2])));
        case Law::mul_assoc:
            return verdict(alg.mul(alg.mul(x[0], x[1]), x[2]), alg.mul(x[0], alg.mul(x[1], x[2])));
        case Law::left_distrib:
            return verdict(alg.mul(x[0], alg.add(x[1], x[2])), alg.add(alg.mul(x[0], x[1]), alg.mul(x[0], x[2])));
        case Law::right_distrib:
            return verdict(alg.mul(alg.add(x[0], x[1]), x[2]), alg.add(alg.mul(x[0], x[2]), alg.mul(x[1], x[2])));
        case Law::add_comm:
            return verdict(alg.add(x[0], x[1]), alg.add(x[1], x[0]));
        case Law::mul_comm:
            return verdict(alg.mul(x[0], x[1]), alg.mul(x[1], x[0]));
        case Law::order_compat: {
            // a <= b implies a + c <= b + c, and a * c <= b * c for c >= zero.
            if (compare(inputs[0], inputs[1]) > 0) {
                return std::nullopt;
            }
            const V sa = alg.add(x[0], x[2]);
            const V sb = alg.add(x[1], x[2]);
            if (!alg.le(sa, sb)) {
                return Violation{in, Alg::out(sa), Alg::out(sb)};
            }
            if (alg.le(alg.zero(), x[2])) {
                const V pa = alg.mul(x[0], x[2]);
                const V pb = alg.mul(x[1], x[2]);
                if (!alg.le(pa, pb)) {
                    return Violation{in, Alg::out(pa), Alg::out(pb)};
                }
            }
            return std::nullopt;
        }
        case Law::absorbing_m:
            return verdict(alg.add(alg.top(), x[0]), alg.top());
        case Law::identity_0:
            return verdict(alg.add(alg.zero(), x[0]), x[0]);
        case Law::identity_1:
            return verdict(alg.mul(alg.one(), x[0]), x[0]);
        case Law::annihilator_0:
            return verdict(alg.mul(alg.zero(), x[0]), alg.zero());
    }
    throw Error(Errc::unsupported_law, "unsupported law");
}

template <class F>
decltype(auto) with_algebra(ArithmeticClass cls, const Rational &magnitude, const AuditOptions &opts, F &&f)
{
    switch (cls) {
        case ArithmeticClass::am:
            return f(AmAlgebra{ClampMagnitude(magnitude)});
        case ArithmeticClass::amm:
            return f(AmmAlgebra{ClampMagnitude(magnitude)});
        case ArithmeticClass::bm:
            break;
    }
    return f(BmAlgebra{ProjectiveMagnitude(magnitude.to_double()), opts.bm_tolerance});
}

bool lex_less(const std::vector<Number> &a, const std::vector<Number> &b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Number &x, const Number &y) { return compare(x, y) < 0; });
}

// Random carrier elements with small denominators so clamping boundaries are hit often.
class Sampler
{
public:
    Sampler(ArithmeticClass cls, const Rational &magnitude, const AuditOptions &opts, Law law)
        : cls_(cls), magnitude_(magnitude), band_(opts.bm_boundary_band)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                          static_cast<std::uint32_t>(law)};
        rng_.seed(seq);
    }

    Number next()
    {
        if (cls_ == ArithmeticClass::bm) {
            const double m = magnitude_.to_double();
            std::uniform_real_distribution<double> dist(band_ * m, (1.0 - band_) * m);
            return dist(rng_);
        }
        std::uniform_int_distribution<long> den_dist(1, 16);
        const long den = den_dist(rng_);
        const double scaled = (magnitude_ * Rational(den)).floor().to_double();
        const long hi = static_cast<long>(std::min(scaled, 4.0e18));
        const long lo = cls_ == ArithmeticClass::amm ? -hi : 0;
        std::uniform_int_distribution<long> num_dist(lo, hi);
        return Rational(num_dist(rng_), den);
    }

private:
    ArithmeticClass cls_;
    Rational magnitude_;
    double band_;
    std::mt19937_64 rng_;
};

template <class Visit>
void for_each_tuple(std::span<const Number> grid, std::size_t k, Visit &&visit)
{
    if (grid.empty()) {
        return;
    }
    std::vector<std::size_t> idx(k, 0);
    std::vector<Number> tuple(k, grid.front());
    while (true) {
        for (std::size_t i = 0; i < k; ++i) {
            tuple[i] = grid[idx[i]];
        }
        if (visit(std::span<const Number>(tuple))) {
            return;
        }
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < grid.size()) {
                break;
            }
            idx[pos] = 0;
            if (pos == 0) {
                return;
            }
        }
        if (k == 0) {
            return;
        }
    }
}

std::vector<Number> sorted_unique(std::vector<Number> v)
{
    std::sort(v.begin(), v.end(), [](const Number &a, const Number &b) { return compare(a, b) < 0; });
    v.erase(std::unique(v.begin(), v.end(), [](const Number &a, const Number &b) { return compare(a, b) == 0; }),
            v.end());
    return v;
}

} // namespace

std::string_view to_string(ArithmeticClass c) noexcept
{
    switch (c) {
        case ArithmeticClass::am:
            return "am";
        case ArithmeticClass::amm:
            return "amm";
        case ArithmeticClass::bm:
            return "bm";
    }
    return "am";
}

ArithmeticClass parse_class(std::string_view name)
{
    if (name == "am") {
        return ArithmeticClass::am;
    }
    if (name == "amm") {
        return ArithmeticClass::amm;
    }
    if (name == "bm") {
        return ArithmeticClass::bm;
    }
    throw Error(Errc::class_error, "unknown arithmetic class '" + std::string(name) + "'");
}

std::string_view to_string(Law law) noexcept
{
    switch (law) {
        case Law::add_assoc:
            return "add-assoc";
        case Law::mul_assoc:
            return "mul-assoc";
        case Law::left_distrib:
            return "left-distrib";
        case Law::right_distrib:
            return "right-distrib";
        case Law::add_comm:
            return "add-comm";
        case Law::mul_comm:
            return "mul-comm";
        case Law::order_compat:
            return "order-compat";
        case Law::absorbing_m:
            return "absorbing-M";
        case Law::identity_0:
            return "identity-0";
        case Law::identity_1:
            return "identity-1";
        case Law::annihilator_0:
            return "annihilator-0";
    }
    return "unknown";
}

Law parse_law(std::string_view name)
{
    for (Law law : all_laws) {
        if (to_string(law) == name) {
            return law;
        }
    }
    throw Error(Errc::unsupported_law, "unsupported law '" + std::string(name) + "'");
}

std::size_t arity(Law law) noexcept
{
    switch (law) {
        case Law::add_comm:
        case Law::mul_comm:
            return 2;
        case Law::absorbing_m:
        case Law::identity_0:
        case Law::identity_1:
        case Law::annihilator_0:
            return 1;
        default:
            return 3;
    }
}

std::string to_string(const Number &n)
{
    if (const auto *r = std::get_if<Rational>(&n)) {
        return r->to_string();
    }
    return ExtendedReal::finite(std::get<double>(n)).to_string();
}

std::strong_ordering compare(const Number &a, const Number &b)
{
    if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b)) {
        return std::get<Rational>(a) <=> std::get<Rational>(b);
    }
    // Mixed or float: compare exact values of the binary64 operands.
    return as_rational(a) <=> as_rational(b);
}

std::vector<Number> audit_grid(ArithmeticClass cls, const Rational &magnitude)
{
    std::vector<Number> grid;
    const int lo = cls == ArithmeticClass::amm ? -8 : 0;
    for (int k = lo; k <= 8; ++k) {
        const Rational v = magnitude * Rational(k, 8);
        if (cls == ArithmeticClass::bm) {
            grid.emplace_back(v.to_double());
        } else {
            grid.emplace_back(v);
        }
    }
    if (cls != ArithmeticClass::bm) {
        grid.emplace_back(Rational(1));
        if (cls == ArithmeticClass::amm) {
            grid.emplace_back(Rational(-1));
        }
    }
    return sorted_unique(std::move(grid));
}

std::optional<Violation> check_law(ArithmeticClass cls, const Rational &magnitude, Law law,
                                   std::span<const Number> inputs, const AuditOptions &opts)
{
    return with_algebra(cls, magnitude, opts, [&](const auto &alg) { return check_with(alg, law, inputs); });
}

std::optional<Violation> find_counterexample(ArithmeticClass cls, const Rational &magnitude, Law law,
                                             std::span<const Number> grid, const AuditOptions &opts)
{
    const auto sorted = sorted_unique(std::vector<Number>(grid.begin(), grid.end()));
    return with_algebra(cls, magnitude, opts, [&](const auto &alg) {
        std::optional<Violation> found;
        for_each_tuple(sorted, arity(law), [&](std::span<const Number> t) {
            found = check_with(alg, law, t);
            return found.has_value();
        });
        return found;
    });
}

std::vector<LawReport> audit_laws(ArithmeticClass cls, const Rational &magnitude, std::span<const Law> laws,
                                  const AuditOptions &opts)
{
    if (opts.budget < 1) {
        throw Error(Errc::domain_error, "audit budget must be at least 1");
    }
    const auto grid = audit_grid(cls, magnitude);
    std::vector<LawReport> reports;
    reports.reserve(laws.size());
    with_algebra(cls, magnitude, opts, [&](const auto &alg) {
        for (Law law : laws) {
            LawReport report;
            report.arithmetic = cls;
            report.magnitude = magnitude;
            report.law = law;
            report.seed = opts.seed;

            const auto record = [&](std::span<const Number> t) {
                ++report.samples_checked;
                if (auto v = check_with(alg, law, t)) {
                    report.violations.push_back(std::move(*v));
                }
                return false;
            };
            for_each_tuple(grid, arity(law), record);

            Sampler sampler(cls, magnitude, opts, law);
            std::vector<Number> tuple(arity(law));
            for (std::size_t i = 0; i < opts.budget; ++i) {
                for (auto &x : tuple) {
                    x = sampler.next();
                }
                record(tuple);
            }

            auto &v = report.violations;
            std::sort(v.begin(), v.end(), [](const Violation &a, const Violation &b) { return lex_less(a.inputs, b.inputs); });
            v.erase(std::unique(v.begin(), v.end(),
                                [](const Violation &a, const Violation &b) {
                                    return !lex_less(a.inputs, b.inputs) && !lex_less(b.inputs, a.inputs);
                                }),
                    v.end());
            reports.push_back(std::move(report));
        }
        return 0;
    });
    return reports;
}

std::string to_record(const LawReport &report)
{
    std::ostringstream os;
    os << "class=" << to_string(report.arithmetic) << " M=" << report.magnitude << " law=" << to_string(report.law)
       << " samples=" << report.samples_checked << " violations=" << report.violations.size()
       << " seed=" << report.seed << " status=" << (report.held() ? "held" : "violated");
    if (!report.held()) {
        const auto &v = report.violations.front();
        os << " example=(";
        for (std::size_t i = 0; i < v.inputs.size(); ++i) {
            os << (i == 0 ? "" : ",") << to_string(v.inputs[i]);
        }
        os << ") lhs=" << to_string(v.lhs) << " rhs=" << to_string(v.rhs);
    }
    return os.str();
}

} // namespace prearith
