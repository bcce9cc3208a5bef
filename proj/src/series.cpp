#include <prearith/series.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace prearith
{

namespace
{

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<Rational> parse_list(std::string_view text)
{
    std::vector<Rational> out;
    while (true) {
        const auto comma = text.find(',');
        const auto item = trim(text.substr(0, comma));
        if (item.empty()) {
            throw Error(Errc::parse_error, "empty term in series list");
        }
        out.push_back(Rational::parse(item));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return out;
}

// "a=1,r=0.5" -> value for `key`
Rational keyed(std::string_view params, std::string_view key)
{
    while (!params.empty()) {
        const auto comma = params.find(',');
        const auto item = trim(params.substr(0, comma));
        const auto eq = item.find('=');
        if (eq != std::string_view::npos && trim(item.substr(0, eq)) == key) {
            return Rational::parse(trim(item.substr(eq + 1)));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        params.remove_prefix(comma + 1);
    }
    throw Error(Errc::parse_error, "missing parameter '" + std::string(key) + "'");
}

std::optional<ConvergenceClass> parse_declaration(std::string_view cls)
{
    if (cls == "auto") {
        return std::nullopt;
    }
    if (cls == "div+") {
        return ConvergenceClass::diverges_plus();
    }
    if (cls == "div-") {
        return ConvergenceClass::diverges_minus();
    }
    if (cls == "osc") {
        return ConvergenceClass::oscillates(ExtendedReal::neg_inf(), ExtendedReal::pos_inf());
    }
    if (cls == "unknown") {
        return ConvergenceClass::unknown(ExtendedReal::neg_inf(), ExtendedReal::pos_inf());
    }
    if (cls.starts_with("conv=")) {
        return ConvergenceClass::converges(Rational::parse(cls.substr(5)));
    }
    throw Error(Errc::parse_error, "unknown declared class '" + std::string(cls) + "'");
}

std::string join(const std::vector<Rational> &terms)
{
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += terms[i].to_string();
    }
    return out;
}

Rational sum_first(const SeriesSpec &s, std::size_t k)
{
    Rational acc;
    for (std::size_t n = 1; n <= k; ++n) {
        acc += series_term(s, n);
    }
    return acc;
}

void require_nonnegative(const SeriesSpec &s)
{
    const auto fail = [&] {
        throw Error(Errc::negative_term, "series " + describe(s) + " has negative terms");
    };
    std::visit(overloaded{
                   [&](const series::Geometric &g) {
                       if (g.first_term.sign() < 0 || (g.first_term.sign() > 0 && g.ratio.sign() < 0)) {
                           fail();
                       }
                   },
                   [&](const series::Harmonic &h) {
                       if (h.sign < 0) {
                           fail();
                       }
                   },
                   [&](const series::AlternatingHarmonic &) { fail(); },
                   [&](const series::PSeries &) {},
                   [&](const series::Grandi &) { fail(); },
                   [&](const series::ExplicitList &l) {
                       if (std::any_of(l.terms.begin(), l.terms.end(), [](const Rational &t) { return t.sign() < 0; })) {
                           fail();
                       }
                   },
                   [&](const series::Declared &d) {
                       for (std::size_t n = 1; n <= s.max_terms; ++n) {
                           if (d.term(n).sign() < 0) {
                               fail();
                           }
                       }
                   },
               },
               s.kind);
}

// Value in [0, inf] of sum_{n>k} for a nonnegative series; nullopt is +inf.
std::optional<Rational> nonnegative_tail(const SeriesSpec &s, std::size_t k)
{
    const auto from_class = [&]() -> std::optional<Rational> {
        const auto c = classify_series(s);
        switch (c.tag) {
            case Convergence::converges_to:
                return c.limit_as_rational() - sum_first(s, k);
            case Convergence::diverges_plus:
                return std::nullopt;
            default:
                throw Error(Errc::unknown_classification,
                            "nonnegative series " + describe(s) + " classified as " + c.to_string());
        }
    };
    return std::visit(overloaded{
                          [&](const series::Geometric &g) -> std::optional<Rational> {
                              if (g.first_term.sign() == 0) {
                                  return Rational(0);
                              }
                              if (g.ratio >= Rational(1)) {
                                  return std::nullopt;
                              }
                              return g.first_term * pow(g.ratio, static_cast<unsigned>(k)) / (Rational(1) - g.ratio);
                          },
                          [&](const series::Harmonic &) -> std::optional<Rational> { return std::nullopt; },
                          [&](const series::ExplicitList &l) -> std::optional<Rational> {
                              Rational acc;
                              for (std::size_t i = k; i < l.terms.size(); ++i) {
                                  acc += l.terms[i];
                              }
                              return acc;
                          },
                          [&](const auto &) { return from_class(); },
                      },
                      s.kind);
}

} // namespace

std::string_view to_string(Convergence c) noexcept
{
    switch (c) {
        case Convergence::converges_to:
            return "converges";
        case Convergence::diverges_plus:
            return "diverges+";
        case Convergence::diverges_minus:
            return "diverges-";
        case Convergence::oscillates:
            return "oscillates";
        case Convergence::unknown:
            return "unknown";
    }
    return "unknown";
}

ConvergenceClass ConvergenceClass::converges(double limit, std::optional<Rational> exact)
{
    ConvergenceClass c;
    c.tag = Convergence::converges_to;
    c.limit = limit;
    c.exact_limit = std::move(exact);
    c.liminf = ExtendedReal::finite(limit);
    c.limsup = ExtendedReal::finite(limit);
    return c;
}

ConvergenceClass ConvergenceClass::converges(const Rational &limit)
{
    return converges(limit.to_double(), limit);
}

ConvergenceClass ConvergenceClass::diverges_plus()
{
    ConvergenceClass c;
    c.tag = Convergence::diverges_plus;
    c.liminf = ExtendedReal::pos_inf();
    c.limsup = ExtendedReal::pos_inf();
    return c;
}

ConvergenceClass ConvergenceClass::diverges_minus()
{
    ConvergenceClass c;
    c.tag = Convergence::diverges_minus;
    c.liminf = ExtendedReal::neg_inf();
    c.limsup = ExtendedReal::neg_inf();
    return c;
}

ConvergenceClass ConvergenceClass::oscillates(ExtendedReal liminf, ExtendedReal limsup)
{
    ConvergenceClass c;
    c.tag = Convergence::oscillates;
    c.liminf = liminf;
    c.limsup = limsup;
    return c;
}

ConvergenceClass ConvergenceClass::unknown(ExtendedReal liminf, ExtendedReal limsup)
{
    ConvergenceClass c;
    c.tag = Convergence::unknown;
    c.liminf = liminf;
    c.limsup = limsup;
    return c;
}

Rational ConvergenceClass::limit_as_rational() const
{
    return exact_limit ? *exact_limit : Rational::from_double(limit);
}

std::string ConvergenceClass::to_string() const
{
    std::ostringstream os;
    os << prearith::to_string(tag);
    if (tag == Convergence::converges_to) {
        os << '(';
        if (exact_limit) {
            os << *exact_limit;
        } else {
            os << ExtendedReal::finite(limit);
        }
        os << ')';
    }
    os << " liminf=" << liminf << " limsup=" << limsup;
    return os.str();
}

SeriesSpec parse_series(std::string_view text)
{
    text = trim(text);
    const auto colon = text.find(':');
    const auto name = text.substr(0, colon);
    const auto rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    SeriesSpec s{series::Grandi{}};
    if (name == "geom") {
        s.kind = series::Geometric{keyed(rest, "a"), keyed(rest, "r")};
    } else if (name == "harmonic") {
        if (rest.empty() || rest == "+") {
            s.kind = series::Harmonic{1};
        } else if (rest == "-") {
            s.kind = series::Harmonic{-1};
        } else {
            throw Error(Errc::parse_error, "harmonic sign must be + or -");
        }
    } else if (name == "altharmonic") {
        s.kind = series::AlternatingHarmonic{};
    } else if (name == "pseries") {
        s.kind = series::PSeries{keyed(rest, "p")};
    } else if (name == "grandi") {
        s.kind = series::Grandi{};
    } else if (name == "list") {
        auto terms = parse_list(rest);
        s.max_terms = terms.size();
        s.kind = series::ExplicitList{std::move(terms)};
    } else if (name == "declared") {
        const auto second = rest.find(':');
        if (second == std::string_view::npos) {
            throw Error(Errc::parse_error, "declared series needs declared:<class>:<list>");
        }
        auto cycle = parse_list(rest.substr(second + 1));
        series::Declared d;
        d.declared = parse_declaration(trim(rest.substr(0, second)));
        d.label = std::string(text);
        d.term = [cycle = std::move(cycle)](std::size_t n) { return cycle[(n - 1) % cycle.size()]; };
        s.kind = std::move(d);
    } else {
        throw Error(Errc::parse_error, "unknown series '" + std::string(text) + "'");
    }
    return s;
}

std::string describe(const SeriesSpec &s)
{
    return std::visit(overloaded{
                          [](const series::Geometric &g) {
                              return "geom:a=" + g.first_term.to_string() + ",r=" + g.ratio.to_string();
                          },
                          [](const series::Harmonic &h) { return std::string(h.sign > 0 ? "harmonic:+" : "harmonic:-"); },
                          [](const series::AlternatingHarmonic &) { return std::string("altharmonic"); },
                          [](const series::PSeries &p) { return "pseries:p=" + p.p.to_string(); },
                          [](const series::Grandi &) { return std::string("grandi"); },
                          [](const series::ExplicitList &l) { return "list:" + join(l.terms); },
                          [](const series::Declared &d) { return d.label.empty() ? std::string("declared") : d.label; },
                      },
                      s.kind);
}

Rational series_term(const SeriesSpec &s, std::size_t n)
{
    if (n == 0) {
        throw Error(Errc::domain_error, "series terms are indexed from 1");
    }
    const auto idx = static_cast<long>(n);
    return std::visit(overloaded{
                          [&](const series::Geometric &g) {
                              return g.first_term * pow(g.ratio, static_cast<unsigned>(n - 1));
                          },
                          [&](const series::Harmonic &h) { return Rational(h.sign, idx); },
                          [&](const series::AlternatingHarmonic &) { return Rational(n % 2 == 1 ? 1 : -1, idx); },
                          [&](const series::PSeries &p) {
                              if (p.p.is_integer() && p.p.sign() >= 0) {
                                  return Rational(1) / pow(Rational(idx), static_cast<unsigned>(p.p.to_double()));
                              }
                              return Rational::from_double(std::pow(static_cast<double>(n), -p.p.to_double()));
                          },
                          [&](const series::Grandi &) { return Rational(n % 2 == 1 ? -1 : 1); },
                          [&](const series::ExplicitList &l) { return n <= l.terms.size() ? l.terms[n - 1] : Rational(0); },
                          [&](const series::Declared &d) { return d.term(n); },
                      },
                      s.kind);
}

bool has_exact_terms(const SeriesSpec &s)
{
    if (const auto *p = std::get_if<series::PSeries>(&s.kind)) {
        return p->p.is_integer() && p->p.sign() >= 0;
    }
    return true;
}

ConvergenceClass classify_partial_sums(const std::function<double(std::size_t)> &term, std::size_t max_terms,
                                       const HeuristicOptions &opts)
{
    if (opts.window < 2 || max_terms < opts.window) {
        throw Error(Errc::insufficient_terms, "need at least " + std::to_string(opts.window) + " terms, have "
                                                  + std::to_string(max_terms));
    }
    std::vector<double> tail;
    tail.reserve(opts.window);
    double sum = 0.0;
    const std::size_t tail_start = max_terms - opts.window + 1;
    for (std::size_t n = 1; n <= max_terms; ++n) {
        sum += term(n);
        if (n >= tail_start) {
            tail.push_back(sum);
        }
    }

    const auto [lo_it, hi_it] = std::minmax_element(tail.begin(), tail.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    const double last = tail.back();
    if (!std::isfinite(last)) {
        return last > 0 ? ConvergenceClass::diverges_plus() : ConvergenceClass::diverges_minus();
    }
    if (hi - lo < opts.relative_tolerance * std::max(1.0, std::abs(last))) {
        return ConvergenceClass::converges(last);
    }
    const bool increasing = std::is_sorted(tail.begin(), tail.end());
    const bool decreasing = std::is_sorted(tail.begin(), tail.end(), std::greater<>{});
    if (increasing && last > opts.divergence_threshold) {
        return ConvergenceClass::diverges_plus();
    }
    if (decreasing && last < -opts.divergence_threshold) {
        return ConvergenceClass::diverges_minus();
    }
    const auto lo_x = ExtendedReal::finite(lo);
    const auto hi_x = ExtendedReal::finite(hi);
    if (increasing || decreasing) {
        return ConvergenceClass::unknown(lo_x, hi_x);
    }
    // Non-monotone: a swing that does not shrink across the window is taken as oscillation.
    const auto half = tail.begin() + static_cast<std::ptrdiff_t>(tail.size() / 2);
    const auto [a_lo, a_hi] = std::minmax_element(tail.begin(), half);
    const auto [b_lo, b_hi] = std::minmax_element(half, tail.end());
    const double first_swing = *a_hi - *a_lo;
    const double second_swing = *b_hi - *b_lo;
    if (second_swing >= first_swing * (1.0 - 1e-12)) {
        return ConvergenceClass::oscillates(lo_x, hi_x);
    }
    return ConvergenceClass::unknown(lo_x, hi_x);
}

ConvergenceClass classify_series(const SeriesSpec &s, const HeuristicOptions &opts)
{
    return std::visit(
        overloaded{
            [&](const series::Geometric &g) {
                const Rational one(1);
                if (g.first_term.sign() == 0) {
                    return ConvergenceClass::converges(Rational(0));
                }
                if (g.ratio.abs() < one) {
                    return ConvergenceClass::converges(g.first_term / (one - g.ratio));
                }
                if (g.ratio >= one) {
                    return g.first_term.sign() > 0 ? ConvergenceClass::diverges_plus()
                                                   : ConvergenceClass::diverges_minus();
                }
                if (g.ratio == -one) {
                    const auto a = g.first_term.to_double();
                    return ConvergenceClass::oscillates(ExtendedReal::finite(std::min(a, 0.0)),
                                                        ExtendedReal::finite(std::max(a, 0.0)));
                }
                return ConvergenceClass::oscillates(ExtendedReal::neg_inf(), ExtendedReal::pos_inf());
            },
            [&](const series::Harmonic &h) {
                return h.sign > 0 ? ConvergenceClass::diverges_plus() : ConvergenceClass::diverges_minus();
            },
            [&](const series::AlternatingHarmonic &) { return ConvergenceClass::converges(std::numbers::ln2); },
            [&](const series::PSeries &p) {
                if (p.p > Rational(1)) {
                    return ConvergenceClass::converges(std::riemann_zeta(p.p.to_double()));
                }
                return ConvergenceClass::diverges_plus();
            },
            [&](const series::Grandi &) {
                return ConvergenceClass::oscillates(ExtendedReal::finite(-1.0), ExtendedReal::finite(0.0));
            },
            [&](const series::ExplicitList &l) {
                Rational sum;
                for (const auto &t : l.terms) {
                    sum += t;
                }
                return ConvergenceClass::converges(sum);
            },
            [&](const series::Declared &d) {
                if (d.declared) {
                    return *d.declared;
                }
                return classify_partial_sums([&](std::size_t n) { return d.term(n).to_double(); }, s.max_terms,
                                             opts);
            },
        },
        s.kind);
}

AmValue project_series_am(const SeriesSpec &s, const ClampMagnitude &m)
{
    require_nonnegative(s);
    const auto tail = nonnegative_tail(s, 0);
    return tail ? am_coproject(*tail, m) : am_coproject(Infinity::positive, m);
}

bool split_identity_check(const SeriesSpec &s, std::size_t k, const ClampMagnitude &m)
{
    if (k < 1 || k >= s.max_terms) {
        throw Error(Errc::domain_error, "split point must satisfy 1 <= k < max_terms");
    }
    require_nonnegative(s);
    const auto coproject = [&](const std::optional<Rational> &v) {
        return v ? am_coproject(*v, m) : am_coproject(Infinity::positive, m);
    };
    const AmValue whole = coproject(nonnegative_tail(s, 0));
    const AmValue split = am_add(am_coproject(sum_first(s, k), m), coproject(nonnegative_tail(s, k)));
    return whole == split;
}

std::optional<AmmValue> project_series_amm(const SeriesSpec &s, const ClampMagnitude &m)
{
    const auto c = classify_series(s);
    const auto top = ExtendedReal::finite(m.value().to_double());
    const auto bottom = ExtendedReal::finite(-m.value().to_double());
    switch (c.tag) {
        case Convergence::converges_to:
            return amm_coproject(c.limit_as_rational(), m);
        case Convergence::diverges_plus:
            return amm_coproject(Infinity::positive, m);
        case Convergence::diverges_minus:
            return amm_coproject(Infinity::negative, m);
        case Convergence::oscillates:
            if (c.liminf >= top) {
                return amm_coproject(Infinity::positive, m);
            }
            if (c.limsup <= bottom) {
                return amm_coproject(Infinity::negative, m);
            }
            return std::nullopt;
        case Convergence::unknown:
            break;
    }
    throw Error(Errc::unknown_classification, "could not classify " + describe(s));
}

std::optional<BmValue> project_series_bm(const SeriesSpec &s, const ProjectiveMagnitude &m)
{
    const auto c = classify_series(s);
    switch (c.tag) {
        case Convergence::converges_to:
            return bm_forward(ExtendedReal::finite(c.limit), m);
        case Convergence::diverges_plus:
            return bm_forward(ExtendedReal::pos_inf(), m);
        case Convergence::diverges_minus:
            return bm_forward(ExtendedReal::neg_inf(), m);
        case Convergence::oscillates:
            return std::nullopt;
        case Convergence::unknown:
            break;
    }
    throw Error(Errc::unknown_classification, "could not classify " + describe(s));
}

AmmValue amm_project_sum(std::span<const Rational> terms, const ClampMagnitude &m)
{
    Rational sum;
    for (const auto &t : terms) {
        sum += t;
    }
    return amm_coproject(sum, m);
}

AmmValue amm_project_split(std::span<const Rational> terms, std::size_t k, const ClampMagnitude &m)
{
    if (k > terms.size()) {
        throw Error(Errc::domain_error, "split point past the end of the sequence");
    }
    return amm_add(amm_project_sum(terms.first(k), m), amm_project_sum(terms.subspan(k), m));
}

} // namespace prearith
