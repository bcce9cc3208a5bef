#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <prearith/clamp.hpp>
#include <prearith/projective.hpp>
#include <prearith/scalar.hpp>

namespace prearith
{

enum class Convergence { converges_to, diverges_plus, diverges_minus, oscillates, unknown };

std::string_view to_string(Convergence c) noexcept;

// Behaviour of the partial sums of a series.
struct ConvergenceClass {
    Convergence tag = Convergence::unknown;
    double limit = 0.0;                  // meaningful for converges_to
    std::optional<Rational> exact_limit; // set when the limit is known exactly
    ExtendedReal liminf = ExtendedReal::neg_inf();
    ExtendedReal limsup = ExtendedReal::pos_inf();

    static ConvergenceClass converges(double limit, std::optional<Rational> exact = std::nullopt);
    static ConvergenceClass converges(const Rational &limit);
    static ConvergenceClass diverges_plus();
    static ConvergenceClass diverges_minus();
    static ConvergenceClass oscillates(ExtendedReal liminf, ExtendedReal limsup);
    static ConvergenceClass unknown(ExtendedReal liminf, ExtendedReal limsup);

    // Exact limit if known, otherwise the binary64 limit converted exactly.
    [[nodiscard]] Rational limit_as_rational() const;
    [[nodiscard]] std::string to_string() const;
};

namespace series
{

// sum_{n>=1} first_term * ratio^(n-1)
struct Geometric {
    Rational first_term;
    Rational ratio;
};
// sum_{n>=1} sign / n
struct Harmonic {
    int sign = 1;
};
// sum_{n>=1} (-1)^(n+1) / n
struct AlternatingHarmonic {
};
// sum_{n>=1} n^-p
struct PSeries {
    Rational p;
};
// sum_{n>=1} (-1)^n, partial sums -1, 0, -1, 0, ...
struct Grandi {
};
// A finite series; terms past the end are zero.
struct ExplicitList {
    std::vector<Rational> terms;
};
// Term stream with an optional caller-asserted classification. Without a
// declaration the stream is classified from its partial sums.
struct Declared {
    std::function<Rational(std::size_t)> term; // 1-based index
    std::optional<ConvergenceClass> declared;
    std::string label;
};

} // namespace series

using SeriesKind = std::variant<series::Geometric, series::Harmonic, series::AlternatingHarmonic, series::PSeries,
                                series::Grandi, series::ExplicitList, series::Declared>;

inline constexpr std::size_t default_max_terms = 1'000'000;

struct SeriesSpec {
    SeriesKind kind;
    std::size_t max_terms = default_max_terms;
};

// Text forms: geom:a=1,r=0.5 | harmonic:+ | harmonic:- | altharmonic | pseries:p=2
// | grandi | list:1,2,-3/4 | declared:<class>:<list>
// where <class> is conv=<L>, div+, div-, osc, unknown or auto (classify the
// stream), and a declared list repeats cyclically.
SeriesSpec parse_series(std::string_view text);
std::string describe(const SeriesSpec &s);

// n-th term, n >= 1. Irrational terms (p-series with non-integer p) are the
// exact value of their binary64 approximation.
Rational series_term(const SeriesSpec &s, std::size_t n);
// False when series_term only approximates the true term.
bool has_exact_terms(const SeriesSpec &s);

struct HeuristicOptions {
    std::size_t window = 1000;
    double relative_tolerance = 1e-9;
    double divergence_threshold = 1e12;
};

// Classifies from binary64 partial sums of the first max_terms terms, looking
// at the last `window` of them. Errc::insufficient_terms if max_terms < window.
ConvergenceClass classify_partial_sums(const std::function<double(std::size_t)> &term, std::size_t max_terms,
                                       const HeuristicOptions &opts = {});

// Built-in families get their analytic class, explicit lists converge to their
// exact sum, declared streams pass their declaration through.
ConvergenceClass classify_series(const SeriesSpec &s, const HeuristicOptions &opts = {});

// h(sum) for a series of nonnegative terms; Errc::negative_term otherwise.
AmValue project_series_am(const SeriesSpec &s, const ClampMagnitude &m);

// Checks h(sum_1^inf) == h(sum_1^k) (+) h(sum_{k+1}^inf) exactly.
// Requires 1 <= k < max_terms.
bool split_identity_check(const SeriesSpec &s, std::size_t k, const ClampMagnitude &m);

// Weak projection t(lim y_n) into A_{-M,M}; nullopt when it does not converge.
// Errc::unknown_classification when the series could not be classified.
std::optional<AmmValue> project_series_amm(const SeriesSpec &s, const ClampMagnitude &m);

// Projection f(sum) into B_M; nullopt for oscillating series.
std::optional<BmValue> project_series_bm(const SeriesSpec &s, const ProjectiveMagnitude &m);

// t(sum of all terms) for a finite sequence.
AmmValue amm_project_sum(std::span<const Rational> terms, const ClampMagnitude &m);
// t(sum of the first k terms) (+) t(sum of the rest); differs from
// amm_project_sum in general.
AmmValue amm_project_split(std::span<const Rational> terms, std::size_t k, const ClampMagnitude &m);

} // namespace prearith
