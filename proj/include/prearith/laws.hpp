#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <prearith/scalar.hpp>

namespace prearith
{

enum class ArithmeticClass { am, amm, bm };

std::string_view to_string(ArithmeticClass c) noexcept;
// "am" | "amm" | "bm"; Errc::class_error otherwise.
ArithmeticClass parse_class(std::string_view name);

enum class Law {
    add_assoc,
    mul_assoc,
    left_distrib,
    right_distrib,
    add_comm,
    mul_comm,
    order_compat,
    absorbing_m,
    identity_0,
    identity_1,
    annihilator_0,
};

inline constexpr Law all_laws[] = {Law::add_assoc,  Law::mul_assoc,   Law::left_distrib, Law::right_distrib,
                                   Law::add_comm,   Law::mul_comm,    Law::order_compat, Law::absorbing_m,
                                   Law::identity_0, Law::identity_1,  Law::annihilator_0};

std::string_view to_string(Law law) noexcept;
// Law identifiers as printed by to_string; Errc::unsupported_law otherwise.
Law parse_law(std::string_view name);
// Number of operands a law quantifies over.
std::size_t arity(Law law) noexcept;

// Carrier element as audited: exact for A_M and A_{-M,M}, binary64 for B_M.
using Number = std::variant<Rational, double>;

std::string to_string(const Number &n);
std::strong_ordering compare(const Number &a, const Number &b);

struct Violation {
    std::vector<Number> inputs;
    Number lhs;
    Number rhs;

    friend bool operator==(const Violation &, const Violation &) = default;
};

struct LawReport {
    ArithmeticClass arithmetic = ArithmeticClass::am;
    Rational magnitude;
    Law law = Law::add_assoc;
    std::size_t samples_checked = 0;
    std::vector<Violation> violations; // sorted by inputs, no duplicates
    std::uint64_t seed = 0;

    [[nodiscard]] bool held() const noexcept
    {
        return violations.empty();
    }

    friend bool operator==(const LawReport &, const LawReport &) = default;
};

struct AuditOptions {
    std::size_t budget = 100'000;
    std::uint64_t seed = 0;
    // B_M only: random samples avoid [0, band*M) and (M - band*M, M]; values
    // compare equal within tolerance*M.
    double bm_boundary_band = 0.01;
    double bm_tolerance = 1e-6;
};

// The identities and annihilator are the class's own neutral elements: 0 and 1
// for the clamp classes, f(0) = M/2 and f(1) = 3M/4 for B_M.
//
// Each law is checked on the grid {0, M/8, ..., M} (mirrored for A_{-M,M},
// plus the elements 1 and -1) and on `budget` seeded random tuples.
std::vector<LawReport> audit_laws(ArithmeticClass cls, const Rational &magnitude, std::span<const Law> laws,
                                  const AuditOptions &opts = {});

// Default audit grid for the class.
std::vector<Number> audit_grid(ArithmeticClass cls, const Rational &magnitude);

// Checks one tuple; nullopt when the law holds there (or the tuple is not in
// the law's domain, e.g. a > b for order-compat).
std::optional<Violation> check_law(ArithmeticClass cls, const Rational &magnitude, Law law,
                                   std::span<const Number> inputs, const AuditOptions &opts = {});

// Lexicographically smallest violating tuple over grid^arity.
std::optional<Violation> find_counterexample(ArithmeticClass cls, const Rational &magnitude, Law law,
                                             std::span<const Number> grid, const AuditOptions &opts = {});

// One line: class=am M=2 law=add-assoc samples=N violations=K seed=S status=held [example=(..) lhs=.. rhs=..]
std::string to_record(const LawReport &report);

} // namespace prearith
