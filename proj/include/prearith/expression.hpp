#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <prearith/clamp.hpp>
#include <prearith/laws.hpp>
#include <prearith/projective.hpp>

namespace prearith
{

// Infix expression over literals and M. Chains of the same operator are
// left-associated: "a + b + c" is Add(Add(a, b), c).
struct Expression {
    enum class Kind { literal, m_constant, add, mul, neg, paren };

    Kind kind = Kind::literal;
    Rational literal;                 // Kind::literal only
    std::vector<Expression> operands; // 2 for add/mul, 1 for neg/paren

    static Expression number(Rational value);
    static Expression m();
    static Expression add(Expression lhs, Expression rhs);
    static Expression mul(Expression lhs, Expression rhs);
    static Expression neg(Expression operand);
    static Expression paren(Expression inner);

    friend bool operator==(const Expression &, const Expression &) = default;
};

class ParseError : public Error
{
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string &what)
        : Error(Errc::parse_error, what), offset_(offset), expected_(std::move(expected))
    {
    }

    // Byte offset into the source text.
    [[nodiscard]] std::size_t offset() const noexcept
    {
        return offset_;
    }
    [[nodiscard]] const std::vector<std::string> &expected() const noexcept
    {
        return expected_;
    }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

// expr := term (('+' | '*') term)*, '*' binds tighter, both left-associative
// term := number | 'M' | '-' term | '(' expr ')'
// number := decimal | p/q
Expression parse_expression(std::string_view src);

// Canonical text; parse_expression(print_expression(e)) == e for parsed trees.
std::string print_expression(const Expression &e);

enum class OutputFormat { text, machine };

struct RunConfig {
    ArithmeticClass arithmetic = ArithmeticClass::am;
    std::string magnitude = "1";
    Mode mode = Mode::total;
    OutputFormat format = OutputFormat::text;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> max_terms;

    // Throws Errc::invalid_magnitude below the class minimum (>= 1, or > 0 for bm).
    [[nodiscard]] ClampMagnitude clamp_magnitude() const;
    [[nodiscard]] ProjectiveMagnitude projective_magnitude() const;
    [[nodiscard]] Rational magnitude_value() const;
    void validate() const;
};

using ClassValue = std::variant<AmValue, AmmValue, BmValue>;

std::string to_string(const ClassValue &v);

// Evaluates bottom-up with the operations of cfg.arithmetic.
// Errc::domain_error for literals outside the carrier, Errc::class_error for
// negation outside amm, Errc::indeterminate_form in strict bm mode.
ClassValue eval_expression(const Expression &e, const RunConfig &cfg);

// sorites | machine-infinity | raindrop | lion-rabbit. A magnitude override
// replaces the demo's own M.
std::string run_demo(std::string_view name, const std::optional<std::string> &magnitude_override = std::nullopt);

} // namespace prearith
