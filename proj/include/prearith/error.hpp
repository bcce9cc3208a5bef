#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prearith
{

enum class Errc {
    magnitude_mismatch,
    invalid_magnitude,
    negative_input,
    domain_error,
    indeterminate_form,
    empty_sequence,
    negative_term,
    unknown_classification,
    insufficient_terms,
    unsupported_law,
    parse_error,
    class_error,
    unknown_demo,
    io_error,
};

std::string_view to_string(Errc code) noexcept;

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error
{
public:
    Error(Errc code, const std::string &what) : std::runtime_error(what), code_(code) {}

    [[nodiscard]] Errc code() const noexcept
    {
        return code_;
    }

private:
    Errc code_;
};

} // namespace prearith
