#include <prearith/error.hpp>

namespace prearith
{

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
        case Errc::magnitude_mismatch:
            return "MagnitudeMismatch";
        case Errc::invalid_magnitude:
            return "InvalidMagnitude";
        case Errc::negative_input:
            return "NegativeInput";
        case Errc::domain_error:
            return "DomainError";
        case Errc::indeterminate_form:
            return "IndeterminateForm";
        case Errc::empty_sequence:
            return "EmptySequence";
        case Errc::negative_term:
            return "NegativeTerm";
        case Errc::unknown_classification:
            return "UnknownClassification";
        case Errc::insufficient_terms:
            return "InsufficientTerms";
        case Errc::unsupported_law:
            return "UnsupportedLaw";
        case Errc::parse_error:
            return "ParseError";
        case Errc::class_error:
            return "ClassError";
        case Errc::unknown_demo:
            return "UnknownDemo";
        case Errc::io_error:
            return "IoError";
    }
    return "Unknown";
}

} // namespace prearith
