#ifndef POLYCERT_ERROR_HPP
#define POLYCERT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polycert {

enum class ErrorKind {
    ZeroPolynomial,
    NonpositiveLeadingCoefficient,
    NegativeShift,
    NonpositiveShift,
    PreconditionNotNonnegative,
    InvalidArgument,
    // parser
    SyntaxError,
    MultipleVariables,
    NegativeExponent,
    ExponentTooLarge,
    // certificate / rational text decoding
    MalformedInput,
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NonpositiveLeadingCoefficient: return "NonpositiveLeadingCoefficient";
    case ErrorKind::NegativeShift: return "NegativeShift";
    case ErrorKind::NonpositiveShift: return "NonpositiveShift";
    case ErrorKind::PreconditionNotNonnegative: return "PreconditionNotNonnegative";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::MultipleVariables: return "MultipleVariables";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::ExponentTooLarge: return "ExponentTooLarge";
    case ErrorKind::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failures additionally carry the byte offset into the input.
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t position, const std::string& message)
        : Error(kind, "at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace polycert

#endif // POLYCERT_ERROR_HPP
