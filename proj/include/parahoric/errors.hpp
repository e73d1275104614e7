#pragma once

#include <stdexcept>
#include <string>

namespace parahoric {

enum class ErrorKind {
    ZeroInverse,
    ExponentOverflow,
    DimensionMismatch,
    NonConvergent,
    NotNilpotent,
    NotInAmbient,
    Inconsistent,
    NotInvertible,
    NotParahoric,
    ZeroConnection,
    ScaleTooSmall,
    OrderTooLow,
    ZeroSemisimplePart,
    NonCommutingList,
    NotCartan,
    NotNilpotentLeading,
    NotIntegerWeight,
    BudgetExceeded,
    NoProgress,
    NotLogarithmic,
    FieldExtensionNeeded,
    SearchExhausted,
    WindowTooLarge,
    PreconditionFailed,
    UnsupportedWeight,
    InvalidWord,
    ParseError,
    InvariantViolation,
};

const char *kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind), detail_(what)
    {
    }
    ErrorKind kind() const { return kind_; }
    const std::string &detail() const { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) { throw Error(kind, what); }

} // namespace parahoric
