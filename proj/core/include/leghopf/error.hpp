#pragma once

#include <stdexcept>
#include <string>

namespace leghopf {

enum class Errc {
    SingularMatrix,
    NotSymmetric,
    DimensionMismatch,
    IndexOutOfRange,
    OutOfRange,
    InfiniteValue,
    DivisionByZero,
    ZeroTbKnot,
    NotS3,
    ParityViolation,
    BadParams,
    Mismatch,
    NotCoprime,
    NotHalfInteger,
    ParityMismatch,
    IterationLimit,
    InvalidDiagram,
};

const char* errc_name(Errc c) noexcept;

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace leghopf
