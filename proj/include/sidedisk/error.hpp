#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sidedisk {

enum class ErrorKind {
    DegenerateInput,
    TooFewVertices,
    NotStrictlyConvex,
    NotConvex,
    EmptyRange,
    InvalidDecomposition,
    TooLarge,
    SizeMismatch,
    PreconditionFailed,
    ConstructionFailed,
    GenerationFailed,
    WrongArity,
    NotOuterplanar,
    InvalidChord,
    NotRealizable,
    InvalidArgument,
    Io,
};

std::string_view to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sidedisk
