#pragma once

#include <stdexcept>
#include <string>

namespace mtx {

enum class ErrorKind {
    SingularMatrix,
    NotUnimodular,
    NotInGroup,
    NotInDomain,
    BothZero,
    EvenInput,
    ZeroInput,
    NotCoprime,
    ZeroModulus,
    OddProduct,
    NotMultiplicative,
    NotPrimitive,
    DomainError,
    PoleAtZ,
    KindMismatch,
    HatUnsupported,
    NotOrthogonal,
    InternalMismatch,
    InvalidParams,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace mtx
