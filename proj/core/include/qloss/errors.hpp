#pragma once

#include <stdexcept>
#include <string>

namespace qloss {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shapes that do not fit together (kron overflow, mismatched dims, wrong factor layout).
class DimensionError : public Error {
public:
    using Error::Error;
};

// A caller-supplied parameter outside its documented domain.
class UsageError : public Error {
public:
    using Error::Error;
};

// An input that breaks a mathematical precondition, e.g. a non-Hermitian matrix
// handed to the Hermitian eigensolver.
class ContractError : public Error {
public:
    using Error::Error;
};

// A conditional state was requested for a detection sector of probability zero.
class UndefinedConditionalError : public Error {
public:
    using Error::Error;
};

}  // namespace qloss
