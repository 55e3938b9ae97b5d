#pragma once

#include <stdexcept>
#include <string>

namespace gti {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Closure or construction would exceed the configured order cap.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

// A caller violated a documented precondition.
class ContractError : public Error {
public:
    using Error::Error;
};

// Input data failed a consistency check (cocycle condition, normalization, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// The randomized character solver failed to split the algebra.
class NumericalDegeneracyError : public Error {
public:
    using Error::Error;
};

// A problem description could not be parsed.
class SpecParseError : public Error {
public:
    using Error::Error;
};

} // namespace gti
