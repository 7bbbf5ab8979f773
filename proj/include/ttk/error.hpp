#pragma once

#include <stdexcept>
#include <string>

namespace ttk {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Index outside the valid range of a tensor, index set or trajectory.
class BoundsError : public Error {
public:
    using Error::Error;
};

/// Malformed argument (shape mismatch, split position out of range, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Input fails a documented validity check (orthonormality, config schema).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Requested object would exceed a materialization guard.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Input has no usable content (all zeros, constant signal, rank collapse).
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// Non-finite or otherwise unusable snapshot data.
class DataError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

class IntegrationError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace ttk
