#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qseries {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameters outside an operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Leading coefficient is not a unit of the integers, or the series is zero.
class NotInvertibleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A coefficient beyond the truncation order was requested.
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

/// An oracle request exceeds its exhaustive-enumeration cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

}  // namespace qseries
