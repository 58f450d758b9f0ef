#pragma once

#include <stdexcept>
#include <string>

namespace xlag {

// Base class so callers can catch everything the library throws in one place.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegreeNotAdmissible : public Error {
public:
    using Error::Error;
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

class DivisionByZeroPoly : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

class ToleranceNotMet : public Error {
public:
    using Error::Error;
};

} // namespace xlag
