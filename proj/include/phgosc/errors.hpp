#pragma once

#include <stdexcept>
#include <string>

namespace phgosc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

// Gamma evaluated at a nonpositive integer.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

class InvalidTruncation : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

// Exponent with Re j <= -1 handed to a transform that needs local integrability.
class IntegrabilityError : public Error {
public:
    using Error::Error;
};

// Pole too close to an integration contour.
class IllConditioned : public Error {
public:
    using Error::Error;
};

class Inconclusive : public Error {
public:
    using Error::Error;
};

}  // namespace phgosc
