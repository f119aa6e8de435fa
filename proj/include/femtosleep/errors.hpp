#ifndef FEMTOSLEEP_ERRORS_HPP
#define FEMTOSLEEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace femtosleep {

// Base class for all recoverable domain errors. The CLI maps these to
// exit code 2; anything derived from InternalError maps to exit code 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument outside its documented domain (negative radius, fraction
// outside [0,1], ...).
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

// A distance below the validity floor of a propagation model.
class OutOfModelRangeError : public Error {
public:
    using Error::Error;
};

// A point outside the macrocell disc.
class OutOfCoverageError : public Error {
public:
    using Error::Error;
};

// A layout whose factor-weighted mass is zero everywhere.
class DegenerateLayoutError : public Error {
public:
    using Error::Error;
};

// No transmitter can serve the user (BS off and user outside FAP coverage).
class NoServiceError : public Error {
public:
    using Error::Error;
};

// Schedule timestamps not strictly increasing, or an empty schedule.
class InvalidScheduleError : public Error {
public:
    using Error::Error;
};

// A layout rejected by validate(); the message lists the violations.
class InvalidLayoutError : public Error {
public:
    using Error::Error;
};

// A configuration or data file that is missing or does not parse.
class ConfigError : public Error {
public:
    using Error::Error;
};

// A broken internal invariant; never expected on any input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace femtosleep

#endif
