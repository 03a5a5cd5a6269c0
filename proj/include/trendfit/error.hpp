#pragma once

#include <stdexcept>
#include <string>

namespace trendfit {

// Base class for all errors this library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad user input: unreadable files, malformed CSV, config values that
// select nothing. CLI maps this to exit code 1.
class InputError : public Error {
public:
    using Error::Error;
};

// Numerical failure: degenerate scaling, divergence, singular systems,
// log of a non-positive value. CLI maps this to exit code 2.
class NumericError : public Error {
public:
    using Error::Error;
};

} // namespace trendfit
