// error.hpp: Exception types shared by every entdyn module

#pragma once

#include <stdexcept>
#include <string>

namespace entdyn {

// Bad caller input: out-of-range parameter, malformed grid, and so on.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A solver or eigen-solve did not produce a trustworthy result.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A density matrix failed the physicality checks.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace entdyn
