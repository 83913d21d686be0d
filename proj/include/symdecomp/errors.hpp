#ifndef SYMDECOMP_ERRORS_HPP
#define SYMDECOMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symdecomp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition failures.
class DegreeExceeded : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class BadInterval : public Error {
public:
    using Error::Error;
};

class DilationTooSmall : public Error {
public:
    using Error::Error;
};

class NegativeCoefficient : public Error {
public:
    using Error::Error;
};

class NotPolynomialSequence : public Error {
public:
    using Error::Error;
};

class NotFullDimensional : public Error {
public:
    using Error::Error;
};

class GorensteinRequired : public Error {
public:
    using Error::Error;
};

class ConstraintUnsatisfiable : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed external input (JSON, CLI values).
class InputError : public Error {
public:
    using Error::Error;
};

/// A self-check inside the library failed. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

inline void ensure(bool condition, const std::string &what)
{
    if (!condition) {
        throw InternalError(what);
    }
}

} // namespace symdecomp

#endif
