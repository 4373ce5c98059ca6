#pragma once

#include <stdexcept>
#include <string>

namespace invchain {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad index, bad text, bad arity).
class InputError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An element is not in the ideal (or lattice) it was claimed to be in.
class MembershipError : public Error {
public:
    using Error::Error;
};

/// A configured resource limit (search bound, problem size) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A computation ran past its deadline.
class TimeoutError : public Error {
public:
    using Error::Error;
};

/// Internal self-check failed. Indicates a bug, never bad input.
class VerificationError : public Error {
public:
    using Error::Error;
};

}  // namespace invchain
