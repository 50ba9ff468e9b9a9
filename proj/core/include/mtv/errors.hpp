#pragma once

#include <stdexcept>
#include <string>

namespace mtv {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adding or comparing pi-values of different weight.
class HomogeneityError : public Error {
public:
    using Error::Error;
};

/// Arguments outside the documented domain (k > n, m < 2, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An exact evaluation was requested where only numeric evaluation exists.
class UnsupportedExactError : public Error {
public:
    using Error::Error;
};

/// Series whose last argument is 1.
class DivergenceError : public Error {
public:
    using Error::Error;
};

class InsufficientTermsError : public Error {
public:
    using Error::Error;
};

/// A closed form produced a value that is not real and rational after
/// reduction. Always a transcription bug, never a user error.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace mtv
