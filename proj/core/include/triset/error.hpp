#pragma once

#include <stdexcept>
#include <string>

namespace triset {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vectors of different length were combined.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A numeric parameter is outside its valid range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// An operation that needs at least one element received none.
class EmptySetError : public Error {
public:
    using Error::Error;
};

/// A decision vector or input file is malformed.
class InputError : public Error {
public:
    using Error::Error;
};

class NotSupportedError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Brute-force enumeration would exceed its work limit.
class SizeError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// An experiment plan is inconsistent (bad sizes, empty seed list, ...).
class PlanError : public Error {
public:
    using Error::Error;
};

}  // namespace triset
