#pragma once

#include <stdexcept>
#include <string>

namespace trigcert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the requested operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A requested enclosure width or tail bound could not be achieved.
class PrecisionError : public Error {
public:
    using Error::Error;
};

/// A table or cache was asked for an index beyond its configured cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Malformed request: unknown identifier, uncatalogued pair, bad option.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Root bracketing failed because the endpoint signs are not certified opposite.
class NoSignChange : public Error {
public:
    using Error::Error;
};

} // namespace trigcert
