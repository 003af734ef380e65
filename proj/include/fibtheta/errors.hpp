#ifndef FIBTHETA_ERRORS_HPP
#define FIBTHETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fibtheta {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical precondition failed (division by zero, value outside the
/// function's domain, an enclosure whose sign cannot be certified).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Bad arguments: unknown name, dimension out of range, malformed flag.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Input enclosures are too wide for the requested certification.
class PrecisionError : public Error {
public:
    using Error::Error;
};

/// A computation hit its overflow-guard cutoff before reaching the target.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Cooperative cancellation was requested.
class Cancelled : public Error {
public:
    Cancelled() : Error("operation cancelled") {}
};

} // namespace fibtheta

#endif
