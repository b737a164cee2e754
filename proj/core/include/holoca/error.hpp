#pragma once

#include <stdexcept>
#include <string>

namespace holoca {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A value lies outside its admissible range (rule code, order, ...).
class RangeError : public Error {
public:
    using Error::Error;
};

// Lattice or vector sizes are incompatible.
class SizeError : public Error {
public:
    using Error::Error;
};

// Input is not in the domain of the operation (e.g. a spectrum that is not
// the image of a bit-state).
class DomainError : public Error {
public:
    using Error::Error;
};

// Polynomial evaluated outside the neighborhood address range.
class AddressError : public Error {
public:
    using Error::Error;
};

// An internal identity failed; indicates a bug, never bad input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class ResourceError : public Error {
public:
    using Error::Error;
};

class SingularityError : public Error {
public:
    using Error::Error;
};

class ConfigurationError : public Error {
public:
    using Error::Error;
};

class RoutingError : public Error {
public:
    using Error::Error;
};

} // namespace holoca
