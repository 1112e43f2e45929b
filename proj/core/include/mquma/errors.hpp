#pragma once

#include <stdexcept>
#include <string>

namespace mquma {

/// Base class for all protocol/model errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Token minted for a (kind, holder) pair the token table does not allow.
struct IllegalHolder : Error {
    using Error::Error;
};

/// MQTT operation attempted by a client without an open session.
struct NotConnected : Error {
    using Error::Error;
};

/// Publish payload exceeds the 127-byte frame bound.
struct PayloadTooLarge : Error {
    using Error::Error;
};

/// Resource already carries a live PAT.
struct AlreadyProtected : Error {
    using Error::Error;
};

/// Authorization attempted against a resource with no protection in place.
struct NotProtected : Error {
    using Error::Error;
};

/// A flow was run before the flows it depends on.
struct PrerequisiteMissing : Error {
    using Error::Error;
};

/// A transcript message traverses a node pair with no link in the topology.
struct UnknownLink : Error {
    using Error::Error;
};

/// Queue parameters with rho = lambda/mu >= 1 have no steady state.
struct UnstableQueue : Error {
    using Error::Error;
};

/// Malformed or inconsistent configuration input.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace mquma
