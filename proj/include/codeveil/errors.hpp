#pragma once

#include <stdexcept>
#include <string>

namespace codeveil {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedLanguage : Error {
    using Error::Error;
};

/// A query rule file failed to compile or parse. Raised at startup, names
/// the offending file and byte offset.
struct ConfigError : Error {
    using Error::Error;
};

/// An occurrence span no longer matches its recorded name (stale extraction).
struct SpanMismatch : Error {
    using Error::Error;
};

struct UnknownPlaceholder : Error {
    using Error::Error;
};

struct NameNotFound : Error {
    using Error::Error;
};

struct CategoryMismatch : Error {
    using Error::Error;
};

struct RoundTripFailure : Error {
    using Error::Error;
};

struct EmptyMap : Error {
    using Error::Error;
};

/// A mix stream ran dry while its weight was still positive (strict mode).
struct ExhaustedStream : Error {
    using Error::Error;
};

}  // namespace codeveil
