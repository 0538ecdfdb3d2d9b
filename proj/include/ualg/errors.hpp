#pragma once

#include <stdexcept>
#include <string>

namespace ualg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownSymbol : Error {
    explicit UnknownSymbol(const std::string& sym) : Error("unknown operation symbol: " + sym) {}
};

struct ArityMismatch : Error {
    using Error::Error;
};

struct VariableOutOfRange : Error {
    using Error::Error;
};

struct SizeBoundExceeded : Error {
    using Error::Error;
};

struct NotACongruence : Error {
    using Error::Error;
};

struct BadPartition : Error {
    using Error::Error;
};

struct MalformedTree : Error {
    using Error::Error;
};

struct MissingVertexTerms : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace ualg
