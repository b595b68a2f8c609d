#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffcyc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidCycle : public Error {
public:
    using Error::Error;
};

class InvalidMultiplier : public Error {
public:
    using Error::Error;
};

/// Malformed complex text. `position()` is the 0-based offset of the offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class MissingVertex : public Error {
public:
    using Error::Error;
};

class ImpureComplex : public Error {
public:
    using Error::Error;
};

class UnsupportedDimension : public Error {
public:
    using Error::Error;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

class InvalidBipartition : public Error {
public:
    using Error::Error;
};

class NotASurface : public Error {
public:
    using Error::Error;
};

class InvalidSeries : public Error {
public:
    using Error::Error;
};

class InvalidLensParams : public Error {
public:
    using Error::Error;
};

class RegistryError : public Error {
public:
    using Error::Error;
};

/// A consistency check that can only fire on a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace diffcyc
