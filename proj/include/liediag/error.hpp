#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liediag {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (JSON, rational strings, vectors). `offset` is the
/// byte position of the failure when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace liediag
