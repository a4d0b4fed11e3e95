#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glyphgeom {

/// Malformed input bytes (image headers, rasters, feature files).
/// Carries the byte offset where parsing gave up.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Input is well-formed but outside an operation's domain
/// (empty skeleton, zero-extent image, empty training set, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace glyphgeom
