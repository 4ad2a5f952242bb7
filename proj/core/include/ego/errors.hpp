#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ego {

/// File-format violation carrying the byte offset where parsing failed.
class IoError : public std::runtime_error {
public:
    IoError(std::string message, std::uint64_t offset)
        : std::runtime_error(message + " (at byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::uint64_t offset() const { return offset_; }

private:
    std::uint64_t offset_;
};

/// Thrown when an optimization step or loss turns non-finite.
class NumericError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ego
