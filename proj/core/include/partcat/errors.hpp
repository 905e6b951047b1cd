#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace partcat {

/// Base for violated preconditions of partition operations (sizes, colors,
/// levels, bounds). The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Composition of p·q with lower_count(q) != upper_count(p).
class SizeMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Colored composition whose interface color strings differ.
class ColorMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Spatial operation on partitions with different level counts.
class LevelMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Rotation whose source row has no points.
class EmptyRowError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A partition or query exceeds a closure bound or enumeration guard.
class BoundExceededError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Flattened partition whose row lengths are not multiples of the level count.
class DivisibilityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed text or JSON input. `offset()` is the byte position of the fault.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace partcat
