/**
 * @file errors.hh
 * @brief Error types thrown by the kernel, mapped to CLI exit codes at the top level.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace supclose {

// Malformed input text (polynomial syntax, session JSON). Carries a byte offset
// into the offending string. CLI exit code 2.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

// A name referenced an entry that does not exist in the session. CLI exit code 2.
class lookup_error : public std::runtime_error {
 public:
  explicit lookup_error(const std::string& what) : std::runtime_error(what) {}
};

// Operands built over different rings were combined.
class ring_mismatch : public std::logic_error {
 public:
  explicit ring_mismatch(const std::string& what) : std::logic_error(what) {}
};

// The request is outside the supported fragment (non-monomial input where a
// monomial ideal is required, zero module where a nonzero one is required,
// numbers too large to factor, ...). CLI exit code 3.
class unsupported_domain : public std::runtime_error {
 public:
  explicit unsupported_domain(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed. Indicates a bug, not bad input. CLI exit code 4.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace supclose
