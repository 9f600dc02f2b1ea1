#pragma once

#include <stdexcept>
#include <string>

namespace gdlab {

/// A coordinate sits on Z + 1/2, where nearest-integer rounding is undefined.
class TieError : public std::domain_error {
 public:
  explicit TieError(const std::string& what) : std::domain_error(what) {}
};

/// Requested work exceeds a configured memory or time cap.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Working precision cannot meet the absolute-error budget of a reduction.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/// A continued-fraction expansion stopped before the requested depth.
class TerminatedExpansionError : public std::domain_error {
 public:
  explicit TerminatedExpansionError(const std::string& what) : std::domain_error(what) {}
};

class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gdlab
