#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zpd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in ambient spaces of different dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A builder or loader was asked for an algebra of unsupported size.
class InvalidSize : public Error {
 public:
  using Error::Error;
};

/// The requested span strategy cannot run on this algebra.
class StrategyError : public Error {
 public:
  explicit StrategyError(const std::string& what, std::uint64_t required_cap = 0)
      : Error(what), required_cap_(required_cap) {}

  /// Enumeration cap that would have admitted the run; 0 when not a cap issue.
  std::uint64_t required_cap() const noexcept { return required_cap_; }

 private:
  std::uint64_t required_cap_;
};

/// A subspace offered as a bimodule is not closed under the algebra actions.
class BimoduleError : public Error {
 public:
  using Error::Error;
};

class UnsupportedCharacteristic : public Error {
 public:
  using Error::Error;
};

/// A certificate failed re-verification. Seeing this means a bug (or a
/// counterexample to a theorem the check relies on).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace zpd
