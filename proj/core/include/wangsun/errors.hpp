#pragma once

#include <stdexcept>
#include <string>

namespace wangsun {

/// Base class for all library-specific failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A computation contradicted an identity the library treats as ground
/// truth (e.g. a sum that should be rational is not, or the common-sign
/// premise fails). These are reported, never masked.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// The characterization-based quasipolarity enumeration disagreed with
/// the brute-force enumeration (brute force is authoritative).
class CharacterizationMismatchError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

/// ratio(F, m) with m = 0 mod n: the denominator 1 - zeta^0 vanishes.
class ZeroDenominatorError : public Error {
 public:
  using Error::Error;
};

/// inv(0) in the cyclotomic field.
class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// Mixing CycloNumbers from different fields.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

/// Unreadable or corrupt cache journal; message names the offending line.
class CacheError : public Error {
 public:
  using Error::Error;
};

/// A recomputed value differs from the one already stored for its key.
class CacheIntegrityError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class OeisError : public Error {
 public:
  using Error::Error;
};

/// Timeout or connection failure; safe to retry.
class OeisNetworkError : public OeisError {
 public:
  using OeisError::OeisError;
};

/// Malformed response; retains the raw payload for diagnostics.
class OeisParseError : public OeisError {
 public:
  OeisParseError(const std::string& what, std::string raw_payload)
      : OeisError(what), raw_payload_(std::move(raw_payload)) {}
  const std::string& raw_payload() const { return raw_payload_; }

 private:
  std::string raw_payload_;
};

/// Offline mode and no bundled fixture covers the query.
class OeisOfflineMissError : public OeisError {
 public:
  using OeisError::OeisError;
};

}  // namespace wangsun
