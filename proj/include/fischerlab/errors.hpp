// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace fischerlab {

/// Two operands live in polynomial rings of different dimension.
struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation that needs a degree (initial part, multiplicity, ...) was
/// handed the zero polynomial.
struct ZeroPolynomialError : std::invalid_argument {
  explicit ZeroPolynomialError(const std::string& what) : std::invalid_argument(what) {}
};

/// An exact re-verification failed. This never indicates bad input; it is an
/// internal bug signal (CLI exit code 3).
struct VerificationError : std::logic_error {
  explicit VerificationError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fischerlab
