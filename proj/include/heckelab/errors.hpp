#pragma once

#include <stdexcept>
#include <string>

namespace heckelab {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bond matrix is not square/symmetric or has entries outside {1,2,3,4,6}.
struct MalformedMatrix : Error {
  explicit MalformedMatrix(const std::string& msg) : Error(msg) {}
};

/// Root-system closure exceeded its bound; the group is infinite (or far
/// beyond desk scale).
struct NonSpherical : Error {
  explicit NonSpherical(const std::string& msg) : Error(msg) {}
};

/// Group enumeration would exceed the configured element cap.
struct GroupOrderExceedsCap : Error {
  explicit GroupOrderExceedsCap(const std::string& msg) : Error(msg) {}
};

/// Two operands belong to different Coxeter systems.
struct MixedSystems : Error {
  explicit MixedSystems(const std::string& msg) : Error(msg) {}
};

/// A braid word letter does not name a generator of the system.
struct InvalidGenerator : Error {
  explicit InvalidGenerator(const std::string& msg) : Error(msg) {}
};

/// An element expected to live in a parabolic subalgebra has support outside it.
struct SupportOutsideParabolic : Error {
  explicit SupportOutsideParabolic(const std::string& msg) : Error(msg) {}
};

/// Malformed textual input (braid words, Laurent polynomials, Hecke elements).
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace heckelab
