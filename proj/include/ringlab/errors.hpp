#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ringlab {

/// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ring or group axiom failed during exhaustive or sampled verification.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::array<uint32_t, 3> at)
      : Error("axiom violation: " + axiom + " at (" + std::to_string(at[0]) +
              ", " + std::to_string(at[1]) + ", " + std::to_string(at[2]) + ")"),
        axiom(std::move(axiom)),
        at(at) {}

  std::string axiom;
  std::array<uint32_t, 3> at;
};

class NoIdentity : public Error {
 public:
  NoIdentity() : Error("multiplication has no two-sided identity") {}
};

class OutOfRangeEntry : public Error {
 public:
  using Error::Error;
};

class ZeroModulus : public Error {
 public:
  ZeroModulus() : Error("modulus must be >= 1") {}
};

class OrderCapExceeded : public Error {
 public:
  OrderCapExceeded(uint64_t order, uint64_t cap)
      : Error("resulting order " + std::to_string(order) +
              " exceeds the configured cap " + std::to_string(cap)) {}
};

class NotIdempotent : public Error {
 public:
  explicit NotIdempotent(uint32_t e)
      : Error("element " + std::to_string(e) + " is not idempotent") {}
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class NotCentral : public Error {
 public:
  explicit NotCentral(uint32_t s)
      : Error("element " + std::to_string(s) + " is not central") {}
};

class BimoduleAxiomViolation : public Error {
 public:
  using Error::Error;
};

class NotAGroupRing : public Error {
 public:
  NotAGroupRing() : Error("ring was not built by the group-ring constructor") {}
};

class NotAlmostIdempotent : public Error {
 public:
  explicit NotAlmostIdempotent(uint32_t a)
      : Error("a - a^2 is not nilpotent for element " + std::to_string(a)) {}
};

/// The idempotent-lift series failed to converge for every retry; this
/// signals an engine bug, not a mathematical outcome.
class FormulaDivergence : public Error {
 public:
  using Error::Error;
};

/// Invariants that cannot fail for finite rings (e.g. a one-sided inverse
/// without a two-sided one); raised only when the engine itself is broken.
class InternalError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(uint64_t index, uint64_t order)
      : Error("element id " + std::to_string(index) +
              " out of range for order " + std::to_string(order)) {}
};

/// Expression-DSL syntax error; `offset` is the byte position of the
/// offending token in the input.
class ParseError : public Error {
 public:
  ParseError(std::string msg, size_t offset)
      : Error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset(offset) {}

  size_t offset;
};

class UnknownConstructor : public ParseError {
 public:
  using ParseError::ParseError;
};

/// The reference classification grid disagreed with freshly computed values.
class TableMismatch : public Error {
 public:
  using Error::Error;
};

class CacheWriteError : public Error {
 public:
  using Error::Error;
};

}  // namespace ringlab
