#pragma once

#include <stdexcept>
#include <string>

namespace opcat {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input data fails a structural invariant (bad involution, non-bijective
// order data, inconsistent sizes in serialized input, ...).
struct InvalidData : Error {
  explicit InvalidData(const std::string& msg) : Error(msg) {}
};

// Leaf count of an inserted graph does not match the degree of the host
// vertex, or an operation of the wrong arity is supplied.
struct ArityMismatch : Error {
  explicit ArityMismatch(const std::string& msg) : Error(msg) {}
};

// Genus bookkeeping fails: vertex genus != total genus of the inserted part.
struct GenusMismatch : Error {
  explicit GenusMismatch(const std::string& msg) : Error(msg) {}
};

// Graph expected to be connected is not.
struct Disconnected : Error {
  explicit Disconnected(const std::string& msg) : Error(msg) {}
};

// Slot index out of range in a partial composition.
struct SlotOutOfRange : Error {
  explicit SlotOutOfRange(const std::string& msg) : Error(msg) {}
};

// Colour (input/output profile) of an operation does not match the slot.
struct ColorMismatch : Error {
  explicit ColorMismatch(const std::string& msg) : Error(msg) {}
};

// Permutation argument is not a permutation of the expected range.
struct BadPermutation : Error {
  explicit BadPermutation(const std::string& msg) : Error(msg) {}
};

// Two morphisms are not composable.
struct Mismatch : Error {
  explicit Mismatch(const std::string& msg) : Error(msg) {}
};

// Domain/codomain sizes of finite maps or cobordisms do not line up.
struct SizeMismatch : Error {
  explicit SizeMismatch(const std::string& msg) : Error(msg) {}
};

// A cobordism violates the non-degenerate target condition (some connected
// component has empty target boundary).
struct NotNC : Error {
  explicit NotNC(const std::string& msg) : Error(msg) {}
};

// Composing a surface with a cobordism produced a disconnected surface.
struct Disconnects : Error {
  explicit Disconnects(const std::string& msg) : Error(msg) {}
};

// Internal consistency failure in Euler characteristic bookkeeping.  This
// signals a bug, never valid input.
struct NonIntegerGenus : Error {
  explicit NonIntegerGenus(const std::string& msg) : Error(msg) {}
};

// A functor expected to be faithful identified two distinct morphisms.
struct NotFaithful : Error {
  explicit NotFaithful(const std::string& msg) : Error(msg) {}
};

// An object is outside the domain of a normal-form routine.
struct NotApplicable : Error {
  explicit NotApplicable(const std::string& msg) : Error(msg) {}
};

// Index argument out of range.
struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

// A colour map violates one of the admissibility conditions.
struct InvalidColoring : Error {
  explicit InvalidColoring(const std::string& msg) : Error(msg) {}
};

// No compatible colour lift exists.  The structure theory promises one, so
// this is surfaced loudly for auditability.
struct NoLift : Error {
  explicit NoLift(const std::string& msg) : Error(msg) {}
};

// Requested ring is not supported by the exact linear algebra kernel.
struct RingUnsupported : Error {
  explicit RingUnsupported(const std::string& msg) : Error(msg) {}
};

// Enumeration exceeded its size budget.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// Malformed input file or command line.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

inline void require(bool cond, const char* msg) {
  if (!cond) throw InvalidData(msg);
}

}  // namespace opcat
