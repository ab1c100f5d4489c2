#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "betacount/types.hpp"

namespace betacount {

// Malformed input text; the message carries a 1-based line number.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An oracle was asked to enumerate beyond its hard input-size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The hypergraph of the instance admits no beta-elimination order. Carries
// the vertex set of the first nest-point-free residual as a witness.
class NotBetaAcyclicError : public std::runtime_error {
 public:
  explicit NotBetaAcyclicError(std::vector<VarId> witness)
      : std::runtime_error("instance is not beta-acyclic"),
        witness_(std::move(witness)) {}

  const std::vector<VarId>& residual_vertices() const { return witness_; }

 private:
  std::vector<VarId> witness_;
};

// eliminate() was called on a variable that is not a nest point of the
// current hypergraph.
class NotANestPointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// eliminate() was called out of order with respect to the elimination order.
class OrderViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A checked internal invariant failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void check(bool condition, const char* what) {
  if (!condition) throw InternalError(what);
}

}  // namespace betacount
