#pragma once

#include <stdexcept>
#include <string>

namespace xyent {

enum class ErrorKind {
  Domain,          // argument outside the operation's mathematical domain
  Boundary,        // (gamma, h) on a phase boundary / critical manifold
  Convergence,     // series, product or quadrature did not converge in budget
  SingularSymbol,  // symbol vanishes on the unit circle
  Resolution,      // Fourier grid too coarse for the requested accuracy
  Proximity,       // spectral parameter too close to an excluded point
  Hypothesis,      // asymptotic theorem hypotheses violated
  Overflow,        // exact integer does not fit the requested width
  Eigensolver,     // eigen decomposition failed or left the physical range
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define XYENT_DEFINE_ERROR(Name, Kind)                 \
  class Name : public Error {                          \
   public:                                             \
    explicit Name(const std::string& message)          \
        : Error(ErrorKind::Kind, message) {}           \
  };

XYENT_DEFINE_ERROR(DomainError, Domain)
XYENT_DEFINE_ERROR(BoundaryError, Boundary)
XYENT_DEFINE_ERROR(ConvergenceError, Convergence)
XYENT_DEFINE_ERROR(SingularSymbolError, SingularSymbol)
XYENT_DEFINE_ERROR(ResolutionError, Resolution)
XYENT_DEFINE_ERROR(ProximityError, Proximity)
XYENT_DEFINE_ERROR(HypothesisError, Hypothesis)
XYENT_DEFINE_ERROR(OverflowError, Overflow)
XYENT_DEFINE_ERROR(EigensolverError, Eigensolver)

#undef XYENT_DEFINE_ERROR

}  // namespace xyent
