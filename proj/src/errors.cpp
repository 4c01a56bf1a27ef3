#include "xyent/errors.hpp"

namespace xyent {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Boundary: return "boundary";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::SingularSymbol: return "singular-symbol";
    case ErrorKind::Resolution: return "resolution";
    case ErrorKind::Proximity: return "proximity";
    case ErrorKind::Hypothesis: return "hypothesis";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Eigensolver: return "eigensolver";
  }
  return "unknown";
}

}  // namespace xyent
