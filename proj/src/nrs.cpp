#include "nrs/nrs.hpp"

namespace nrs {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Converged:
      return "converged";
    case Verdict::MaxSteps:
      return "max-steps";
    case Verdict::Failed:
      return "failed";
  }
  return "unknown";
}

}  // namespace nrs
