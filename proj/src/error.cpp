#include "rays/error.hpp"

namespace rays {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::domain: return "domain-error";
    case Errc::insufficient_precision: return "insufficient-precision";
    case Errc::hit_critical_point: return "hit-critical-point";
    case Errc::escape: return "escape-error";
    case Errc::not_in_r: return "not-in-R";
    case Errc::non_convergence: return "non-convergence";
    case Errc::out_of_range: return "out-of-range";
    case Errc::out_of_window: return "out-of-window";
    case Errc::unresolved_location: return "unresolved-location";
    case Errc::degenerate_fit: return "degenerate-fit";
    case Errc::branch_ambiguity: return "branch-ambiguity";
    case Errc::parse: return "parse-error";
  }
  return "error";
}

}  // namespace rays
