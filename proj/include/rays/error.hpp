#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rays {

enum class Errc {
  domain,
  insufficient_precision,
  hit_critical_point,
  escape,
  not_in_r,
  non_convergence,
  out_of_range,
  out_of_window,
  unresolved_location,
  degenerate_fit,
  branch_ambiguity,
  parse,
};

std::string_view to_string(Errc code);

/// Domain failure of a library operation. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rays
