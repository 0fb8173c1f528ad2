#include "rays/bigfloat.hpp"

#include <cstdio>
#include <vector>

#include "rays/error.hpp"

namespace rays {

BigFloat BigFloat::parse(std::string_view text, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  std::string s(text);
  char* end = nullptr;
  if (s.empty()) throw Error(Errc::parse, "empty decimal");
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, rnd);
  if (end == s.c_str() || *end != '\0') throw Error(Errc::parse, "malformed decimal '" + s + "'");
  return r;
}

std::string BigFloat::str(int digits) const {
  int n = mpfr_snprintf(nullptr, 0, "%.*Rf", digits, v_);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", digits, v_);
  return std::string(buf.data());
}

}  // namespace rays
