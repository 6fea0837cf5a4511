#include "bcr/exact.hpp"
#include "bcr/errors.hpp"

#include <cstdlib>

namespace bcr {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ValidationError("not a rational number: '" + s + "'");
  }
}

static int env_bound(int fallback) {
  const char* v = std::getenv("BCRLAB_MAX_K");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  long k = std::strtol(v, &end, 10);
  if (*end != '\0' || k < 1 || k > 64) throw ValidationError("BCRLAB_MAX_K must be a positive integer");
  return static_cast<int>(k);
}

int max_k_algebra() { return env_bound(4); }
int max_k_wheel() { return env_bound(6); }

}  // namespace bcr
