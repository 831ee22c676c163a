#include "lowrank/guards.hpp"

#include <cstdlib>
#include <limits>

#include "lowrank/errors.hpp"

namespace lowrank {

std::uint64_t effective_guard(std::uint64_t default_limit) {
  const char* env = std::getenv("LOWRANK_GUARD");
  if (env == nullptr || *env == '\0') return default_limit;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') return default_limit;
  return v;
}

void enforce_guard(std::uint64_t count, std::uint64_t default_limit, const std::string& what) {
  std::uint64_t limit = effective_guard(default_limit);
  if (count > limit) {
    throw GuardError(what + " needs " + std::to_string(count) + " cases, above the guard of " +
                     std::to_string(limit));
  }
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t k = 0; k < exp; ++k) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

}  // namespace lowrank
