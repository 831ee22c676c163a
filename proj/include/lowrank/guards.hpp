#pragma once

#include <cstdint>
#include <string>

namespace lowrank {

// Default enumeration limits. Setting LOWRANK_GUARD in the environment
// replaces every one of them with its value; this is unchecked and can make
// a command run for a very long time.
inline constexpr std::uint64_t kAlgebraDegreeGuard = 1'000'000;     // elements of A
inline constexpr std::uint64_t kCubicEnumerationGuard = 10'000'000;  // p^6 tuples
inline constexpr std::uint64_t kIsomorphismSearchGuard = 15'625;     // p^(k(k-1)) maps, 5^6

std::uint64_t effective_guard(std::uint64_t default_limit);

/// Throws GuardError when count exceeds the effective guard.
void enforce_guard(std::uint64_t count, std::uint64_t default_limit, const std::string& what);

/// base^exp saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace lowrank
