#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace rsum::testing {

/// RSUM_SEED overrides the fixed default so failures can be replayed.
inline std::uint64_t base_seed() {
  if (const char* s = std::getenv("RSUM_SEED")) return std::stoull(s);
  return 20261015;
}

}  // namespace rsum::testing
