#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace krullkit {

inline constexpr std::uint64_t kDefaultSeed = 20161017;

/// KRULLKIT_SEED if set and numeric, else kDefaultSeed.
inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("KRULLKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
    }
  }
  return kDefaultSeed;
}

}  // namespace krullkit
