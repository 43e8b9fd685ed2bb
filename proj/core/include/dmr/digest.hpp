#pragma once

#include <cstdint>
#include <string_view>

namespace dmr {

/// FNV-1a 64-bit content digest.
inline std::uint64_t fnv1a_64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace dmr
