#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace factcheck {

// Lowercase hex SHA-256 digest.
std::string Sha256Hex(std::string_view data);

constexpr std::uint64_t Fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace factcheck
