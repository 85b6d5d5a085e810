#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace tl {

/// SHA-256 hex digest (lowercase). Backed by OpenSSL.
std::string sha256_hex(std::string_view bytes);

/// FNV-1a 64-bit. Used where a small, portable, seedless hash is enough
/// (mock-embedding word buckets, RNG stream derivation).
std::uint64_t fnv1a64(std::string_view bytes);

/// splitmix64 mixing step; the standard seed-expansion function.
std::uint64_t splitmix64(std::uint64_t x);

} // namespace tl
