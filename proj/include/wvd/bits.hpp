#pragma once

#include <bit>
#include <cstdint>

namespace wvd {

/// Full 64-bit reversal (bit i -> bit 63-i).
constexpr std::uint64_t reverse_bits64(std::uint64_t x) {
  x = ((x & 0x5555555555555555ULL) << 1) | ((x >> 1) & 0x5555555555555555ULL);
  x = ((x & 0x3333333333333333ULL) << 2) | ((x >> 2) & 0x3333333333333333ULL);
  x = ((x & 0x0F0F0F0F0F0F0F0FULL) << 4) | ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL);
  return __builtin_bswap64(x);
}

constexpr int parity64(std::uint64_t x) { return std::popcount(x) & 1; }

constexpr unsigned bit_width64(std::uint64_t x) {
  return static_cast<unsigned>(std::bit_width(x));
}

}  // namespace wvd
