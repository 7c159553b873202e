#pragma once

#include <cstdint>

#include "wvd/exact.hpp"

namespace wvd {

/// A point of [0,1) with terminating binary expansion x = sum x_i 2^{-i}.
class DyadicPoint {
 public:
  explicit DyadicPoint(Dyadic v);

  const Dyadic& value() const { return v_; }

  /// Digit word with bit j holding x_{j+1}, i.e. the expansion read
  /// left-to-right from the binary point. Digits beyond the 64th are
  /// dropped; they can never pair with a bit of a 64-bit index.
  std::uint64_t digit_word() const { return word_; }

 private:
  Dyadic v_;
  std::uint64_t word_ = 0;
};

/// Sign of the k-th Walsh function at x: parity of the digit pairing
/// x_1 k_0 + x_2 k_1 + ... realized as popcount of an AND.
int wal(std::uint64_t k, const DyadicPoint& x);

/// Kernel sum_{k<n} wal_k(x) wal_k(u). Integer of magnitude <= n with the
/// parity of n.
std::int64_t dirichlet_kernel(std::uint64_t n, const DyadicPoint& x,
                              const DyadicPoint& u);

inline constexpr std::uint64_t kLebesgueIntegralCap = 1ull << 20;

/// L_n(x) = int_0^1 |D_n(x,u)| du, integrated exactly: with g = n_1 + 1
/// every wal_k, k < n <= 2^g, is constant on each u-interval of length
/// 2^{-g}, so the integral is the cell average of |D_n| over that grid.
/// Cost is O(n 2^g); n above `cap` is rejected.
Dyadic lebesgue_function(std::uint64_t n, const DyadicPoint& x,
                         std::uint64_t cap = kLebesgueIntegralCap);

}  // namespace wvd
