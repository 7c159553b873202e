#pragma once

#include <cstdint>
#include <vector>

#include "wvd/exact.hpp"
#include "wvd/report.hpp"

namespace wvd {

/// k-th van der Corput point: the binary digits of k reflected about the
/// binary point. Exact, denominator exponent = bit length of k.
Dyadic vdc_point(std::uint64_t k);  // k < 2^63

/// The first n points in generation order: y_0 = 0, all distinct, all in
/// [0, 1), y_k with denominator exponent at most the bit length of k.
struct VdcPrefix {
  std::uint64_t n = 0;
  std::vector<Dyadic> points;
};
VdcPrefix vdc_prefix(std::uint64_t n);

/// Digit reversal of m within a fixed width; an involution.
std::uint64_t bit_reverse_index(std::uint64_t m, unsigned width);

/// The first n points split into nu arithmetic progressions, one per term
/// of the binary decomposition: block i is
/// { k step + offset : 0 <= k < size } with step = 2^{-n_i} and
/// offset = sum_{j<i} 2^{-(n_j+1)}. Blocks are disjoint and their union is
/// exactly the prefix.
struct PrefixBlock {
  int index = 0;  // 1-based
  std::uint64_t size = 0;
  Dyadic offset;
  Dyadic step;
};
std::vector<PrefixBlock> prefix_blocks(std::uint64_t n);

inline constexpr std::uint64_t kDiscrepancyCap = 1ull << 22;

/// sup_t |#{k < n : y_k < t}/n - t| over the sorted prefix: at each jump
/// both one-sided candidates i/n - x_(i) and x_(i) - (i-1)/n are taken,
/// which covers the half-open supremum exactly.
Rational star_discrepancy(std::uint64_t n, std::uint64_t cap = kDiscrepancyCap);

/// n * star_discrepancy(n); the product must reduce to a dyadic.
Dyadic d_n(std::uint64_t n, std::uint64_t cap = kDiscrepancyCap);

/// d_n as twice the L1 norm of the discrepancy function, summed point by
/// point: 2 sum_{l<n} (1/2 - y_l).
Dyadic d_n_via_l1_points(std::uint64_t n, std::uint64_t cap = kDiscrepancyCap);

/// Same quantity via the closed per-block sums (block i contributes
/// 1/2 - size_i * offset_i), usable for any n < 2^63.
Dyadic d_n_via_l1_blocks(std::uint64_t n);

/// The discrepancy function of the prefix stays >= 0, equivalently
/// x_(i) <= (i-1)/n for every i; reports the first violating i.
VerificationReport nonnegativity_check(std::uint64_t n,
                                       std::uint64_t cap = kDiscrepancyCap);

inline constexpr std::uint64_t kWalshSumCap = 1ull << 10;

/// D*_n = 2^{-(n_1+1)} sum_{m'} | (1/n) sum_{k<n} wal_{m'}(y_k) |,
/// evaluated through the Walsh module. Cost O(n 2^{n_1}).
Rational walsh_sum_discrepancy(std::uint64_t n,
                               std::uint64_t cap = kWalshSumCap);

/// Incremental sweep: keeps the prefix sorted and yields exact d_n for
/// n = 1, 2, ... in one pass. Single-threaded by construction; must agree
/// with the per-n point queries.
class DiscrepancySweep {
 public:
  /// Appends the next point and returns d for the extended prefix.
  Dyadic next();

  std::uint64_t n() const { return n_; }

  /// 0 when the current prefix satisfies x_(i) <= (i-1)/n for all i,
  /// otherwise the smallest violating i (refreshed by next()).
  std::uint64_t nonneg_violation() const { return violation_; }

 private:
  std::vector<Dyadic> sorted_;
  std::uint64_t n_ = 0;
  std::uint64_t violation_ = 0;
};

}  // namespace wvd
