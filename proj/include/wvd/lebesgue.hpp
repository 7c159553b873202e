#pragma once

#include <cstdint>
#include <vector>

#include "wvd/exact.hpp"
#include "wvd/report.hpp"

namespace wvd {

/// Exponents n_1 > n_2 > ... > n_nu >= 0 of n = sum 2^{n_i}.
struct BinaryDecomposition {
  std::uint64_t n = 0;
  std::vector<int> exponents;  // strictly decreasing

  std::size_t nu() const { return exponents.size(); }
};

BinaryDecomposition decompose(std::uint64_t n);  // rejects n = 0

/// Closed form L_n = nu - sum_{j<i} 2^{n_i - n_j} over the binary
/// decomposition. Exact, denominator divides 2^{n_1}.
Dyadic lebesgue_fine(std::uint64_t n);

/// L_0 = 0, L_1 = 1, L_{2n} = L_n, L_{2n+1} = (1 + L_n + L_{n+1})/2.
/// A point query walks the O(log n) chain of (L_m, L_{m+1}) pairs; no
/// shared state, safe to call concurrently.
Dyadic lebesgue_recursive(std::uint64_t n);

inline constexpr std::uint64_t kTableCap = 1ull << 26;

/// Bottom-up sweep of the recursion; entry n is L_n, entry 0 is L_0 = 0.
std::vector<Dyadic> lebesgue_table(std::uint64_t N,
                                   std::uint64_t cap = kTableCap);

/// L_n = sum_{r=1}^{m} ||n/2^r|| + n/2^m with m = bit length of n and
/// ||.|| the distance to the nearest integer; every term is dyadic.
Dyadic lebesgue_nearest_int(std::uint64_t n);

/// Truncated series with exact rational coefficients, index 0..N.
struct PowerSeries {
  std::vector<Rational> coeffs;

  std::uint32_t order() const {
    return static_cast<std::uint32_t>(coeffs.size() - 1);
  }
};

inline constexpr std::uint32_t kSeriesCap = 1u << 14;

/// Coefficients of (z / (2(1-z)^2)) * sum_k 2^{-k} (1-z^{2^k})/(1+z^{2^k})
/// through order N; coefficient n equals L_n. The sum over k stops at
/// K = floor(log2 N): each omitted factor is 1 modulo z^{N+1}, so the
/// omitted part contributes exactly the constant sum_{k>K} 2^{-k} = 2^{-K}.
PowerSeries generating_function_coeffs(std::uint32_t N,
                                       std::uint32_t cap = kSeriesCap);

/// max_{n in [2^{r-1}, 2^r]} L_n in closed form: value
/// r/3 + 7/9 + (-1)^r / (9 2^{r-1}) attained at n = (2^{r+1} + (-1)^r)/3.
struct BlockMaxFormula {
  Rational value;  // reduces to a dyadic
  std::uint64_t argmax = 0;
};
BlockMaxFormula block_max(unsigned r);  // 1 <= r <= 60

/// Brute-force scan of the same block, first argmax on ties.
struct BlockMaxScan {
  Dyadic value;
  std::uint64_t argmax = 0;
};
inline constexpr unsigned kBlockScanCap = 24;
/// `table` (when given) must hold entries up to 2^r; otherwise one is built.
BlockMaxScan block_max_brute(unsigned r,
                             const std::vector<Dyadic>* table = nullptr);

/// Checks L_n <= log2(n)/3 + 1 for every n <= N. The comparison is exact:
/// the dyadic 3(L_n - 1) is tested against certified one-sided log2 bounds,
/// so a PASS cannot be a rounding artifact.
VerificationReport upper_bound_check(std::uint64_t N);

/// (1/n) sum_{k<=n} L_k - log2(n)/4; the mean is exact, only the final
/// subtraction is floating.
double average_deviation(std::uint64_t n);

struct DeviationStats {
  double min = 0.0, max = 0.0;
  std::uint64_t argmin = 0, argmax = 0;
};
/// Deviations over every n in [lo, hi] in one forward pass.
DeviationStats average_deviation_stats(std::uint64_t lo, std::uint64_t hi);

/// L_n - (4/9 + log(3)/(3 log 2) + log2(n)/3) at the maximizer of block r.
/// The bracket alternates in sign with the parity of r and shrinks like
/// 2^{-r}; the limsup statement only forces it toward zero.
double limsup_probe(unsigned r);

}  // namespace wvd
