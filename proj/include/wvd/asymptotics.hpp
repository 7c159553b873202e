#pragma once

#include <cstdint>
#include <vector>

#include "wvd/exact.hpp"

namespace wvd {

/// Standard normal CDF via erfc; absolute error well below 1e-7.
double normal_cdf(double y);

inline constexpr std::uint64_t kCltCap = 1ull << 26;

/// Empirical CDF point of the recentred/rescaled Lebesgue constants:
/// the fraction of n in {2, ..., N-1} with
/// L_n <= log2(n)/4 + (y/4) sqrt(log2(n)/3).
/// L_n is exact; the threshold is one round-to-nearest double, compared
/// against L_n exactly (a double is a dyadic rational), with ties counting
/// as satisfied. The count is therefore identical across runs and thread
/// counts.
struct CltQuery {
  std::uint64_t N = 0;
  double y = 0.0;
  Rational fraction;  // count / (N - 2)
  double phi = 0.0;   // normal_cdf(y)
};
CltQuery clt_empirical(std::uint64_t N, double y, std::uint64_t cap = kCltCap);

std::vector<CltQuery> clt_profile(std::uint64_t N, const std::vector<double>& ys,
                                  std::uint64_t cap = kCltCap);

/// One probe of the subsequence n_t(m) = floor(2^m (1 + t)): the floor is
/// taken in exact rational arithmetic, d = L_{n_t} is exact, and only the
/// final quotient d / log(n_t) is floating (natural log, so the dyadic-t
/// limit is 0 and the known maximizer families approach 1/(3 log 2)).
struct SubsequenceQuery {
  Rational t;
  unsigned m = 0;
  std::uint64_t n = 0;
  Dyadic d;
  double ratio = 0.0;
};
SubsequenceQuery subsequence_ratio(const Rational& t, unsigned m);

/// Ratios for m = 1..M at a dyadic t. Past the denominator exponent of t
/// the numerator d is frozen by L_{2n} = L_n, so the tail decays like
/// 1/(m log 2).
std::vector<double> dyadic_t_scan(const Dyadic& t, unsigned M);

/// Ratio trajectories at `count` pseudo-random t (fixed seed, 53-bit
/// dyadic samples), m = 1..m_max. Reporting material only: no finite
/// computation can verify the almost-everywhere limit.
std::vector<std::vector<double>> ae_ratio_samples(unsigned count,
                                                  unsigned m_max,
                                                  std::uint64_t seed);

}  // namespace wvd
