#include "wvd/asymptotics.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "wvd/bits.hpp"
#include "wvd/lebesgue.hpp"
#include "wvd/parallel.hpp"

namespace wvd {

double normal_cdf(double y) { return 0.5 * std::erfc(-y / std::sqrt(2.0)); }

namespace {

// L_n scaled by 2^s as plain integers: T[1] = 2^s, T[2n] = T[n],
// T[2n+1] = (2^s + T[n] + T[n+1]) / 2, always exact since the denominator
// exponent of L_n is below the bit length of n. Fits easily: L_n < 10 for
// n <= 2^26, so T[n] < 10 * 2^27.
std::vector<std::uint64_t> scaled_table(std::uint64_t N, unsigned s) {
  std::vector<std::uint64_t> t(N);
  if (N > 1) t[1] = 1ull << s;
  for (std::uint64_t n = 2; n < N; ++n)
    t[n] = (n % 2 == 0) ? t[n / 2]
                        : ((1ull << s) + t[n / 2] + t[n / 2 + 1]) / 2;
  return t;
}

// Exact L_n <= thr with L_n = T/2^s: decompose the double threshold as
// p 2^{-e} and compare T 2^e <= p 2^s in 128-bit integers. L_n >= 1
// settles thresholds below 1; L_n < 16 settles thresholds above 16, which
// keeps e small enough for the 128-bit product.
bool scaled_leq(std::uint64_t T, unsigned s, double thr) {
  if (thr < 1.0) return false;
  if (thr >= 16.0) return true;
  int e2 = 0;
  const double fr = std::frexp(thr, &e2);                   // thr in [1,16)
  const auto p = static_cast<std::uint64_t>(std::ldexp(fr, 53));  // exact
  const int e = 53 - e2;                                    // 49 <= e <= 52
  const auto lhs = static_cast<unsigned __int128>(T) << e;
  const auto rhs = static_cast<unsigned __int128>(p) << s;
  return lhs <= rhs;
}

}  // namespace

CltQuery clt_empirical(std::uint64_t N, double y, std::uint64_t cap) {
  if (N < 4) throw std::invalid_argument("N must be >= 4");
  if (N > cap) throw std::length_error("N exceeds CLT cap");
  if (!std::isfinite(y)) throw std::invalid_argument("y must be finite");
  const unsigned s = bit_width64(N);
  const auto table = scaled_table(N, s);
  const unsigned workers = thread_count();
  std::vector<std::uint64_t> counts(workers, 0);
  parallel_ranges(
      2, N,
      [&](std::uint64_t lo, std::uint64_t hi, unsigned idx) {
        std::uint64_t c = 0;
        for (std::uint64_t n = lo; n < hi; ++n) {
          const double l2 = std::log2(static_cast<double>(n));
          const double thr = l2 / 4.0 + (y / 4.0) * std::sqrt(l2 / 3.0);
          if (scaled_leq(table[n], s, thr)) ++c;
        }
        counts[idx] = c;
      },
      workers);
  std::uint64_t count = 0;
  for (const auto c : counts) count += c;
  CltQuery q;
  q.N = N;
  q.y = y;
  q.fraction = Rational(BigInt(count), BigInt(N - 2));
  q.phi = normal_cdf(y);
  return q;
}

std::vector<CltQuery> clt_profile(std::uint64_t N, const std::vector<double>& ys,
                                  std::uint64_t cap) {
  std::vector<CltQuery> out;
  out.reserve(ys.size());
  for (const double y : ys) out.push_back(clt_empirical(N, y, cap));
  return out;
}

SubsequenceQuery subsequence_ratio(const Rational& t, unsigned m) {
  if (t.sign() < 0 || t > Rational(1)) throw std::invalid_argument("t outside [0,1]");
  if (m == 0) throw std::invalid_argument("m must be positive");
  const BigInt scaled = (t.num() + t.den()) << m;
  const BigInt nt = scaled / t.den();  // floor, everything positive
  if (nt >= (BigInt(1) << 62)) throw std::length_error("n_t exceeds 2^62");
  SubsequenceQuery q;
  q.t = t;
  q.m = m;
  q.n = nt.convert_to<std::uint64_t>();
  q.d = lebesgue_fine(q.n);
  q.ratio = q.d.to_double() / std::log(static_cast<double>(q.n));
  return q;
}

std::vector<double> dyadic_t_scan(const Dyadic& t, unsigned M) {
  const Rational tr(t);
  std::vector<double> out;
  out.reserve(M);
  for (unsigned m = 1; m <= M; ++m)
    out.push_back(subsequence_ratio(tr, m).ratio);
  return out;
}

std::vector<std::vector<double>> ae_ratio_samples(unsigned count,
                                                  unsigned m_max,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> out;
  out.reserve(count);
  for (unsigned i = 0; i < count; ++i) {
    const std::uint64_t bits = rng() >> 11;  // 53-bit dyadic sample
    const Rational t(BigInt(bits), BigInt(1) << 53);
    std::vector<double> traj;
    traj.reserve(m_max);
    for (unsigned m = 1; m <= m_max; ++m)
      traj.push_back(subsequence_ratio(t, m).ratio);
    out.push_back(std::move(traj));
  }
  return out;
}

}  // namespace wvd
