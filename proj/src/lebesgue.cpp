#include "wvd/lebesgue.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "wvd/bits.hpp"
#include "wvd/parallel.hpp"

namespace wvd {

BinaryDecomposition decompose(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  BinaryDecomposition d;
  d.n = n;
  for (int e = static_cast<int>(bit_width64(n)) - 1; e >= 0; --e)
    if (n & (1ull << e)) d.exponents.push_back(e);
  return d;
}

Dyadic lebesgue_fine(std::uint64_t n) {
  const BinaryDecomposition d = decompose(n);
  const int n1 = d.exponents.front();
  BigInt pairs = 0;  // sum over j < i of 2^{n1 + n_i - n_j}, all exponents >= 0
  for (std::size_t i = 1; i < d.exponents.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      pairs += BigInt(1) << (n1 + d.exponents[i] - d.exponents[j]);
  BigInt num = BigInt(d.nu()) << n1;
  num -= pairs;
  return Dyadic(std::move(num), static_cast<unsigned>(n1));
}

namespace {

// (L_m, L_{m+1}); the even/odd rules map the pair at m to the pair at
// floor(m/2), so a point query is O(log n) dyadic operations.
std::pair<Dyadic, Dyadic> lebesgue_pair(std::uint64_t m) {
  if (m == 0) return {Dyadic(0), Dyadic(1)};
  auto [a, b] = lebesgue_pair(m / 2);
  Dyadic odd = (Dyadic(1) + a + b).mul_pow2(-1);
  if (m % 2 == 0) return {std::move(a), std::move(odd)};
  return {std::move(odd), std::move(b)};
}

}  // namespace

Dyadic lebesgue_recursive(std::uint64_t n) {
  if (n == 0) return Dyadic(0);
  return lebesgue_pair(n).first;
}

std::vector<Dyadic> lebesgue_table(std::uint64_t N, std::uint64_t cap) {
  if (N == 0) throw std::invalid_argument("N must be positive");
  if (N > cap) throw std::length_error("table size exceeds cap");
  std::vector<Dyadic> t(N + 1);
  t[0] = Dyadic(0);
  if (N >= 1) t[1] = Dyadic(1);
  const Dyadic one(1);
  for (std::uint64_t n = 2; n <= N; ++n) {
    if (n % 2 == 0)
      t[n] = t[n / 2];
    else
      t[n] = (one + t[n / 2] + t[n / 2 + 1]).mul_pow2(-1);
  }
  return t;
}

Dyadic lebesgue_nearest_int(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  const unsigned m = bit_width64(n);
  Dyadic sum(0);
  const Dyadic one(1);
  for (unsigned r = 1; r <= m; ++r) {
    const std::uint64_t mask = (r < 64) ? ((1ull << r) - 1) : ~0ull;
    const Dyadic frac(BigInt(n & mask), r);
    const Dyadic mirror = one - frac;
    sum += frac < mirror ? frac : mirror;
  }
  sum += Dyadic(BigInt(n), m);
  return sum;
}

PowerSeries generating_function_coeffs(std::uint32_t N, std::uint32_t cap) {
  if (N == 0) throw std::invalid_argument("N must be positive");
  if (N > cap) throw std::length_error("series order exceeds cap");
  const unsigned K = bit_width64(N) - 1;  // floor(log2 N)

  // S(z) = sum_{k=0}^{K} 2^{-k} (1 - z^{2^k})/(1 + z^{2^k}) + 2^{-K}
  // with (1-w)/(1+w) = 1 + 2 sum_{j>=1} (-w)^j. The constant terms add
  // up to exactly 2.
  std::vector<Rational> s(N + 1);
  s[0] = Rational(2);
  for (unsigned k = 0; k <= K; ++k) {
    const std::uint64_t step = 1ull << k;
    const Rational plus(2, BigInt(step));
    const Rational minus(-2, BigInt(step));
    std::uint64_t j = 1;
    for (std::uint64_t i = step; i <= N; i += step, ++j)
      s[i] += (j & 1) ? minus : plus;
  }

  // Multiply by 1/(1-z)^2 via two prefix passes, then by z/2.
  for (int pass = 0; pass < 2; ++pass)
    for (std::uint64_t i = 1; i <= N; ++i) s[i] += s[i - 1];

  PowerSeries out;
  out.coeffs.resize(N + 1);
  out.coeffs[0] = Rational(0);
  const Rational half(1, 2);
  for (std::uint64_t i = 1; i <= N; ++i) out.coeffs[i] = s[i - 1] * half;
  return out;
}

BlockMaxFormula block_max(unsigned r) {
  if (r == 0) throw std::invalid_argument("r must be positive");
  if (r > 60) throw std::length_error("r exceeds closed-form guard");
  const int sgn = (r % 2 == 0) ? 1 : -1;
  // r/3 + 7/9 + (-1)^r/(9 2^{r-1}) over the common denominator 9 2^{r-1}.
  BigInt num = BigInt(3 * static_cast<std::uint64_t>(r) + 7) << (r - 1);
  num += sgn;
  BlockMaxFormula out;
  out.value = Rational(std::move(num), BigInt(9) << (r - 1));
  const std::uint64_t top = (1ull << (r + 1)) + (sgn > 0 ? 1 : -1);
  if (top % 3 != 0) throw std::logic_error("argmax not integral");
  out.argmax = top / 3;
  return out;
}

BlockMaxScan block_max_brute(unsigned r, const std::vector<Dyadic>* table) {
  if (r == 0) throw std::invalid_argument("r must be positive");
  if (r > kBlockScanCap) throw std::length_error("r exceeds scan guard");
  std::vector<Dyadic> local;
  if (!table) {
    local = lebesgue_table(1ull << r);
    table = &local;
  }
  if (table->size() <= (1ull << r))
    throw std::invalid_argument("table too short for block scan");
  BlockMaxScan out;
  out.value = (*table)[1ull << (r - 1)];
  out.argmax = 1ull << (r - 1);
  for (std::uint64_t n = (1ull << (r - 1)) + 1; n <= (1ull << r); ++n) {
    if ((*table)[n] > out.value) {
      out.value = (*table)[n];
      out.argmax = n;
    }
  }
  return out;
}

namespace {

void bigint_to_mpz(const BigInt& v, mpz_t out) {
  const bool neg = v.sign() < 0;
  const BigInt a = neg ? BigInt(-v) : v;
  std::vector<std::uint64_t> limbs;
  export_bits(a, std::back_inserter(limbs), 64, false);  // little-endian
  if (limbs.empty()) limbs.push_back(0);
  mpz_import(out, limbs.size(), -1, sizeof(std::uint64_t), 0, 0, limbs.data());
  if (neg) mpz_neg(out, out);
}

// Certified q <= log2(n) / q > log2(n) for dyadic q > 0: compare q against
// one-sided roundings of log2(n) at growing precision. Terminates because
// log2 of a non-power-of-two is irrational (powers of two are exact at any
// precision, so the two bounds already coincide).
bool dyadic_leq_log2(const Dyadic& q, std::uint64_t n) {
  mpz_t qz;
  mpz_init(qz);
  bigint_to_mpz(q.num(), qz);
  mpfr_t qf, lo, hi;
  mpfr_init2(qf, mpz_sizeinbase(qz, 2) + 1);
  mpfr_set_z(qf, qz, MPFR_RNDN);             // exact
  mpfr_div_2ui(qf, qf, q.exp(), MPFR_RNDN);  // exact
  bool decided = false, result = false;
  for (mpfr_prec_t prec = 96; !decided; prec *= 2) {
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_set_ui(lo, n, MPFR_RNDN);  // exact, prec >= 64
    mpfr_log2(hi, lo, MPFR_RNDU);
    mpfr_log2(lo, lo, MPFR_RNDD);
    if (mpfr_cmp(qf, lo) <= 0) {
      decided = true;
      result = true;
    } else if (mpfr_cmp(qf, hi) > 0 || mpfr_cmp(lo, hi) == 0) {
      decided = true;  // q > certified upper bound, or log2(n) exact
      result = false;
    }
    mpfr_clear(lo);
    mpfr_clear(hi);
    if (!decided && prec > (1 << 20))
      throw std::runtime_error("log2 bound undecidable");
  }
  mpfr_clear(qf);
  mpz_clear(qz);
  return result;
}

}  // namespace

VerificationReport upper_bound_check(std::uint64_t N) {
  if (N == 0) throw std::invalid_argument("N must be positive");
  const auto start = std::chrono::steady_clock::now();
  const auto table = lebesgue_table(N);
  VerificationReport rep;
  rep.subject = "L_n <= log2(n)/3 + 1";
  rep.lo = 1;
  rep.hi = N;
  rep.checked = N;

  std::atomic<std::uint64_t> first_bad{0};
  const Dyadic one(1);
  parallel_ranges(1, N + 1, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
    for (std::uint64_t n = lo; n < hi; ++n) {
      const Dyadic q = (table[n] - one).times(3);
      if (q.sign() <= 0) continue;  // L_n <= 1 passes outright
      if (!dyadic_leq_log2(q, n)) {
        std::uint64_t cur = first_bad.load();
        while ((cur == 0 || n < cur) &&
               !first_bad.compare_exchange_weak(cur, n)) {
        }
        return;
      }
    }
  });

  if (const std::uint64_t bad = first_bad.load()) {
    Mismatch m;
    m.n = bad;
    m.method_a = "lebesgue";
    m.value_a = table[bad].to_fraction();
    m.method_b = "log2(n)/3 + 1";
    m.value_b = "exceeded";
    rep.failures.push_back(std::move(m));
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

double average_deviation(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  const auto table = lebesgue_table(n);
  Dyadic sum(0);
  for (std::uint64_t k = 1; k <= n; ++k) sum += table[k];
  const Rational mean = Rational(sum) / Rational(BigInt(n), 1);
  return mean.to_double() - std::log2(static_cast<double>(n)) / 4.0;
}

DeviationStats average_deviation_stats(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 2 || hi < lo) throw std::invalid_argument("bad range");
  const auto table = lebesgue_table(hi);
  Dyadic sum(0);
  DeviationStats st;
  bool first = true;
  for (std::uint64_t n = 1; n <= hi; ++n) {
    sum += table[n];
    if (n < lo) continue;
    const double mean = sum.to_double() / static_cast<double>(n);
    const double dev = mean - std::log2(static_cast<double>(n)) / 4.0;
    if (first || dev < st.min) {
      st.min = dev;
      st.argmin = n;
    }
    if (first || dev > st.max) {
      st.max = dev;
      st.argmax = n;
    }
    first = false;
  }
  return st;
}

double limsup_probe(unsigned r) {
  const BlockMaxFormula bm = block_max(r);
  const double ln = lebesgue_fine(bm.argmax).to_double();
  const double c =
      4.0 / 9.0 + std::log(3.0) / (3.0 * std::log(2.0));
  return ln - (c + std::log2(static_cast<double>(bm.argmax)) / 3.0);
}

}  // namespace wvd
