#include "wvd/vdc.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "wvd/bits.hpp"
#include "wvd/lebesgue.hpp"
#include "wvd/walsh.hpp"

namespace wvd {

std::uint64_t bit_reverse_index(std::uint64_t m, unsigned width) {
  if (width == 0 || width > 64) throw std::invalid_argument("bad width");
  if (width < 64 && m >> width) throw std::invalid_argument("m out of range");
  return reverse_bits64(m) >> (64 - width);
}

Dyadic vdc_point(std::uint64_t k) {
  if (k >> 63) throw std::invalid_argument("k out of range");
  if (k == 0) return Dyadic(0);
  const unsigned w = bit_width64(k);
  return Dyadic(BigInt(bit_reverse_index(k, w)), w);
}

VdcPrefix vdc_prefix(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  VdcPrefix p;
  p.n = n;
  p.points.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) p.points.push_back(vdc_point(k));
  return p;
}

std::vector<PrefixBlock> prefix_blocks(std::uint64_t n) {
  const BinaryDecomposition d = decompose(n);
  std::vector<PrefixBlock> blocks;
  blocks.reserve(d.nu());
  Dyadic offset(0);
  for (std::size_t i = 0; i < d.exponents.size(); ++i) {
    const int e = d.exponents[i];
    PrefixBlock b;
    b.index = static_cast<int>(i) + 1;
    b.size = 1ull << e;
    b.offset = offset;
    b.step = Dyadic(1, static_cast<unsigned>(e));
    blocks.push_back(std::move(b));
    offset += Dyadic(1, static_cast<unsigned>(e) + 1);
  }
  return blocks;
}

namespace {

std::vector<Dyadic> sorted_prefix(std::uint64_t n) {
  auto pts = vdc_prefix(n).points;
  std::sort(pts.begin(), pts.end());
  return pts;
}

// max_i max(i - n x_(i), n x_(i) - (i-1)) over a sorted prefix; this is
// n sup|Delta| with both one-sided candidates at every jump.
Dyadic scaled_discrepancy(const std::vector<Dyadic>& sorted) {
  const BigInt n(sorted.size());
  Dyadic best(0);
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    const Dyadic nx = sorted[i - 1].times(n);
    const Dyadic up = Dyadic(static_cast<long long>(i)) - nx;
    const Dyadic dn = nx - Dyadic(static_cast<long long>(i) - 1);
    if (up > best) best = up;
    if (dn > best) best = dn;
  }
  return best;
}

}  // namespace

Rational star_discrepancy(std::uint64_t n, std::uint64_t cap) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n > cap) throw std::length_error("n exceeds discrepancy cap");
  const Dyadic scaled = scaled_discrepancy(sorted_prefix(n));
  return Rational(scaled) / Rational(BigInt(n), 1);
}

Dyadic d_n(std::uint64_t n, std::uint64_t cap) {
  const Rational prod = star_discrepancy(n, cap) * Rational(BigInt(n), 1);
  if (!prod.is_dyadic())
    throw std::logic_error("n * D*_n failed to reduce to a dyadic");
  return prod.to_dyadic();
}

Dyadic d_n_via_l1_points(std::uint64_t n, std::uint64_t cap) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n > cap) throw std::length_error("n exceeds point-sum cap");
  Dyadic sum(0);
  for (std::uint64_t k = 0; k < n; ++k) sum += vdc_point(k);
  return Dyadic(static_cast<long long>(n)) - sum.mul_pow2(1);
}

Dyadic d_n_via_l1_blocks(std::uint64_t n) {
  const auto blocks = prefix_blocks(n);
  Dyadic acc(0);  // sum of size_i * offset_i
  for (const auto& b : blocks) acc += b.offset.times(BigInt(b.size));
  return Dyadic(static_cast<long long>(blocks.size())) - acc.mul_pow2(1);
}

VerificationReport nonnegativity_check(std::uint64_t n, std::uint64_t cap) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n > cap) throw std::length_error("n exceeds discrepancy cap");
  const auto start = std::chrono::steady_clock::now();
  const auto sorted = sorted_prefix(n);
  VerificationReport rep;
  rep.subject = "vdC discrepancy function nonnegative";
  rep.lo = rep.hi = n;
  rep.checked = n;
  const BigInt nn(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const Dyadic nx = sorted[i - 1].times(nn);
    if (nx > Dyadic(static_cast<long long>(i) - 1)) {
      Mismatch m;
      m.n = n;
      m.method_a = "x_(" + std::to_string(i) + ")";
      m.value_a = sorted[i - 1].to_fraction();
      m.method_b = "(i-1)/n";
      m.value_b = Rational(BigInt(i - 1), nn).to_fraction();
      rep.failures.push_back(std::move(m));
      break;
    }
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

Rational walsh_sum_discrepancy(std::uint64_t n, std::uint64_t cap) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n > cap) throw std::length_error("n exceeds Walsh-sum cap");
  const unsigned g = bit_width64(n);  // n_1 + 1
  std::vector<std::uint64_t> words;
  words.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k)
    words.push_back(DyadicPoint(vdc_point(k)).digit_word());
  BigInt total = 0;
  for (std::uint64_t mp = 0; mp < (1ull << g); ++mp) {
    std::int64_t s = 0;
    for (const std::uint64_t w : words) s += parity64(mp & w) ? -1 : 1;
    total += s < 0 ? -s : s;
  }
  return Rational(std::move(total), BigInt(n) << g);
}

Dyadic DiscrepancySweep::next() {
  Dyadic y = vdc_point(n_);
  sorted_.insert(std::upper_bound(sorted_.begin(), sorted_.end(), y),
                 std::move(y));
  ++n_;
  const BigInt nn(n_);
  violation_ = 0;
  Dyadic best(0);
  for (std::size_t i = 1; i <= n_; ++i) {
    const Dyadic nx = sorted_[i - 1].times(nn);
    const Dyadic up = Dyadic(static_cast<long long>(i)) - nx;
    const Dyadic dn = nx - Dyadic(static_cast<long long>(i) - 1);
    if (up > best) best = up;
    if (dn > best) best = dn;
    if (violation_ == 0 && dn.sign() > 0) violation_ = i;
  }
  return best;
}

}  // namespace wvd
