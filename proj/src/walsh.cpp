#include "wvd/walsh.hpp"

#include <stdexcept>

#include "wvd/bits.hpp"

namespace wvd {

DyadicPoint::DyadicPoint(Dyadic v) : v_(std::move(v)) {
  if (v_.sign() < 0 || v_ >= Dyadic(1))
    throw std::invalid_argument("point must lie in [0,1)");
  const unsigned w = v_.exp();
  if (v_.is_zero()) return;
  if (w <= 64) {
    const auto m = v_.num().convert_to<std::uint64_t>();
    word_ = reverse_bits64(m << (64 - w));
  } else {
    const auto top = BigInt(v_.num() >> (w - 64)).convert_to<std::uint64_t>();
    word_ = reverse_bits64(top);
  }
}

int wal(std::uint64_t k, const DyadicPoint& x) {
  return parity64(k & x.digit_word()) ? -1 : 1;
}

std::int64_t dirichlet_kernel(std::uint64_t n, const DyadicPoint& x,
                              const DyadicPoint& u) {
  if (n == 0) throw std::invalid_argument("kernel order must be positive");
  const std::uint64_t w = x.digit_word() ^ u.digit_word();
  std::int64_t acc = 0;
  for (std::uint64_t k = 0; k < n; ++k) acc += parity64(k & w) ? -1 : 1;
  return acc;
}

Dyadic lebesgue_function(std::uint64_t n, const DyadicPoint& x,
                         std::uint64_t cap) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n > cap) throw std::length_error("n exceeds integral-method cap");
  const unsigned g = bit_width64(n);  // n_1 + 1
  const std::uint64_t cells = 1ull << g;
  const std::uint64_t xw = x.digit_word();
  BigInt acc = 0;
  for (std::uint64_t m = 0; m < cells; ++m) {
    // Left endpoint of the cell carries its digit word; reversing m within
    // width g aligns digit x_1 with bit 0.
    const std::uint64_t uw = reverse_bits64(m) >> (64 - g);
    const std::uint64_t w = xw ^ uw;
    std::int64_t d = 0;
    for (std::uint64_t k = 0; k < n; ++k) d += parity64(k & w) ? -1 : 1;
    acc += d < 0 ? -d : d;
  }
  return Dyadic(acc, g);
}

}  // namespace wvd
