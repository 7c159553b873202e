#include "wvd/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wvd {

unsigned thread_count() {
  if (const char* env = std::getenv("WVD_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
    return 1;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

void parallel_ranges(
    std::uint64_t lo, std::uint64_t hi,
    const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn,
    unsigned threads) {
  if (hi <= lo) return;
  if (threads == 0) threads = thread_count();
  const std::uint64_t span = hi - lo;
  if (threads > span) threads = static_cast<unsigned>(span);
  if (threads <= 1) {
    fn(lo, hi, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::exception_ptr first_error;
  std::mutex error_mu;
  const std::uint64_t chunk = span / threads;
  const std::uint64_t extra = span % threads;
  std::uint64_t cur = lo;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t len = chunk + (t < extra ? 1 : 0);
    pool.emplace_back([&, t](std::uint64_t a, std::uint64_t b) {
      try {
        fn(a, b, t);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    }, cur, cur + len);
    cur += len;
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace wvd
