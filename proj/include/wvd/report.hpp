#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wvd {

/// One disagreement found by a sweep, values rendered as exact fractions.
struct Mismatch {
  std::uint64_t n = 0;
  std::string method_a;
  std::string value_a;
  std::string method_b;
  std::string value_b;
};

struct VerificationReport {
  std::string subject;
  std::uint64_t lo = 1;
  std::uint64_t hi = 0;
  std::uint64_t checked = 0;
  std::vector<Mismatch> failures;
  double elapsed_ms = 0.0;

  bool ok() const { return failures.empty(); }
};

/// CSV with fixed header "n,method_a,value_a,method_b,value_b"; `timing`
/// adds the elapsed-time comment line (off by default so output bytes are
/// reproducible).
std::string report_csv(const VerificationReport& r, bool timing = false);
std::string report_json(const VerificationReport& r, bool timing = false);

}  // namespace wvd
