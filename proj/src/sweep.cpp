#include "wvd/sweep.hpp"

#include <chrono>
#include <stdexcept>

#include "wvd/lebesgue.hpp"
#include "wvd/parallel.hpp"
#include "wvd/vdc.hpp"
#include "wvd/walsh.hpp"

namespace wvd {

std::string method_name(Method m) {
  switch (m) {
    case Method::kFine: return "fine";
    case Method::kRecursion: return "recursion";
    case Method::kNearestInt: return "nearest-int";
    case Method::kIntegral: return "integral";
    case Method::kDiscrepancy: return "discrepancy";
    case Method::kWalshSum: return "walsh-sum";
    case Method::kL1: return "l1";
    case Method::kL1Blocks: return "l1-blocks";
    case Method::kGf: return "gf";
  }
  return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
  for (const Method m :
       {Method::kFine, Method::kRecursion, Method::kNearestInt,
        Method::kIntegral, Method::kDiscrepancy, Method::kWalshSum,
        Method::kL1, Method::kL1Blocks, Method::kGf})
    if (method_name(m) == name) return m;
  return std::nullopt;
}

std::vector<Method> parse_method_list(const std::string& list) {
  if (list == "all")
    return {kAllMethods, kAllMethods + std::size(kAllMethods)};
  std::vector<Method> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = list.find(',', pos);
    const std::string tok =
        list.substr(pos, comma == std::string::npos ? comma : comma - pos);
    const auto m = method_from_name(tok);
    if (!m) throw std::invalid_argument("unknown method: " + tok);
    out.push_back(*m);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty method list");
  return out;
}

Dyadic evaluate_method(Method m, std::uint64_t n) {
  switch (m) {
    case Method::kFine:
      return lebesgue_fine(n);
    case Method::kRecursion:
      return lebesgue_recursive(n);
    case Method::kNearestInt:
      return lebesgue_nearest_int(n);
    case Method::kIntegral:
      return lebesgue_function(n, DyadicPoint(vdc_point(n)));
    case Method::kDiscrepancy:
      return d_n(n);
    case Method::kWalshSum: {
      const Rational scaled =
          walsh_sum_discrepancy(n) * Rational(BigInt(n), 1);
      if (!scaled.is_dyadic())
        throw std::logic_error("Walsh sum failed to reduce to a dyadic");
      return scaled.to_dyadic();
    }
    case Method::kL1:
      return d_n_via_l1_points(n);
    case Method::kL1Blocks:
      return d_n_via_l1_blocks(n);
    case Method::kGf:
      if (n > kSeriesCap) throw std::length_error("series order exceeds cap");
      return generating_function_coeffs(static_cast<std::uint32_t>(n))
          .coeffs[n]
          .to_dyadic();
  }
  throw std::logic_error("unreachable");
}

namespace {

// Column of values for one method over n = 1..maxN. Incremental paths for
// the routes with cheap prefix updates; per-n fan-out for the rest.
std::vector<Dyadic> method_column(Method m, std::uint64_t maxN) {
  std::vector<Dyadic> col(maxN + 1);
  switch (m) {
    case Method::kDiscrepancy: {
      DiscrepancySweep sweep;
      for (std::uint64_t n = 1; n <= maxN; ++n) col[n] = sweep.next();
      return col;
    }
    case Method::kL1: {
      if (maxN > kDiscrepancyCap)
        throw std::length_error("n exceeds point-sum cap");
      Dyadic sum(0);  // running sum of the points
      for (std::uint64_t n = 1; n <= maxN; ++n) {
        sum += vdc_point(n - 1);
        col[n] = Dyadic(static_cast<long long>(n)) - sum.mul_pow2(1);
      }
      return col;
    }
    case Method::kRecursion: {
      const auto t = lebesgue_table(maxN);
      for (std::uint64_t n = 1; n <= maxN; ++n) col[n] = t[n];
      return col;
    }
    case Method::kGf: {
      if (maxN > kSeriesCap) throw std::length_error("series order exceeds cap");
      const auto gf =
          generating_function_coeffs(static_cast<std::uint32_t>(maxN));
      for (std::uint64_t n = 1; n <= maxN; ++n)
        col[n] = gf.coeffs[n].to_dyadic();
      return col;
    }
    default:
      break;
  }
  parallel_ranges(1, maxN + 1, [&](std::uint64_t lo, std::uint64_t hi,
                                   unsigned) {
    for (std::uint64_t n = lo; n < hi; ++n) col[n] = evaluate_method(m, n);
  });
  return col;
}

}  // namespace

VerificationReport verify_methods(std::uint64_t maxN,
                                  const std::vector<Method>& methods) {
  if (maxN == 0) throw std::invalid_argument("max must be positive");
  if (methods.empty()) throw std::invalid_argument("no methods selected");
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::vector<Dyadic>> columns;
  columns.reserve(methods.size());
  for (const Method m : methods) columns.push_back(method_column(m, maxN));

  VerificationReport rep;
  rep.subject = "method agreement";
  rep.lo = 1;
  rep.hi = maxN;
  rep.checked = maxN;
  for (std::uint64_t n = 1; n <= maxN; ++n) {
    for (std::size_t j = 1; j < methods.size(); ++j) {
      if (columns[j][n] == columns[0][n]) continue;
      Mismatch mm;
      mm.n = n;
      mm.method_a = method_name(methods[0]);
      mm.value_a = columns[0][n].to_fraction();
      mm.method_b = method_name(methods[j]);
      mm.value_b = columns[j][n].to_fraction();
      rep.failures.push_back(std::move(mm));
    }
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

}  // namespace wvd
