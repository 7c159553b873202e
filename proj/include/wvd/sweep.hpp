#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wvd/exact.hpp"
#include "wvd/report.hpp"

namespace wvd {

/// The independent routes to L_n (= d_n). `kAll` below is the canonical
/// six; the L1 and generating-function routes can be requested by name.
enum class Method {
  kFine,        // closed form over the binary decomposition
  kRecursion,   // even/odd recursion
  kNearestInt,  // nearest-integer-norm sum
  kIntegral,    // exact integral of |Dirichlet kernel|
  kDiscrepancy, // n * star discrepancy, order statistics
  kWalshSum,    // Walsh-coefficient sum over the dyadic grid
  kL1,          // twice the L1 norm, point sums
  kL1Blocks,    // twice the L1 norm, per-block closed sums
  kGf,          // generating-function coefficient
};

inline constexpr Method kAllMethods[] = {
    Method::kFine,        Method::kRecursion, Method::kNearestInt,
    Method::kIntegral,    Method::kDiscrepancy, Method::kWalshSum,
};

std::string method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);
/// Parses "a,b,c" or "all"; throws std::invalid_argument on unknown names.
std::vector<Method> parse_method_list(const std::string& list);

/// L_n for a single n by the given route (guards of the underlying
/// operations apply).
Dyadic evaluate_method(Method m, std::uint64_t n);

/// Computes every selected method for all n in [1, maxN] and records each
/// disagreement against the first method in the list. Per-n methods fan
/// out across threads; the discrepancy route runs as a single incremental
/// sorted sweep. Results are independent of the thread count.
VerificationReport verify_methods(std::uint64_t maxN,
                                  const std::vector<Method>& methods);

}  // namespace wvd
