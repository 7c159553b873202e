#include "wvd/report.hpp"

#include <sstream>

#include "json.hpp"

namespace wvd {

std::string report_csv(const VerificationReport& r, bool timing) {
  std::ostringstream os;
  os << "# subject: " << r.subject << "\n";
  os << "# range: " << r.lo << ".." << r.hi << "\n";
  os << "# checked: " << r.checked << "\n";
  os << "# failures: " << r.failures.size() << "\n";
  if (timing) os << "# elapsed_ms: " << r.elapsed_ms << "\n";
  os << "n,method_a,value_a,method_b,value_b\n";
  for (const auto& f : r.failures)
    os << f.n << ',' << f.method_a << ',' << f.value_a << ',' << f.method_b
       << ',' << f.value_b << "\n";
  return os.str();
}

std::string report_json(const VerificationReport& r, bool timing) {
  nlohmann::json j;
  j["subject"] = r.subject;
  j["range"] = {r.lo, r.hi};
  j["checked"] = r.checked;
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures)
    j["failures"].push_back({{"n", f.n},
                             {"method_a", f.method_a},
                             {"value_a", f.value_a},
                             {"method_b", f.method_b},
                             {"value_b", f.value_b}});
  return j.dump(2) + "\n";
}

}  // namespace wvd
