// wvd: exact Walsh Lebesgue constants and van der Corput star discrepancy.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or guard error.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wvd/asymptotics.hpp"
#include "wvd/bits.hpp"
#include "wvd/exact.hpp"
#include "wvd/lebesgue.hpp"
#include "wvd/report.hpp"
#include "wvd/sweep.hpp"
#include "wvd/vdc.hpp"

namespace {

constexpr int kDefaultDigits = 12;

std::string trim_decimal(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string pretty(const wvd::Dyadic& v) {
  return v.to_fraction() + " = " + trim_decimal(wvd::render_decimal(v, kDefaultDigits));
}

void write_output(const std::string& payload, const std::string& path) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << payload;
}

int cmd_ln(std::uint64_t n, const std::string& method) {
  std::vector<wvd::Method> methods;
  if (method == "all")
    methods.assign(std::begin(wvd::kAllMethods), std::end(wvd::kAllMethods));
  else if (auto m = wvd::method_from_name(method))
    methods.push_back(*m);
  else
    throw std::invalid_argument("unknown method: " + method);

  std::vector<wvd::Dyadic> values;
  values.reserve(methods.size());
  for (const wvd::Method m : methods) values.push_back(wvd::evaluate_method(m, n));

  if (methods.size() == 1) {
    std::cout << pretty(values[0]) << "\n";
    return 0;
  }
  bool agree = true;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    std::cout << wvd::method_name(methods[i]) << ": " << pretty(values[i]) << "\n";
    if (!(values[i] == values[0])) agree = false;
  }
  if (!agree) {
    std::cerr << "methods disagree at n=" << n << "\n";
    return 1;
  }
  return 0;
}

int cmd_verify(std::uint64_t maxN, const std::string& methods,
               const std::string& format, const std::string& out, bool timing) {
  const auto report = wvd::verify_methods(maxN, wvd::parse_method_list(methods));
  write_output(format == "json" ? wvd::report_json(report, timing)
                                : wvd::report_csv(report, timing),
               out);
  std::cerr << "checked " << report.checked << " n, " << report.failures.size()
            << " failures, " << report.elapsed_ms << " ms\n";
  return report.ok() ? 0 : 1;
}

int cmd_table(std::uint64_t maxN, const std::string& format,
              const std::string& out) {
  const auto table = wvd::lebesgue_table(maxN);
  std::ostringstream os;
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::uint64_t n = 1; n <= maxN; ++n) {
      const wvd::Rational dstar =
          wvd::Rational(table[n]) / wvd::Rational(wvd::BigInt(n), 1);
      rows.push_back({{"n", n},
                      {"L_frac", table[n].to_fraction()},
                      {"L_dec", wvd::render_decimal(table[n], kDefaultDigits)},
                      {"Dstar_frac", dstar.to_fraction()},
                      {"nu", std::popcount(n)},
                      {"n1", wvd::bit_width64(n) - 1}});
    }
    os << rows.dump(2) << "\n";
  } else {
    os << "n,L_frac,L_dec,Dstar_frac,nu,n1\n";
    for (std::uint64_t n = 1; n <= maxN; ++n) {
      const wvd::Rational dstar =
          wvd::Rational(table[n]) / wvd::Rational(wvd::BigInt(n), 1);
      os << n << ',' << table[n].to_fraction() << ','
         << wvd::render_decimal(table[n], kDefaultDigits) << ','
         << dstar.to_fraction() << ',' << std::popcount(n) << ','
         << wvd::bit_width64(n) - 1 << "\n";
    }
  }
  write_output(os.str(), out);
  return 0;
}

int cmd_scan_blocks(unsigned rmax) {
  if (rmax == 0) throw std::invalid_argument("r-max must be positive");
  if (rmax > wvd::kBlockScanCap)
    throw std::length_error("r-max exceeds scan guard");
  const auto table = wvd::lebesgue_table(1ull << rmax);
  std::cout << "r,value_frac,argmax,brute_value_frac,brute_argmax,match\n";
  bool all_match = true;
  for (unsigned r = 1; r <= rmax; ++r) {
    const auto f = wvd::block_max(r);
    const auto b = wvd::block_max_brute(r, &table);
    const bool match =
        f.value == wvd::Rational(b.value) && f.argmax == b.argmax;
    all_match = all_match && match;
    std::cout << r << ',' << f.value.to_fraction() << ',' << f.argmax << ','
              << wvd::Rational(b.value).to_fraction() << ',' << b.argmax << ','
              << (match ? 1 : 0) << "\n";
  }
  return all_match ? 0 : 1;
}

int cmd_gf(std::uint32_t terms) {
  const auto series = wvd::generating_function_coeffs(terms);
  const auto table = wvd::lebesgue_table(terms);
  std::cout << "n,coeff_frac,table_frac,equal\n";
  wvd::Rational max_diff(0);
  std::uint64_t mismatches = 0;
  for (std::uint64_t n = 1; n <= terms; ++n) {
    const wvd::Rational ref(table[n]);
    const bool eq = series.coeffs[n] == ref;
    if (!eq) {
      ++mismatches;
      const wvd::Rational diff = wvd::abs(series.coeffs[n] - ref);
      if (diff > max_diff) max_diff = diff;
    }
    std::cout << n << ',' << series.coeffs[n].to_fraction() << ','
              << ref.to_fraction() << ',' << (eq ? 1 : 0) << "\n";
  }
  std::cout << "# max |diff| = " << max_diff.to_fraction() << " over " << terms
            << " coefficients, " << mismatches << " mismatches\n";
  return mismatches == 0 ? 0 : 1;
}

int cmd_clt(std::uint64_t N, const std::string& ylist) {
  std::vector<double> ys;
  std::stringstream ss(ylist);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty y value");
    std::size_t pos = 0;
    ys.push_back(std::stod(tok, &pos));
    if (pos != tok.size()) throw std::invalid_argument("bad y value: " + tok);
  }
  if (ys.empty()) throw std::invalid_argument("no y values");
  const auto rows = wvd::clt_profile(N, ys);
  std::cout << "y,fraction_frac,fraction,phi,diff\n";
  for (const auto& q : rows) {
    const double f = q.fraction.to_double();
    std::cout << fmt_double(q.y) << ',' << q.fraction.to_fraction() << ','
              << fmt_double(f) << ',' << fmt_double(q.phi) << ','
              << fmt_double(f - q.phi) << "\n";
  }
  return 0;
}

int cmd_subseq(const std::string& t_str, unsigned m_max) {
  if (m_max == 0) throw std::invalid_argument("m-max must be positive");
  const wvd::Rational t = wvd::Rational::parse(t_str);
  std::cout << "m,n,d_frac,ratio\n";
  for (unsigned m = 1; m <= m_max; ++m) {
    const auto q = wvd::subsequence_ratio(t, m);
    std::cout << m << ',' << q.n << ',' << q.d.to_fraction() << ','
              << fmt_double(q.ratio) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lebesgue constants of the Walsh system / star discrepancy "
               "of the van der Corput sequence"};
  app.require_subcommand(1);

  std::uint64_t n = 1;
  std::string method = "all";
  auto* ln = app.add_subcommand("ln", "L_n by one method or all six");
  ln->add_option("n", n, "index n >= 1")->required();
  ln->add_option("--method", method,
                 "fine|recursion|nearest-int|integral|discrepancy|walsh-sum|all");

  std::uint64_t vmax = 1;
  std::string vmethods = "all", vformat = "csv", vout;
  bool vtiming = false;
  auto* verify = app.add_subcommand("verify", "sweep n = 1..max, compare methods");
  verify->add_option("--max", vmax, "largest n")->required();
  verify->add_option("--methods", vmethods, "comma list or 'all'");
  verify->add_option("--format", vformat)->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", vout, "output file (default stdout)");
  verify->add_flag("--timing", vtiming, "include elapsed time in the report");

  std::uint64_t tmax = 1;
  std::string tformat = "csv", tout;
  auto* table = app.add_subcommand("table", "emit n, L_n, D*_n rows");
  table->add_option("--max", tmax)->required();
  table->add_option("--format", tformat)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", tout, "output file (default stdout)");

  unsigned rmax = 1;
  auto* blocks = app.add_subcommand("scan-blocks",
                                    "closed-form block maxima vs brute scan");
  blocks->add_option("--r-max", rmax)->required();

  std::uint32_t terms = 1;
  auto* gf = app.add_subcommand("gf", "generating-function coefficients vs table");
  gf->add_option("--terms", terms)->required();

  std::uint64_t cltN = 4;
  std::string ylist = "0";
  auto* clt = app.add_subcommand("clt", "empirical CLT fractions");
  clt->add_option("--N", cltN)->required();
  clt->add_option("--y", ylist, "comma list of thresholds");

  std::string t_str = "0";
  unsigned m_max = 1;
  auto* subseq = app.add_subcommand("subseq", "d_{n_t(m)} / log n_t(m) probes");
  subseq->add_option("--t", t_str, "rational t in [0,1], e.g. 1/3")->required();
  subseq->add_option("--m-max", m_max)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ln->parsed()) return cmd_ln(n, method);
    if (verify->parsed()) return cmd_verify(vmax, vmethods, vformat, vout, vtiming);
    if (table->parsed()) return cmd_table(tmax, tformat, tout);
    if (blocks->parsed()) return cmd_scan_blocks(rmax);
    if (gf->parsed()) return cmd_gf(terms);
    if (clt->parsed()) return cmd_clt(cltN, ylist);
    if (subseq->parsed()) return cmd_subseq(t_str, m_max);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
