#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

#ifndef WVD_BIN
#error "WVD_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(WVD_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t nl = s.find('\n', pos);
    out.push_back(s.substr(pos, nl - pos));
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("ln all methods agree at n = 3") {
  const auto r = run("ln 3 --method all");
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 6);
  for (const auto& l : ls) CHECK(l.find("3/2^1 = 1.5") != std::string::npos);
}

TEST_CASE("ln single method") {
  const auto r = run("ln 1 --method fine");
  CHECK(r.code == 0);
  CHECK(r.out == "1 = 1\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("ln 0").code == 2);
  CHECK(run("table --max 0").code == 2);
  CHECK(run("scan-blocks --r-max 0").code == 2);
  CHECK(run("gf --terms 1048576").code == 2);
  CHECK(run("ln 3 --method nonsense").code == 2);
  CHECK(run("bogus-subcommand").code == 2);
  CHECK(run("subseq --t 5/4 --m-max 3").code == 2);
  // per-method guards fire inside sweeps too
  CHECK(run("verify --max 2048 --methods walsh-sum").code == 2);
  CHECK(run("clt --N 134217729 --y 0").code == 2);
}

TEST_CASE("verify sweeps") {
  const auto r = run("verify --max 64 --methods all");
  CHECK(r.code == 0);
  CHECK(r.out.find("# failures: 0") != std::string::npos);
  const auto one = run("verify --max 1");
  CHECK(one.code == 0);
  CHECK(one.out.find("# checked: 1") != std::string::npos);
  const auto sub = run("verify --max 256 --methods fine,recursion,nearest-int,discrepancy");
  CHECK(sub.code == 0);
  CHECK(sub.out.find("# failures: 0") != std::string::npos);
}

TEST_CASE("verify json mirrors the csv fields") {
  const auto r = run("verify --max 32 --methods fine,discrepancy --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["checked"] == 32);
  CHECK(j["range"][0] == 1);
  CHECK(j["range"][1] == 32);
  CHECK(j["failures"].empty());
}

TEST_CASE("table output is fixed and byte-deterministic") {
  const auto a = run("table --max 8");
  CHECK(a.code == 0);
  const auto ls = lines(a.out);
  REQUIRE(ls.size() == 9);
  CHECK(ls[0] == "n,L_frac,L_dec,Dstar_frac,nu,n1");
  CHECK(ls[1] == "1,1,1.000000000000,1,1,0");
  CHECK(ls[3] == "3,3/2^1,1.500000000000,1/2,2,1");
  CHECK(ls[5] == "5,7/2^2,1.750000000000,7/20,2,2");
  CHECK(ls[8] == "8,1,1.000000000000,1/8,1,3");
  const auto b = run("table --max 8");
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(run("table --max 8 --format json").out);
  REQUIRE(j.size() == 8);
  CHECK(j[2]["L_frac"] == "3/2^1");
  CHECK(j[4]["Dstar_frac"] == "7/20");
  CHECK(j[4]["nu"] == 2);
}

TEST_CASE("scan-blocks rows") {
  const auto r = run("scan-blocks --r-max 8");
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 9);
  CHECK(ls[0] == "r,value_frac,argmax,brute_value_frac,brute_argmax,match");
  CHECK(ls[2] == "2,3/2,3,3/2,3,1");
  for (std::size_t i = 1; i < ls.size(); ++i)
    CHECK(ls[i].back() == '1');
}

TEST_CASE("gf coefficients against the table") {
  const auto r = run("gf --terms 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("1,1,1,1") != std::string::npos);
  const auto big = run("gf --terms 1024");
  CHECK(big.code == 0);
  CHECK(big.out.find("# max |diff| = 0 over 1024 coefficients, 0 mismatches") !=
        std::string::npos);
}

TEST_CASE("clt rows") {
  const auto r = run("clt --N 65536 --y -1,0,1");
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "y,fraction_frac,fraction,phi,diff");
  CHECK(run("clt --N 2 --y 0").code == 2);
}

TEST_CASE("subseq rows") {
  const auto r = run("subseq --t 0/1 --m-max 5");
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 6);
  CHECK(ls[0] == "m,n,d_frac,ratio");
  CHECK(ls[1].find("1,2,1,1.44269504089") == 0);
  CHECK(ls[5].find("5,32,1,") == 0);
}
