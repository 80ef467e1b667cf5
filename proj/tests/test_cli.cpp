// Runs the simonls executable as a subprocess and checks exit codes and output.
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SIMONLS_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("simonls_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("plant then find recovers a two-dimensional structure") {
  TempDir tmp;
  REQUIRE(run("plant --n 8 --dim 2 --seed 1 --out " + tmp.file("f.tt")).code == 0);
  const Run r = run("find --f " + tmp.file("f.tt") + " --oracle-check");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "1");
  CHECK(j["dim"] == 2);
  CHECK(j["verified"] == true);
  CHECK(j["oracle_match"] == true);
  const Run it = run("find --mode iterative --f " + tmp.file("f.tt") + " --oracle-check");
  CHECK(it.code == 0);
  CHECK(nlohmann::json::parse(it.out)["candidate"] == j["candidate"]);
}

TEST_CASE("prob emits the small table") {
  const Run r = run("prob --n 2 --kmax 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("# schema=1") == 0);
  CHECK(r.out.find("2,2,0.375,") != std::string::npos);
  CHECK(r.out.find("2,3,0.65625,") != std::string::npos);
  const Run j = run("prob --n 2 --kmax 3 --format json");
  CHECK(nlohmann::json::parse(j.out)["rows"][1]["s"] == 0.65625);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("find --f - < /dev/null").code == 2);
  CHECK(run("find --f /nonexistent/file.tt").code == 2);
  CHECK(run("find").code == 2);
  CHECK(run("--no-such-flag plant --n 3").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("bench --n-min 30 --n-max 30").code == 2);
  CHECK(run("plant --n 3 --dim 4").code == 2);
  CHECK(run("sat3 --verify-theorem4 9").code == 2);
  CHECK(run("anf --anf 'x1 +'").code == 2);
}

TEST_CASE("every subcommand has help") {
  for (const char* sub : {"find", "sample", "oracle", "prob", "anf", "sat3", "plant", "bench"}) {
    const Run r = run(std::string(sub) + " --help");
    CHECK(r.code == 0);
    CHECK(r.out.find("--") != std::string::npos);
  }
  CHECK(run("--help").out.find("0x53494D4F4E") != std::string::npos);
}

TEST_CASE("bench at n = 1 completes with a nonzero timing") {
  const Run r = run("bench --n-min 1 --n-max 1");
  CHECK(r.code == 0);
  const auto line = r.out.substr(r.out.find("\n1,") + 1);
  CHECK(std::stod(line.substr(2)) > 0.0);
}

TEST_CASE("oracle-check failure exits with 1") {
  TempDir tmp;
  REQUIRE(run("plant --n 10 --dim 1 --r 1 --seed 3 --out " + tmp.file("p.tt")).code == 0);
  int mismatches = 0;
  for (int seed = 0; seed < 40 && mismatches == 0; ++seed) {
    const Run r = run("find --mode iterative --verify-p 1 --oracle-check --seed " + std::to_string(seed) + " --f " +
                      tmp.file("p.tt"));
    REQUIRE((r.code == 0 || r.code == 1));
    if (r.code == 1) {
      ++mismatches;
      const auto j = nlohmann::json::parse(r.out);
      CHECK(j["oracle_match"] == false);
    }
  }
  CHECK(mismatches == 1);
}

TEST_CASE("oracle, sample, anf and sat3 outputs") {
  TempDir tmp;
  write(tmp.file("x1.tt"), "n=2\n0101\n");
  const auto o = nlohmann::json::parse(run("oracle --f " + tmp.file("x1.tt")).out);
  CHECK(o["spectrum"] == nlohmann::json::array({4, -4, 4, -4}));
  CHECK(o["u0_basis"] == nlohmann::json::array({"01"}));

  const Run s = run("sample --f " + tmp.file("x1.tt") + " --anchors random:2 --rounds 20 --out " + tmp.file("y.txt"));
  CHECK(s.code == 0);
  std::ifstream ys(tmp.file("y.txt"));
  std::string line;
  int count = 0;
  while (std::getline(ys, line)) {
    CHECK((line == "00" || line == "10"));
    ++count;
  }
  CHECK(count == 20);
  CHECK(fs::exists(tmp.file("y.txt") + ".trace.jsonl"));

  const auto a = nlohmann::json::parse(run("anf --anf 'x1*x2 + x2*x3 + x1*x3' --classify --check-s 111").out);
  CHECK(a["classify"]["forced_s"] == "111");
  CHECK(a["check_s"]["in_u0"] == false);

  write(tmp.file("c.cnf"), "p cnf 3 1\n1 2 -3 0\n");
  const Run c = run("sat3 --cnf " + tmp.file("c.cnf") + " --reduce --solve --equisat");
  CHECK(c.code == 0);
  const auto cj = nlohmann::json::parse(c.out);
  CHECK(cj["reduce"][0] == "(s1+1)(s2+1)(s3+0)=0");
  CHECK(cj["solve"]["s"] == "000");
  CHECK(run("sat3 --verify-theorem4 2a --k 5 --n 7 --indices 7 1 3 5 2").code == 0);
}

TEST_CASE("identical seeds give byte-identical output") {
  TempDir tmp;
  REQUIRE(run("plant --n 9 --dim 2 --seed 5 --out " + tmp.file("f.tt")).code == 0);
  const std::string args = "find --mode iterative --seed 17 --f " + tmp.file("f.tt");
  const std::string first = run(args).out;
  CHECK(run(args).out == first);
  CHECK(run(args).out == first);
  CHECK(run("find --mode iterative --seed 18 --f " + tmp.file("f.tt")).out != first);
}
