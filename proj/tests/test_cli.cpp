#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace std::string_literals;

namespace {

const std::string kCli = NILSEP_CLI;
const std::string kFixtures = NILSEP_FIXTURES;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

std::string json_only(const std::string& args) {
  const std::string cmd = kCli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("nilsep_test_" + name + ".json");
}

void reverifies(const std::string& name, const std::string& args) {
  INFO(args);
  const auto path = temp_file(name);
  std::ofstream(path) << json_only(args + " --json --no-timing");
  const Run v = run("verify-report " + path.string());
  CHECK(v.code == 0);
  CHECK(has(v, "all flags reproduced"));
  std::filesystem::remove(path);
}

}  // namespace

TEST_CASE("classify") {
  const Run h = run("classify --preset heisenberg -p 2");
  CHECK(h.code == 0);
  CHECK(has(h, "NOT conjugacy F_2-separable: G/tau(G) non-abelian, witness [a,b]!=1"));

  const Run z2 = run("classify --preset z2 -p 5");
  CHECK(z2.code == 0);
  CHECK(has(z2, "conjugacy F_5-separable: tau(G) has order 1 (a power of 5) and G/tau(G) is abelian"));

  const Run q8 = run("classify --preset zxq8 -p 3");
  CHECK(q8.code == 0);
  CHECK(has(q8, "NOT conjugacy F_3-separable: tau(G) has order 8, not a power of 3"));

  CHECK(has(run("classify --preset zxq8 -p 2"), "conjugacy F_2-separable"));
}

TEST_CASE("witness") {
  const Run w = run("witness --preset heisenberg -p 2 -K 6");
  CHECK(w.code == 0);
  CHECK(has(w, "q = 3, n = 1"));
  CHECK(has(w, "pair u = (3,0,0), v = (3,0,1)"));
  CHECK(has(w, "global non-conjugacy PASS"));
  CHECK(has(w, "6/6 local checks pass"));
  CHECK_FALSE(has(w, "FAIL"));

  const Run w3 = run("witness --preset ut4 -p 3 -K 3");
  CHECK(w3.code == 0);
  CHECK(has(w3, "q = 2"));

  const Run ab = run("witness --preset z2 -p 2");
  CHECK(ab.code == 4);
  CHECK(has(ab, "abelian"));
}

TEST_CASE("z2 representative override") {
  const Run w = run("witness --preset heisenberg -p 2 -K 2 --z2-rep " + kFixtures + "/a_cubed.json");
  CHECK(w.code == 0);
  CHECK(has(w, "q = 3, n = 2"));
  CHECK(has(w, "pair u = (27,0,0), v = (27,0,3)"));
}

TEST_CASE("separate") {
  const Run s = run("separate --preset zxd4 -p 2 -a '0|r' -b '0|s'");
  CHECK(s.code == 0);
  CHECK(has(s, "separated (torsion-part) modulo 2^1: quotient of order 16"));

  const Run a = run("separate --preset z -p 2 -a 1 -b 3");
  CHECK(a.code == 0);
  CHECK(has(a, "separated (abelian-part) modulo 2^2: quotient of order 4"));

  const Run c = run("separate --preset zxd4 -p 2 -a '0|r' -b '0|r3'");
  CHECK(c.code == 0);
  CHECK(has(c, "AreConjugate: conjugator (0)|s"));

  CHECK(run("separate --preset zxc3 -p 2 -a '0|g' -b '0|e'").code == 5);
  CHECK(run("separate --preset heisenberg -p 2 -a 1,0,0 -b 0,1,0").code == 5);
}

TEST_CASE("scan") {
  const Run s = run("scan --preset heisenberg -p 2 -K 4 -x 0,0,0 -y 0,0,1");
  CHECK(s.code == 0);
  CHECK(has(s, "separated at level 1"));

  const Run w = run("scan --preset heisenberg -p 2 -K 6");
  CHECK(w.code == 0);
  CHECK(has(w, "conjugate at all 6 levels"));
}

TEST_CASE("selftest") {
  const Run s = run("selftest");
  CHECK(s.code == 0);
  CHECK_FALSE(has(s, "FAIL"));

  const Run bad = run("selftest --no-corpus --table " + kFixtures + "/corrupt_c4.json");
  CHECK(bad.code == 1);
  CHECK(has(bad, "FAIL closure"));

  const Run good = run("selftest --no-corpus --table " + kFixtures + "/c4.json");
  CHECK(good.code == 0);
}

TEST_CASE("custom spec files") {
  const Run ok = run("witness --spec " + kFixtures + "/heisenberg_spec.json -p 3 -K 3");
  CHECK(ok.code == 0);
  CHECK(has(ok, "pair u = (2,0,0), v = (2,0,1)"));

  const Run raw = run("scan --spec " + kFixtures + "/heisenberg_no_basis.json -p 3 -K 3 -x @" + kFixtures +
                      "/a_cubed.json -y @" + kFixtures + "/a_cubed_c.json");
  CHECK(raw.code == 0);
  CHECK(has(raw, "separated at level"));

  const Run bad = run("classify --spec " + kFixtures + "/heisenberg_bad_center.json -p 2");
  CHECK(bad.code == 2);
  CHECK(has(bad, "center-commutes"));

  CHECK(run("classify --spec " + kFixtures + "/malformed.json -p 2").code == 3);
}

TEST_CASE("argument errors") {
  CHECK(run("classify --preset nope -p 2").code == 3);
  CHECK(run("classify --preset heisenberg -p 4").code == 3);
  CHECK(run("classify --preset heisenberg").code == 3);
  CHECK(run("frobnicate").code == 3);
  CHECK(run("separate --preset zxd4 -p 2 -a '0|q' -b '0|s'").code == 3);
}

TEST_CASE("JSON reports are deterministic") {
  const std::string args = "witness --preset heisenberg -p 2 -K 4 --json --no-timing";
  const std::string a = json_only(args);
  CHECK(a == json_only(args));
  CHECK(a.find("\"command\": \"witness\"") != std::string::npos);
  CHECK(a.find("\"timing_ms\": 0") != std::string::npos);
}

TEST_CASE("reports re-verify") {
  reverifies("classify", "classify --preset zxq8 -p 3");
  reverifies("witness", "witness --preset heisenberg -p 3 -K 3");
  reverifies("separate", "separate --preset zxd4 -p 2 -a '0|r' -b '0|s'");
  reverifies("conjugate", "separate --preset zxd4 -p 2 -a '0|r' -b '0|r3'");
  reverifies("scan", "scan --preset heisenberg -p 2 -K 4");
  reverifies("selftest", "selftest --no-corpus");
}

TEST_CASE("tampered reports are caught") {
  const auto path = temp_file("tampered");
  std::string j = json_only("classify --preset zxq8 -p 3 --json --no-timing");
  const auto pos = j.find("\"separable\": false");
  REQUIRE(pos != std::string::npos);
  j.replace(pos, "\"separable\": false"s.size(), "\"separable\": true");
  std::ofstream(path) << j;
  const Run v = run("verify-report " + path.string());
  CHECK(v.code == 1);
  CHECK(has(v, "flags differ"));
  std::filesystem::remove(path);
}
