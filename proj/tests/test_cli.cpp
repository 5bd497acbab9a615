#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {
struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const char* cli = std::getenv("FFR_CLI");
  REQUIRE(cli != nullptr);
  std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

// compares against tests/golden/<name>.json; FFR_REGEN_GOLDEN=1 rewrites it
void golden(const std::string& name, const std::string& out) {
  std::string path = std::string(FFR_GOLDEN_DIR) + "/" + name + ".json";
  if (const char* r = std::getenv("FFR_REGEN_GOLDEN"); r && std::string(r) == "1") {
    std::ofstream(path) << out;
    return;
  }
  std::ifstream f(path);
  REQUIRE_MESSAGE(f.good(), "missing golden file " << path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == out);
}
}  // namespace

TEST_CASE("pi-g renders the sl2 anchors") {
  CHECK(trim(run("pi-g -n 2 e:a1 --format text").out) == "x_{a1}^2 d_{a1} + x_{a1} h1");
  CHECK(trim(run("pi-g -n 2 f:a1 --format text").out) == "-d_{a1}");
  CHECK(trim(run("pi-g -n 2 h:1 --format text").out) == "2 x_{a1} d_{a1} + h1");
  Run j = run("pi-g -n 2 e:a1");
  CHECK(j.code == 0);
  json o = json::parse(j.out);
  CHECK(o["schema_version"] == 1);
  CHECK(o["image"] == "x_{a1}^2 d_{a1} + x_{a1} h1");
}

TEST_CASE("verification suites") {
  CHECK(run("verify pi-hom -n 3").code == 0);
  CHECK(run("verify affine-comm -n 2 -k 1/2 -D 3").code == 0);
  CHECK(run("verify characters -n 2 -k -1/2 --top gt --alpha a1 -D 3").code == 0);
  CHECK(run("verify zhu-diagram -n 2 -k 1/2 --top gt --alpha a1").code == 0);
  CHECK(run("verify zhu-diagram -n 3 -k -3/2 --top gt").code == 0);  // alpha defaults to theta
  CHECK(run("verify singular -n 2 -k -1/2 -D 4 --expect some").code == 0);
  CHECK(run("verify singular -n 2 -k 1/7 --lambda 1/3 -D 3 --expect none").code == 0);
  // a false expectation is a verification failure
  CHECK(run("verify singular -n 2 -k 1/7 --lambda 1/3 -D 2 --expect some").code == 1);
}

TEST_CASE("omega and orbits") {
  Run a = run("omega -n 2 -p 3 -q 2 --sigma \"\"");
  CHECK(a.code == 0);
  CHECK_FALSE(json::parse(a.out)["omega"].empty());
  golden("omega_n2_p3_q2_borel", a.out);
  Run b = run("omega -n 2 -p 2 -q 1 --sigma \"\"");
  CHECK(b.code == 0);
  CHECK(json::parse(b.out)["omega"].empty());
  golden("omega_n2_p2_q1_borel", b.out);
  Run c = run("orbits -n 4");
  CHECK(c.code == 0);
  bool sub = false, twotwo = false;
  json table = json::parse(c.out);
  for (auto& r : table["rows"]) {
    if (r["partition"] == json::array({3, 1}) && r["dim"] == 10 && r["labels"] == json::array({"subreg"})) sub = true;
    if (r["partition"] == json::array({2, 2}) && r["dim"] == 8) twotwo = true;
  }
  CHECK(sub);
  CHECK(twotwo);
  golden("orbits_n4", c.out);
  Run d = run("richardson -n 4 --sigma 1,3");
  CHECK(json::parse(d.out)["partition"] == json::array({2, 2}));
  golden("richardson_n4_13", d.out);
  golden("prk_n2_p3_q2", run("prk -n 2 -p 3 -q 2").out);
}

TEST_CASE("other commands") {
  CHECK(run("pq-polys -n 3 --gamma a1").code == 0);
  CHECK(run("twist-char -n 2 --alpha a1 --window 4").code == 0);
  CHECK(run("gamma-mult -n 3 --alpha a1+a2 --lambda 1/3,-2 -D 5").code == 0);
  Run f = run("ff-field -n 2 -k 1/2 e:a1");
  CHECK(f.code == 0);
  CHECK(json::parse(f.out)["c_gamma"] == json::array({"-2"}));
}

TEST_CASE("usage and domain errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("pi-g -n 2 x:a1").code == 2);
  CHECK(run("pi-g -n 1 e:a1").code == 2);
  CHECK(run("omega -n 2 -p 1 -q 1").code == 2);
  CHECK(run("omega -n 3 -p 4 -q 2").code == 2);
  CHECK(run("omega -n 3 -p 4 -q 3 --sigma 7").code == 2);
  CHECK(run("ff-field -n 2 -k -2 e:a1").code == 2);
  CHECK(run("verify affine-comm -n 2").code == 2);
  CHECK(run("twist-char -n 2 --alpha a1 --window -1").code == 2);
  CHECK(run("pi-g -n 2 e:a1 --format yaml").code == 2);
}

TEST_CASE("output is deterministic") {
  for (std::string a : {"prk -n 3 -p 4 -q 3", "twist-char -n 3 --alpha a1+a2 --window 2", "orbits -n 5"})
    CHECK(run(a).out == run(a).out);
}
