#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(LSS_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf;
  for (std::size_t got; (got = fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json results(const Run& r) { return nlohmann::json::parse(r.out).at("results"); }

const std::string example = std::string("--graph ") + LSS_GOLDEN_DIR + "/example.txt";

}  // namespace

TEST_CASE("help and usage") {
  CHECK(run("--help").code == 0);
  CHECK(run("classify --help").code == 0);
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("classify --family C4").code == 1);
}

TEST_CASE("invariants") {
  Run star = run("invariants --family K1,4 --no-timing");
  REQUIRE(star.code == 0);
  CHECK(results(star).at("pmd") == 4);
  CHECK(results(star).at("tpmd") == 2);
  Run edge = run("invariants --family P2 --no-timing");
  CHECK(results(edge).at("pmd") == 1);
  CHECK(results(edge).at("tpmd") == 1);
  Run ex = run("invariants " + example + " --witness --no-timing");
  REQUIRE(ex.code == 0);
  CHECK(results(ex).at("pmd") == 4);
  CHECK(results(ex).at("tpmd") == 2);
  CHECK(results(ex).at("tpmd_witness").size() == 2);
}

TEST_CASE("classify") {
  CHECK(results(run("classify --family C4 --d 2 --property ci --no-timing")).at("status") == "No");
  CHECK(results(run("classify --family C4 --d 3 --property ci --no-timing")).at("status") == "Yes");
  CHECK(results(run("classify --family K1,3 --d 4 --property prime --no-timing")).at("status") == "Yes");
}

TEST_CASE("reg") {
  CHECK(results(run("reg --family P5 --d 3 --s 2 --no-timing")).at("value") == 6);
  CHECK(results(run("reg --family C4 --d 3 --s 1 --no-timing")).at("value") == 4);
  auto aci = results(run("reg --graph " + std::string(LSS_GOLDEN_DIR) + "/double_star.txt --d 2 --s 3 --no-timing"));
  CHECK(aci.at("lower") == 8);
  CHECK(aci.at("upper").is_null());
  CHECK(aci.at("symbolic_upper") == "4 + reg(S/L_G(2))");
}

TEST_CASE("export") {
  Run k23 = run("export --family K2,3 --d 3");
  REQUIRE(k23.code == 0);
  std::ifstream in(std::string(LSS_GOLDEN_DIR) + "/k23_d3.m2");
  std::string golden((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(k23.out == golden);
  CHECK(run("export --family P2 --d 1 --dialect maple").code == 2);
  CHECK(run("export --family P2 --d 1 --out /nonexistent-dir/x.m2").code == 4);
}

TEST_CASE("exit codes") {
  CHECK(run("invariants --graph /nonexistent/graph.txt").code == 4);
  CHECK(run("invariants --family Q3").code == 2);
  CHECK(run("invariants --family C2").code == 2);
  CHECK(run("invariants --family K12").code == 3);
  CHECK(run("classify --family C4 --d 2 --property normal").code == 2);
  CHECK(run("reg --family K4 --d 2 --s 1 --reg-base 3").code != 0);
}

TEST_CASE("verify") {
  Run ok = run("verify --suite pmd --max-n 4 --no-timing");
  CHECK(ok.code == 0);
  CHECK(results(ok).at("suites").at(0).at("passed") == true);
  CHECK(run("verify --suite nonsense").code == 2);
}

TEST_CASE("reports are byte-stable") {
  for (const std::string& args :
       {std::string("invariants --family C5 --witness --no-timing"), std::string("classify --family K2,3 --d 3 --no-timing"),
        std::string("koszul --family K5 --d 2 --no-timing"), std::string("export --family C4 --d 2 --twisted"),
        std::string("verify --suite tpmd --max-n 4 --no-timing --jobs 1")}) {
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(run("verify --suite all --max-n 4 --no-timing --jobs 1").out ==
        run("verify --suite all --max-n 4 --no-timing --jobs 3").out);
}
