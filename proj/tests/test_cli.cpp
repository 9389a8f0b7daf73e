#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(DIAMCENSUS_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

fs::path scratch_dir(const std::string& tag) {
  fs::path p = fs::temp_directory_path() /
               ("diamcensus-cli-" + tag + "-" + std::to_string(getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("census text output and exit code") {
  const RunResult r = run_cli("census --n 3");
  CHECK(r.code == 0);
  CHECK(r.output.find("2 3\n") != std::string::npos);
  CHECK(r.output.find("UNBOUNDED 4\n") != std::string::npos);
  CHECK(r.output.find("with equality") != std::string::npos);
}

TEST_CASE("census above the cap exits with the resource code") {
  const RunResult r = run_cli("census --n 12");
  CHECK(r.code == 2);
  CHECK(r.output.find("cap") != std::string::npos);
}

TEST_CASE("census json carries the resolved config and decimal strings") {
  const RunResult r = run_cli("--format json census --n 1");
  CHECK(r.code == 0);
  const json j = json::parse(r.output);
  CHECK(j["config"]["command"] == "census");
  CHECK(j["config"]["n"] == 1);
  CHECK(j["config"]["output-format"] == "json");
  CHECK(j["config"]["seed"] == "0");
  CHECK(j["config"]["rng"] == "splitmix64");
  CHECK(j["diameter"]["0"] == "1");
}

TEST_CASE("census csv has the flat column layout") {
  const RunResult r = run_cli("--format csv census --n 2");
  CHECK(r.code == 0);
  CHECK(r.output.rfind("n,d,quantity,value,scheme,case-label\n", 0) == 0);
  CHECK(r.output.find("2,1,diameter-count,1,,\n") != std::string::npos);
  CHECK(r.output.find("2,UNBOUNDED,diameter-count,1,,\n") != std::string::npos);
}

TEST_CASE("bound reports cases, closed form, and the headline ratio") {
  const RunResult r = run_cli("--format json bound --n 9 --d 7 --scheme thm2");
  CHECK(r.code == 0);
  const json j = json::parse(r.output);
  CHECK(j["cases-sum-to-total"] == true);
  CHECK(j["h2"] == "3810240");
  CHECK(j["cases"]["H2-shaped"] == "2177280");
  CHECK(j["headline-ratio"]["fraction"] == "2/7");
}

TEST_CASE("bound outside the window scheme domain exits 2") {
  const RunResult r = run_cli("bound --n 6 --d 2 --scheme thm1");
  CHECK(r.code == 2);
}

TEST_CASE("bound stratified route agrees with the direct route") {
  const RunResult a = run_cli("--format json bound --n 10 --d 6 --scheme thm1");
  const RunResult b =
      run_cli("--format json bound --n 10 --d 6 --scheme thm1 --stratified");
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(json::parse(a.output)["cases"] == json::parse(b.output)["cases"]);
}

TEST_CASE("sample writes exchange files and is seed-deterministic") {
  const fs::path d1 = scratch_dir("s1");
  const fs::path d2 = scratch_dir("s2");
  const RunResult r1 =
      run_cli("sample h1 --n 10 --d 4 --count 3 --seed 9 --out " + d1.string());
  const RunResult r2 =
      run_cli("sample h1 --n 10 --d 4 --count 3 --seed 9 --out " + d2.string());
  CHECK(r1.code == 0);
  CHECK(r2.code == 0);
  for (int i = 0; i < 3; ++i) {
    const std::string name = "h1-n10-d4-seed9-000" + std::to_string(i) + ".txt";
    const std::string body = slurp(d1 / name);
    CHECK(body == slurp(d2 / name));
    CHECK(body.rfind("10\n", 0) == 0);
  }
  fs::remove_all(d1);
  fs::remove_all(d2);
}

TEST_CASE("sample from an empty family exits 2") {
  const fs::path dir = scratch_dir("empty");
  const RunResult r =
      run_cli("sample h2 --n 7 --d 5 --count 1 --out " + dir.string());
  CHECK(r.code == 2);
  fs::remove_all(dir);
}

TEST_CASE("block samples verify the contract distances") {
  const fs::path dir = scratch_dir("blk");
  const RunResult r =
      run_cli("sample block --s 3 --count 2 --seed 4 --out " + dir.string());
  CHECK(r.code == 0);
  CHECK(r.output.find("INVALID") == std::string::npos);
  CHECK(fs::exists(dir / "block-n5-d3-seed4-0000.txt"));
  fs::remove_all(dir);
}

TEST_CASE("verify suites pass and report counterexample-free runs") {
  CHECK(run_cli("verify gf").code == 0);
  CHECK(run_cli("verify eq11").code == 0);
  const RunResult r = run_cli("verify lemma1 --trials 500 --seed 3");
  CHECK(r.code == 0);
  CHECK(r.output.find("PASS") != std::string::npos);
}

TEST_CASE("report emits the archived trend ratios") {
  const RunResult r = run_cli("report");
  CHECK(r.code == 0);
  CHECK(r.output.find("209/1296") != std::string::npos);
  CHECK(r.output.find("745/4032") != std::string::npos);
  CHECK(r.output.find("unbounded diameter exceeds every finite d") !=
        std::string::npos);
}

TEST_CASE("usage errors exit 2 and help exits 0") {
  CHECK(run_cli("census").code == 2);          // missing required --n
  CHECK(run_cli("--no-such-flag").code == 2);  // unknown option
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("sample h1 --n 10 --d 4 --count 0").code == 2);
}

TEST_SUITE_END();
