// End-to-end checks of the seqopt binary: output bytes, exit codes, and the
// documented error paths. The binary path arrives in SEQOPT_BIN.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <seqopt/simulate.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, bool merge_stderr = false,
                  const std::string& env_prefix = "") {
  const char* bin = std::getenv("SEQOPT_BIN");
  REQUIRE(bin != nullptr);
  const std::string cmd =
      env_prefix + bin + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = "/tmp/" + name;
  std::ofstream out(path, std::ios::binary);
  out << body;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* const kDiamondText =
    "2 4 directed\n"
    "0 1 1 3\n"
    "1 3 1 3\n"
    "0 2 2 1\n"
    "2 3 2 1\n";

const char* const kTable1 =
    "1\t0\t0\t0\t0\t0\t0\n"
    "0\t1\t0\t0\t0\t0\t0\n"
    "0\t1\t3\t0\t0\t0\t0\n"
    "0\t4\t17\t15\t0\t0\t0\n"
    "0\t36\t181\t254\t105\t0\t0\n"
    "0\t576\t3220\t5693\t3966\t945\t0\n"
    "0\t14400\t86836\t177745\t161773\t67251\t10395\n";

}  // namespace

TEST_CASE("table prints the frozen k=2 triangle") {
  const CliResult r = run_cli("table --k 2 --n 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out == kTable1);
}

TEST_CASE("table bfile format") {
  const CliResult r = run_cli("table --k 1 --n 3 --format bfile");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "0 1\n1 0\n2 0\n3 0\n4 0\n5 1\n6 0\n7 0\n"
        "8 0\n9 1\n10 1\n11 0\n12 0\n13 2\n14 3\n15 1\n");
}

TEST_CASE("table JSON format") {
  const CliResult r = run_cli("table --k 2 --n 6 --json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["k"] == 2);
  CHECK(j["n_max"] == 6);
  REQUIRE(j["rows"].size() == 7);
  CHECK(j["rows"][0] == nlohmann::json::array({"1"}));
  CHECK(j["rows"][4] == nlohmann::json::array({"0", "36", "181", "254", "105"}));
  CHECK(j["rows"][6][3] == "177745");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);                          // no subcommand
  CHECK(run_cli("frobnicate").exit_code == 2);                // unknown subcommand
  CHECK(run_cli("table --n 5").exit_code == 2);               // --k is required
  CHECK(run_cli("table --k 0 --n 5").exit_code == 2);         // k out of range
  CHECK(run_cli("table --k 2 --n 6 --format xml").exit_code == 2);
  CHECK(run_cli("solve --query 0 1 2 3").exit_code == 2);     // --graph is required
}

TEST_CASE("help exits zero") {
  const CliResult r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("SUBCOMMAND") != std::string::npos);
}

TEST_CASE("verify suites") {
  const CliResult oracle = run_cli("verify --suite oracle");
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.out.find("PASS oracle_records_law") != std::string::npos);
  CHECK(oracle.out.find("summary: ") != std::string::npos);
  CHECK(oracle.out.find("FAIL") == std::string::npos);

  const CliResult one = run_cli("verify --suite lemmas --which 3.1");
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("lemma_3.1_opt_stirling") != std::string::npos);
  CHECK(one.out.find("summary: 1/1 checks passed") != std::string::npos);

  CHECK(run_cli("verify --suite bogus").exit_code == 2);

  const CliResult none = run_cli("verify --which zzz_no_such", true);
  CHECK(none.exit_code == 2);
  CHECK(none.out.find("no checks match") != std::string::npos);

  // A starved enumeration budget aborts the run instead of passing vacuously.
  CHECK(run_cli("verify --suite oracle --enum-budget 10").exit_code == 3);
  CHECK(run_cli("verify --suite oracle", false, "SEQOPT_ENUM_BUDGET=10 ").exit_code == 3);

  const CliResult js = run_cli("verify --suite lemmas --which lemma_2.2 --json");
  REQUIRE(js.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j["passed"] == 1);
  CHECK(j["failed"] == 0);
  CHECK(j["checks"][0]["name"] == "lemma_2.2_stirling");
}

TEST_CASE("solve feasible query") {
  const std::string path = write_temp("seqopt_cli_diamond.txt", kDiamondText);
  const CliResult r = run_cli("solve --graph " + path + " --query 0 3 3 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "YES\nlabel 2 6\npath 0 1 3\n");

  const CliResult f = run_cli("solve --graph " + path + " --query 0 3 3 7 --show-frontier");
  CHECK(f.exit_code == 0);
  CHECK(f.out.find("frontier 2\n2 6\n4 2\n") != std::string::npos);

  const CliResult no = run_cli("solve --graph " + path + " --query 0 3 3 2");
  CHECK(no.exit_code == 0);
  CHECK(no.out == "NO\n");

  const CliResult js = run_cli("solve --graph " + path + " --query 0 3 3 7 --json");
  REQUIRE(js.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j["feasible"] == true);
  CHECK(j["label"] == nlohmann::json::array({2, 6}));
  CHECK(j["path"] == nlohmann::json::array({0, 1, 3}));
  CHECK(j["p_e"] == 2);

  const CliResult njs = run_cli("solve --graph " + path + " --query 0 3 3 2 --json");
  REQUIRE(njs.exit_code == 0);
  const nlohmann::json nj = nlohmann::json::parse(njs.out);
  CHECK(nj["feasible"] == false);
  CHECK_FALSE(nj.contains("path"));
  std::remove(path.c_str());
}

TEST_CASE("solve error paths") {
  const std::string path = write_temp("seqopt_cli_diamond2.txt", kDiamondText);
  CHECK(run_cli("solve --graph " + path + " --query 0 3 3").exit_code == 4);
  CHECK(run_cli("solve --graph " + path + " --query 0 9 3 7").exit_code == 2);
  CHECK(run_cli("solve --graph /tmp/seqopt_cli_nope.txt --query 0 3 3 7").exit_code == 2);

  CHECK(run_cli("solve --graph " + path + " --query 0 3 3 7 --front-budget 1").exit_code == 3);
  CHECK(run_cli("solve --graph " + path + " --query 0 3 3 7", false,
                "SEQOPT_FRONT_BUDGET=1 ")
            .exit_code == 3);

  const std::string bad =
      write_temp("seqopt_cli_badgraph.txt", "2 4 directed\n0 1 1\n");
  const CliResult r = run_cli("solve --graph " + bad + " --query 0 3 3 7", true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("line 2") != std::string::npos);
  std::remove(path.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("simulate is deterministic and audited") {
  const std::string args = "simulate --k 2 --n 5 --trials 3 --seed 42 --w-hi 20";
  const CliResult a = run_cli(args + " --csv /tmp/seqopt_cli_a.csv");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out.find("fitted_c=") != std::string::npos);
  CHECK(a.out.find("max_p_e_topology=complete") != std::string::npos);

  const CliResult b = run_cli(args + " --csv /tmp/seqopt_cli_b.csv");
  REQUIRE(b.exit_code == 0);
  const std::string csv_a = slurp("/tmp/seqopt_cli_a.csv");
  CHECK(csv_a == slurp("/tmp/seqopt_cli_b.csv"));
  CHECK(csv_a.rfind("# rng=splitmix64:mt19937_64\n", 0) == 0);

  // The emitted CSV parses back into 3 complete trials.
  const std::vector<seqopt::ExperimentRecord> records = seqopt::parse_csv(csv_a);
  REQUIRE(records.size() == 3);
  for (const auto& rec : records) CHECK(rec.p_ei.size() == 4);
  std::remove("/tmp/seqopt_cli_a.csv");
  std::remove("/tmp/seqopt_cli_b.csv");
}

TEST_CASE("simulate flags and config file") {
  const CliResult k1 = run_cli("simulate --k 1 --n 5 --trials 2 --seed 1");
  CHECK(k1.exit_code == 0);
  CHECK(k1.out.find("max_p_e=1") != std::string::npos);

  CHECK(run_cli("simulate --topology gnp --p 1.5 --n 5 --trials 1").exit_code == 2);

  const CliResult sweep = run_cli(
      "simulate --topology complete,layered --n 6 --trials 2 --seed 7"
      " --csv /tmp/seqopt_cli_sweep.csv");
  REQUIRE(sweep.exit_code == 0);
  CHECK(sweep.out.find("max_p_e_topology=") != std::string::npos);
  CHECK(!slurp("/tmp/seqopt_cli_sweep.complete.csv").empty());
  CHECK(!slurp("/tmp/seqopt_cli_sweep.layered.csv").empty());
  std::remove("/tmp/seqopt_cli_sweep.complete.csv");
  std::remove("/tmp/seqopt_cli_sweep.layered.csv");

  const std::string cfg = write_temp(
      "seqopt_cli_config.json", "{\"k\": 2, \"n\": 5, \"trials\": 2, \"seed\": 9}");
  const CliResult fromcfg = run_cli("simulate --config " + cfg + " --trials 1");
  CHECK(fromcfg.exit_code == 0);
  CHECK(fromcfg.out.find("trials_ok=1") != std::string::npos);

  const std::string badcfg = write_temp("seqopt_cli_badconfig.json", "{\"nn\": 5}");
  CHECK(run_cli("simulate --config " + badcfg).exit_code == 2);
  std::remove(cfg.c_str());
  std::remove(badcfg.c_str());
}
