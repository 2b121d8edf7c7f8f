#include <gtest/gtest.h>

#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "json.hpp"
#include "scratch_dir.hpp"

using testutil::ScratchDir;
using testutil::slurp;
using testutil::spit;

namespace {

struct Outcome {
  int status;
  std::string out;
};

Outcome cli(const std::string& args, const ScratchDir& dir) {
  const auto out = dir / "stdout.txt";
  const std::string cmd = std::string(CTPREP_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out)};
}

constexpr const char* kBell = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nh q[0];\ncx q[0],q[1];\n";

}  // namespace

TEST(Cli, RunWritesReport) {
  ScratchDir dir("cli_run");
  const auto r = cli("run --state ghz --qubits 2 --runs 2 --pop 20 --gens 30 --seed 5 --quiet --out " +
                         (dir / "res").string(),
                     dir);
  ASSERT_EQ(r.status, 0);
  const auto json = nlohmann::json::parse(slurp(dir / "res" / "report.json"));
  EXPECT_EQ(json["runs"].size(), 2u);
  EXPECT_EQ(json["config"]["base_seed"], 5);
  EXPECT_EQ(json["config"]["ga"]["pop_size"], 20);
}

TEST(Cli, SimulateReportsFidelity) {
  ScratchDir dir("cli_sim");
  spit(dir / "bell.qasm", kBell);
  const auto r = cli("simulate --in " + (dir / "bell.qasm").string() + " --target ghz", dir);
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("fidelity 1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("gate_count 2"), std::string::npos);
  EXPECT_NE(r.out.find("t_count 0"), std::string::npos);
  EXPECT_NE(r.out.find("depth 2"), std::string::npos);
}

TEST(Cli, OptimizeShrinksCircuit) {
  ScratchDir dir("cli_opt");
  spit(dir / "in.qasm", std::string(kBell) + "t q[1];\nt q[1];\nh q[0];\nh q[0];\n");
  ASSERT_EQ(cli("optimize --in " + (dir / "in.qasm").string() + " --out " + (dir / "out.qasm").string(), dir).status,
            0);
  EXPECT_EQ(slurp(dir / "out.qasm"), std::string(kBell) + "s q[1];\n");
}

TEST(Cli, ExitCodes) {
  ScratchDir dir("cli_err");
  spit(dir / "bad.qasm", "OPENQASM 2.0;\nqreg q[2];\nh q[5];\n");
  EXPECT_NE(cli("simulate --in " + (dir / "bad.qasm").string() + " --target ghz", dir).status, 0);
  EXPECT_NE(cli("run --state nonsense --qubits 2 --out " + (dir / "x").string(), dir).status, 0);
  EXPECT_EQ(cli("run --state file --qubits 2 --out " + (dir / "x").string(), dir).status, 2);
  EXPECT_NE(cli("", dir).status, 0);
}
