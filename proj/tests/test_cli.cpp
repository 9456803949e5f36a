// Copyright 2026 SynEval authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Process-level checks of the installed command-line surface.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = SYNEVAL_CLI;
const fs::path kFixtures = SYNEVAL_FIXTURES_DIR;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "syneval_cli_tests";
  fs::create_directories(dir);
  return dir;
}

CliResult run_cli(const std::string& args, const std::string& env = "") {
  const fs::path out_path = scratch_dir() / "stdout.txt";
  const fs::path err_path = scratch_dir() / "stderr.txt";
  const std::string command = env + (env.empty() ? "" : " ") + kCli + " " +
                              args + " > " + out_path.string() + " 2> " +
                              err_path.string();
  const int status = std::system(command.c_str());
  CliResult result;
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

std::string fixture_args() {
  return "--real " + (kFixtures / "real.csv").string() + " --synthetic " +
         (kFixtures / "synthetic.csv").string() + " --schema " +
         (kFixtures / "schema.json").string();
}

}  // namespace

TEST_CASE("evaluate happy path writes a report and prints markdown") {
  const fs::path out = scratch_dir() / "happy.json";
  CliResult r = run_cli("evaluate " + fixture_args() + " --seed 7 --out " +
                        out.string());
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out.find("# SynEval Report") == 0);
  auto doc = nlohmann::json::parse(slurp(out));
  CHECK_FALSE(doc.at("fidelity").is_null());
  CHECK_FALSE(doc.at("text_fidelity").is_null());
  CHECK(doc.at("utility").size() == 2);
  CHECK(doc.at("privacy").is_null());
}

TEST_CASE("missing members with --privacy exits 2 with E_CONFIG") {
  CliResult r = run_cli("evaluate " + fixture_args() + " --privacy");
  CHECK(r.code == 2);
  CHECK(r.err.rfind("E_CONFIG", 0) == 0);
}

TEST_CASE("fail-below gate exits 3") {
  CliResult r = run_cli("evaluate " + fixture_args() +
                        " --fail-below fidelity.column_shapes=0.9999");
  CHECK(r.code == 3);
  CHECK(r.out.find("FAIL-BELOW fidelity.column_shapes") != std::string::npos);

  CliResult bad = run_cli("evaluate " + fixture_args() + " --fail-below nonsense");
  CHECK(bad.code == 2);
  CHECK(bad.err.rfind("E_CONFIG", 0) == 0);
}

TEST_CASE("single-axis subcommands report only their axis") {
  const fs::path out = scratch_dir() / "fidelity_only.json";
  CliResult r = run_cli("fidelity " + fixture_args() + " --out " + out.string());
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(slurp(out));
  CHECK_FALSE(doc.at("fidelity").is_null());
  CHECK(doc.at("text_fidelity").is_null());
  CHECK(doc.at("utility").is_null());
  CHECK(doc.at("privacy").is_null());
}

TEST_CASE("privacy subcommand runs the attack") {
  const fs::path out = scratch_dir() / "privacy_only.json";
  CliResult r = run_cli(
      "privacy --members " + (kFixtures / "members.csv").string() +
      " --non-members " + (kFixtures / "non_members.csv").string() +
      " --synthetic " + (kFixtures / "synthetic.csv").string() + " --schema " +
      (kFixtures / "schema.json").string() + " --n-trees 20 --out " +
      out.string());
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc.at("fidelity").is_null());
  CHECK_FALSE(doc.at("privacy").is_null());
}

TEST_CASE("config file values apply and flags override them") {
  const fs::path config = scratch_dir() / "config.json";
  const fs::path out = scratch_dir() / "config_run.json";
  {
    std::ofstream cfg(config);
    cfg << nlohmann::json{
               {"real", (kFixtures / "real.csv").string()},
               {"synthetic", (kFixtures / "synthetic.csv").string()},
               {"schema", (kFixtures / "schema.json").string()},
               {"seed", 1234},
               {"deterministic", true}}
               .dump();
  }
  CliResult r = run_cli("evaluate --config " + config.string() + " --out " +
                        out.string());
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc.at("seed").get<std::uint64_t>() == 1234);

  CliResult overridden = run_cli("evaluate --config " + config.string() +
                                 " --seed 42 --out " + out.string());
  REQUIRE(overridden.code == 0);
  CHECK(nlohmann::json::parse(slurp(out)).at("seed").get<std::uint64_t>() == 42);
}

TEST_CASE("SYNEVAL_SEED is the seed fallback") {
  const fs::path out = scratch_dir() / "env_seed.json";
  CliResult r = run_cli("evaluate " + fixture_args() + " --out " + out.string(),
                        "SYNEVAL_SEED=777");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(slurp(out)).at("seed").get<std::uint64_t>() == 777);

  // An explicit flag wins over the environment.
  CliResult flag = run_cli(
      "evaluate " + fixture_args() + " --seed 5 --out " + out.string(),
      "SYNEVAL_SEED=777");
  REQUIRE(flag.code == 0);
  CHECK(nlohmann::json::parse(slurp(out)).at("seed").get<std::uint64_t>() == 5);
}

TEST_CASE("schema-infer prints a loadable schema") {
  CliResult r = run_cli("schema-infer " + (kFixtures / "real.csv").string());
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.contains("columns"));
  bool has_rating = false;
  for (const auto& col : doc["columns"]) {
    if (col["name"] == "rating") {
      has_rating = true;
      CHECK(col["kind"] == "discrete");
    }
  }
  CHECK(has_rating);
}

TEST_CASE("unknown flags and missing subcommands exit 2") {
  CHECK(run_cli("evaluate --no-such-flag").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("evaluate").code == 2);  // nothing to evaluate
}

TEST_CASE("--help exits 0") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("evaluate --help").code == 0);
}
