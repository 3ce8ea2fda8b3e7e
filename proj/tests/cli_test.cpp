// Copyright 2026 The zsinfo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "fixtures.hpp"
#include "zsinfo/json_io.hpp"

using namespace zsinfo;
namespace fx = zsinfo::fixtures;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("zsinfo_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
  static int counter;
};
int TempDir::counter = 0;

int run_cli(const std::string& args, const std::string& capture = "") {
  std::string cmd = std::string(ZSINFO_CLI_PATH) + " " + args;
  cmd += capture.empty() ? " > /dev/null 2>&1" : " > " + capture + " 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

json slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  json doc;
  in >> doc;
  return doc;
}

}  // namespace

TEST_CASE("solve reproduces the -9/2 fixture") {
  TempDir tmp;
  io::write_json_file(tmp.file("game.json"),
                      io::game_to_json(fx::guess_copy_game<Rational>()));
  io::write_json_file(tmp.file("mu1.json"),
                      io::structure_to_json(fx::mu1_shared<Rational>()));
  const int rc = run_cli("solve --game " + tmp.file("game.json") +
                             " --structure " + tmp.file("mu1.json") +
                             " --rational --out " + tmp.file("report.json"),
                         tmp.file("stdout.txt"));
  CHECK(rc == 0);
  const json report = slurp(tmp.file("report.json"));
  CHECK(report.at("value").get<std::string>() == "-9/2");
  CHECK(report.at("duality_gap").get<std::string>() == "0");
}

TEST_CASE("solve with the normal-form oracle flag") {
  TempDir tmp;
  REQUIRE(run_cli("gen --seed 11 --x 3 --y 2 --u 2 --out-structure " +
                  tmp.file("mu.json") + " --out-game " + tmp.file("g.json")) == 0);
  const int rc = run_cli("solve --game " + tmp.file("g.json") + " --structure " +
                             tmp.file("mu.json") + " --oracle normal-form --out " +
                             tmp.file("r.json"),
                         "");
  CHECK(rc == 0);
  CHECK(slurp(tmp.file("r.json")).at("oracle_equal").get<bool>());
}

TEST_CASE("gen then solve is reproducible") {
  TempDir tmp;
  REQUIRE(run_cli("gen --seed 7 --x 3 --y 3 --u 2 --out-structure " +
                  tmp.file("mu.json") + " --out-game " + tmp.file("g.json")) == 0);
  const std::string solve_cmd = "solve --game " + tmp.file("g.json") +
                                " --structure " + tmp.file("mu.json") + " --out ";
  REQUIRE(run_cli(solve_cmd + tmp.file("r1.json")) == 0);
  REQUIRE(run_cli(solve_cmd + tmp.file("r2.json")) == 0);
  CHECK(slurp(tmp.file("r1.json")) == slurp(tmp.file("r2.json")));
}

TEST_CASE("garble exit codes") {
  TempDir tmp;
  const auto zeta = uniform_prob<Rational>({"0", "1"});
  const auto mu_pair = pair_from_channel(zeta, fx::bsc<Rational>(Rational(1, 10)));
  const auto nu_pair = pair_from_channel(zeta, fx::bsc<Rational>(Rational(3, 10)));
  io::write_json_file(tmp.file("mu.json"), io::pair_to_json(mu_pair));
  io::write_json_file(tmp.file("nu.json"), io::pair_to_json(nu_pair));

  SUBCASE("feasible direction: exit 0 and the kernel verifies") {
    const int rc = run_cli("garble " + tmp.file("mu.json") + " " +
                               tmp.file("nu.json") + " --out " + tmp.file("k.json"),
                           "");
    CHECK(rc == 0);
    const json report = slurp(tmp.file("k.json"));
    CHECK(report.at("feasible").get<bool>());
    CHECK(report.at("verified").get<bool>());
    const auto kernel = io::channel_from_json<Rational>(report.at("kernel"));
    CHECK(pairs_equal(apply_kernel(kernel, mu_pair), nu_pair, Rational(0)));
  }
  SUBCASE("infeasible direction: exit 1 with a positive margin") {
    const int rc = run_cli("garble " + tmp.file("nu.json") + " " +
                               tmp.file("mu.json") + " --out " + tmp.file("f.json"),
                           "");
    CHECK(rc == 1);
    const json report = slurp(tmp.file("f.json"));
    CHECK_FALSE(report.at("feasible").get<bool>());
    CHECK(parse_rational(report.at("margin").get<std::string>()) > 0);
  }
  SUBCASE("malformed JSON: exit 2") {
    std::ofstream bad(tmp.file("bad.json"));
    bad << "{ not json";
    bad.close();
    CHECK(run_cli("garble " + tmp.file("bad.json") + " " + tmp.file("nu.json")) == 2);
  }
}

TEST_CASE("order and witness exit codes") {
  TempDir tmp;
  const auto mu = fx::mu2_independent<Rational>();
  Channel<Rational> blur{mu.y2_labels, mu.y2_labels, {}};
  blur.rows.assign(4, std::vector<Rational>(4, Rational(1, 8)));
  for (std::size_t i = 0; i < 4; ++i) blur.rows[i][i] = Rational(5, 8);
  const auto nu = apply_garbling(mu, 2, blur);
  io::write_json_file(tmp.file("mu.json"), io::structure_to_json(mu));
  io::write_json_file(tmp.file("nu.json"), io::structure_to_json(nu));
  io::write_json_file(tmp.file("mu1.json"),
                      io::structure_to_json(fx::mu1_shared<Rational>()));
  io::write_json_file(tmp.file("mu2.json"),
                      io::structure_to_json(fx::mu2_independent<Rational>()));

  SUBCASE("garbled maximizer: ordered, exit 0, kernels written") {
    const int rc = run_cli("order " + tmp.file("nu.json") + " " + tmp.file("mu.json") +
                               " --out-prefix " + tmp.file("res"),
                           "");
    CHECK(rc == 0);
    CHECK(fs::exists(tmp.file("res.kappa1.json")));
    CHECK(fs::exists(tmp.file("res.kappa2.json")));
    CHECK(fs::exists(tmp.file("res.common.json")));
  }
  SUBCASE("dependence decoupling: not ordered, exit 1") {
    CHECK(run_cli("order " + tmp.file("mu2.json") + " " + tmp.file("mu1.json")) == 1);
  }
  SUBCASE("witness demands a failed order") {
    CHECK(run_cli("witness " + tmp.file("nu.json") + " " + tmp.file("mu.json")) == 2);
  }
  SUBCASE("witness on a decomposed failure writes the game") {
    const auto zeta = uniform_prob<Rational>({"0", "1"});
    const auto q2 = fx::bsc<Rational>(Rational(1, 5));
    const auto nu_fail =
        make_cond_independent(zeta, fx::bsc<Rational>(Rational(3, 10)), q2);
    const auto mu_fail =
        make_cond_independent(zeta, fx::bsc<Rational>(Rational(1, 10)), q2);
    io::write_json_file(tmp.file("nuf.json"), io::structure_to_json(nu_fail));
    io::write_json_file(tmp.file("muf.json"), io::structure_to_json(mu_fail));
    const int rc = run_cli("witness " + tmp.file("nuf.json") + " " +
                               tmp.file("muf.json") + " --out-prefix " +
                               tmp.file("w") + " --out " + tmp.file("wr.json"),
                           "");
    CHECK(rc == 1);  // not ordered: the decision is negative, witness attached
    CHECK(fs::exists(tmp.file("w.witness.json")));
    const json report = slurp(tmp.file("wr.json"));
    CHECK(parse_rational(report.at("margin").get<std::string>()) > 0);
  }
}

TEST_CASE("shipped fixtures solve to their pinned values") {
  TempDir tmp;
  const std::string fixtures = ZSINFO_FIXTURE_DIR;
  SUBCASE("guess-and-copy on the shared 0.9 signal") {
    REQUIRE(run_cli("solve --game " + fixtures + "/disc_game.json --structure " +
                    fixtures + "/mu1.json --rational --out " + tmp.file("r.json")) == 0);
    CHECK(slurp(tmp.file("r.json")).at("value").get<std::string>() == "-9/2");
  }
  SUBCASE("guess-and-copy on the independent signals") {
    REQUIRE(run_cli("solve --game " + fixtures + "/disc_game.json --structure " +
                    fixtures + "/mu2.json --rational --out " + tmp.file("r.json")) == 0);
    CHECK(slurp(tmp.file("r.json")).at("value").get<std::string>() == "-969/200");
  }
  SUBCASE("matching pennies is worth 0 on any structure") {
    REQUIRE(run_cli("solve --game " + fixtures + "/matching_pennies.json --structure " +
                    fixtures + "/pennies_structure.json --out " + tmp.file("r.json")) == 0);
    CHECK(slurp(tmp.file("r.json")).at("value").get<std::string>() == "0");
  }
  SUBCASE("the garbled shared-signal pair round-trips through garble") {
    REQUIRE(run_cli("garble " + fixtures + "/mu1_pair1.json " + fixtures +
                    "/mu1_pair1_tilde.json --out " + tmp.file("k.json")) == 0);
    CHECK(slurp(tmp.file("k.json")).at("verified").get<bool>());
  }
  SUBCASE("structures plus --player select the marginals") {
    REQUIRE(run_cli("garble " + fixtures + "/mu1.json " + fixtures +
                    "/mu2.json --player 2") == 0);  // both maximizer pairs are the 0.9 channel
  }
  SUBCASE("the rounded-kernel structure needs --tol and hits the garbled value") {
    REQUIRE(run_cli("solve --game " + fixtures + "/disc_game.json --structure " +
                    fixtures + "/mu1_tilde.json --float") == 2);  // mass 0.9999
    REQUIRE(run_cli("solve --game " + fixtures + "/disc_game.json --structure " +
                    fixtures + "/mu1_tilde.json --float --tol 1e-3 --out " +
                    tmp.file("r.json")) == 0);
    CHECK(std::abs(slurp(tmp.file("r.json")).at("value").get<double>() -
                   (-4.263)) < 1e-3);
  }
  SUBCASE("order --mode joint works on flagged structures too") {
    REQUIRE(run_cli("order " + fixtures + "/mu2.json " + fixtures +
                    "/mu2.json --mode joint") == 0);
  }
}

TEST_CASE("quantize writes a channel that re-parses") {
  TempDir tmp;
  const int rc = run_cli(
      "quantize --density gauss --means 0.25,0.75 --sigma 0.2 --cells 8 --out " +
      tmp.file("q.json"));
  CHECK(rc == 0);
  const auto q = io::channel_from_json<double>(slurp(tmp.file("q.json")));
  CHECK(q.num_outputs() == 8);
  CHECK_NOTHROW(q.validate());
}

TEST_CASE("suite subcommand") {
  TempDir tmp;
  CHECK(run_cli("suite --trials 8 --seed 42 --jobs 2 --out " + tmp.file("s.json")) == 0);
  const json report = slurp(tmp.file("s.json"));
  CHECK(report.at("kernel_violations").get<int>() == 0);
  CHECK(report.at("refinement_violations").get<int>() == 0);
}

TEST_CASE("closed exit-code contract on bad invocations") {
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("solve --game missing.json --structure missing.json") == 2);
  CHECK(run_cli("--help") == 0);
}
