#include "doctest.h"

#include "fixtures.hpp"

#include "app/commands.hpp"
#include "app/scenario.hpp"
#include "app/table_config.hpp"

#include "cydesing/error.hpp"

#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>

using namespace cydesing;
using namespace cydesing::app;

namespace {

const std::vector<std::string> kBundled{"t6_z4", "t6_z2z2", "c3_z4", "c3_z2z2", "r8_q8", "trivial", "nodes_pair"};

Report run(const std::string& command, const std::string& scenario = "") {
  RunOptions o;
  if (!scenario.empty()) o.scenario = fixtures::scenario_path(scenario);
  return run_command(command, o);
}

int exit_code(const std::string& args) {
  std::string cmd = std::string(CYDESING_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("bundled scenarios round-trip through the serializer") {
  for (const auto& name : kBundled) {
    CAPTURE(name);
    auto s = load_scenario(fixtures::scenario_path(name));
    auto text = serialize_scenario(s);
    auto again = parse_scenario(text);
    CHECK(again == s);
    CHECK(serialize_scenario(again) == text);
  }
}

TEST_CASE("scenario parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_scenario("name = x\nambient = sphere\ncomplex_dim = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("ambient = linear\ncomplex_dim = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("name = x\nambient = linear\ncomplex_dim = 2\n[generator g]\nrow = 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("name = x\nambient = linear\ncomplex_dim = 1\n[generator g]\nrow = 2\n"), ParseError);
  try {
    parse_scenario("name = x\nambient = linear\ncomplex_dim = 1\n[generator g]\nrow = 1+\n", "f.scn");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("f.scn:5") != std::string::npos);
  }
}

TEST_CASE("scenario with a raw real generator and an explicit lattice") {
  auto s = parse_scenario(
      "name = raw\nambient = torus\ncomplex_dim = 1\n[lattice]\ncolumn = 1 0\ncolumn = 1 2\n"
      "[generator minus]\nreal_row = -1 0\nreal_row = 0 -1\n");
  CHECK(s.group().order() == 2);
  CHECK(s.torus_lattice().basis()(0, 1) == Rational(1));
  CHECK(parse_scenario(serialize_scenario(s)) == s);
}

TEST_CASE("table config parsing") {
  auto cfg = load_table_config(fixtures::data_dir() + "/tables/t6_z4.cfg");
  CHECK(cfg.table.entries.size() == 3);
  CHECK(cfg.plans.size() == 5);
  CHECK_THROWS_AS(parse_table_config("name = t\n[entry]\nkind = a\n"), ParseError);
  CHECK_THROWS_AS(parse_table_config("name = t\n[plan p]\ncomponent = x T^2 : a\n"), ParseError);
}

TEST_CASE("group command") {
  CHECK(run("group", "trivial")["order"] == 1);
  auto q = run("group", "r8_q8");
  CHECK(q["order"] == 8);
  CHECK(q["abelian"] == false);
  CHECK(q["generators"][1]["spin7"] == true);
  CHECK(q["generators"][1]["kind"] == "anti_linear");
}

TEST_CASE("euler command") {
  CHECK(run("euler", "t6_z4")["euler"] == 48);
  CHECK(run("euler", "t6_z2z2")["euler"] == 96);
  auto q = run("euler", "r8_q8");
  CHECK(q["euler"] == 5);
  CHECK(q["conjugacy_classes"]["nonidentity"] == 4);
}

TEST_CASE("chi-census command") {
  auto r = run("chi-census");
  CHECK(r["family1_count"] == 2048);
  CHECK(r["axis_family_count"] == 65536);
  CHECK(r["union_count"] == 198651);
}

TEST_CASE("ledger command") {
  auto r = run("ledger", "t6_z2z2");
  CHECK(r["plans"][0]["h11"] == 51);
  CHECK(r["plans"][1]["h21"] == 115);
  auto z = run("ledger", "t6_z4");
  for (int k = 0; k <= 4; ++k) CHECK(z["plans"][k]["euler"] == 12 * k);
}

TEST_CASE("invariant-pair command chooses the model side") {
  auto r = run("invariant-pair", "c3_z4");
  CHECK(r["cases"][0]["second_stage"]["outcome"] == "codimension_two_fixed_locus");
  CHECK(r["cases"][1]["second_stage"]["outcome"] == "free");
}

TEST_CASE("commands report precondition failures") {
  CHECK_THROWS_AS(run("lifts", "r8_q8"), PreconditionError);
  CHECK_THROWS_AS(run("fixed-sets", "c3_z4"), PreconditionError);
  CHECK_THROWS_AS(run("group"), PreconditionError);
  CHECK_THROWS_AS(run("no-such-command"), ParseError);
}

TEST_CASE("reports are deterministic") {
  for (const auto& name : kBundled)
    for (const char* cmd : {"group", "euler"}) {
      CAPTURE(name);
      CHECK(render_text(run(cmd, name)) == render_text(run(cmd, name)));
    }
  CHECK(run("invariant-pair", "c3_z2z2").dump() == run("invariant-pair", "c3_z2z2").dump());
}

TEST_CASE("text rendering mirrors the json keys") {
  auto r = run("euler", "t6_z4");
  auto text = render_text(r);
  for (const auto& [k, _] : r.items()) CHECK(text.find(k + ":") != std::string::npos);
}

TEST_CASE("executable exit codes") {
  const std::string s = fixtures::scenario_path("t6_z4");
  CHECK(exit_code("euler --scenario " + s) == 0);
  CHECK(exit_code("bogus") == 2);
  CHECK(exit_code("euler --scenario /nonexistent.scn") == 2);
  CHECK(exit_code("lifts --scenario " + fixtures::scenario_path("r8_q8")) == 3);
  CHECK(exit_code("group --cap 2 --scenario " + fixtures::scenario_path("r8_q8")) == 4);
  auto out = std::filesystem::temp_directory_path() / "cydesing_cli_test.json";
  CHECK(exit_code("euler --format json --out " + out.string() + " --scenario " + s) == 0);
  CHECK(std::filesystem::file_size(out) > 0);
  std::filesystem::remove(out);
}
