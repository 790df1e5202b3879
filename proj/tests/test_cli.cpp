#include "hopfclass/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>

using hopfclass::RunConfig;
using hopfclass::run;

namespace {

RunConfig config(std::string command, std::vector<std::string> args, std::string family = "tensor-taft",
                 std::string p = "0", int n = 3) {
  RunConfig c;
  c.command = std::move(command);
  c.args = std::move(args);
  c.family = std::move(family);
  c.p = std::move(p);
  c.n = n;
  return c;
}

}  // namespace

TEST_CASE("fuse prints the decomposition") {
  RunConfig c = config("fuse", {"V(2,0)", "V(2,0)"}, "hpq", "1");
  c.mode = "closed";
  const auto r = run(c);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "V(3,0) + V(1,1)\n");
  c.mode = "both";
  c.format = "json";
  const auto j = nlohmann::json::parse(run(c).output);
  CHECK(j["schema_version"] == hopfclass::kSchemaVersion);
  CHECK(j["status"] == "pass");
  CHECK(j["result"]["computed"][0]["label"] == "V(3,0)");
  CHECK(j["result"]["computed"][1]["label"] == "V(1,1)");
}

TEST_CASE("the presentation target passes for the tensor-product algebra") {
  const auto r = run(config("verify", {"thm3.8"}));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("block count of H_4(1,q)") {
  RunConfig c = config("verify", {"blocks"}, "hpq", "1", 4);
  c.format = "json";
  const auto r = run(c);
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["reports"][0]["data"]["block_count"] == 10);
}

TEST_CASE("usage errors exit with 2 and a report") {
  CHECK(run(config("verify", {"nonsense"})).exit_code == 2);
  CHECK(run(config("verify", {"thm5.9"})).exit_code == 2);
  CHECK(run(config("fuse", {"V(9,0)", "V(1,0)"}, "hpq", "1")).exit_code == 2);
  CHECK(run(config("table", {}, "taft")).exit_code == 2);
  CHECK(run(config("table", {}, "hpq", "2")).exit_code == 2);
  RunConfig c = config("modules", {"list"});
  c.format = "csv";
  CHECK(run(c).exit_code == 2);
  c = config("verify", {"nonsense"});
  c.format = "json";
  const auto r = run(c);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["status"] == "error");
  CHECK(j["error"].get<std::string>().find("unknown target") != std::string::npos);
  c.n = 2;
  CHECK(run(c).exit_code == 2);
}

TEST_CASE("output does not depend on the number of jobs") {
  for (const auto& [family, p] : std::vector<std::pair<std::string, std::string>>{{"tensor-taft", "0"}, {"hpq", "1"}}) {
    RunConfig c = config("table", {}, family, p);
    c.format = "json";
    const auto one = run(c);
    c.jobs = 3;
    const auto three = run(c);
    CHECK(one.exit_code == 0);
    CHECK(one.output == three.output);
    CHECK(run(c).output == three.output);
  }
}

TEST_CASE("every verify target is reachable") {
  CHECK(hopfclass::verify_targets().size() == 24);
  const auto r = run(config("verify", {"cor5.4"}, "hpq", "1"));
  CHECK(r.exit_code == 0);
  RunConfig c = config("verify", {"cor5.4"}, "hpq", "1");
  c.computed = true;
  CHECK(run(c).exit_code == 0);
}

TEST_CASE("csv export of a table") {
  RunConfig c = config("export", {"table"}, "hpq", "1");
  c.format = "csv";
  const auto r = run(c);
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("a,b,label,mult\n", 0) == 0);
}

TEST_CASE("relative output paths follow HOPFCLASS_OUTPUT_DIR") {
  CHECK(hopfclass::resolve_output_path("").empty());
  CHECK(hopfclass::resolve_output_path("-").empty());
  CHECK(hopfclass::resolve_output_path("/tmp/x.json") == "/tmp/x.json");
  setenv("HOPFCLASS_OUTPUT_DIR", "/data/out", 1);
  CHECK(hopfclass::resolve_output_path("x.json") == "/data/out/x.json");
  unsetenv("HOPFCLASS_OUTPUT_DIR");
  CHECK(hopfclass::resolve_output_path("x.json") == "x.json");
}
