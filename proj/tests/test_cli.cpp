#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(BRAIDROT_CLI_PATH) + " " + args +
                          " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli evaluates the degree zero example") {
  const auto r =
      run_cli("invariant --braid \"1 -2 -3\" --n 4 --family \"deg0:(1,2)-\"");
  CHECK(r.code == 0);
  CHECK(r.out == "-1\n");
}

TEST_CASE("cli evaluates degree one on three strands") {
  const auto r = run_cli(
      "invariant --braid \"1 -2 1 2 1 1 2 1\" --n 3 --family \"degd-l:1\"");
  CHECK(r.code == 0);
  CHECK(r.out == "x - x^-1\n");
}

TEST_CASE("cli prints zero for the empty table") {
  const auto r =
      run_cli("invariant --braid \"1\" --n 2 --family \"deg0:(1,1)+\"");
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
}

TEST_CASE("cli exit codes separate the failure modes") {
  CHECK(run_cli("invariant --braid \"1 -9\" --n 3 --family \"degd-l:1\"")
            .code == 2);
  CHECK(run_cli("invariant --braid \"oops\" --n 3 --family \"degd-l:1\"")
            .code == 2);
  CHECK(run_cli("invariant --braid \"1 -2 2 -1\" --n 3 --family \"degd-l:1\"")
            .code == 3);
  CHECK(run_cli("invariant --braid \"1 1 1\" --n 2 --family \"degd-l:1\"")
            .code == 4);
  CHECK(run_cli("invariant --braid \"1 1 1\" --n 2 --family \"nonsense\"")
            .code == 4);
  CHECK(run_cli("invariant --braid \"1 1 1\"").code == 2);
}

TEST_CASE("cli output is byte deterministic") {
  const std::string cmd =
      "trace --braid \"-1 2 -1 -1 -1 2 2 2\" --n 3 --l 2 --format json";
  const auto first = run_cli(cmd);
  const auto second = run_cli(cmd);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(!first.out.empty());
}

TEST_CASE("cli distinguishes the eight crossing braid from its reverse") {
  const auto r =
      run_cli("distinguish --braid \"-1 2 -1 -1 -1 2 2 2\" --n 3 --l 3");
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 13) == "DISTINGUISHED");

  const auto self = run_cli(
      "distinguish --braid \"-1 2 -1 -1 -1 2 2 2\" --n 3 --l 3 "
      "--against \"-1 2 -1 -1 -1 2 2 2\"");
  CHECK(self.code == 0);
  CHECK(self.out == "CONJUGACY-COMPATIBLE\n");
}

TEST_CASE("cli trace emits parseable json and a dot file") {
  const std::string dot = "/tmp/braidrot_cli_test.dot";
  std::remove(dot.c_str());
  const auto r = run_cli("trace --braid \"2 -1\" --n 3 --format json --dot " +
                         dot);
  CHECK(r.code == 0);

  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("schema") == 1);
  CHECK(doc.at("circles").size() == 2);
  CHECK(doc.at("triple_nodes") == 4);
  CHECK(doc.at("circle_monodromy").size() == 2);

  FILE* f = std::fopen(dot.c_str(), "r");
  REQUIRE(f != nullptr);
  char head[16] = {};
  const size_t got = fread(head, 1, 15, f);
  std::fclose(f);
  CHECK(std::string(head, got).substr(0, 13) == "digraph trace");
}

TEST_CASE("cli characters reports the mirror family") {
  const auto base = run_cli(
      "characters --braid \"2 -1\" --n 3 --family \"deg0:(1,1)-\" "
      "--format json");
  const auto mirrored = run_cli(
      "characters --braid \"2 -1\" --n 3 --family \"deg0:(2,2)+:mirror\" "
      "--format json");
  CHECK(base.code == 0);
  CHECK(mirrored.code == 0);
  const auto db = nlohmann::json::parse(base.out);
  const auto dm = nlohmann::json::parse(mirrored.out);
  CHECK(dm.at("table").at("tag") == "deg0:(2,2)+:mirror");
  CHECK(db.at("table").at("entries").size() == 0);
  CHECK(dm.at("table").at("entries").size() == 0);
}

TEST_CASE("cli cable doubles the strand count") {
  const auto r = run_cli("cable --braid \"1 1 1\" --n 2 --format json");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("output").at("n") == 4);
  CHECK(doc.at("input").at("word") == "1 1 1");
}
