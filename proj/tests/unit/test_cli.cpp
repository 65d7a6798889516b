#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  std::string cmd = std::string(GWB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("segal table") {
  auto r = run("segal --p 3 --format json");
  REQUIRE(r.status == 0);
  auto j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["rows"][0]["generator"] == 3);
  CHECK(j["rows"][1]["generator"] == 1);
  CHECK(j["rows"][2]["raw_generator"] == 0);
  CHECK(run("segal --p 3").out.find("pass") != std::string::npos);
}

TEST_CASE("rings") {
  auto one = run("ring --d 1 --r 1 --format json");
  REQUIRE(one.status == 0);
  auto j = json::parse(one.out);
  CHECK(j["basis"] == json::parse("[[1]]"));
  CHECK(j["structure_constants"] == json::parse(R"([{"u":[1],"v":[1],"w":[1],"c":1}])"));

  auto four = json::parse(run("ring --d 4 --r 1 --format json").out);
  std::map<int, int> c22;
  for (auto& c : four["structure_constants"])
    if (c["u"] == json::array({2}) && c["v"] == json::array({2})) c22[c["w"][0].get<int>()] = c["c"].get<int>();
  CHECK(c22 == std::map<int, int>{{2, 2}, {3, 4}, {4, 1}});

  auto csv = run("marks --d 3 --r 1 --format csv");
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("u,", 0) == 0);
}

TEST_CASE("json output is byte-identical across runs") {
  for (const char* args : {"ring --d 5 --r 2 --format json", "mackey-representable --d 3 --r 1 --v 1 --format json",
                           "cube-check --truncated 4,2 --seed 9 --format json", "verify-all --d 3 --diagrams 5 --format json",
                           "pigeonhole --d 5 --r 2 --format json", "objects --d 4 --r 2 --format json"}) {
    auto a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.out.size() > 0);
  }
}

TEST_CASE("exit codes") {
  CHECK(run("ring --d 8").status == 2);
  CHECK(run("ring --d 8 --unsafe-large --format json").status == 0);
  CHECK(run("mackey-representable --d 5 --r 1 --v 1").status == 2);
  CHECK(run("--bogus").status == 2);
  CHECK(run("ideal --d 4 --k 1 --p 4").status == 2);
  CHECK(run("ideal --d 4 --k 1 --p 4 --allow-composite").status == 0);
  CHECK(run("objects --d 2 --r 3").status == 2);
  CHECK(run("cube-check --truncated 3,2 --seed 5").status == 1);
  CHECK(run("cube-check --truncated 3,2 --seed 5 --extended").status == 0);
  CHECK(run("mackey-representable --d 4 --r 1 --v 1 --restrict 2 --index-only --check").status == 1);
  CHECK(run("mackey-representable --d 4 --r 1 --v 1 --restrict 2 --check").status == 0);
  CHECK(run("mackey-check --input /nonexistent/file.json").status == 2);
}

TEST_CASE("mackey data through a file") {
  auto m = run("mackey-representable --d 2 --r 1 --v 1 --format json");
  REQUIRE(m.status == 0);
  const std::string path = "cli_mackey.json";
  auto j = json::parse(m.out);
  {
    std::ofstream(path) << j.dump();
  }
  CHECK(run("mackey-check --input " + path).status == 0);
  for (auto& e : j["maps"])
    if (e["source"] == json::array({2}) && e["target"] == json::array({1})) e["transfer"] = json::parse("[[1],[0]]");
  {
    std::ofstream(path) << j.dump();
  }
  auto bad = run("mackey-check --input " + path + " --format json");
  CHECK(bad.status == 1);
  CHECK(json::parse(bad.out)["check"]["pass"] == false);
  std::remove(path.c_str());
}

TEST_CASE("cube diagrams through stdin") {
  auto d = run("cube-check --filtered 2,1 --n 2 --seed 4 --extended --emit-diagram --format json");
  REQUIRE(d.status == 0);
  auto j = json::parse(d.out);
  REQUIRE(j.contains("diagram"));
  const std::string path = "cli_diagram.json";
  {
    std::ofstream(path) << j["diagram"].dump();
  }
  CHECK(run("cube-check --input - < " + path).status == 0);
  std::remove(path.c_str());
  auto fail = run("cube-check --truncated 3,2 --seed 5 --format json");
  CHECK(json::parse(fail.out)["failing_cube"] == json::parse("[2,2]"));
}

TEST_CASE("other subcommands") {
  CHECK(run("surj-table --n 5 --format json").status == 0);
  CHECK(json::parse(run("hom --u 2,2 --v 2,1 --format json").out)["count"] == 2);
  CHECK(run("pullback --a 2 --b 2 --e 1 --f 1,1 --g 1,1 --d 4").status == 0);
  auto sc = json::parse(run("span-compose --second 1:2:1:1,1:1,1 --first 1:2:1:1,1:1,1 --d 4 --format json").out);
  CHECK(sc["terms"].size() == 3);
  CHECK(run("pigeonhole --d 3 --r 1 --crosseffect 3 --map 1,1 --format json").out.find("2") != std::string::npos);
  CHECK(json::parse(run("pigeonhole --d 3 --r 2 --degenerate 2,2 --excisiveness 2,1 --format json").out)["direction"] == 2);
  CHECK(run("verify-all --d 4").status == 0);
  CHECK(run("--dictionary").status == 0);
  CHECK(run("ring --d 3 --r 2").out.find("(2,1)") != std::string::npos);
}
