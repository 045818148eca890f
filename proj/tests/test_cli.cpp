#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run torus(const std::string& args) {
  const std::string cmd = std::string(TORUS_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("documented examples") {
  auto r = torus("lat primitive --basis \"[[2,4]]\"");
  CHECK(r.code == 0);
  auto j = json_of(r);
  CHECK(j["schema"] == "torus-points/1");
  CHECK(j["primitive"] == false);

  r = torus("deps primitive-dependent --point \"(-1, 2)\"");
  CHECK(r.code == 0);
  j = json_of(r);
  CHECK(j["dependent"] == true);
  CHECK(j["primitive"] == false);

  r = torus("sieve --variety \"x+y-1\" --codim 1 --bound 1");
  CHECK(r.code == 0);
  j = json_of(r);
  std::set<std::vector<std::string>> pts;
  for (const auto& p : j["points"]) pts.insert(p["point"].get<std::vector<std::string>>());
  CHECK(pts.count({"zeta(6,1)", "zeta(6,5)"}));
  CHECK(pts.count({"zeta(6,5)", "zeta(6,1)"}));
}

TEST_CASE("exit codes") {
  CHECK(torus("lat hnf --basis \"[[1,2],[3\"").code == 2);
  CHECK(torus("sieve --variety \"x+y-\" --bound 1").code == 2);
  CHECK(torus("nosuch").code == 2);
  CHECK(torus("lat nosuch --basis \"[[1]]\"").code == 2);
  CHECK(torus("deps dependent --point \"(0, 1)\"").code == 3);
  CHECK(torus("dyn intersect --map \"x^2\" --curve \"x+y-1\"").code == 3);
  CHECK(torus("dyn height --map \"2*x+1\" --at 2").code == 3);
  auto j = json_of(torus("lat hnf --basis \"[[1,2],[3\""));
  CHECK(j["error"]["kind"] == "parse");
}

TEST_CASE("each command family answers") {
  auto j = json_of(torus("lat hnf --basis \"[[2,4],[1,3]]\""));
  CHECK(j["hnf"] == nlohmann::json::parse(R"([["1","1"],["0","2"]])"));
  j = json_of(torus("lat snf --basis \"[[2,4],[6,8]]\""));
  CHECK(j["invariant_factors"] == nlohmann::json::parse(R"(["2","4"])"));
  j = json_of(torus("lat orthogonal --basis \"[[1,2,3]]\""));
  CHECK(j["orthogonal"]["rank"] == 2);
  j = json_of(torus("lat gram --basis \"[[1,1]]\""));
  CHECK(j["gram_det"] == "2");
  j = json_of(torus("grp components --basis \"[[2,0]]\""));
  CHECK(j["components"] == "2");
  j = json_of(torus("grp member --basis \"[[1,1]]\" --point \"(2, 1/2)\""));
  CHECK(j["member"] == true);
  j = json_of(torus("grp enum --ambient 2 --codim 1 --bound 1"));
  CHECK(j["count"] == 5);
  auto lines = torus("grp enum --ambient 2 --codim 1 --bound 1 --jsonl");
  CHECK(std::count(lines.out.begin(), lines.out.end(), '\n') == 5);
  j = json_of(torus("deps decompose --point \"(2, 4, 8)\""));
  CHECK(j["rank"] == 1);
  CHECK(j["reconstructs"] == true);
  j = json_of(torus("deps decompose-gamma --point \"(12, 3)\" --gamma \"2;\""));
  CHECK(j["reconstructs"] == true);
  j = json_of(torus("witness --point \"(2, 4, 8)\" --codim 2 --bound 2"));
  CHECK(j["status"] == "found");
  j = json_of(torus("witness gate --variety \"x-y\" --basis \"[[1,-1]]\" --codim 1"));
  CHECK(j["verdict"] == "anomalous-witness");
  j = json_of(torus("sieve coset --curve \"(2t, 3t)\""));
  CHECK(j["coset"]["constant"] == "2/3");
  j = json_of(torus("sieve characters --curve \"(t, 1-t)\""));
  CHECK(j["characters"].size() >= 2);
  j = json_of(torus("sieve gamma --variety \"x+y-1\" --bound 1 --gamma \"2;\" --gamma-bound 1"));
  bool found = false;
  for (const auto& p : j["points"]) found |= p["point"] == nlohmann::json::parse(R"(["2/3","1/3"])");
  CHECK(found);
  j = json_of(torus("dyn periodic --map \"x^2-1\" --at 1"));
  CHECK(j["preperiod"] == 1);
  CHECK(j["period"] == 2);
  j = json_of(torus("dyn classify --map \"2*x^2-1\""));
  CHECK(j["class"] == "chebyshev-conjugate");
  j = json_of(torus("dyn commute --map \"x^2-2\" --deg-bound 3 --iterate-bound 1"));
  CHECK(std::find(j["commuting"].begin(), j["commuting"].end(), "x^3-3*x") !=
        j["commuting"].end());
  j = json_of(torus("dyn height --map \"x^2-1\" --at 0 --target-err 1e-9"));
  CHECK(j["value"].get<double>() <= j["error_bound"].get<double>());
  j = json_of(torus("dyn intersect --map \"x^2-1\" --curve \"x+y-1\""));
  CHECK(j["periodic"] == nlohmann::json::parse(R"(["-1","0"])"));
}

TEST_CASE("output is byte identical across runs and worker counts") {
  const std::string args = "sieve --variety \"x+y-1\" --codim 1 --bound 3 --height-bound 1";
  const auto a = torus(args);
  CHECK(a.code == 0);
  CHECK(torus(args).out == a.out);
  CHECK(torus(args + " --workers 4").out == a.out);
  const std::string dec = "deps decompose --point \"(6, 10, 15)\" --seed 7";
  CHECK(torus(dec).out == torus(dec).out);
}

TEST_CASE("config file and overrides") {
  const std::string path = "torus_cli_test.cfg";
  {
    std::ofstream f(path);
    f << "# test config\nsearch_bound = 2\nheight_bound = 0.5\nworkers = 2\n";
  }
  auto j = json_of(torus("--config " + path + " sieve --variety \"x+y-1\""));
  CHECK(j["bound"] == 2);
  CHECK(j["count"] == 5);
  CHECK(j["height_bound_ok"] == false);
  j = json_of(torus("--config " + path + " sieve --variety \"x+y-1\" --bound 1 --height-bound 1"));
  CHECK(j["bound"] == 1);
  CHECK(j["height_bound_ok"] == true);
  {
    std::ofstream f(path);
    f << "search_bound = -1\n";
  }
  CHECK(torus("--config " + path + " sieve --variety \"x+y-1\"").code == 2);
  {
    std::ofstream f(path);
    f << "frobnicate = 1\n";
  }
  CHECK(torus("--config " + path + " sieve --variety \"x+y-1\"").code == 2);
  std::remove(path.c_str());
}
