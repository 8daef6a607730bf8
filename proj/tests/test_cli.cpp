// Drives the built CLI binary end to end: output content, exit codes, and
// determinism across thread counts.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(EHRHART_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool no_floats(const nlohmann::json& j) {
  if (j.is_number_float()) return false;
  if (j.is_object() || j.is_array())
    for (const auto& item : j) {
      if (!no_floats(item)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("family command") {
  const auto magic = run_cli("family stasheff:5 --basis magic");
  CHECK(magic.exit_code == 0);
  CHECK(magic.out.find("coefficients: 1 3 19/4 19/4 3 1") != std::string::npos);

  const auto power = run_cli("family typeC:3 --basis power");
  CHECK(power.exit_code == 0);
  CHECK(power.out.find("2n^3 + 3n^2 + 3n + 1") != std::string::npos);

  const auto trivial = run_cli("family cross:0 --basis power");
  CHECK(trivial.exit_code == 0);
  CHECK(trivial.out.find("coefficients: 1") != std::string::npos);

  const auto hstar = run_cli("family cross:2 --basis hstar");
  CHECK(hstar.out.find("1 6 1") != std::string::npos);
}

TEST_CASE("family parse failures exit with 2") {
  CHECK(run_cli("family nosuch:3").exit_code == 2);
  CHECK(run_cli("family cross:abc").exit_code == 2);
  CHECK(run_cli("family cross:2 --basis nope").exit_code == 2);
}

TEST_CASE("check on the bipartite counterexample") {
  const auto r = run_cli("check k_bipartite:3,7 --format json");
  REQUIRE(r.exit_code == 0);  // a negative verdict is still a successful run
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["magic_positive"] == false);
  CHECK(j["hstar_real_rooted"] == true);
  CHECK(j["magic_palindromic"] == true);
  CHECK(j["dimension"] == 9);
  CHECK(j["count_method"] == "bipartite_closed");
  REQUIRE(j["negative_witnesses"].size() == 2);
  CHECK(j["negative_witnesses"][0]["index"] == 3);
  CHECK(j["negative_witnesses"][0]["value"] == "-142/15");
  CHECK(no_floats(j));
}

TEST_CASE("check on families and the minus-edge counterexample") {
  const auto st = run_cli("check stasheff:4");
  CHECK(st.exit_code == 0);
  CHECK(st.out.find("magic_positive: true") != std::string::npos);

  const auto me = run_cli("check complete_minus_edge:10");
  CHECK(me.exit_code == 0);
  CHECK(me.out.find("a[3]=-19/45") != std::string::npos);
  CHECK(me.out.find("magic_positive: false") != std::string::npos);
  CHECK(me.out.find("hstar_real_rooted: true") != std::string::npos);
}

TEST_CASE("count command") {
  const auto cyc = run_cli("count cycle:4 -n 1");
  CHECK(cyc.exit_code == 0);
  CHECK(cyc.out.find("count: 19") != std::string::npos);

  const auto path = run_cli("count path:2 -n 5");
  CHECK(path.exit_code == 0);
  CHECK(path.out.find("count: 11") != std::string::npos);

  const auto bip = run_cli("count k_bipartite:3,7 -n 1 --format json");
  CHECK(bip.exit_code == 0);
  const auto j = nlohmann::json::parse(bip.out);
  CHECK(j["count"] == "2967");
  CHECK(j["method"] == "bipartite_closed");
}

TEST_CASE("count from a graph file") {
  const std::string path = "cli_graph_tmp.json";
  {
    std::ofstream out(path);
    out << R"({"vertices": 3, "edges": [[0,1],[1,2]]})";
  }
  const auto r = run_cli("count --graph " + path + " -n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("count: 25") != std::string::npos);
  std::remove(path.c_str());

  CHECK(run_cli("count --graph missing.json -n 1").exit_code == 2);
}

TEST_CASE("count exit codes") {
  CHECK(run_cli("count k_bipartite:0,1 -n 1").exit_code == 2);
  CHECK(run_cli("count nosuch:3 -n 1").exit_code == 2);
  CHECK(run_cli("count complete:12 -n 3 --budget 1000").exit_code == 3);
  CHECK(run_cli("count cycle:4").exit_code == 2);  // missing -n
}

TEST_CASE("table command") {
  const auto csv = run_cli("table bipartite --max-m 3 --max-n 9 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.find("2,8,true") != std::string::npos);
  CHECK(csv.out.find("2,9,false") != std::string::npos);
  CHECK(csv.out.find("3,6,true") != std::string::npos);
  CHECK(csv.out.find("3,7,false") != std::string::npos);

  const auto text = run_cli("table bipartite --max-m 3 --max-n 3");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find('+') != std::string::npos);
}

TEST_CASE("scan command") {
  const auto r = run_cli("scan cycle --max-d 12");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("d=12 positive") != std::string::npos);
  CHECK(r.out.find("11/11 magic positive") != std::string::npos);

  const auto st = run_cli("scan stasheff --max-d 10");
  CHECK(st.exit_code == 0);
  CHECK(st.out.find("9/9 magic positive") != std::string::npos);

  CHECK(run_cli("scan nosuch --max-d 5").exit_code == 2);
}

TEST_CASE("scan output is identical across thread counts") {
  const auto one = run_cli("scan cycle --max-d 25 --threads 1");
  const auto four = run_cli("scan cycle --max-d 25 --threads 4");
  CHECK(one.exit_code == 0);
  CHECK(four.exit_code == 0);
  CHECK(one.out == four.out);

  const auto t1 = run_cli("table bipartite --max-m 4 --max-n 4 --threads 1 --format csv");
  const auto t3 = run_cli("table bipartite --max-m 4 --max-n 4 --threads 3 --format csv");
  CHECK(t1.out == t3.out);
}

TEST_CASE("selftest passes") {
  const auto r = run_cli("selftest");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("selftest passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
