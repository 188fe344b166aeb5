#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"

#include "cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = chase::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("chase_cli_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return (path_ / name).string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

const char* kNoDeath = R"({"name": "no-death", "lambda": {"head": [], "tail": 1}, "rho": {"head": [], "tail": 0}})";
const char* kUnit = R"({"name": "unit", "lambda": {"head": [], "tail": 1}, "rho": {"head": [], "tail": 1}})";
const char* kSub = R"({"name": "sub", "lambda": {"head": [], "tail": 0.05}, "rho": {"head": [], "tail": 0}})";
const char* kMixed = R"({"lambda": {"head": [2, 1], "tail": 0.5}, "rho": {"head": [0.3], "tail": 1}})";

}  // namespace

TEST_CASE("help and version") {
  CHECK(call({"--help"}).code == 0);
  const auto v = call({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find("0.3.0") != std::string::npos);
  CHECK(call({}).code == chase::cli::kInputError);
  CHECK(call({"bogus"}).code == chase::cli::kInputError);
}

TEST_CASE("input errors") {
  TempDir dir;
  const auto bad = dir.write("bad.json", R"({"lambda": {"head": [1], "tail": 1}, "rho": {"head": [-1], "tail": 0}})");
  const auto r = call({"weights", "--profile", bad});
  CHECK(r.code == chase::cli::kInputError);
  CHECK(r.err.find("rho.head[0]") != std::string::npos);
  CHECK(call({"weights", "--profile", dir.file("missing.json")}).code == chase::cli::kInputError);
  CHECK(call({"weights", "--profile", dir.write("empty.json", "")}).code == chase::cli::kInputError);
  const auto ok = dir.write("ok.json", kMixed);
  CHECK(call({"weights"}).code == chase::cli::kInputError);
  CHECK(call({"catalan", "--profile", ok, "--mode", "fancy"}).code == chase::cli::kInputError);
  CHECK(call({"weights", "--profile", ok, "--format", "xml"}).code == chase::cli::kInputError);
  CHECK(call({"phase", "--profile", ok, "--d", "1"}).code == chase::cli::kInputError);
  CHECK(call({"evaluate", "--profile", ok, "--z", "-1"}).code == chase::cli::kInputError);
}

TEST_CASE("weights and catalan tables") {
  TempDir dir;
  const auto p = dir.write("p.json", kNoDeath);
  const auto w = call({"weights", "--profile", p, "--j-max", "3"});
  REQUIRE(w.code == 0);
  CHECK(w.out.find("# chase 0.3.0") == 0);
  CHECK(w.out.find("j,u,v,a,D_j\n") != std::string::npos);
  CHECK(w.out.find("\n0,0.5,0.5,0.25,0\n") != std::string::npos);

  const auto c = call({"catalan", "--profile", p, "--k-max", "3", "--mode", "exact"});
  REQUIRE(c.code == 0);
  CHECK(c.out.find("\n3,0.078125,") != std::string::npos);

  const auto j = call({"catalan", "--profile", p, "--k-max", "10", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["tool"] == "chase");
  CHECK(doc["config"]["command"] == "catalan");

  // file output equals stdout
  const auto file = dir.file("c.csv");
  REQUIRE(call({"catalan", "--profile", p, "--k-max", "3", "--mode", "exact", "-o", file}).code == 0);
  CHECK(slurp(file) == c.out);
}

TEST_CASE("phase exit codes") {
  TempDir dir;
  const auto sup = call({"phase", "--profile", dir.write("a.json", kNoDeath), "--d", "2"});
  CHECK(sup.code == chase::cli::kOk);
  CHECK(nlohmann::json::parse(sup.out)["phase"]["verdict"] == "ExpectedCoexistence");
  const auto sub = call({"phase", "--profile", dir.write("b.json", kSub), "--d", "2"});
  CHECK(sub.code == chase::cli::kNoCoexistence);
  CHECK(nlohmann::json::parse(sub.out)["phase"]["verdict"] == "NoExpectedCoexistence");
  const auto crit = dir.write("c.json", R"({"lambda": {"head": [], "tail": 0.1715728752538099}, "rho": {"head": [], "tail": 0}})");
  CHECK(call({"phase", "--profile", crit, "--d", "2", "--tol", "1e-6"}).code == chase::cli::kInconclusive);
}

TEST_CASE("evaluate") {
  TempDir dir;
  const auto p = dir.write("p.json", kNoDeath);
  const auto r = call({"evaluate", "--profile", p, "--z", "0.5"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.dump().find("1.17157287") != std::string::npos);
  CHECK(call({"evaluate", "--profile", p, "--z", "2"}).code == 0);
}

TEST_CASE("critical") {
  TempDir dir;
  const auto p = dir.write("p.json", kNoDeath);
  const auto r = call({"critical", "--profile", p, "--d", "2", "--tol", "1e-9"});
  REQUIRE(r.code == 0);
  const double t = nlohmann::json::parse(r.out)["critical"]["t_star"].get<double>();
  CHECK(std::abs(t - (3 - 2 * std::sqrt(2.0))) <= 1e-6);
  const auto bad = call({"critical", "--profile", p, "--d", "2", "--t-lo", "0.5", "--t-hi", "1"});
  CHECK(bad.code == chase::cli::kPrecondition);
  CHECK(nlohmann::json::parse(bad.out).dump().find("probes") != std::string::npos);
}

TEST_CASE("simulations are reproducible byte for byte") {
  TempDir dir;
  const auto p = dir.write("p.json", kMixed);
  const std::vector<std::string> line{"simulate", "line", "--profile", p, "--k-max", "5", "--runs", "5000", "--seed", "7"};
  const auto a = call(line);
  auto with_threads = line;
  with_threads.insert(with_threads.end(), {"--threads", "3"});
  const auto b = call(with_threads);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("k,C_k,P_reach,frequency,stderr,N\n") != std::string::npos);

  const std::vector<std::string> tree{"simulate", "tree", "--profile", p, "--d", "2", "--depth-cap", "6",
                                      "--runs", "200", "--seed", "3"};
  const auto t1 = call(tree);
  auto tree2 = tree;
  tree2.insert(tree2.end(), {"--threads", "2", "--summary", dir.file("s.json"), "--manifest", dir.file("m.json")});
  const auto t2 = call(tree2);
  REQUIRE(t1.code == 0);
  CHECK(t1.out == t2.out);
  CHECK(t1.out.find("run,seed,blue_count,reached_cap,max_blue_depth,events,exhausted\n") != std::string::npos);
  const auto summary = nlohmann::json::parse(slurp(dir.file("s.json")));
  CHECK(summary.contains("estimate"));
  CHECK(fs::exists(dir.file("m.json")));
}

TEST_CASE("verify") {
  TempDir dir;
  const auto unit = call({"verify", "--profile", dir.write("u.json", kUnit), "--runs", "40000", "--k-max", "20"});
  CHECK(unit.code == 0);
  CHECK(unit.out.find(",fail,") == std::string::npos);
  const auto flagged = call({"verify", "--profile", dir.write("n.json", kNoDeath), "--runs", "40000", "--format", "json"});
  CHECK(flagged.code == 0);
  const auto doc = nlohmann::json::parse(flagged.out);
  CHECK(doc["passed"] == true);
  bool saw_flag = false;
  for (const auto& c : doc["checks"]) saw_flag |= c["status"] == "flagged";
  CHECK(saw_flag);
}
