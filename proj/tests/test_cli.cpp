#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "edgeideal/cli.hpp"
#include "edgeideal/edge_list.hpp"
#include "edgeideal/generators.hpp"

using namespace edgeideal;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "edgeideal");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / "edgeideal_cli_test") {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return (path_ / name).string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }
  const fs::path& dir() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("cli: verify exit codes") {
  TempDir tmp;
  const auto p5 = tmp.file("p5.edges", format_edge_list(path_graph(5)));
  const auto c4 = tmp.file("c4.edges", format_edge_list(cycle_graph(4)));
  const Run a = run({"verify", p5});
  CHECK(a.code == 0);
  const auto doc = nlohmann::json::parse(a.out);
  for (const auto& v : doc["verdicts"])
    if (v["applicable"].get<bool>()) CHECK(v["pass"].get<bool>());
  CHECK(run({"verify", c4}).code == 0);
  CHECK(run({"verify", p5, "--char", "2", "--char", "0"}).code == 0);
  CHECK(run({"verify", p5}).out == a.out);

  const auto out = tmp.path("report.json");
  CHECK(run({"verify", p5, "--out", out}).code == 0);
  std::ifstream in(out);
  CHECK(std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>()) == a.out);
}

TEST_CASE("cli: parse and usage errors exit 2") {
  TempDir tmp;
  const Run loop = run({"verify", tmp.file("loop.edges", "2\n0 0\n")});
  CHECK(loop.code == 2);
  CHECK(loop.err.find("line 2") != std::string::npos);
  CHECK(run({"invariants", tmp.file("dup.edges", "2\n0 1\n0 1\n")}).code == 2);
  CHECK(run({"invariants", tmp.path("missing.edges")}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"gen", "wheel", "--n", "4", "--seed", "1"}).code == 2);
  CHECK(run({"betti", tmp.file("k2.edges", "2\n0 1\n"), "--char", "4"}).code == 2);
  CHECK(run({"search", "other", "--max-n", "5", "--budget", "1", "--seed", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli: resource cutoffs exit 3") {
  TempDir tmp;
  const auto big = tmp.file("big.edges", format_edge_list(path_graph(20)));
  CHECK(run({"betti", big}).code == 3);
}

TEST_CASE("cli: gen then invariants") {
  TempDir tmp;
  const Run g = run({"gen", "star", "--n", "4", "--seed", "1"});
  CHECK(g.code == 0);
  CHECK(g.out == "4\n0 1\n0 2\n0 3\n");
  const auto star = tmp.file("star.edges", g.out);
  const Run inv = run({"invariants", star});
  CHECK(inv.code == 0);
  const auto doc = nlohmann::json::parse(inv.out)["invariants"];
  CHECK(doc["bight"] == 3);
  CHECK(doc["c"]["value"] == 1);
  CHECK(doc["d"]["value"] == 3);
  CHECK(doc["d_prime"]["value"] == 3);

  const auto out = tmp.path("tree.edges");
  CHECK(run({"gen", "tree", "--n", "6", "--seed", "42", "--out", out}).code == 0);
  CHECK(read_graph(out).size() == 5);
  CHECK(run({"gen", "whisker-of:cycle", "--n", "4", "--seed", "0"}).out.starts_with("8\n"));
}

TEST_CASE("cli: betti and classify") {
  TempDir tmp;
  const auto k2 = tmp.file("k2.edges", "2\n0 1\n");
  CHECK(run({"betti", k2}).out == "0 0 1\n1 2 1\n");
  CHECK(run({"betti", k2, "--char", "3"}).out == "0 0 1\n1 2 1\n");
  const auto c5 = tmp.file("c5.edges", format_edge_list(cycle_graph(5)));
  const auto flags = nlohmann::json::parse(run({"classify", c5}).out)["flags"];
  CHECK(flags["c5_free"] == false);
  CHECK(flags["vertex_decomposable"] == true);
  CHECK(flags["certificate"]["shedding"] == 0);
}

TEST_CASE("cli: search and suite") {
  const Run s = run({"search", "dq", "--max-n", "5", "--budget", "50", "--seed", "3", "--exhaustive-n", "4"});
  CHECK(s.code == 0);
  const auto doc = nlohmann::json::parse(s.out);
  CHECK(doc["counterexample"].is_null());
  CHECK(doc["random"]["examined"] == 50);
  const Run zero = run({"search", "dq", "--max-n", "5", "--budget", "0", "--seed", "3"});
  CHECK(nlohmann::json::parse(zero.out)["exhaustive"]["examined"] == 0);

  TempDir tmp;
  for (int n = 3; n <= 6; ++n) write_graph(cycle_graph(n), tmp.dir() / ("c" + std::to_string(n) + ".edges"));
  const Run suite = run({"suite", "--corpus", tmp.dir().string(), "--json", tmp.path("all.json")});
  CHECK(suite.code == 0);
  CHECK(suite.out.find("graphs 4") == 0);
  CHECK(suite.out.find("failures 0") != std::string::npos);
  std::ifstream in(tmp.path("all.json"));
  const auto all = nlohmann::json::parse(in);
  CHECK(all.size() == 4);
  CHECK(all.contains("c5.edges"));
}
