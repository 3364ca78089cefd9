#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli_app.hpp"
#include "tamper.hpp"
#include "tuniform/disc_io.hpp"

namespace {

struct Run {
  int status = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tuniform");
  std::ostringstream out, err;
  Run r;
  r.status = tuniform::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "tuniform_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("table") {
  const auto r = run({"table", "--t", "9"});
  CHECK(r.status == 0);
  CHECK(r.out.find("| 0 | 1 | 5 | 24 | 115 | 551 | 2640 |") != std::string::npos);
  const auto t6 = run({"table", "--t", "6", "--n-max", "8"});
  CHECK(t6.out.find("| 6 A_n / \\|S_n\\|^2 |  | - | 1 | 1 | 1 | 1 | 1 | 1 | 1 | 1 |") != std::string::npos);
  const auto t5 = run({"table", "--t", "5", "--n-max", "8"});
  CHECK(t5.out.find("| - | 1 | 3 | ∞ | -3 | -1 | - | 1 | 3 |") != std::string::npos);
  const auto csv = run({"table", "--t", "8", "--format", "csv", "--precision", "3"});
  CHECK(csv.out.find("8,2,false,32,40,40,48,3/2,1.500\n") != std::string::npos);
  const auto json = run({"table", "--t", "10", "--format", "json"});
  CHECK(nlohmann::json::parse(json.out)["rows"].size() == 6);
}

TEST_CASE("table errors") {
  CHECK(run({"table", "--t", "3"}).status == 2);
  CHECK(run({"table", "--t", "11"}).err.find("--n-max") != std::string::npos);
  const auto limited = run({"--max-vertices", "50", "table", "--t", "10"});
  CHECK(limited.status == 2);
  CHECK(limited.err.find("LimitExceeded") != std::string::npos);
  CHECK(run({"table", "--t", "7", "--format", "xml"}).status == 2);
  CHECK(run({}).status == 2);
}

TEST_CASE("file output") {
  const auto path = scratch("t7.md");
  CHECK(run({"table", "--t", "7", "--out", path.string()}).status == 0);
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  CHECK(s.str() == run({"table", "--t", "7"}).out);
  CHECK(run({"table", "--t", "7", "--out", "/nonexistent/dir/x.md"}).err.find("IOError") != std::string::npos);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--t", "6,7", "--jobs", "2"});
  CHECK(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["all_hold"] == true);
  const auto t4 = run({"verify", "--t", "4", "--n-max", "8"});
  CHECK(t4.status == 0);
}

TEST_CASE("verify rejects a tampered disc file") {
  const auto good = tuniform::build_disc(7, 3);
  const auto bad = tamper::edit(good, [](tamper::Parts& p) { p.edges.erase(p.edges.begin() + 3); });
  const auto good_path = scratch("good.json");
  const auto bad_path = scratch("bad.json");
  std::ofstream(good_path) << tuniform::disc_to_json(good).dump();
  std::ofstream(bad_path) << tuniform::disc_to_json(bad).dump();
  CHECK(run({"verify", "--disc", good_path.string()}).status == 0);
  const auto r = run({"verify", "--disc", bad_path.string()});
  CHECK(r.status == 1);
  CHECK(r.err.find("FAIL") != std::string::npos);
  CHECK(run({"verify", "--disc", scratch("missing.json").string()}).status == 2);
}

TEST_CASE("oeis-check") {
  const auto r = run({"oeis-check", "--t", "8"});
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["entries"].size() == 4);
  CHECK(run({"oeis-check", "--t", "11"}).status == 2);
}

TEST_CASE("render and export") {
  const auto a = run({"render", "--t", "6", "--radius", "4"});
  const auto b = run({"render", "--t", "6", "--radius", "4"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto bad = run({"render", "--t", "4", "--radius", "2"});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("DegenerateRadius") != std::string::npos);
  const auto ex = run({"disc-export", "--t", "7", "--radius", "2"});
  CHECK(ex.status == 0);
  CHECK(nlohmann::json::parse(ex.out)["layers"][2].size() == 21);
}
