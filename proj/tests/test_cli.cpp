#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace rootfold;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rootfold");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("build reports the documented system") {
  Run r = run({"build", "D5"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["label"] == "D5");
  CHECK(j["positive"].size() == 20);
  CHECK(j["marks"] == json::array({1, 1, 2, 2, 1, 1}));
  Run tsv = run({"build", "G2", "--format", "tsv"});
  CHECK(tsv.code == 0);
  CHECK_FALSE(tsv.out.empty());
}

TEST_CASE("fold reports orbits, multiplicities and the folded type") {
  Run r = run({"fold", "E7", "7"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["folded_label"] == "F4");
  CHECK(j["m"] == json::array({1, 2, 3, 2, 1}));
  CHECK(j["orbits"] == json::parse("[[0,7],[1,6],[3,5],[4],[2]]"));
  CHECK(j["folded_positive_count"] == 24);
  CHECK(json::parse(run({"fold", "A6", "2"}).out)["folded_label"] == "Empty");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"build", "A0"}).code == 2);
  Run bad_j = run({"fold", "B4", "2"});
  CHECK(bad_j.code == 2);
  CHECK(bad_j.err.find("J = {0,1}") != std::string::npos);
  CHECK(run({"build", "D5", "--format", "dot"}).code == 2);
  CHECK(run({"tables", "Table_Q"}).code == 2);
  CHECK(run({"verify", "--inject-fault", "flip-sign"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"build", "BC3"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify exits 0 when clean and 1 under an injected fault") {
  Run clean = run({"verify", "--max-rank", "4", "--filter", "B,G"});
  CHECK(clean.code == 0);
  CHECK(clean.err.find("0 failures") != std::string::npos);
  Run fault = run({"verify", "--max-rank", "4", "--filter", "B", "--inject-fault", "drop-root"});
  CHECK(fault.code == 1);
  json j = json::parse(fault.out);
  bool witnessed = false;
  for (const auto& c : j["results"]) witnessed = witnessed || (c["status"] == "fail" && c.contains("witness"));
  CHECK(j["summary"]["failures"].get<int>() > 0);
  CHECK(witnessed);
}

TEST_CASE("tables writes to --out and summarizes on stderr") {
  auto path = std::filesystem::temp_directory_path() / "rootfold_tables_test.json";
  Run r = run({"tables", "Omega_f", "sigma_j", "--max-rank", "6", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(r.err.find("Omega_f: ") != std::string::npos);
  std::ifstream in(path);
  json j = json::parse(in);
  CHECK(j["pass"] == true);
  CHECK(j["tables"].size() == 2);
  std::filesystem::remove(path);
  CHECK(run({"tables", "Table_E", "--filter", "D5"}).code == 1);
}

TEST_CASE("diagram formats") {
  CHECK(run({"diagram", "G2"}).out == " o ##<## o\n 1       2\n");
  Run dot = run({"diagram", "G2", "--format", "dot"});
  CHECK(dot.out.find("graph diagram {") == 0);
  Run folded = run({"diagram", "E7", "--fold", "7"});
  CHECK(folded.code == 0);
  CHECK(folded.out.find("==<==") != std::string::npos);
  CHECK(run({"diagram", "G2", "--format", "json"}).code == 2);
}
