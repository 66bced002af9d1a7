#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "rootfold/errors.hpp"
#include "rootfold/tables.hpp"

using namespace rootfold;
namespace fs = std::filesystem;

TEST_CASE("catalogue and filters") {
  auto c = catalogue(4);
  std::vector<std::string> names;
  for (const auto& t : c) names.push_back(t.to_string());
  CHECK(names == std::vector<std::string>{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"});
  CHECK(catalogue(12).size() == 12 + 11 + 10 + 9 + 3 + 2);
  CHECK(matches_filter(TypeLabel::parse("E6"), {}));
  CHECK(matches_filter(TypeLabel::parse("E6"), {"E6"}));
  CHECK_FALSE(matches_filter(TypeLabel::parse("E7"), {"E6"}));
  CHECK(matches_filter(TypeLabel::parse("D9"), {"A", "D"}));
  CHECK_FALSE(matches_filter(TypeLabel::parse("B3"), {"A", "D"}));
}

TEST_CASE("every fixture row agrees except the odd-D long classes of the profile table") {
  const std::set<std::string> known_conflicts = {"D5 j=4", "D5 j=5", "D7 j=6", "D7 j=7",
                                                 "D9 j=8", "D9 j=9", "D11 j=10", "D11 j=11"};
  for (const auto& id : table_ids()) {
    CAPTURE(id);
    TableReport r = check_table(id);
    CHECK_FALSE(r.rows.empty());
    for (const auto& row : r.rows) {
      CAPTURE(row.key);
      bool conflict = id == "Table_E" && known_conflicts.contains(row.key);
      CHECK(row.pass != conflict);
      if (conflict) {
        // Long classes reach only 0; the short class and P(0) agree.
        CHECK(row.computed["classes"]["long"] == json::array({json::array({0})}));
        CHECK(row.computed["classes"]["short"] == row.expected["classes"]["short"]);
        CHECK(row.computed["zero"] == row.expected["zero"]);
      }
    }
  }
}

TEST_CASE("a tampered fixture row is reported with its key") {
  fs::path dir = fs::temp_directory_path() / "rootfold_tampered_fixtures";
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const auto& entry : fs::directory_iterator(default_fixture_dir())) {
    fs::copy_file(entry.path(), dir / entry.path().filename());
  }
  json fixture = load_fixture(dir, "Omega_f");
  for (auto& row : fixture["rows"]) {
    if (row["type"] == "A3") row["f"] = 5;
  }
  std::ofstream(dir / "omega_f.json") << fixture.dump(1);

  TableOptions opts;
  opts.max_rank = 4;
  opts.fixture_dir = dir;
  TableReport r = check_table("Omega_f", opts);
  REQUIRE(r.failures() == 1);
  for (const auto& row : r.rows) {
    if (!row.pass) CHECK(row.key.find("A3") != std::string::npos);
  }
  fs::remove_all(dir);
}

TEST_CASE("options: filter, rank bound, worker count, unknown id") {
  TableOptions e6;
  e6.filter = {"E6"};
  TableReport p = check_table("Table_P", e6);
  CHECK(p.pass());
  for (const auto& row : p.rows) CHECK(row.key.rfind("E6", 0) == 0);

  TableOptions small;
  small.max_rank = 5;
  small.filter = {"A", "D"};
  TableReport one = check_table("sigma_j", small);
  small.jobs = 3;
  TableReport three = check_table("sigma_j", small);
  CHECK(one.to_json() == three.to_json());
  CHECK(one.to_tsv() == three.to_tsv());

  CHECK_THROWS_AS(check_table("Table_Q"), DomainError);
}
