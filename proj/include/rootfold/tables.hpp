#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootfold/root_system.hpp"

namespace rootfold {

using nlohmann::json;

// Irreducible reduced types up to max_rank in family order: A1.., B2.., C3.., D4..,
// then E6, E7, E8, F4, G2 (those exceeding max_rank are dropped).
std::vector<TypeLabel> catalogue(int max_rank);

// Empty filter accepts everything; an entry is a full label ("E6") or a family ("D").
bool matches_filter(const TypeLabel& label, const std::vector<std::string>& filter);

std::filesystem::path default_fixture_dir();

struct RowResult {
  std::string key;
  bool pass = false;
  json expected;
  json computed;
  std::string source;
};

struct TableReport {
  std::string table_id;
  std::vector<RowResult> rows;

  bool pass() const;
  std::size_t failures() const;
  json to_json() const;
  std::string to_tsv() const;
};

struct TableOptions {
  int max_rank = 12;
  std::vector<std::string> filter;
  int jobs = 1;
  std::filesystem::path fixture_dir = default_fixture_dir();
};

// Omega_f, sigma_j, Table_P, Table_E, disap_sets, E6_CX, E7_CX, positive_matrices.
const std::vector<std::string>& table_ids();
json load_fixture(const std::filesystem::path& dir, const std::string& table_id);

// Computed-versus-expected per fixture row. Unknown id -> DomainError.
TableReport check_table(const std::string& table_id, const TableOptions& options = {});

}  // namespace rootfold
