#include "rootfold/tables.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "rootfold/errors.hpp"
#include "rootfold/folding.hpp"
#include "rootfold/pool.hpp"
#include "rootfold/serialize.hpp"
#include "rootfold/weyl.hpp"

#ifndef ROOTFOLD_FIXTURE_DIR
#define ROOTFOLD_FIXTURE_DIR "data/fixtures"
#endif

namespace rootfold {

std::vector<TypeLabel> catalogue(int max_rank) {
  std::vector<TypeLabel> out;
  const std::pair<Family, int> classical[] = {
      {Family::A, 1}, {Family::B, 2}, {Family::C, 3}, {Family::D, 4}};
  for (auto [fam, lo] : classical) {
    for (int l = lo; l <= max_rank; ++l) out.push_back({fam, l});
  }
  const TypeLabel exceptional[] = {
      {Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4}, {Family::G, 2}};
  for (const auto& t : exceptional) {
    if (t.rank <= max_rank) out.push_back(t);
  }
  return out;
}

bool matches_filter(const TypeLabel& label, const std::vector<std::string>& filter) {
  if (filter.empty()) return true;
  std::string full = label.to_string();
  std::string family = full.substr(0, full.find_first_of("0123456789"));
  return std::any_of(filter.begin(), filter.end(),
                     [&](const std::string& f) { return f == full || f == family; });
}

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("ROOTFOLD_FIXTURES")) return env;
  return ROOTFOLD_FIXTURE_DIR;
}

bool TableReport::pass() const { return failures() == 0 && !rows.empty(); }

std::size_t TableReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const RowResult& r) { return !r.pass; }));
}

json TableReport::to_json() const {
  json rs = json::array();
  for (const auto& r : rows) {
    rs.push_back({{"key", r.key},
                  {"status", r.pass ? "pass" : "fail"},
                  {"expected", r.expected},
                  {"computed", r.computed},
                  {"source", r.source}});
  }
  return {{"table_id", table_id}, {"rows", rs.size()}, {"failures", failures()}, {"results", rs}};
}

std::string TableReport::to_tsv() const {
  std::ostringstream out;
  out << "table_id\tkey\tstatus\texpected\tcomputed\tsource\n";
  for (const auto& r : rows) {
    out << table_id << "\t" << r.key << "\t" << (r.pass ? "pass" : "fail") << "\t" << r.expected.dump()
        << "\t" << r.computed.dump() << "\t" << r.source << "\n";
  }
  return out.str();
}

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids = {"Omega_f", "sigma_j",  "Table_P", "Table_E",
                                               "disap_sets", "E6_CX", "E7_CX",   "positive_matrices"};
  return ids;
}

namespace {

const std::map<std::string, std::string>& fixture_files() {
  static const std::map<std::string, std::string> files = {
      {"Omega_f", "omega_f.json"},     {"sigma_j", "sigma_j.json"},
      {"Table_P", "table_p.json"},     {"Table_E", "table_e.json"},
      {"disap_sets", "disap_sets.json"}, {"E6_CX", "e6_cx.json"},
      {"E7_CX", "e7_cx.json"},         {"positive_matrices", "positive_matrices.json"}};
  return files;
}

std::shared_ptr<const RootSystem> build_shared(const TypeLabel& t) {
  return std::make_shared<const RootSystem>(RootSystem::build(t, {std::max(t.rank, 1)}));
}

bool in_scope(const TypeLabel& t, const TableOptions& o) {
  return t.rank <= o.max_rank && matches_filter(t, o.filter);
}

std::string row_key(const json& row) {
  std::string k = row.at("type").get<std::string>();
  if (row.contains("j")) k += " j=" + std::to_string(row.at("j").get<int>());
  return k;
}

template <class F>
std::vector<std::vector<RowResult>> per_row(const json& rows, const TableOptions& o, F check) {
  std::vector<const json*> selected;
  for (const auto& row : rows) {
    if (in_scope(TypeLabel::parse(row.at("type").get<std::string>()), o)) selected.push_back(&row);
  }
  return parallel_map<std::vector<RowResult>>(selected.size(), o.jobs, [&](std::size_t i) {
    const json& row = *selected[i];
    RowResult r;
    r.key = row_key(row);
    r.source = row.value("source", "");
    try {
      std::vector<RowResult> extra;
      check(row, r, extra);
      extra.insert(extra.begin(), r);
      return extra;
    } catch (const std::exception& e) {
      r.pass = false;
      r.computed = {{"error", e.what()}};
      return std::vector<RowResult>{r};
    }
  });
}

std::vector<RowResult> flatten(std::vector<std::vector<RowResult>> chunks) {
  std::vector<RowResult> out;
  for (auto& c : chunks) {
    for (auto& r : c) out.push_back(std::move(r));
  }
  return out;
}

void check_omega_f(const json& row, RowResult& r, std::vector<RowResult>&) {
  auto rs = RootSystem::build(TypeLabel::parse(row.at("type").get<std::string>()));
  auto elems = build_stabilizer(rs);
  std::string group = group_structure(elems).to_string();
  long f = index_of_connection(rs);
  r.expected = {{"group", row.at("group")}, {"order", row.at("order")}, {"f", row.at("f")}};
  r.computed = {{"group", group}, {"order", elems.size()}, {"f", f}};
  r.pass = r.expected == r.computed;
}

void check_sigma(const json& row, RowResult& r, std::vector<RowResult>& extra) {
  TypeLabel t = TypeLabel::parse(row.at("type").get<std::string>());
  auto rs = RootSystem::build(t);
  int j = row.at("j").get<int>();
  const int n = rs.rank() + 1;
  Permutation expected = Permutation::parse_cycles(row.at("cycles").get<std::string>(), n);
  Permutation sigma = stabilizer_element(rs, j).sigma;
  r.expected = {{"J", row.at("J")}, {"sigma", expected.to_cycles()}};
  r.computed = {{"J", minuscule_indices(rs)}, {"sigma", sigma.to_cycles()}};
  r.pass = r.expected == r.computed;
  const int l = rs.rank();
  if (t.family == Family::D && l % 2 == 0 && j == l) {
    // omega_1 omega_{l-1} acts on the extended basis by sigma_l.
    auto w1 = stabilizer_element(rs, 1);
    auto wl1 = stabilizer_element(rs, l - 1);
    Permutation via_maps = sigma_of(rs, w1.omega.compose(wl1.omega));
    Permutation via_perms = w1.sigma.after(wl1.sigma);
    RowResult rel;
    rel.key = t.to_string() + " relation sigma_l = sigma_1 sigma_(l-1)";
    rel.source = "List of J and sigma_j, row D_l (l even), sigma_l = sigma_1 sigma_{l-1}";
    rel.expected = sigma.to_cycles();
    rel.computed = {{"composed_maps", via_maps.to_cycles()}, {"composed_permutations", via_perms.to_cycles()}};
    rel.pass = via_maps == sigma && via_perms == sigma;
    extra.push_back(rel);
  }
}

FoldedRootSystem fold_row(const json& row) {
  auto rs = build_shared(TypeLabel::parse(row.at("type").get<std::string>()));
  return fold_root_system(make_context(rs, row.at("j").get<int>()));
}

void check_table_p(const json& row, RowResult& r, std::vector<RowResult>&) {
  FoldedRootSystem f = fold_row(row);
  r.expected = row.at("folded");
  r.computed = f.label.canonical().to_string();
  r.pass = r.expected == r.computed;
}

// Length class of each positive folded root: "short" for the minimal norm,
// "long" for the maximal one, "middle" in between.
std::vector<std::string> length_classes(const FoldedRootSystem& f) {
  std::set<Rational> norms;
  for (const auto& p : f.positive) norms.insert(norm2(p));
  std::vector<std::string> out;
  for (const auto& p : f.positive) {
    Rational n = norm2(p);
    if (n == *norms.begin()) out.push_back("short");
    else if (n == *norms.rbegin()) out.push_back("long");
    else out.push_back("middle");
  }
  return out;
}

void check_table_e(const json& row, RowResult& r, std::vector<RowResult>&) {
  FoldedRootSystem f = fold_row(row);
  const json& classes = row.at("classes");
  bool uniform = classes.contains("all");
  auto lengths = length_classes(f);
  std::map<std::string, std::set<std::vector<int>>> seen;
  for (std::size_t i = 0; i < f.positive.size(); ++i) {
    const auto& vals = f.profiles[i + 1].values;
    seen[uniform ? "all" : lengths[i]].insert(std::vector<int>(vals.begin(), vals.end()));
  }
  json computed_classes = json::object();
  for (const auto& [name, sets] : seen) computed_classes[name] = sets;
  json expected_classes = json::object();
  for (const auto& [name, vals] : classes.items()) {
    if (seen.contains(name)) expected_classes[name] = json::array({vals});
  }
  const auto& zero = f.profiles[0].values;
  r.expected = {{"classes", expected_classes}, {"zero", row.at("zero")}};
  r.computed = {{"classes", computed_classes}, {"zero", std::vector<int>(zero.begin(), zero.end())}};
  // Every computed class must be one named by the row.
  bool named = std::all_of(seen.begin(), seen.end(),
                           [&](const auto& kv) { return classes.contains(kv.first); });
  // Rank-one BC has no middle roots; every other named class must occur.
  bool present = true;
  for (const auto& [name, vals] : classes.items()) {
    if (name != "middle" && !seen.contains(name)) present = false;
  }
  r.pass = named && present && r.expected == r.computed && (f.positive.empty() == classes.empty());
}

void check_disap(const json& row, RowResult& r, std::vector<RowResult>&) {
  FoldedRootSystem f = fold_row(row);
  const auto& rs = f.context.rs();
  std::set<RationalVector> expected;
  bool alpha = row.at("basis") == "alpha";
  for (const auto& v : row.at("roots")) {
    if (alpha) {
      RationalVector x(rs.ambient_dim());
      for (std::size_t i = 0; i < v.size(); ++i) x = x + Rational(v[i].get<long>()) * rs.simple()[i];
      expected.insert(x);
    } else {
      expected.insert(vector_from_json(v));
    }
  }
  std::set<RationalVector> computed(f.vanish.begin(), f.vanish.end());
  auto as_json = [](const std::set<RationalVector>& s) {
    return to_json(std::vector<RationalVector>(s.begin(), s.end()));
  };
  r.expected = as_json(expected);
  r.computed = as_json(computed);
  r.pass = expected == computed && computed.size() == f.vanish.size();
}

using Column = std::pair<std::vector<int>, std::vector<int>>;

std::vector<RowResult> check_cx(const json& doc, const TableOptions& o) {
  TypeLabel t = TypeLabel::parse(doc.at("type").get<std::string>());
  if (!in_scope(t, o)) return {};
  auto rs = build_shared(t);
  auto ctx = make_context(rs, doc.at("j").get<int>());
  std::multiset<Column> computed;
  for (std::size_t i = 0; i < rs->positive().size(); ++i) {
    computed.insert({rs->positive_coefficients()[i], fold_coefficients(ctx, rs->positive()[i])});
  }
  std::vector<RowResult> rows;
  std::multiset<Column> remaining = computed;
  for (const auto& col : doc.at("columns")) {
    Column c{col.at("c").get<std::vector<int>>(), col.at("x").get<std::vector<int>>()};
    RowResult r;
    r.key = t.to_string() + " column c=" + json(c.first).dump();
    r.source = col.value("source", "");
    r.expected = {{"c", c.first}, {"x", c.second}};
    auto it = remaining.find(c);
    r.pass = it != remaining.end();
    if (r.pass) {
      r.computed = r.expected;
      remaining.erase(it);
    } else {
      json xs = json::array();
      for (const auto& [cc, xx] : computed) {
        if (cc == c.first) xs.push_back(xx);
      }
      r.computed = {{"c", c.first}, {"x_candidates", xs}};
    }
    rows.push_back(r);
  }
  RowResult total;
  total.key = t.to_string() + " multiset size";
  total.source = doc.value("source", "");
  total.expected = {{"columns", doc.at("columns").size()}, {"unmatched", 0}};
  total.computed = {{"columns", computed.size()}, {"unmatched", remaining.size()}};
  total.pass = total.expected == total.computed;
  rows.push_back(total);
  return rows;
}

void check_positive_matrix(const json& row, RowResult& r, std::vector<RowResult>&) {
  auto rs = RootSystem::build(TypeLabel::parse(row.at("type").get<std::string>()));
  std::multiset<std::vector<int>> expected, computed(rs.positive_coefficients().begin(),
                                                     rs.positive_coefficients().end());
  for (const auto& c : row.at("columns")) expected.insert(c.get<std::vector<int>>());
  r.expected = {{"count", expected.size()}, {"columns", expected}};
  r.computed = {{"count", computed.size()}, {"columns", computed}};
  r.pass = expected == computed;
}

}  // namespace

json load_fixture(const std::filesystem::path& dir, const std::string& table_id) {
  auto it = fixture_files().find(table_id);
  if (it == fixture_files().end()) throw DomainError("unknown table id '" + table_id + "'");
  std::ifstream in(dir / it->second);
  if (!in) throw DomainError("cannot open fixture " + (dir / it->second).string());
  json doc = json::parse(in);
  if (doc.value("table_id", "") != table_id) {
    throw ConsistencyError("fixture " + it->second + " declares table_id " + doc.value("table_id", "?"));
  }
  return doc;
}

TableReport check_table(const std::string& table_id, const TableOptions& options) {
  json doc = load_fixture(options.fixture_dir, table_id);
  TableReport report;
  report.table_id = table_id;
  if (table_id == "E6_CX" || table_id == "E7_CX") {
    report.rows = check_cx(doc, options);
    return report;
  }
  using Check = void (*)(const json&, RowResult&, std::vector<RowResult>&);
  static const std::map<std::string, Check> checks = {
      {"Omega_f", check_omega_f},       {"sigma_j", check_sigma},     {"Table_P", check_table_p},
      {"Table_E", check_table_e},       {"disap_sets", check_disap},
      {"positive_matrices", check_positive_matrix}};
  report.rows = flatten(per_row(doc.at("rows"), options, checks.at(table_id)));
  return report;
}

}  // namespace rootfold
