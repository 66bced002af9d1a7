#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <sstream>
#include <thread>

#include "rootfold/diagram.hpp"
#include "rootfold/errors.hpp"
#include "rootfold/folding.hpp"
#include "rootfold/harness.hpp"
#include "rootfold/root_system.hpp"
#include "rootfold/serialize.hpp"
#include "rootfold/tables.hpp"

namespace rootfold {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int max_rank = 12;
  std::string format;
  int jobs = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::string> filter;
  std::string out_path;
  std::uint64_t seed = 1;
  std::string fixtures;
  std::string fault;

  std::string label;
  int j = 0;
  std::vector<std::string> table_ids;
  bool extended = false;
  std::optional<int> fold;
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw UsageError("format '" + format + "' is not available here (choose from " + list + ")");
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path);
  if (!file) throw UsageError("cannot write " + o.out_path);
  file << text;
}

std::shared_ptr<const RootSystem> build_system(const Options& o) {
  TypeLabel t = TypeLabel::parse(o.label);
  if (!t.in_classification() || t.family == Family::BC || t.family == Family::Empty) {
    throw DomainError("type " + o.label + " is not an irreducible reduced root system");
  }
  return std::make_shared<const RootSystem>(RootSystem::build(t, {o.max_rank}));
}

int cmd_build(const Options& o, std::ostream& out) {
  auto rs = build_system(o);
  require_format(o.format.empty() ? "json" : o.format, {"json", "tsv"});
  emit(o, o.format == "tsv" ? system_tsv(*rs) : system_json(*rs).dump(1) + "\n", out);
  return kPass;
}

int cmd_fold(const Options& o, std::ostream& out) {
  auto rs = build_system(o);
  require_format(o.format.empty() ? "json" : o.format, {"json", "tsv"});
  FoldedRootSystem f = fold_root_system(make_context(rs, o.j));
  emit(o, o.format == "tsv" ? fold_report_tsv(f) : fold_report_json(f).dump(1) + "\n", out);
  return kPass;
}

int cmd_tables(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o.format.empty() ? "json" : o.format, {"json", "tsv"});
  std::vector<std::string> ids = o.table_ids;
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) ids = table_ids();
  const auto& known = table_ids();
  for (const auto& id : ids) {
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw UsageError("unknown table id '" + id + "'");
    }
  }
  TableOptions opts;
  opts.max_rank = o.max_rank;
  opts.filter = o.filter;
  opts.jobs = o.jobs;
  if (!o.fixtures.empty()) opts.fixture_dir = o.fixtures;
  bool ok = true;
  json all = json::array();
  std::string tsv;
  for (const auto& id : ids) {
    TableReport r = check_table(id, opts);
    ok = ok && r.pass();
    err << id << ": " << r.rows.size() - r.failures() << "/" << r.rows.size() << " rows pass\n";
    if (o.format == "tsv") tsv += r.to_tsv();
    else all.push_back(r.to_json());
  }
  emit(o, o.format == "tsv" ? tsv : json{{"tables", all}, {"pass", ok}}.dump(1) + "\n", out);
  return ok ? kPass : kFail;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o.format.empty() ? "json" : o.format, {"json", "tsv"});
  VerifyConfig cfg;
  cfg.max_rank = o.max_rank;
  cfg.filter = o.filter;
  cfg.jobs = o.jobs;
  cfg.seed = o.seed;
  cfg.fault = parse_fault(o.fault);
  VerifyReport r = run_verify(cfg);
  err << "verify: " << r.checks.size() << " checks, " << r.failures() << " failures\n";
  emit(o, o.format == "tsv" ? r.to_tsv() : r.to_json().dump(1) + "\n", out);
  return r.clean() ? kPass : kFail;
}

int cmd_diagram(const Options& o, std::ostream& out) {
  auto rs = build_system(o);
  require_format(o.format.empty() ? "ascii" : o.format, {"dot", "ascii"});
  RenderFormat fmt = o.format == "dot" ? RenderFormat::Dot : RenderFormat::Ascii;
  std::string text;
  if (o.fold) {
    FoldedRootSystem f = fold_root_system(make_context(rs, *o.fold));
    text = render(folded_metric_diagram(f), fmt);
  } else if (o.extended) {
    text = render(build_diagram(rs->extended(), rs->marks()), fmt);
  } else {
    text = render(build_diagram(rs->simple()), fmt, 1);
  }
  emit(o, text, out);
  return kPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact root systems, stabilizer foldings and their tables."};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--max-rank", o.max_rank, "Largest rank considered")->check(CLI::Range(1, 64));
    sub->add_option("--format", o.format, "json, tsv, dot or ascii");
    sub->add_option("--out", o.out_path, "Write the report to this file");
  };
  auto parallel = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--filter", o.filter, "Types or families to include (e.g. E6,D)")->delimiter(',');
  };

  auto* build = app.add_subcommand("build", "Serialize a root system");
  build->add_option("label", o.label, "Type label such as D5")->required();
  common(build);

  auto* fold = app.add_subcommand("fold", "Fold a root system by omega_j");
  fold->add_option("label", o.label, "Type label")->required();
  fold->add_option("j", o.j, "Index in J")->required();
  common(fold);

  auto* tables = app.add_subcommand("tables", "Compare computed tables with the fixtures");
  tables->add_option("table_id", o.table_ids, "Table ids, or 'all'");
  tables->add_option("--fixtures", o.fixtures, "Fixture directory");
  common(tables);
  parallel(tables);

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--seed", o.seed, "Seed for sampled pair checks");
  verify->add_option("--inject-fault", o.fault, "drop-root or corrupt-mark");
  common(verify);
  parallel(verify);

  auto* diagram = app.add_subcommand("diagram", "Render a Dynkin diagram");
  diagram->add_option("label", o.label, "Type label")->required();
  diagram->add_flag("--extended", o.extended, "Extended diagram with marks");
  diagram->add_option("--fold", o.fold, "Folded extended diagram for this j");
  common(diagram);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, help_err;
    int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*build) return cmd_build(o, out);
    if (*fold) return cmd_fold(o, out);
    if (*tables) return cmd_tables(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*diagram) return cmd_diagram(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "verification failure: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

}  // namespace rootfold
