#include "rootfold/harness.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "rootfold/diagram.hpp"
#include "rootfold/errors.hpp"
#include "rootfold/folding.hpp"
#include "rootfold/pool.hpp"
#include "rootfold/serialize.hpp"
#include "rootfold/tables.hpp"
#include "rootfold/weyl.hpp"

namespace rootfold {

FaultKind parse_fault(const std::string& text) {
  if (text == "drop-root") return FaultKind::DropRoot;
  if (text == "corrupt-mark") return FaultKind::CorruptMark;
  if (text.empty() || text == "none") return FaultKind::None;
  throw DomainError("unknown fault '" + text + "' (expected drop-root or corrupt-mark)");
}

namespace {

std::string fault_name(FaultKind f) {
  switch (f) {
    case FaultKind::DropRoot: return "drop-root";
    case FaultKind::CorruptMark: return "corrupt-mark";
    case FaultKind::None: break;
  }
  return "none";
}

struct Outcome {
  bool ok = true;
  json witness = json::object();
};

Outcome pass(json summary = json::object()) { return {true, std::move(summary)}; }
Outcome fail(json witness) { return {false, std::move(witness)}; }

class Recorder {
 public:
  Recorder(const RootSystem& rs, int j, std::vector<CheckResult>& out) : rs_(rs), j_(j), out_(out) {}

  void run(const std::string& invariant, const std::function<Outcome()>& fn) {
    CheckResult r{rs_.label().to_string(), rs_.rank(), j_, invariant, true, json::object()};
    try {
      Outcome o = fn();
      r.ok = o.ok;
      r.witness = std::move(o.witness);
    } catch (const std::exception& e) {
      r.ok = false;
      r.witness = {{"error", e.what()}};
    }
    out_.push_back(std::move(r));
  }

 private:
  const RootSystem& rs_;
  int j_;
  std::vector<CheckResult>& out_;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

json kronecker_failure(std::size_t a, std::size_t b, const Rational& value) {
  return {{"row", a}, {"column", b}, {"value", value.to_string()}};
}

// Pairs (a, b) of root indices: all of them for small systems, a seeded sample otherwise.
std::vector<std::pair<std::size_t, std::size_t>> root_pairs(std::size_t n, std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (n * n <= 40000) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) out.emplace_back(a, b);
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int s = 0; s < 4000; ++s) out.emplace_back(pick(rng), pick(rng));
  return out;
}

void system_checks(const RootSystem& rs, const VerifyConfig& cfg, Recorder& rec) {
  const int l = rs.rank();
  std::vector<RationalVector> roots = rs.roots();
  std::optional<RationalVector> dropped;
  if (cfg.fault == FaultKind::DropRoot) {
    dropped = rs.highest();
    roots.erase(std::find(roots.begin(), roots.end(), *dropped));
  }
  std::vector<int> marks = rs.marks();
  if (cfg.fault == FaultKind::CorruptMark) marks.back() += 1;

  rec.run("root_axioms", [&] {
    AxiomVerdict v = verify_axioms(roots, static_cast<std::size_t>(l));
    if (v.ok) return pass({{"roots", roots.size()}});
    json w = {{"axiom", to_string(v.axiom)}, {"message", v.message}};
    if (v.alpha) w["alpha"] = to_json(*v.alpha);
    if (v.beta) w["beta"] = to_json(*v.beta);
    if (v.alpha && v.beta) w["missing_image"] = to_json(reflect(*v.alpha, *v.beta));
    if (dropped) w["dropped_root"] = to_json(*dropped);
    return fail(w);
  });

  rec.run("weyl_closure", [&] {
    // Orbit of the simple roots under simple reflections must be the whole root set.
    std::unordered_set<RationalVector> seen(rs.simple().begin(), rs.simple().end());
    std::vector<RationalVector> frontier = rs.simple();
    while (!frontier.empty()) {
      std::vector<RationalVector> next;
      for (const auto& x : frontier) {
        for (const auto& a : rs.simple()) {
          RationalVector y = reflect(a, x);
          if (seen.insert(y).second) next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
    std::unordered_set<RationalVector> given(roots.begin(), roots.end());
    std::vector<RationalVector> missing, extra;
    for (const auto& x : seen) {
      if (!given.contains(x)) missing.push_back(x);
    }
    for (const auto& x : given) {
      if (!seen.contains(x)) extra.push_back(x);
    }
    if (missing.empty() && extra.empty()) return pass({{"roots", seen.size()}});
    std::sort(missing.begin(), missing.end());
    std::sort(extra.begin(), extra.end());
    return fail({{"generated_not_in_set", to_json(missing)}, {"in_set_not_generated", to_json(extra)}});
  });

  rec.run("positive_system", [&] {
    if (2 * rs.positive().size() != rs.roots().size()) {
      return fail({{"positive", rs.positive().size()}, {"roots", rs.roots().size()}});
    }
    for (const auto& b : rs.roots()) {
      auto c = coefficients(rs, b);
      bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
      bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
      if (!nonneg && !nonpos) return fail({{"root", to_json(b)}, {"coefficients", c}});
      if (nonneg != rs.is_positive(b)) return fail({{"root", to_json(b)}, {"coefficients", c}});
    }
    return pass({{"positive", rs.positive().size()}});
  });

  rec.run("mark_relation", [&] {
    // Route one: coefficients of the highest root. Route two: the stored marks,
    // which must annihilate the extended basis.
    auto c = coefficients(rs, rs.highest());
    RationalVector residual(rs.ambient_dim());
    for (std::size_t i = 0; i < marks.size(); ++i) {
      residual = residual + Rational(marks[i]) * rs.extended()[i];
    }
    std::vector<int> from_highest{1};
    from_highest.insert(from_highest.end(), c.begin(), c.end());
    if (residual.is_zero() && from_highest == marks) return pass({{"marks", marks}});
    json w = {{"marks", marks}, {"highest_root_coefficients", from_highest}, {"residual", to_json(residual)}};
    for (std::size_t i = 0; i < marks.size(); ++i) {
      if (marks[i] != from_highest[i]) {
        w["index"] = i;
        break;
      }
    }
    return fail(w);
  });

  rec.run("coweight_duality", [&] {
    for (std::size_t i = 0; i < rs.simple().size(); ++i) {
      for (std::size_t k = 1; k <= rs.simple().size(); ++k) {
        Rational v = dot(rs.simple()[i], rs.coweights()[k]);
        if (v != Rational(i + 1 == k ? 1 : 0)) return fail(kronecker_failure(i + 1, k, v));
      }
    }
    return pass();
  });

  rec.run("alcove_vertices", [&] {
    auto v = alcove_vertices(rs);
    if (!v[0].is_zero()) return fail({{"vertex", 0}, {"value", to_json(v[0])}});
    for (std::size_t k = 1; k < v.size(); ++k) {
      Rational h = dot(rs.highest(), v[k]);
      if (h != Rational(1)) return fail({{"vertex", k}, {"highest_pairing", h.to_string()}});
    }
    return pass({{"vertices", v.size()}});
  });

  rec.run("index_of_connection", [&] {
    long f = index_of_connection(rs);
    auto inv = connection_invariants(rs);
    long prod = 1;
    for (long x : inv) prod *= x;
    auto elems = build_stabilizer(rs);
    GroupLabel g = group_structure(elems);
    std::vector<long> from_group;
    if (g.kind == GroupLabel::Kind::Cyclic) from_group = {g.order};
    if (g.kind == GroupLabel::Kind::Klein) from_group = {2, 2};
    auto J = minuscule_indices(rs);
    json w = {{"f", f},
              {"smith_invariants", inv},
              {"stabilizer_order", elems.size()},
              {"J", J},
              {"group", g.to_string()}};
    bool ok = prod == f && static_cast<long>(elems.size()) == f &&
              static_cast<long>(J.size()) == f && from_group == inv;
    return ok ? pass(w) : fail(w);
  });

  const auto pairs = root_pairs(rs.roots().size(), cfg.seed ^ fnv1a(rs.label().to_string()));
  rec.run("root_strings", [&] {
    // (a, b) > 0 forces a - b to be a root, (a, b) < 0 forces a + b.
    std::size_t tested = 0;
    for (auto [i, k] : pairs) {
      const auto& a = rs.roots()[i];
      const auto& b = rs.roots()[k];
      if (a == b || a == -b) continue;
      int s = dot(a, b).sign();
      if (s > 0 && !rs.contains(a - b)) return fail({{"alpha", to_json(a)}, {"beta", to_json(b)}, {"sign", s}});
      if (s < 0 && !rs.contains(a + b)) return fail({{"alpha", to_json(a)}, {"beta", to_json(b)}, {"sign", s}});
      ++tested;
    }
    return pass({{"pairs", tested}});
  });

  rec.run("length_ratio", [&] {
    // Non-proportional a, b with |a| <= |b| and (a, b) != 0 have |(a, b)| = (b, b)/2.
    std::size_t tested = 0;
    for (auto [i, k] : pairs) {
      const auto& a = rs.roots()[i];
      const auto& b = rs.roots()[k];
      if (rank_of(std::vector<RationalVector>{a, b}) < 2) continue;
      Rational ab = dot(a, b);
      if (ab.is_zero() || norm2(a) > norm2(b)) continue;
      if (abs(ab) != norm2(b) / Rational(2)) {
        return fail({{"alpha", to_json(a)}, {"beta", to_json(b)}, {"pairing", ab.to_string()}});
      }
      ++tested;
    }
    return pass({{"pairs", tested}});
  });
}

void element_checks(const RootSystem& rs, int j, Recorder& rec) {
  rec.run("sigma_properties", [&] {
    StabilizerElement e = stabilizer_element(rs, j);
    const auto& ext = rs.extended();
    const auto& n = rs.marks();
    json w = {{"sigma", e.sigma.to_cycles()}, {"sigma_hat", e.sigma_hat.to_cycles()}};
    if (e.sigma != e.sigma_hat) return fail(w);
    if (e.sigma(0) != j) return fail(w);
    for (int i = 0; i < e.sigma.size(); ++i) {
      auto ui = static_cast<std::size_t>(i);
      auto si = static_cast<std::size_t>(e.sigma(i));
      if (n[ui] != n[si]) {
        w["mark_mismatch"] = i;
        return fail(w);
      }
      if (e.omega.apply(ext[ui]) != ext[si]) {
        w["basis_image_mismatch"] = i;
        return fail(w);
      }
      for (int k = 0; k < e.sigma.size(); ++k) {
        auto uk = static_cast<std::size_t>(k);
        if (dot(ext[ui], ext[uk]) != dot(ext[si], ext[static_cast<std::size_t>(e.sigma(k))])) {
          w["gram_mismatch"] = {i, k};
          return fail(w);
        }
      }
    }
    for (const auto& b : rs.roots()) {
      if (!rs.contains(e.omega.apply(b))) {
        w["root_leaves_set"] = to_json(b);
        return fail(w);
      }
    }
    return pass(w);
  });
}

void folding_checks(std::shared_ptr<const RootSystem> rsp, int j, Recorder& rec) {
  const RootSystem& rs = *rsp;
  std::optional<FoldingContext> ctx;
  rec.run("orbit_invariants", [&] {
    ctx = make_context(rsp, j);
    return pass({{"orbits", ctx->orbits}, {"order", ctx->order}});
  });
  if (!ctx) return;
  const auto& c = *ctx;
  const int r = c.rank();
  const auto& roots = rs.roots();

  std::vector<RationalVector> folds;
  std::vector<OrbitData> orbits;
  for (const auto& b : roots) {
    folds.push_back(fold_vector(c, b));
    orbits.push_back(orbit_data(c, b));
  }

  rec.run("multiplicities", [&] {
    json w = {{"m", c.multiplicities}};
    if (c.multiplicities[0] != 1) return fail(w);
    RationalVector sum = c.alpha_bar[0];
    for (int k = 1; k <= r; ++k) {
      auto uk = static_cast<std::size_t>(k);
      if (c.multiplicities[uk] <= 0) return fail(w);
      Rational expect = Rational(static_cast<long>(c.orbits[uk].size())) * Rational(c.orbit_marks[uk]) /
                        Rational(static_cast<long>(c.orbits[0].size()));
      if (expect != Rational(c.multiplicities[uk])) return fail(w);
      sum = sum + Rational(c.multiplicities[uk]) * c.alpha_bar[uk];
    }
    if (r > 0 && !sum.is_zero()) {
      w["extended_relation_residual"] = to_json(sum);
      return fail(w);
    }
    return pass(w);
  });

  rec.run("fixed_space", [&] {
    std::size_t dim = fixed_space_dimension(c);
    json w = {{"dimension", dim}, {"rank", r}};
    if (dim != static_cast<std::size_t>(r)) return fail(w);
    for (int k = 1; k <= r; ++k) {
      auto uk = static_cast<std::size_t>(k);
      if (fold_vector(c, c.pi[uk]) != c.pi_bar[uk - 1]) {
        w["pi_fold_mismatch"] = k;
        return fail(w);
      }
    }
    for (std::size_t i = 0; i < rs.simple().size(); ++i) {
      const auto& f = fold_vector(c, rs.simple()[i]);
      if (fold_vector(c, f) != f || c.omega().apply(f) != f) {
        w["not_idempotent"] = i + 1;
        return fail(w);
      }
      if (i + 1 < rs.simple().size() &&
          fold_vector(c, rs.simple()[i] + rs.simple()[i + 1]) != f + fold_vector(c, rs.simple()[i + 1])) {
        w["not_linear"] = i + 1;
        return fail(w);
      }
    }
    return pass(w);
  });

  rec.run("orbit_bounds", [&] {
    // |N| <= 2, non-positive pairings along the orbit, and the two vanishing tests agree.
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const auto& od = orbits[i];
      json w = {{"root", to_json(roots[i])}, {"orbit", to_json(od.orbit)}, {"neighbors", od.neighbors.size()}};
      if (od.neighbors.size() > 2) return fail(w);
      for (const auto& g : od.orbit) {
        if (g != roots[i] && dot(roots[i], g).sign() > 0) return fail(w);
      }
      bool criterion = od.contains_negative || od.neighbors.size() == 2;
      if (criterion != folds[i].is_zero() || is_vanishing(c, roots[i]) != criterion) return fail(w);
    }
    return pass({{"roots", roots.size()}});
  });

  rec.run("orbit_positivity", [&] {
    Permutation inv = c.element.sigma.inverse();
    for (std::size_t i = 0; i < rs.positive().size(); ++i) {
      const auto& coeffs = rs.positive_coefficients()[i];
      for (int t = 1; t <= c.order; ++t) {
        int s = inv.power(t)(0);
        int cs = s == 0 ? 0 : coeffs[static_cast<std::size_t>(s - 1)];
        bool positive = rs.is_positive(c.powers[static_cast<std::size_t>(t - 1)].apply(rs.positive()[i]));
        if (positive != (cs == 0)) {
          return fail({{"root", to_json(rs.positive()[i])}, {"t", t}, {"index", s}, {"coefficient", cs}});
        }
      }
    }
    return pass();
  });

  if (rs.rank() <= 6) {
    rec.run("averaged_inner_product", [&] {
      for (std::size_t a = 0; a < roots.size(); ++a) {
        for (std::size_t b = 0; b < roots.size(); ++b) {
          Rational sum;
          for (const auto& g : orbits[b].orbit) sum += dot(roots[a], g);
          sum /= Rational(static_cast<long>(orbits[b].orbit.size()));
          if (dot(folds[a], folds[b]) != sum) {
            return fail({{"beta1", to_json(roots[a])}, {"beta2", to_json(roots[b])}});
          }
        }
      }
      return pass({{"pairs", roots.size() * roots.size()}});
    });
  }

  rec.run("norm_formula", [&] {
    std::size_t tested = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const auto& od = orbits[i];
      if (od.contains_negative) continue;
      Rational expect = Rational(2 - static_cast<long>(od.neighbors.size())) * norm2(roots[i]) /
                        Rational(2 * static_cast<long>(od.orbit.size()));
      if (norm2(folds[i]) != expect) {
        return fail({{"root", to_json(roots[i])}, {"direct", norm2(folds[i]).to_string()},
                     {"formula", expect.to_string()}});
      }
      ++tested;
    }
    return pass({{"roots", tested}});
  });

  rec.run("coroot_formula", [&] {
    std::size_t tested = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (folds[i].is_zero()) continue;
      if (folded_coroot(c, roots[i]) != coroot(folds[i])) return fail({{"root", to_json(roots[i])}});
      ++tested;
    }
    return pass({{"roots", tested}});
  });

  std::optional<FoldedRootSystem> folded;
  rec.run("folded_axioms", [&] {
    folded = fold_root_system(c);
    AxiomVerdict v = verify_axioms(folded->roots, static_cast<std::size_t>(r));
    if (!v.ok) {
      json w = {{"axiom", to_string(v.axiom)}, {"message", v.message}};
      if (v.alpha) w["alpha"] = to_json(*v.alpha);
      if (v.beta) w["beta"] = to_json(*v.beta);
      return fail(w);
    }
    return pass({{"folded_roots", folded->roots.size()}, {"label", folded->label.to_string()}});
  });
  if (!folded) return;
  const auto& f = *folded;
  std::unordered_set<RationalVector> folded_set(f.roots.begin(), f.roots.end());

  rec.run("folded_basis", [&] {
    // Integral, sign-uniform coefficients over the folded base for every root.
    for (std::size_t i = 0; i < roots.size(); ++i) {
      auto x = fold_coefficients(c, roots[i]);
      RationalVector rebuilt(rs.ambient_dim());
      for (int k = 1; k <= r; ++k) rebuilt = rebuilt + Rational(x[static_cast<std::size_t>(k - 1)]) * c.alpha_bar[static_cast<std::size_t>(k)];
      if (rebuilt != folds[i]) return fail({{"root", to_json(roots[i])}, {"coefficients", x}});
      if (!folds[i].is_zero() && !folded_set.contains(folds[i])) return fail({{"root", to_json(roots[i])}});
    }
    return pass({{"roots", roots.size()}});
  });

  rec.run("duality", [&] {
    for (int k = 1; k <= r; ++k) {
      for (int q = 1; q <= r; ++q) {
        Rational v = dot(c.alpha_bar[static_cast<std::size_t>(k)], c.pi_bar[static_cast<std::size_t>(q - 1)]);
        if (v != Rational(k == q ? 1 : 0)) return fail(kronecker_failure(static_cast<std::size_t>(k), static_cast<std::size_t>(q), v));
      }
    }
    return pass({{"rank", r}});
  });

  rec.run("folded_closure", [&] {
    for (const auto& x : f.roots) {
      for (const auto& y : f.roots) {
        if (!folded_set.contains(reflect(x, y)) || !pairing(x, y).is_integer()) {
          return fail({{"x", to_json(x)}, {"y", to_json(y)}, {"pairing", pairing(x, y).to_string()}});
        }
      }
    }
    return pass({{"pairs", f.roots.size() * f.roots.size()}});
  });

  rec.run("reducedness_criterion", [&] {
    bool single_neighbor = false;
    for (const auto& a : rs.simple()) {
      if (orbit_data(c, a).neighbors.size() == 1) single_neighbor = true;
    }
    json w = {{"reduced", f.reduced}, {"simple_root_with_one_neighbor", single_neighbor}};
    return f.reduced != single_neighbor ? pass(w) : fail(w);
  });

  rec.run("type_identified", [&] {
    json w = {{"label", f.label.to_string()}, {"rank", r}, {"reduced", f.reduced}};
    bool ok = f.label.rank == r && (r == 0) == (f.label.family == Family::Empty) &&
              f.reduced == (f.label.family != Family::BC);
    return ok ? pass(w) : fail(w);
  });

  Diagram metric = folded_metric_diagram(f);
  rec.run("irreducible", [&] {
    if (r > 0 && !metric.connected()) return fail({{"nodes", metric.size()}});
    return pass({{"nodes", metric.size()}});
  });

  rec.run("edge_sign", [&] {
    for (int a = 0; a <= r; ++a) {
      for (int b = a + 1; b <= r; ++b) {
        bool folded_edge = !dot(c.alpha_bar[static_cast<std::size_t>(a)], c.alpha_bar[static_cast<std::size_t>(b)]).is_zero();
        bool source_edge = false;
        for (int s1 : c.orbits[static_cast<std::size_t>(a)]) {
          for (int s2 : c.orbits[static_cast<std::size_t>(b)]) {
            if (!dot(rs.extended()[static_cast<std::size_t>(s1)], rs.extended()[static_cast<std::size_t>(s2)]).is_zero()) source_edge = true;
          }
        }
        if (folded_edge != source_edge) return fail({{"orbits", {a, b}}, {"folded_edge", folded_edge}});
      }
    }
    return pass();
  });

  rec.run("diagram_fold", [&] {
    Diagram combinatorial = fold_diagram(build_diagram(rs.extended(), rs.marks()), c.element.sigma);
    if (combinatorial == metric) return pass({{"edges", metric.edges().size()}});
    return fail({{"combinatorial", render(combinatorial, RenderFormat::Dot)},
                 {"metric", render(metric, RenderFormat::Dot)}});
  });

  rec.run("lifted_reflection", [&] {
    // Every preimage up to rank 8, one preimage per folded root above.
    std::set<RationalVector> done;
    std::size_t tested = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (folds[i].is_zero()) continue;
      if (rs.rank() > 8 && !done.insert(folds[i]).second) continue;
      lift_reflection(c, roots[i]);
      ++tested;
    }
    return pass({{"roots", tested}});
  });

  rec.run("profiles", [&] {
    const int o = c.order;
    std::set<int> expected_zero;
    for (int p = 1; p < o; ++p) {
      expected_zero.insert(p);
      expected_zero.insert(-p);
    }
    std::set<int> zero = extra_root_profile(c, RationalVector(rs.ambient_dim()));
    if (zero != f.profiles[0].values || zero != expected_zero) {
      return fail({{"zero_class", std::vector<int>(zero.begin(), zero.end())}});
    }
    for (std::size_t i = 1; i < f.profiles.size(); ++i) {
      const auto& p = f.profiles[i].values;
      if (!p.contains(0) || *p.begin() <= -o || *p.rbegin() >= o) {
        return fail({{"root", to_json(f.profiles[i].root)}, {"P", std::vector<int>(p.begin(), p.end())}});
      }
    }
    return pass({{"classes", f.profiles.size()}});
  });

  rec.run("disappearing_roots", [&] {
    auto d = disappearing_roots(c);
    std::set<RationalVector> a(d.begin(), d.end()), b(f.vanish.begin(), f.vanish.end());
    std::size_t count = 0;
    for (std::size_t i = 0; i < rs.positive().size(); ++i) count += folds[i].is_zero();
    if (a != b || count != a.size()) return fail({{"direct", d.size()}, {"folded", f.vanish.size()}});
    return pass({{"vanish", d.size()}});
  });
}

}  // namespace

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.ok; }));
}

json VerifyReport::to_json() const {
  json results = json::array();
  std::set<std::pair<std::string, int>> items;
  for (const auto& c : checks) {
    items.insert({c.type, c.j});
    results.push_back({{"type", c.type},
                       {"j", c.j},
                       {"invariant", c.invariant},
                       {"status", c.ok ? "pass" : "fail"},
                       {"witness", c.witness}});
  }
  return {{"config",
           {{"max_rank", config.max_rank}, {"filter", config.filter}, {"seed", config.seed},
            {"fault", fault_name(config.fault)}}},
          {"summary", {{"items", items.size()}, {"checks", checks.size()}, {"failures", failures()}}},
          {"results", results}};
}

std::string VerifyReport::to_tsv() const {
  std::ostringstream out;
  out << "type\tj\tinvariant\tstatus\twitness\n";
  for (const auto& c : checks) {
    out << c.type << "\t" << c.j << "\t" << c.invariant << "\t" << (c.ok ? "pass" : "fail") << "\t"
        << c.witness.dump() << "\n";
  }
  return out.str();
}

VerifyReport run_verify(const VerifyConfig& config) {
  std::vector<TypeLabel> types;
  for (const auto& t : catalogue(config.max_rank)) {
    if (matches_filter(t, config.filter)) types.push_back(t);
  }
  auto systems = parallel_map<std::shared_ptr<const RootSystem>>(types.size(), config.jobs, [&](std::size_t i) {
    return std::make_shared<const RootSystem>(RootSystem::build(types[i], {std::max(config.max_rank, 1)}));
  });
  struct Item {
    std::shared_ptr<const RootSystem> rs;
    int j;
  };
  std::vector<Item> items;
  for (const auto& rs : systems) {
    for (int j : minuscule_indices(*rs)) items.push_back({rs, j});
  }
  auto chunks = parallel_map<std::vector<CheckResult>>(items.size(), config.jobs, [&](std::size_t i) {
    std::vector<CheckResult> out;
    Recorder rec(*items[i].rs, items[i].j, out);
    if (items[i].j == 0) system_checks(*items[i].rs, config, rec);
    element_checks(*items[i].rs, items[i].j, rec);
    if (items[i].j != 0) folding_checks(items[i].rs, items[i].j, rec);
    return out;
  });
  VerifyReport report;
  report.config = config;
  for (auto& c : chunks) {
    for (auto& r : c) report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace rootfold
