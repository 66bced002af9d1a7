#include "rootfold/folding.hpp"

#include <algorithm>
#include <numeric>

#include "rootfold/errors.hpp"

namespace rootfold {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::size_t root_index(const RootSystem& rs, const RationalVector& beta) {
  auto i = rs.index_of(beta);
  if (!i) throw DomainError(beta.to_string() + " is not a root of " + rs.label().to_string());
  return *i;
}

bool criterion_vanishes(const OrbitData& od) {
  return od.contains_negative || od.neighbors.size() == 2;
}

}  // namespace

FoldingContext make_context(std::shared_ptr<const RootSystem> rs, int j) {
  auto J = minuscule_indices(*rs);
  if (std::find(J.begin(), J.end(), j) == J.end()) {
    throw DomainError("j = " + std::to_string(j) + " is not in J = {" + join(J) + "} for " +
                      rs->label().to_string());
  }
  FoldingContext ctx;
  ctx.system = rs;
  ctx.j = j;
  ctx.element = stabilizer_element(*rs, j);
  ctx.order = ctx.element.order;
  const auto& ext = rs->extended();
  ctx.orbits = ordered_orbits(ctx.element.sigma, [&](int a, int b) {
    return !dot(ext[static_cast<std::size_t>(a)], ext[static_cast<std::size_t>(b)]).is_zero();
  });
  if (static_cast<int>(ctx.orbits[0].size()) != ctx.order) {
    throw TheoremViolation("orbit of 0 has size " + std::to_string(ctx.orbits[0].size()) +
                           " but omega has order " + std::to_string(ctx.order));
  }
  ctx.orbit_of.assign(ext.size(), -1);
  const Rational s0 = static_cast<long>(ctx.orbits[0].size());
  for (std::size_t k = 0; k < ctx.orbits.size(); ++k) {
    const auto& orbit = ctx.orbits[k];
    int mark = rs->marks()[static_cast<std::size_t>(orbit[0])];
    RationalVector pi(rs->ambient_dim());
    RationalVector asum(rs->ambient_dim());
    for (int s : orbit) {
      ctx.orbit_of[static_cast<std::size_t>(s)] = static_cast<int>(k);
      if (rs->marks()[static_cast<std::size_t>(s)] != mark) {
        throw TheoremViolation("marks are not constant on orbit " + join(orbit));
      }
      pi = pi + rs->coweights()[static_cast<std::size_t>(s)];
      asum = asum + ext[static_cast<std::size_t>(s)];
    }
    Rational m = Rational(static_cast<long>(orbit.size())) * Rational(mark) / s0;
    if (!m.is_integer() || m.sign() <= 0) {
      throw TheoremViolation("multiplicity m_" + std::to_string(k) + " = " + m.to_string() +
                             " is not a positive integer");
    }
    ctx.orbit_marks.push_back(mark);
    ctx.multiplicities.push_back(static_cast<int>(m.to_long()));
    ctx.pi.push_back(std::move(pi));
    ctx.alpha_bar.push_back(asum / Rational(static_cast<long>(orbit.size())));
  }
  if (ctx.multiplicities[0] != 1) throw TheoremViolation("m_0 differs from 1");
  for (std::size_t k = 1; k < ctx.orbits.size(); ++k) {
    ctx.pi_bar.push_back(ctx.pi[k] - Rational(ctx.multiplicities[k]) * ctx.pi[0]);
  }
  IsometryMap p = ctx.omega();
  for (int t = 1; t <= ctx.order; ++t) {
    ctx.powers.push_back(p);
    p = ctx.omega().compose(p);
  }
  if (!ctx.powers.back().is_identity()) throw ConsistencyError("omega^order is not the identity");

  for (const auto& v : ctx.pi_bar) {
    if (ctx.omega().apply(v) != v) throw TheoremViolation("pi_bar vector not fixed by omega");
  }
  if (rank_of(ctx.pi_bar) != ctx.pi_bar.size()) {
    throw TheoremViolation("pi_bar vectors are linearly dependent");
  }
  if (fixed_space_dimension(ctx) != ctx.pi_bar.size()) {
    throw TheoremViolation("pi_bar vectors do not span the fixed space");
  }
  return ctx;
}

RationalVector fold_vector(const FoldingContext& ctx, const RationalVector& x) {
  RationalVector sum(x.dim());
  for (const auto& p : ctx.powers) sum = sum + p.apply(x);
  return sum / Rational(ctx.order);
}

const std::vector<RationalVector>& fixed_space_basis(const FoldingContext& ctx) {
  return ctx.pi_bar;
}

std::size_t fixed_space_dimension(const FoldingContext& ctx) {
  const auto& cols = ctx.omega().columns();
  std::vector<RationalVector> diff;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    diff.push_back(cols[k] - RationalVector::unit(cols.size(), k));
  }
  return static_cast<std::size_t>(ctx.rs().rank()) - rank_of(diff);
}

OrbitData orbit_data(const FoldingContext& ctx, const RationalVector& beta) {
  const auto& rs = ctx.rs();
  root_index(rs, beta);
  std::vector<std::size_t> idx;
  for (const auto& p : ctx.powers) {
    std::size_t i = root_index(rs, p.apply(beta));
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  OrbitData od;
  od.representative = beta;
  RationalVector neg = -beta;
  for (std::size_t i : idx) {
    const auto& g = rs.roots()[i];
    od.orbit.push_back(g);
    if (g == neg) od.contains_negative = true;
    if (g != beta && g != neg && !dot(beta, g).is_zero()) od.neighbors.push_back(g);
  }
  return od;
}

bool is_vanishing(const FoldingContext& ctx, const RationalVector& beta) {
  bool direct = fold_vector(ctx, beta).is_zero();
  OrbitData od = orbit_data(ctx, beta);
  if (od.neighbors.size() > 2) {
    throw TheoremViolation(beta.to_string() + " has " + std::to_string(od.neighbors.size()) +
                           " non-orthogonal orbit neighbours");
  }
  if (direct != criterion_vanishes(od)) {
    throw TheoremViolation("vanishing of " + beta.to_string() +
                           " disagrees between the average and the orbit criterion");
  }
  return direct;
}

std::vector<int> fold_coefficients(const FoldingContext& ctx, const RationalVector& beta) {
  const auto& rs = ctx.rs();
  root_index(rs, beta);
  auto c = coefficients(rs, beta);
  std::vector<long> cbar(ctx.orbits.size(), 0);
  for (std::size_t k = 0; k < ctx.orbits.size(); ++k) {
    for (int s : ctx.orbits[k]) {
      if (s > 0) cbar[k] += c[static_cast<std::size_t>(s - 1)];
    }
  }
  std::vector<int> out;
  int sign = 0;
  RationalVector rebuilt(rs.ambient_dim());
  for (std::size_t k = 1; k < ctx.orbits.size(); ++k) {
    long v = cbar[k] - ctx.multiplicities[k] * cbar[0];
    if (v != 0) {
      int s = v > 0 ? 1 : -1;
      if (sign != 0 && s != sign) {
        throw TheoremViolation("folded coefficients of " + beta.to_string() + " are sign-mixed");
      }
      sign = s;
      rebuilt = rebuilt + Rational(v) * ctx.alpha_bar[k];
    }
    out.push_back(static_cast<int>(v));
  }
  if (rebuilt != fold_vector(ctx, beta)) {
    throw TheoremViolation("folded coefficients of " + beta.to_string() +
                           " do not reconstruct its folded image");
  }
  return out;
}

RationalVector folded_coroot(const FoldingContext& ctx, const RationalVector& beta) {
  OrbitData od = orbit_data(ctx, beta);
  RationalVector folded = fold_vector(ctx, beta);
  if (folded.is_zero()) throw DomainError(beta.to_string() + " folds to zero");
  RationalVector sum(beta.dim());
  for (const auto& g : od.orbit) sum = sum + coroot(g);
  RationalVector formula =
      (Rational(2) / Rational(2 - static_cast<long>(od.neighbors.size()))) * sum;
  if (formula != coroot(folded)) {
    throw TheoremViolation("folded coroot formula fails for " + beta.to_string());
  }
  return formula;
}

IsometryMap lift_reflection(const FoldingContext& ctx, const RationalVector& beta) {
  OrbitData od = orbit_data(ctx, beta);
  RationalVector folded = fold_vector(ctx, beta);
  if (folded.is_zero()) throw DomainError(beta.to_string() + " folds to zero");
  const std::size_t n = beta.dim();
  IsometryMap w = IsometryMap::identity(n);
  if (od.neighbors.empty()) {
    for (const auto& g : od.orbit) w = w.compose(IsometryMap::reflection(g));
  } else {
    std::vector<bool> used(od.orbit.size(), false);
    for (std::size_t a = 0; a < od.orbit.size(); ++a) {
      if (used[a]) continue;
      const auto& g = od.orbit[a];
      std::size_t b = a + 1;
      while (b < od.orbit.size() && (used[b] || dot(g, od.orbit[b]).is_zero())) ++b;
      if (b == od.orbit.size()) throw TheoremViolation("orbit of " + beta.to_string() + " does not pair up");
      used[a] = used[b] = true;
      IsometryMap sg = IsometryMap::reflection(g);
      w = w.compose(sg).compose(IsometryMap::reflection(od.orbit[b])).compose(sg);
    }
  }
  if (w.compose(ctx.omega()) != ctx.omega().compose(w)) {
    throw TheoremViolation("lifted reflection of " + beta.to_string() + " does not commute with omega");
  }
  for (const auto& v : ctx.pi_bar) {
    if (w.apply(v) != reflect(folded, v)) {
      throw TheoremViolation("lifted reflection of " + beta.to_string() +
                             " differs from the folded reflection on the fixed space");
    }
  }
  return w;
}

std::vector<RationalVector> disappearing_roots(const FoldingContext& ctx) {
  std::vector<RationalVector> out;
  for (const auto& b : ctx.rs().positive()) {
    if (fold_vector(ctx, b).is_zero()) out.push_back(b);
  }
  return out;
}

std::set<int> extra_root_profile(const FoldingContext& ctx, const RationalVector& target) {
  std::set<int> p;
  for (const auto& g : ctx.rs().roots()) {
    if (fold_vector(ctx, g) == target) p.insert(static_cast<int>(dot(g, ctx.pi[0]).to_long()));
  }
  return p;
}

FoldedRootSystem fold_root_system(const FoldingContext& ctx) {
  const auto& rs = ctx.rs();
  FoldedRootSystem f;
  f.context = ctx;
  const std::size_t r = static_cast<std::size_t>(ctx.rank());

  std::map<RationalVector, std::set<int>> classes;  // folded image -> values (gamma, pi_0)
  std::map<RationalVector, RationalVector> representative;
  for (const auto& g : rs.roots()) {
    RationalVector img = fold_vector(ctx, g);
    OrbitData od = orbit_data(ctx, g);
    if (od.neighbors.size() > 2 || img.is_zero() != criterion_vanishes(od)) {
      throw TheoremViolation("vanishing of " + g.to_string() +
                             " disagrees between the average and the orbit criterion");
    }
    classes[img].insert(static_cast<int>(dot(g, ctx.pi[0]).to_long()));
    representative.emplace(img, g);
    if (img.is_zero() && rs.is_positive(g)) f.vanish.push_back(g);
  }

  struct Entry {
    int height;
    std::vector<int> coeffs;
    RationalVector root;
  };
  std::vector<Entry> pos;
  std::size_t nonzero = 0;
  for (const auto& [img, rep] : representative) {
    if (img.is_zero()) continue;
    ++nonzero;
    auto c = fold_coefficients(ctx, rep);
    int h = std::accumulate(c.begin(), c.end(), 0);
    if (h > 0) pos.push_back({h, c, img});
  }
  if (2 * pos.size() != nonzero) throw TheoremViolation("folded roots are not symmetric");
  std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coeffs < b.coeffs;
  });
  for (const auto& e : pos) {
    f.positive.push_back(e.root);
    f.positive_coefficients.push_back(e.coeffs);
  }
  f.roots = f.positive;
  for (const auto& p : f.positive) f.roots.push_back(-p);

  if (r > 0) {
    f.extended_simple = ctx.alpha_bar;
    f.simple.assign(ctx.alpha_bar.begin() + 1, ctx.alpha_bar.end());
    for (std::size_t k = 0; k < ctx.orbits.size(); ++k) {
      for (int s : ctx.orbits[k]) {
        if (fold_vector(ctx, rs.extended()[static_cast<std::size_t>(s)]) != ctx.alpha_bar[k]) {
          throw TheoremViolation("folded simple root differs inside orbit " + std::to_string(k));
        }
      }
      if (!classes.contains(ctx.alpha_bar[k]) || ctx.alpha_bar[k].is_zero()) {
        throw TheoremViolation("folded extended basis is not contained in the folded roots");
      }
    }
  }

  AxiomVerdict verdict = verify_axioms(f.roots, r);
  if (!verdict.ok) {
    throw TheoremViolation("folded roots violate " + to_string(verdict.axiom) + ": " +
                           verdict.message);
  }
  f.label = identify_type(f.roots);
  f.reduced = is_reduced(f.roots);

  RationalVector zero(rs.ambient_dim());
  f.profiles.push_back({zero, classes.contains(zero) ? classes[zero] : std::set<int>{}});
  for (const auto& p : f.positive) f.profiles.push_back({p, classes[p]});
  return f;
}

Diagram folded_metric_diagram(const FoldedRootSystem& folded) {
  if (folded.extended_simple.empty()) return Diagram();
  return build_diagram(folded.extended_simple, folded.context.multiplicities, "ᾱ");
}

}  // namespace rootfold
