#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "rootfold/diagram.hpp"
#include "rootfold/exact.hpp"
#include "rootfold/root_system.hpp"
#include "rootfold/weyl.hpp"

namespace rootfold {

struct FoldingContext {
  std::shared_ptr<const RootSystem> system;
  int j = 0;
  StabilizerElement element;
  int order = 1;
  // S_0 (containing 0), S_1, ..., S_r.
  std::vector<std::vector<int>> orbits;
  // Orbit index of each i in I.
  std::vector<int> orbit_of;
  // Common mark on each orbit.
  std::vector<int> orbit_marks;
  // m_0 = 1, m_1..m_r.
  std::vector<int> multiplicities;
  // pi_k = sum of coweights over S_k, k = 0..r.
  std::vector<RationalVector> pi;
  // pi_bar_k = pi_k - m_k pi_0 for k = 1..r, stored at position k - 1.
  std::vector<RationalVector> pi_bar;
  // alpha_bar_k = average of the extended simple roots over S_k, k = 0..r.
  std::vector<RationalVector> alpha_bar;
  // omega^t for t = 1..order, stored at position t - 1 (the last is the identity).
  std::vector<IsometryMap> powers;

  const RootSystem& rs() const { return *system; }
  int rank() const { return static_cast<int>(orbits.size()) - 1; }
  const IsometryMap& omega() const { return element.omega; }
};

// Throws TheoremViolation when an orbit invariant (constant marks, integral m_k,
// #S_0 = order, independent fixed pi_bar) fails.
FoldingContext make_context(std::shared_ptr<const RootSystem> rs, int j);

RationalVector fold_vector(const FoldingContext& ctx, const RationalVector& x);
const std::vector<RationalVector>& fixed_space_basis(const FoldingContext& ctx);
// l - rank(omega - id); the fixed space inside span(simple).
std::size_t fixed_space_dimension(const FoldingContext& ctx);

struct OrbitData {
  RationalVector representative;
  // Canonical root order.
  std::vector<RationalVector> orbit;
  std::vector<RationalVector> neighbors;
  bool contains_negative = false;
};

OrbitData orbit_data(const FoldingContext& ctx, const RationalVector& beta);
// Direct average against the orbit criterion; disagreement -> TheoremViolation.
bool is_vanishing(const FoldingContext& ctx, const RationalVector& beta);

// Coefficients over the folded simple roots via orbit sums of ordinary coefficients.
std::vector<int> fold_coefficients(const FoldingContext& ctx, const RationalVector& beta);
RationalVector folded_coroot(const FoldingContext& ctx, const RationalVector& beta);
IsometryMap lift_reflection(const FoldingContext& ctx, const RationalVector& beta);

std::vector<RationalVector> disappearing_roots(const FoldingContext& ctx);
std::set<int> extra_root_profile(const FoldingContext& ctx, const RationalVector& target);

struct Profile {
  RationalVector root;  // zero vector for the vanishing class
  std::set<int> values;
};

struct FoldedRootSystem {
  FoldingContext context;
  // Positive folded roots in canonical order followed by their negatives.
  std::vector<RationalVector> roots;
  std::vector<RationalVector> positive;
  std::vector<std::vector<int>> positive_coefficients;
  // alpha_bar_1..alpha_bar_r.
  std::vector<RationalVector> simple;
  // alpha_bar_0..alpha_bar_r; empty when the folded system is empty.
  std::vector<RationalVector> extended_simple;
  TypeLabel label;
  bool reduced = true;
  std::vector<RationalVector> vanish;
  // Zero class first, then positive folded roots in canonical order.
  std::vector<Profile> profiles;
};

FoldedRootSystem fold_root_system(const FoldingContext& ctx);

// Folded extended diagram with m_k marks, computed from Delta_0^omega.
Diagram folded_metric_diagram(const FoldedRootSystem& folded);

}  // namespace rootfold
