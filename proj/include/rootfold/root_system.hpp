#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rootfold/exact.hpp"

namespace rootfold {

enum class Family { A, B, C, D, E, F, G, BC, Empty };

struct TypeLabel {
  Family family = Family::Empty;
  int rank = 0;

  // "A3", "BC2", "E6", "Empty" (also "0" and the empty-set sign).
  static TypeLabel parse(std::string_view text);
  std::string to_string() const;
  bool in_classification() const;
  // Low-rank coincidences collapse to one name: C2 -> B2, B1/C1 -> A1.
  TypeLabel canonical() const;

  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
  friend auto operator<=>(const TypeLabel&, const TypeLabel&) = default;
};

struct BuildOptions {
  int max_rank = 12;
};

class RootSystem {
 public:
  static RootSystem build(const TypeLabel& label, const BuildOptions& options = {});

  // Derives positives, highest root, marks and coweights from a root set and a
  // chosen simple system. Throws ConsistencyError when simple is not a base.
  static RootSystem from_simple(TypeLabel label, std::size_t ambient_dim,
                                std::vector<RationalVector> roots,
                                std::vector<RationalVector> simple);

  const TypeLabel& label() const { return label_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  int rank() const { return static_cast<int>(simple_.size()); }

  // Positive roots in canonical order followed by their negatives in the same order.
  const std::vector<RationalVector>& roots() const { return roots_; }
  const std::vector<RationalVector>& positive() const { return positive_; }
  const std::vector<std::vector<int>>& positive_coefficients() const { return positive_coeffs_; }
  // alpha_1..alpha_l.
  const std::vector<RationalVector>& simple() const { return simple_; }
  // alpha_0 = -highest, alpha_1..alpha_l.
  const std::vector<RationalVector>& extended() const { return extended_; }
  const RationalVector& highest() const { return highest_; }
  // n_0 = 1, n_1..n_l.
  const std::vector<int>& marks() const { return marks_; }
  // Fundamental coweights indexed 0..l with index 0 the origin.
  const std::vector<RationalVector>& coweights() const { return coweights_; }

  bool contains(const RationalVector& v) const { return index_.contains(v); }
  // Position in roots().
  std::optional<std::size_t> index_of(const RationalVector& v) const;
  bool is_positive(const RationalVector& v) const;

 private:
  TypeLabel label_;
  std::size_t ambient_dim_ = 0;
  std::vector<RationalVector> roots_;
  std::vector<RationalVector> positive_;
  std::vector<std::vector<int>> positive_coeffs_;
  std::vector<RationalVector> simple_;
  std::vector<RationalVector> extended_;
  RationalVector highest_;
  std::vector<int> marks_;
  std::vector<RationalVector> coweights_;
  std::unordered_map<RationalVector, std::size_t> index_;
};

// Root sets of the coordinate realization, before any derived data.
struct Realization {
  std::size_t ambient_dim = 0;
  std::vector<RationalVector> roots;
  std::vector<RationalVector> simple;
};
Realization realize(const TypeLabel& label, const BuildOptions& options = {});

// Integer coefficients over the simple roots; throws DomainError outside the root lattice.
std::vector<int> coefficients(const RootSystem& rs, const RationalVector& beta);
int height(const RootSystem& rs, const RationalVector& beta);
const RationalVector& highest_root(const RootSystem& rs);

enum class Axiom { None, R1, R2, R3 };
std::string to_string(Axiom a);

struct AxiomVerdict {
  bool ok = true;
  Axiom axiom = Axiom::None;
  std::optional<RationalVector> alpha;
  std::optional<RationalVector> beta;
  std::string message;
};

// Full enumeration of R1-R3. When expected_rank is given, R1 also requires the
// span of the set to have that dimension.
AxiomVerdict verify_axioms(std::span<const RationalVector> roots,
                           std::optional<std::size_t> expected_rank = std::nullopt);
bool is_reduced(std::span<const RationalVector> roots);

// Entry (i, j) = (alpha_i^vee, alpha_j).
IntegerMatrix cartan_matrix(std::span<const RationalVector> simple);
long index_of_connection(const RootSystem& rs);
// Invariant factors of Z / Q^vee, dropping trivial ones.
std::vector<long> connection_invariants(const RootSystem& rs);

// coweight_i / n_i for i = 0..l.
std::vector<RationalVector> alcove_vertices(const RootSystem& rs);

}  // namespace rootfold
