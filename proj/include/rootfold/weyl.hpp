#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rootfold/exact.hpp"
#include "rootfold/root_system.hpp"

namespace rootfold {

// Permutation of {0..n-1} stored by images.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  // Cycle notation such as "(0 1 6)(2 3 5)"; "()" is the identity.
  static Permutation parse_cycles(std::string_view text, int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& images() const { return images_; }
  // (this * other)(i) = this(other(i)).
  Permutation after(const Permutation& other) const;
  Permutation inverse() const;
  Permutation power(int t) const;
  int order() const;
  // Cycles start at their minimal element and are sorted by it; fixed points omitted.
  std::string to_cycles() const;
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Exact linear map of the ambient space, stored as images of the standard basis.
class IsometryMap {
 public:
  IsometryMap() = default;
  static IsometryMap identity(std::size_t dim);
  static IsometryMap reflection(const RationalVector& alpha);
  // Word (i_1..i_k) means s_{i_1} s_{i_2} ... s_{i_k}; indices are 1-based simple roots.
  static IsometryMap from_word(const RootSystem& rs, std::vector<int> word);

  std::size_t dim() const { return columns_.size(); }
  RationalVector apply(const RationalVector& x) const;
  // this o inner.
  IsometryMap compose(const IsometryMap& inner) const;
  IsometryMap power(int t) const;
  const std::vector<RationalVector>& columns() const { return columns_; }
  const std::optional<std::vector<int>>& word() const { return word_; }
  bool is_identity() const;

  friend bool operator==(const IsometryMap& a, const IsometryMap& b) {
    return a.columns_ == b.columns_;
  }

 private:
  std::vector<RationalVector> columns_;
  std::optional<std::vector<int>> word_;
};

// x -> linear(x) + translation.
class AffineMap {
 public:
  AffineMap(IsometryMap linear, RationalVector translation)
      : linear_(std::move(linear)), translation_(std::move(translation)) {}
  RationalVector apply(const RationalVector& x) const { return linear_.apply(x) + translation_; }
  AffineMap compose(const AffineMap& inner) const;
  const IsometryMap& linear() const { return linear_; }
  const RationalVector& translation() const { return translation_; }

 private:
  IsometryMap linear_;
  RationalVector translation_;
};

struct StabilizerElement {
  int j = 0;
  IsometryMap omega;
  AffineMap omega_hat{IsometryMap(), RationalVector()};
  Permutation sigma;
  Permutation sigma_hat;
  int order = 1;
};

// Longest element of the parabolic subgroup on the given 1-based simple indices.
IsometryMap longest_in_subset(const RootSystem& rs, const std::vector<int>& subset);
IsometryMap longest_element(const RootSystem& rs);
// Longest element for the simple roots other than alpha_j; j must lie in J.
IsometryMap parabolic_longest(const RootSystem& rs, int j);

// J = {i : n_i = 1}, including 0.
std::vector<int> minuscule_indices(const RootSystem& rs);

// omega(alpha_i) = alpha_{sigma(i)} on the extended basis.
Permutation sigma_of(const RootSystem& rs, const IsometryMap& omega);
// omega_hat(v_i) = v_{sigma_hat(i)} on alcove vertices v_i = coweight_i / n_i.
Permutation sigma_hat_of(const RootSystem& rs, const AffineMap& omega_hat);

StabilizerElement stabilizer_element(const RootSystem& rs, int j);
std::vector<StabilizerElement> build_stabilizer(const RootSystem& rs);

struct GroupLabel {
  enum class Kind { Trivial, Cyclic, Klein };
  Kind kind = Kind::Trivial;
  int order = 1;
  std::string to_string() const;
  friend bool operator==(const GroupLabel&, const GroupLabel&) = default;
};

// Closure is verified; throws ClosureError if a product leaves the set.
GroupLabel group_structure(std::span<const IsometryMap> elements);
GroupLabel group_structure(std::span<const StabilizerElement> elements);

}  // namespace rootfold
