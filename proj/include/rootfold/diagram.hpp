#pragma once

#include <functional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "rootfold/exact.hpp"
#include "rootfold/root_system.hpp"
#include "rootfold/weyl.hpp"

namespace rootfold {

// Forward: the arrow points from u to v, so v is the shorter root.
enum class Orientation { None, Forward, Backward };

struct DiagramNode {
  int index = 0;
  std::string symbol = "α";
  int mark = 0;  // 0 when unlabelled
  Rational norm;

  friend bool operator==(const DiagramNode&, const DiagramNode&) = default;
};

// u < v always.
struct DiagramEdge {
  int u = 0;
  int v = 0;
  int multiplicity = 1;
  Orientation orientation = Orientation::None;

  friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
  friend auto operator<=>(const DiagramEdge& a, const DiagramEdge& b) {
    return std::tie(a.u, a.v, a.multiplicity, a.orientation) <=>
           std::tie(b.u, b.v, b.multiplicity, b.orientation);
  }
};

class Diagram {
 public:
  Diagram() = default;
  Diagram(std::vector<DiagramNode> nodes, std::vector<DiagramEdge> edges);

  const std::vector<DiagramNode>& nodes() const { return nodes_; }
  // Sorted by (u, v).
  const std::vector<DiagramEdge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  std::vector<int> neighbors(int i) const;
  int degree(int i) const { return static_cast<int>(neighbors(i).size()); }
  bool adjacent(int u, int v) const;
  bool connected() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<DiagramNode> nodes_;
  std::vector<DiagramEdge> edges_;
};

// Multiplicity is the norm ratio whenever the pairing is nonzero; a proportional
// equal-length pair is joined by a doubled bond. Non-integral ratio -> DomainError.
Diagram build_diagram(std::span<const RationalVector> vertices, const std::vector<int>& marks = {},
                      const std::string& symbol = "α");

// Orders the cycles of sigma: the orbit of 0 first, then along the quotient
// chain when the quotient graph is a path starting at that orbit, otherwise by
// minimal element. Identity sigma keeps index order.
std::vector<std::vector<int>> ordered_orbits(const Permutation& sigma,
                                             const std::function<bool(int, int)>& adjacent);

// Combinatorial folding of an extended diagram by sigma.
Diagram fold_diagram(const Diagram& extended, const Permutation& sigma);

// Simple system under lexicographic positivity: indivisible positive roots that
// are not sums of two positive roots.
std::vector<RationalVector> lexicographic_base(std::span<const RationalVector> roots);

TypeLabel identify_type(std::span<const RationalVector> roots);

enum class RenderFormat { Dot, Ascii };
// Vertex labels and DOT ids are shifted by label_offset (1 for a plain Dynkin diagram).
std::string render(const Diagram& diagram, RenderFormat format, int label_offset = 0);

}  // namespace rootfold
