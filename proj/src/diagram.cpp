#include "rootfold/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "rootfold/errors.hpp"

namespace rootfold {

namespace {

Orientation orient(const Rational& nu, const Rational& nv) {
  if (nu > nv) return Orientation::Forward;
  if (nu < nv) return Orientation::Backward;
  return Orientation::None;
}

int ratio_multiplicity(const Rational& nu, const Rational& nv, bool proportional) {
  Rational ratio = nu > nv ? nu / nv : nv / nu;
  if (!ratio.is_integer()) throw DomainError("non-integral length ratio " + ratio.to_string());
  int m = static_cast<int>(ratio.to_long());
  return proportional && m == 1 ? 2 : m;
}

bool proportional(const RationalVector& a, const RationalVector& b) {
  Rational t = dot(a, b) / norm2(a);
  return t * a == b;
}

// Longest simple path, smallest vertex sequence among ties.
std::vector<int> main_chain(const Diagram& d) {
  std::vector<int> best;
  std::vector<int> path;
  std::vector<bool> on(static_cast<std::size_t>(d.size()), false);
  std::function<void(int)> dfs = [&](int u) {
    path.push_back(u);
    on[static_cast<std::size_t>(u)] = true;
    if (path.size() > best.size() || (path.size() == best.size() && path < best)) best = path;
    for (int w : d.neighbors(u)) {
      if (!on[static_cast<std::size_t>(w)]) dfs(w);
    }
    on[static_cast<std::size_t>(u)] = false;
    path.pop_back();
  };
  for (int s = 0; s < d.size(); ++s) dfs(s);
  return best;
}

std::string connector(const DiagramEdge& e, int left) {
  static const char fill[] = {'-', '-', '=', '#', '4'};
  char f = fill[std::min(e.multiplicity, 4)];
  char mid = f;
  if (e.orientation != Orientation::None) {
    // Forward points from u to v.
    bool toward_right = (e.orientation == Orientation::Forward) == (e.u == left);
    mid = toward_right ? '>' : '<';
  }
  std::string s(5, f);
  s[2] = mid;
  return s;
}

std::string centered(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  std::size_t left = (width - s.size()) / 2;
  return std::string(left, ' ') + s + std::string(width - s.size() - left, ' ');
}

}  // namespace

Diagram::Diagram(std::vector<DiagramNode> nodes, std::vector<DiagramEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u > e.v) {
      std::swap(e.u, e.v);
      if (e.orientation == Orientation::Forward) e.orientation = Orientation::Backward;
      else if (e.orientation == Orientation::Backward) e.orientation = Orientation::Forward;
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

std::vector<int> Diagram::neighbors(int i) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.u == i) out.push_back(e.v);
    if (e.v == i) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Diagram::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::any_of(edges_.begin(), edges_.end(),
                     [&](const DiagramEdge& e) { return e.u == u && e.v == v; });
}

bool Diagram::connected() const {
  if (nodes_.empty()) return true;
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : neighbors(u)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == size();
}

Diagram build_diagram(std::span<const RationalVector> vertices, const std::vector<int>& marks,
                      const std::string& symbol) {
  std::vector<DiagramNode> nodes;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].is_zero()) throw DomainError("zero vector as diagram vertex");
    nodes.push_back({static_cast<int>(i), symbol, i < marks.size() ? marks[i] : 0,
                     norm2(vertices[i])});
  }
  std::vector<DiagramEdge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (dot(vertices[i], vertices[j]).is_zero()) continue;
      const Rational& ni = nodes[i].norm;
      const Rational& nj = nodes[j].norm;
      edges.push_back({static_cast<int>(i), static_cast<int>(j),
                       ratio_multiplicity(ni, nj, proportional(vertices[i], vertices[j])),
                       orient(ni, nj)});
    }
  }
  return Diagram(std::move(nodes), std::move(edges));
}

std::vector<std::vector<int>> ordered_orbits(const Permutation& sigma,
                                             const std::function<bool(int, int)>& adjacent) {
  const int n = sigma.size();
  std::vector<std::vector<int>> orbits;
  if (sigma == Permutation::identity(n)) {
    for (int i = 0; i < n; ++i) orbits.push_back({i});
    return orbits;
  }
  for (auto c : sigma.cycles()) {
    std::sort(c.begin(), c.end());
    orbits.push_back(std::move(c));
  }
  std::sort(orbits.begin(), orbits.end());  // orbit of 0 first, rest by minimal element
  const std::size_t k = orbits.size();
  std::vector<std::set<std::size_t>> adj(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      bool linked = false;
      for (int s : orbits[a]) {
        for (int t : orbits[b]) linked = linked || adjacent(s, t);
      }
      if (linked) {
        adj[a].insert(b);
        adj[b].insert(a);
      }
    }
  }
  std::size_t edge_count = 0;
  bool path = adj[0].size() <= 1;
  for (const auto& s : adj) {
    edge_count += s.size();
    path = path && s.size() <= 2;
  }
  path = path && edge_count / 2 + 1 == k;
  if (!path) return orbits;
  std::vector<std::vector<int>> chain{orbits[0]};
  std::vector<bool> used(k, false);
  used[0] = true;
  for (std::size_t cur = 0; chain.size() < k;) {
    auto next = std::find_if(adj[cur].begin(), adj[cur].end(), [&](std::size_t b) { return !used[b]; });
    if (next == adj[cur].end()) return orbits;  // disconnected quotient
    cur = *next;
    used[cur] = true;
    chain.push_back(orbits[cur]);
  }
  return chain;
}

Diagram fold_diagram(const Diagram& extended, const Permutation& sigma) {
  if (sigma.size() != extended.size()) throw StructuralError("permutation does not match diagram");
  auto orbits = ordered_orbits(sigma, [&](int a, int b) { return extended.adjacent(a, b); });
  if (orbits.size() <= 1) return Diagram();
  const Rational s0 = static_cast<long>(orbits[0].size());
  std::vector<DiagramNode> nodes;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const auto& orbit = orbits[k];
    int s = orbit[0];
    int within = 0;
    for (int t : orbit) {
      if (t != s && extended.adjacent(s, t)) ++within;
    }
    const auto& node = extended.nodes()[static_cast<std::size_t>(s)];
    Rational size = static_cast<long>(orbit.size());
    Rational norm = Rational(2 - within) * node.norm / (Rational(2) * size);
    int mark = 0;
    if (node.mark != 0) {
      Rational m = size * Rational(node.mark) / s0;
      if (!m.is_integer()) throw TheoremViolation("non-integral folded mark " + m.to_string());
      mark = static_cast<int>(m.to_long());
    }
    nodes.push_back({static_cast<int>(k), "ᾱ", mark, norm});
  }
  std::vector<DiagramEdge> edges;
  for (std::size_t a = 0; a < orbits.size(); ++a) {
    for (std::size_t b = a + 1; b < orbits.size(); ++b) {
      bool linked = false;
      for (int s : orbits[a]) {
        for (int t : orbits[b]) linked = linked || extended.adjacent(s, t);
      }
      if (!linked) continue;
      edges.push_back({static_cast<int>(a), static_cast<int>(b),
                       ratio_multiplicity(nodes[a].norm, nodes[b].norm, orbits.size() == 2),
                       orient(nodes[a].norm, nodes[b].norm)});
    }
  }
  return Diagram(std::move(nodes), std::move(edges));
}

std::vector<RationalVector> lexicographic_base(std::span<const RationalVector> roots) {
  std::unordered_set<RationalVector> all(roots.begin(), roots.end());
  std::vector<RationalVector> positive;
  for (const auto& r : roots) {
    if (r.leading_sign() > 0) positive.push_back(r);
  }
  std::sort(positive.begin(), positive.end());
  std::vector<RationalVector> base;
  for (const auto& p : positive) {
    if (all.contains(p / Rational(2))) continue;
    bool decomposable = std::any_of(positive.begin(), positive.end(), [&](const RationalVector& q) {
      RationalVector d = p - q;
      return d.leading_sign() > 0 && all.contains(d);
    });
    if (!decomposable) base.push_back(p);
  }
  return base;
}

TypeLabel identify_type(std::span<const RationalVector> roots) {
  if (roots.empty()) return {Family::Empty, 0};
  auto base = lexicographic_base(roots);
  const int r = static_cast<int>(base.size());
  if (rank_of(roots) != base.size()) {
    throw ClassificationError("simple system does not span the root set");
  }
  const bool reduced = is_reduced(roots);
  Diagram d = build_diagram(base);
  if (!d.connected()) throw ClassificationError("diagram is disconnected (reducible system)");
  if (r == 1) return reduced ? TypeLabel{Family::A, 1} : TypeLabel{Family::BC, 1};
  if (static_cast<int>(d.edges().size()) != r - 1) {
    throw ClassificationError("diagram of a simple system contains a cycle");
  }
  int max_mult = 0;
  int multiple_edges = 0;
  for (const auto& e : d.edges()) {
    max_mult = std::max(max_mult, e.multiplicity);
    if (e.multiplicity > 1) ++multiple_edges;
  }
  std::vector<int> deg(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) deg[static_cast<std::size_t>(i)] = d.degree(i);
  const int max_deg = *std::max_element(deg.begin(), deg.end());

  if (max_mult == 1) {
    if (!reduced) throw ClassificationError("non-reduced system with simply-laced diagram");
    if (max_deg <= 2) return {Family::A, r};
    auto branches = std::count_if(deg.begin(), deg.end(), [](int x) { return x >= 3; });
    if (branches != 1 || max_deg != 3) throw ClassificationError("unclassified branching");
    int center = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
    std::vector<int> arms;
    for (int start : d.neighbors(center)) {
      int len = 1, prev = center, cur = start;
      for (;;) {
        auto nb = d.neighbors(cur);
        auto next = std::find_if(nb.begin(), nb.end(), [&](int w) { return w != prev; });
        if (next == nb.end()) break;
        prev = cur;
        cur = *next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {Family::D, r};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, r};
    throw ClassificationError("unclassified branched diagram");
  }
  if (max_mult == 3) {
    if (r == 2 && reduced) return {Family::G, 2};
    throw ClassificationError("triple bond outside G2");
  }
  if (max_mult == 2 && multiple_edges == 1 && max_deg <= 2) {
    if (r == 2) return reduced ? TypeLabel{Family::B, 2} : TypeLabel{Family::BC, 2};
    auto e = *std::find_if(d.edges().begin(), d.edges().end(),
                           [](const DiagramEdge& x) { return x.multiplicity == 2; });
    int end_node = deg[static_cast<std::size_t>(e.u)] == 1   ? e.u
                   : deg[static_cast<std::size_t>(e.v)] == 1 ? e.v
                                                             : -1;
    if (end_node < 0) {
      if (r == 4 && reduced) return {Family::F, 4};
      throw ClassificationError("double bond in the interior of a non-F4 chain");
    }
    bool end_short = (e.orientation == Orientation::Forward) == (end_node == e.v);
    if (end_short) return reduced ? TypeLabel{Family::B, r} : TypeLabel{Family::BC, r};
    if (reduced) return {Family::C, r};
    throw ClassificationError("non-reduced system with C-shaped diagram");
  }
  throw ClassificationError("unclassified diagram");
}

std::string render(const Diagram& d, RenderFormat format, int label_offset) {
  std::ostringstream out;
  if (format == RenderFormat::Dot) {
    out << "graph diagram {\n  node [shape=circle];\n";
    for (const auto& n : d.nodes()) {
      const int id = n.index + label_offset;
      out << "  " << id << " [label=\"" << n.symbol << "_" << id;
      if (n.mark) out << " (" << n.mark << ")";
      out << "\"];\n";
    }
    for (const auto& e : d.edges()) {
      std::string attr;
      if (e.orientation == Orientation::Forward) attr = " [dir=forward, arrowhead=normal]";
      if (e.orientation == Orientation::Backward) attr = " [dir=back, arrowtail=normal]";
      for (int k = 0; k < e.multiplicity; ++k) {
        out << "  " << e.u + label_offset << " -- " << e.v + label_offset << attr << ";\n";
      }
    }
    out << "}\n";
    return out.str();
  }
  if (d.size() == 0) return "(empty diagram)\n";
  auto chain = main_chain(d);
  auto edge_between = [&](int a, int b) {
    return *std::find_if(d.edges().begin(), d.edges().end(), [&](const DiagramEdge& e) {
      return (e.u == a && e.v == b) || (e.u == b && e.v == a);
    });
  };
  std::string marks, body, labels;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const auto& n = d.nodes()[static_cast<std::size_t>(chain[k])];
    if (k) {
      marks += std::string(5, ' ');
      body += connector(edge_between(chain[k - 1], chain[k]), chain[k - 1]);
      labels += std::string(5, ' ');
    }
    marks += centered(n.mark ? std::to_string(n.mark) : "", 3);
    body += " o ";
    labels += centered(std::to_string(n.index + label_offset), 3);
  }
  auto rstrip = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  if (!rstrip(marks).empty()) out << rstrip(marks) << '\n';
  out << rstrip(body) << '\n' << rstrip(labels) << '\n';
  std::set<std::pair<int, int>> on_chain;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    on_chain.insert(std::minmax(chain[k - 1], chain[k]));
  }
  for (const auto& e : d.edges()) {
    if (on_chain.contains({e.u, e.v})) continue;
    auto label = [&](int i) {
      const auto& n = d.nodes()[static_cast<std::size_t>(i)];
      return std::to_string(i + label_offset) + (n.mark ? "(" + std::to_string(n.mark) + ")" : "");
    };
    out << "  " << label(e.u) << ' ' << connector(e, e.u) << ' ' << label(e.v) << '\n';
  }
  return out.str();
}

}  // namespace rootfold
