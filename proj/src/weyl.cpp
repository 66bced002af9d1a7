#include "rootfold/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rootfold/errors.hpp"

namespace rootfold {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || hit[static_cast<std::size_t>(v)]) {
      throw DomainError("image list is not a permutation");
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::parse_cycles(std::string_view text, int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw DomainError("malformed cycle notation '" + std::string(text) + "'");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw DomainError("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (start == pos) throw DomainError("malformed cycle notation '" + std::string(text) + "'");
      int v = std::stoi(std::string(text.substr(start, pos - start)));
      if (v >= n || used[static_cast<std::size_t>(v)]) {
        throw DomainError("cycle entry " + std::to_string(v) + " out of range or repeated");
      }
      used[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      im[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(im));
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) throw StructuralError("permutation size mismatch");
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[static_cast<std::size_t>(i)] = (*this)(other(i));
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[static_cast<std::size_t>((*this)(i))] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::power(int t) const {
  int o = order();
  t = ((t % o) + o) % o;
  Permutation p = identity(size());
  for (int k = 0; k < t; ++k) p = after(p);
  return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> c;
    for (int k = i; !seen[static_cast<std::size_t>(k)]; k = (*this)(k)) {
      seen[static_cast<std::size_t>(k)] = true;
      c.push_back(k);
    }
    out.push_back(std::move(c));
  }
  return out;
}

int Permutation::order() const {
  int o = 1;
  for (const auto& c : cycles()) o = std::lcm(o, static_cast<int>(c.size()));
  return o;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    out << '(';
    for (std::size_t k = 0; k < c.size(); ++k) out << (k ? " " : "") << c[k];
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

IsometryMap IsometryMap::identity(std::size_t dim) {
  IsometryMap m;
  for (std::size_t k = 0; k < dim; ++k) m.columns_.push_back(RationalVector::unit(dim, k));
  m.word_ = std::vector<int>{};
  return m;
}

IsometryMap IsometryMap::reflection(const RationalVector& alpha) {
  IsometryMap m;
  for (std::size_t k = 0; k < alpha.dim(); ++k) {
    m.columns_.push_back(reflect(alpha, RationalVector::unit(alpha.dim(), k)));
  }
  return m;
}

IsometryMap IsometryMap::from_word(const RootSystem& rs, std::vector<int> word) {
  IsometryMap m;
  for (std::size_t k = 0; k < rs.ambient_dim(); ++k) {
    RationalVector v = RationalVector::unit(rs.ambient_dim(), k);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      v = reflect(rs.simple().at(static_cast<std::size_t>(*it - 1)), v);
    }
    m.columns_.push_back(std::move(v));
  }
  m.word_ = std::move(word);
  return m;
}

RationalVector IsometryMap::apply(const RationalVector& x) const {
  if (x.dim() != dim()) throw StructuralError("isometry applied to vector of wrong dimension");
  std::vector<mpq_class> acc(dim(), 0);
  for (std::size_t k = 0; k < dim(); ++k) {
    if (x[k].is_zero()) continue;
    const auto& col = columns_[k];
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!col[i].is_zero()) acc[i] += x[k].raw() * col[i].raw();
    }
  }
  std::vector<Rational> out;
  out.reserve(dim());
  for (auto& a : acc) out.emplace_back(std::move(a));
  return RationalVector(std::move(out));
}

IsometryMap IsometryMap::compose(const IsometryMap& inner) const {
  if (inner.dim() != dim()) throw StructuralError("composition of maps of different dimension");
  IsometryMap m;
  for (const auto& c : inner.columns_) m.columns_.push_back(apply(c));
  if (word_ && inner.word_) {
    std::vector<int> w = *word_;
    w.insert(w.end(), inner.word_->begin(), inner.word_->end());
    m.word_ = std::move(w);
  }
  return m;
}

IsometryMap IsometryMap::power(int t) const {
  if (t < 0) throw DomainError("negative power of an isometry");
  IsometryMap p = identity(dim());
  for (int k = 0; k < t; ++k) p = compose(p);
  return p;
}

bool IsometryMap::is_identity() const {
  for (std::size_t k = 0; k < dim(); ++k) {
    if (columns_[k] != RationalVector::unit(dim(), k)) return false;
  }
  return true;
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  // (L1, t1) o (L2, t2) = (L1 L2, L1 t2 + t1).
  return AffineMap(linear_.compose(inner.linear_), linear_.apply(inner.translation_) + translation_);
}

IsometryMap longest_in_subset(const RootSystem& rs, const std::vector<int>& subset) {
  RationalVector v(rs.ambient_dim());
  for (int i : subset) v = v - rs.coweights().at(static_cast<std::size_t>(i));
  std::vector<int> applied;
  for (;;) {
    auto it = std::find_if(subset.begin(), subset.end(), [&](int i) {
      return dot(rs.simple()[static_cast<std::size_t>(i - 1)], v).sign() < 0;
    });
    if (it == subset.end()) break;
    v = reflect(rs.simple()[static_cast<std::size_t>(*it - 1)], v);
    applied.push_back(*it);
  }
  std::reverse(applied.begin(), applied.end());
  IsometryMap w = IsometryMap::from_word(rs, std::move(applied));
  // The longest element maps the simple roots of the subset onto their negatives.
  for (int i : subset) {
    RationalVector image = -w.apply(rs.simple()[static_cast<std::size_t>(i - 1)]);
    bool found = std::any_of(subset.begin(), subset.end(), [&](int k) {
      return rs.simple()[static_cast<std::size_t>(k - 1)] == image;
    });
    if (!found) throw ConsistencyError("descent walk did not reach the longest element");
  }
  return w;
}

IsometryMap longest_element(const RootSystem& rs) {
  std::vector<int> all(static_cast<std::size_t>(rs.rank()));
  std::iota(all.begin(), all.end(), 1);
  return longest_in_subset(rs, all);
}

std::vector<int> minuscule_indices(const RootSystem& rs) {
  std::vector<int> j;
  for (std::size_t i = 0; i < rs.marks().size(); ++i) {
    if (rs.marks()[i] == 1) j.push_back(static_cast<int>(i));
  }
  return j;
}

IsometryMap parabolic_longest(const RootSystem& rs, int j) {
  auto J = minuscule_indices(rs);
  if (std::find(J.begin(), J.end(), j) == J.end()) {
    throw DomainError("index " + std::to_string(j) + " is not minuscule for " +
                      rs.label().to_string());
  }
  std::vector<int> subset;
  for (int i = 1; i <= rs.rank(); ++i) {
    if (i != j) subset.push_back(i);
  }
  return longest_in_subset(rs, subset);
}

Permutation sigma_of(const RootSystem& rs, const IsometryMap& omega) {
  const auto& ext = rs.extended();
  std::vector<int> im;
  for (std::size_t i = 0; i < ext.size(); ++i) {
    RationalVector image = omega.apply(ext[i]);
    auto it = std::find(ext.begin(), ext.end(), image);
    if (it == ext.end()) {
      throw ConsistencyError("image of alpha_" + std::to_string(i) +
                             " is not in the extended basis");
    }
    im.push_back(static_cast<int>(it - ext.begin()));
  }
  return Permutation(std::move(im));
}

Permutation sigma_hat_of(const RootSystem& rs, const AffineMap& omega_hat) {
  auto verts = alcove_vertices(rs);
  std::vector<int> im;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    RationalVector image = omega_hat.apply(verts[i]);
    auto it = std::find(verts.begin(), verts.end(), image);
    if (it == verts.end()) {
      throw ConsistencyError("image of alcove vertex " + std::to_string(i) + " is not a vertex");
    }
    im.push_back(static_cast<int>(it - verts.begin()));
  }
  return Permutation(std::move(im));
}

StabilizerElement stabilizer_element(const RootSystem& rs, int j) {
  StabilizerElement e;
  e.j = j;
  IsometryMap w0 = longest_element(rs);
  e.omega = j == 0 ? IsometryMap::identity(rs.ambient_dim())
                   : parabolic_longest(rs, j).compose(w0);
  e.omega_hat = AffineMap(e.omega, rs.coweights().at(static_cast<std::size_t>(j)));
  e.sigma = sigma_of(rs, e.omega);
  e.sigma_hat = sigma_hat_of(rs, e.omega_hat);
  e.order = 1;
  for (IsometryMap p = e.omega; !p.is_identity(); p = e.omega.compose(p)) ++e.order;
  return e;
}

std::vector<StabilizerElement> build_stabilizer(const RootSystem& rs) {
  if (!rs.label().in_classification() || rs.label().family == Family::BC) {
    throw DomainError("stabilizer requires a reduced irreducible system");
  }
  std::vector<StabilizerElement> out;
  for (int j : minuscule_indices(rs)) out.push_back(stabilizer_element(rs, j));
  return out;
}

std::string GroupLabel::to_string() const {
  switch (kind) {
    case Kind::Trivial: return "1";
    case Kind::Cyclic: return "Z/" + std::to_string(order) + "Z";
    case Kind::Klein: return "Z/2Z x Z/2Z";
  }
  return "?";
}

GroupLabel group_structure(std::span<const IsometryMap> elements) {
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      IsometryMap ab = a.compose(b);
      if (std::find(elements.begin(), elements.end(), ab) == elements.end()) {
        throw ClosureError("product of stabilizer elements leaves the set");
      }
    }
  }
  const int n = static_cast<int>(elements.size());
  if (n <= 1) return {GroupLabel::Kind::Trivial, 1};
  int max_order = 1;
  for (const auto& a : elements) {
    int o = 1;
    for (IsometryMap p = a; !p.is_identity(); p = a.compose(p)) ++o;
    max_order = std::max(max_order, o);
  }
  if (max_order == n) return {GroupLabel::Kind::Cyclic, n};
  if (n == 4 && max_order == 2) return {GroupLabel::Kind::Klein, 4};
  throw ClassificationError("group of order " + std::to_string(n) + " is neither cyclic nor Klein");
}

GroupLabel group_structure(std::span<const StabilizerElement> elements) {
  std::vector<IsometryMap> maps;
  for (const auto& e : elements) maps.push_back(e.omega);
  return group_structure(maps);
}

}  // namespace rootfold
