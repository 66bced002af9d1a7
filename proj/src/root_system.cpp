#include "rootfold/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rootfold/errors.hpp"

namespace rootfold {

namespace {

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
    case Family::Empty: return "Empty";
  }
  return "?";
}

// Vector in R^n from integer (or half-integer when halve) coordinates.
RationalVector vec(std::size_t n, std::initializer_list<std::pair<std::size_t, int>> terms,
                   bool halve = false) {
  std::vector<Rational> c(n, Rational(0));
  for (auto [i, v] : terms) c.at(i) += halve ? Rational(v, 2) : Rational(v);
  return RationalVector(std::move(c));
}

RationalVector half_signs(const std::vector<int>& signs) {
  std::vector<Rational> c;
  for (int s : signs) c.emplace_back(s, 2);
  return RationalVector(std::move(c));
}

void add_pm(std::vector<RationalVector>& out, const RationalVector& v) {
  out.push_back(v);
  out.push_back(-v);
}

// +-e_i +- e_j for 0 <= i < j < k inside R^n.
void add_long_type_d(std::vector<RationalVector>& out, std::size_t n, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      add_pm(out, vec(n, {{i, 1}, {j, 1}}));
      add_pm(out, vec(n, {{i, 1}, {j, -1}}));
    }
  }
}

// Sign patterns of length k as +-1 vectors.
std::vector<std::vector<int>> sign_patterns(std::size_t k) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = (mask >> i & 1u) ? -1 : 1;
    out.push_back(std::move(s));
  }
  return out;
}

int product(const std::vector<int>& s) {
  return std::accumulate(s.begin(), s.end(), 1, std::multiplies<>());
}

// Bourbaki simple roots of E_r (r = 6, 7, 8) inside R^8.
std::vector<RationalVector> e_simple(int r) {
  std::vector<RationalVector> s;
  s.push_back(half_signs({1, -1, -1, -1, -1, -1, -1, 1}));
  s.push_back(vec(8, {{0, 1}, {1, 1}}));
  for (int i = 3; i <= r; ++i) {
    s.push_back(vec(8, {{static_cast<std::size_t>(i - 2), 1}, {static_cast<std::size_t>(i - 3), -1}}));
  }
  return s;
}

}  // namespace

TypeLabel TypeLabel::parse(std::string_view text) {
  std::string s(text);
  if (s == "Empty" || s == "0" || s == "∅") return {Family::Empty, 0};
  std::size_t pos = 0;
  Family f;
  if (s.rfind("BC", 0) == 0) {
    f = Family::BC;
    pos = 2;
  } else if (!s.empty()) {
    switch (s[0]) {
      case 'A': f = Family::A; break;
      case 'B': f = Family::B; break;
      case 'C': f = Family::C; break;
      case 'D': f = Family::D; break;
      case 'E': f = Family::E; break;
      case 'F': f = Family::F; break;
      case 'G': f = Family::G; break;
      default: throw DomainError("unknown type label '" + s + "'");
    }
    pos = 1;
  } else {
    throw DomainError("empty type label");
  }
  std::string digits = s.substr(pos);
  if (digits.empty() || digits.size() > 4 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("malformed type label '" + s + "'");
  }
  TypeLabel label{f, std::stoi(digits)};
  if (!label.in_classification()) {
    throw DomainError("type " + s + " is outside the classification");
  }
  return label;
}

std::string TypeLabel::to_string() const {
  if (family == Family::Empty) return "Empty";
  return family_name(family) + std::to_string(rank);
}

bool TypeLabel::in_classification() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
    case Family::BC: return rank >= 1;
    case Family::Empty: return rank == 0;
  }
  return false;
}

TypeLabel TypeLabel::canonical() const {
  if ((family == Family::B || family == Family::C) && rank == 1) return {Family::A, 1};
  if (family == Family::C && rank == 2) return {Family::B, 2};
  return *this;
}

Realization realize(const TypeLabel& label, const BuildOptions& options) {
  if (!label.in_classification()) {
    throw DomainError("type " + label.to_string() + " is outside the classification");
  }
  const int l = label.rank;
  if (label.family != Family::Empty && l > options.max_rank) {
    throw DomainError("rank " + std::to_string(l) + " exceeds the configured maximum " +
                      std::to_string(options.max_rank));
  }
  const std::size_t ul = static_cast<std::size_t>(l);
  Realization r;
  auto chain_simple = [&](std::size_t n) {
    for (std::size_t i = 0; i + 1 < ul; ++i) r.simple.push_back(vec(n, {{i, 1}, {i + 1, -1}}));
  };
  switch (label.family) {
    case Family::Empty:
      break;
    case Family::A:
      r.ambient_dim = ul + 1;
      for (std::size_t i = 0; i <= ul; ++i) {
        for (std::size_t j = 0; j <= ul; ++j) {
          if (i != j) r.roots.push_back(vec(ul + 1, {{i, 1}, {j, -1}}));
        }
      }
      for (std::size_t i = 0; i < ul; ++i) r.simple.push_back(vec(ul + 1, {{i, 1}, {i + 1, -1}}));
      break;
    case Family::B:
    case Family::C:
    case Family::BC:
    case Family::D:
      r.ambient_dim = ul;
      add_long_type_d(r.roots, ul, ul);
      if (label.family != Family::D) {
        for (std::size_t i = 0; i < ul; ++i) {
          if (label.family != Family::C) add_pm(r.roots, vec(ul, {{i, 1}}));
          if (label.family != Family::B) add_pm(r.roots, vec(ul, {{i, 2}}));
        }
      }
      chain_simple(ul);
      if (label.family == Family::C) {
        r.simple.push_back(vec(ul, {{ul - 1, 2}}));
      } else if (label.family == Family::D) {
        r.simple.push_back(vec(ul, {{ul - 2, 1}, {ul - 1, 1}}));
      } else {
        r.simple.push_back(vec(ul, {{ul - 1, 1}}));
      }
      break;
    case Family::E: {
      r.ambient_dim = 8;
      if (l == 8) {
        add_long_type_d(r.roots, 8, 8);
        for (const auto& s : sign_patterns(8)) {
          if (product(s) == 1) r.roots.push_back(half_signs(s));
        }
      } else {
        const std::size_t k = l == 6 ? 5 : 6;
        const int parity = l == 6 ? 1 : -1;
        add_long_type_d(r.roots, 8, k);
        if (l == 7) add_pm(r.roots, vec(8, {{7, 1}, {6, -1}}));
        for (auto s : sign_patterns(k)) {
          if (product(s) != parity) continue;
          if (l == 6) s.insert(s.end(), {-1, -1, 1});
          else s.insert(s.end(), {-1, 1});
          add_pm(r.roots, half_signs(s));
        }
      }
      r.simple = e_simple(l);
      break;
    }
    case Family::F:
      r.ambient_dim = 4;
      add_long_type_d(r.roots, 4, 4);
      for (std::size_t i = 0; i < 4; ++i) add_pm(r.roots, vec(4, {{i, 1}}));
      for (const auto& s : sign_patterns(4)) r.roots.push_back(half_signs(s));
      r.simple = {vec(4, {{1, 1}, {2, -1}}), vec(4, {{2, 1}, {3, -1}}), vec(4, {{3, 1}}),
                  half_signs({1, -1, -1, -1})};
      break;
    case Family::G:
      r.ambient_dim = 3;
      for (const auto& v :
           {vec(3, {{0, 1}, {1, -1}}), vec(3, {{0, -2}, {1, 1}, {2, 1}}), vec(3, {{2, 1}, {0, -1}}),
            vec(3, {{2, 1}, {1, -1}}), vec(3, {{0, 1}, {1, -2}, {2, 1}}),
            vec(3, {{0, -1}, {1, -1}, {2, 2}})}) {
        add_pm(r.roots, v);
      }
      r.simple = {vec(3, {{0, 1}, {1, -1}}), vec(3, {{0, -2}, {1, 1}, {2, 1}})};
      break;
  }
  return r;
}

RootSystem RootSystem::build(const TypeLabel& label, const BuildOptions& options) {
  Realization r = realize(label, options);
  return from_simple(label, r.ambient_dim, std::move(r.roots), std::move(r.simple));
}

RootSystem RootSystem::from_simple(TypeLabel label, std::size_t ambient_dim,
                                   std::vector<RationalVector> roots,
                                   std::vector<RationalVector> simple) {
  RootSystem rs;
  rs.label_ = label;
  rs.ambient_dim_ = ambient_dim;
  rs.simple_ = std::move(simple);
  const std::size_t l = rs.simple_.size();
  for (const auto& v : roots) {
    if (v.dim() != ambient_dim) throw StructuralError("root of wrong dimension " + v.to_string());
  }
  {
    std::set<RationalVector> seen(roots.begin(), roots.end());
    if (seen.size() != roots.size()) throw ConsistencyError("duplicate roots in realization");
  }

  rs.coweights_.push_back(RationalVector(ambient_dim));
  for (std::size_t j = 0; j < l; ++j) {
    std::vector<Constraint> cons;
    for (std::size_t i = 0; i < l; ++i) cons.push_back({rs.simple_[i], Rational(i == j ? 1 : 0)});
    rs.coweights_.push_back(solve_in_span(rs.simple_, cons, ambient_dim));
  }

  struct Entry {
    int height;
    std::vector<int> coeffs;
    RationalVector root;
  };
  std::vector<Entry> pos;
  for (const auto& beta : roots) {
    std::vector<int> c(l);
    RationalVector rebuilt(ambient_dim);
    int sign = 0;
    for (std::size_t i = 0; i < l; ++i) {
      Rational ci = dot(beta, rs.coweights_[i + 1]);
      if (!ci.is_integer()) {
        throw ConsistencyError("root " + beta.to_string() + " has non-integral coefficients");
      }
      c[i] = static_cast<int>(ci.to_long());
      if (c[i] != 0) {
        int s = c[i] > 0 ? 1 : -1;
        if (sign != 0 && s != sign) {
          throw ConsistencyError("root " + beta.to_string() + " has sign-mixed coefficients");
        }
        sign = s;
        rebuilt = rebuilt + Rational(c[i]) * rs.simple_[i];
      }
    }
    if (rebuilt != beta) {
      throw ConsistencyError("root " + beta.to_string() + " lies outside span of the simple roots");
    }
    if (sign > 0) pos.push_back({std::accumulate(c.begin(), c.end(), 0), c, beta});
  }
  if (2 * pos.size() != roots.size()) throw ConsistencyError("root set is not symmetric");
  std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coeffs < b.coeffs;
  });
  for (const auto& e : pos) {
    rs.positive_.push_back(e.root);
    rs.positive_coeffs_.push_back(e.coeffs);
  }
  rs.roots_ = rs.positive_;
  for (const auto& p : rs.positive_) rs.roots_.push_back(-p);
  for (std::size_t i = 0; i < rs.roots_.size(); ++i) rs.index_.emplace(rs.roots_[i], i);
  for (const auto& s : rs.simple_) {
    if (!rs.contains(s)) throw ConsistencyError("simple root " + s.to_string() + " is not a root");
  }

  rs.marks_.push_back(1);
  if (!pos.empty()) {
    if (pos.size() >= 2 && pos[pos.size() - 2].height == pos.back().height) {
      throw ConsistencyError("height-maximal root is not unique");
    }
    rs.highest_ = pos.back().root;
    for (int c : pos.back().coeffs) rs.marks_.push_back(c);
    rs.extended_.push_back(-rs.highest_);
  } else {
    rs.highest_ = RationalVector(ambient_dim);
  }
  for (const auto& s : rs.simple_) rs.extended_.push_back(s);
  return rs;
}

std::optional<std::size_t> RootSystem::index_of(const RationalVector& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_positive(const RationalVector& v) const {
  auto i = index_of(v);
  return i && *i < positive_.size();
}

std::vector<int> coefficients(const RootSystem& rs, const RationalVector& beta) {
  if (beta.dim() != rs.ambient_dim()) throw StructuralError("coefficients: dimension mismatch");
  std::vector<int> c;
  RationalVector rebuilt(rs.ambient_dim());
  for (int i = 0; i < rs.rank(); ++i) {
    Rational ci = dot(beta, rs.coweights()[static_cast<std::size_t>(i) + 1]);
    if (!ci.is_integer()) {
      throw DomainError(beta.to_string() + " has non-integral coefficient " + ci.to_string());
    }
    c.push_back(static_cast<int>(ci.to_long()));
    rebuilt = rebuilt + ci * rs.simple()[static_cast<std::size_t>(i)];
  }
  if (rebuilt != beta) throw DomainError(beta.to_string() + " is outside span of the simple roots");
  return c;
}

int height(const RootSystem& rs, const RationalVector& beta) {
  auto c = coefficients(rs, beta);
  return std::accumulate(c.begin(), c.end(), 0);
}

const RationalVector& highest_root(const RootSystem& rs) { return rs.highest(); }

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::None: return "none";
    case Axiom::R1: return "R1";
    case Axiom::R2: return "R2";
    case Axiom::R3: return "R3";
  }
  return "?";
}

AxiomVerdict verify_axioms(std::span<const RationalVector> roots,
                           std::optional<std::size_t> expected_rank) {
  AxiomVerdict v;
  auto fail = [&](Axiom a, std::optional<RationalVector> x, std::optional<RationalVector> y,
                  std::string msg) {
    v.ok = false;
    v.axiom = a;
    v.alpha = std::move(x);
    v.beta = std::move(y);
    v.message = std::move(msg);
    return v;
  };
  std::unordered_map<RationalVector, int> set;
  for (const auto& r : roots) {
    if (!roots.empty() && r.dim() != roots[0].dim()) {
      return fail(Axiom::R1, r, std::nullopt, "roots live in different dimensions");
    }
    if (r.is_zero()) return fail(Axiom::R1, r, std::nullopt, "zero vector in root set");
    if (!set.emplace(r, 0).second) return fail(Axiom::R1, r, std::nullopt, "duplicate root");
  }
  if (expected_rank) {
    std::size_t rk = rank_of(roots);
    if (rk != *expected_rank) {
      return fail(Axiom::R1, std::nullopt, std::nullopt,
                  "roots span dimension " + std::to_string(rk) + ", expected " +
                      std::to_string(*expected_rank));
    }
  }
  for (const auto& a : roots) {
    for (const auto& b : roots) {
      Rational p = pairing(a, b);
      if (!p.is_integer()) {
        return fail(Axiom::R3, a, b, "pairing (alpha^vee, beta) = " + p.to_string());
      }
      RationalVector image = p.is_zero() ? b : b - p * a;
      if (!set.contains(image)) {
        return fail(Axiom::R2, a, b, "reflection image " + image.to_string() + " is not a root");
      }
    }
  }
  return v;
}

bool is_reduced(std::span<const RationalVector> roots) {
  std::unordered_map<RationalVector, int> set;
  for (const auto& r : roots) set.emplace(r, 0);
  for (const auto& r : roots) {
    if (set.contains(Rational(2) * r)) return false;
  }
  return true;
}

IntegerMatrix cartan_matrix(std::span<const RationalVector> simple) {
  IntegerMatrix m(simple.size(), std::vector<mpz_class>(simple.size()));
  for (std::size_t i = 0; i < simple.size(); ++i) {
    for (std::size_t j = 0; j < simple.size(); ++j) {
      Rational p = pairing(simple[i], simple[j]);
      if (!p.is_integer()) throw DomainError("non-integral Cartan entry");
      m[i][j] = p.numerator();
    }
  }
  return m;
}

long index_of_connection(const RootSystem& rs) {
  mpz_class d = determinant(cartan_matrix(rs.simple()));
  return mpz_class(::abs(d)).get_si();
}

std::vector<long> connection_invariants(const RootSystem& rs) {
  std::vector<long> out;
  for (const auto& d : smith_invariants(cartan_matrix(rs.simple()))) {
    if (d != 1) out.push_back(d.get_si());
  }
  return out;
}

std::vector<RationalVector> alcove_vertices(const RootSystem& rs) {
  std::vector<RationalVector> v;
  for (std::size_t i = 0; i < rs.coweights().size(); ++i) {
    v.push_back(rs.coweights()[i] / Rational(rs.marks()[i]));
  }
  return v;
}

}  // namespace rootfold
