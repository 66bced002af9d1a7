#include "rootfold/exact.hpp"

#include <algorithm>
#include <climits>
#include <regex>
#include <sstream>

#include "rootfold/errors.hpp"

namespace rootfold {

namespace {

std::size_t hash_mpz(const mpz_class& z) {
  std::size_t h = static_cast<std::size_t>(mpz_size(z.get_mpz_t()));
  for (std::size_t i = 0; i < mpz_size(z.get_mpz_t()); ++i) {
    h = h * 1000003u ^ static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i));
  }
  return h * 31u + static_cast<std::size_t>(sgn(z) + 1);
}

void require_same_dim(const RationalVector& x, const RationalVector& y, const char* op) {
  if (x.dim() != y.dim()) {
    throw StructuralError(std::string(op) + ": dimension mismatch (" + std::to_string(x.dim()) +
                          " vs " + std::to_string(y.dim()) + ")");
  }
}

using Matrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = Rational(1) / m[row][col];
    for (auto& e : m[row]) e *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Solves A y = b (A given row-wise, n unknowns); requires a unique solution.
std::vector<Rational> solve_unique(Matrix a, const std::vector<Rational>& b, std::size_t n) {
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  auto pivots = row_reduce(a, n);
  for (std::size_t r = pivots.size(); r < a.size(); ++r) {
    if (!a[r][n].is_zero()) throw SolverError("inconsistent linear system");
  }
  if (pivots.size() != n) {
    throw SolverError("underdetermined linear system (rank " + std::to_string(pivots.size()) +
                      " < " + std::to_string(n) + ")");
  }
  std::vector<Rational> y(n);
  for (std::size_t r = 0; r < n; ++r) y[pivots[r]] = a[r][n];
  return y;
}

}  // namespace

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) {
  if (value_.get_den() == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  static const std::regex pattern(R"(-?[0-9]+(/[0-9]+)?)");
  std::string s(text);
  if (!std::regex_match(s, pattern)) throw DomainError("malformed rational '" + s + "'");
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw DomainError("malformed rational '" + s + "'");
  return Rational(std::move(v));
}

long Rational::to_long() const {
  if (!is_integer()) throw DomainError("non-integral value " + to_string());
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw DomainError("integer out of range " + to_string());
  return n.get_si();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::size_t Rational::hash() const {
  return hash_mpz(value_.get_num()) * 7919u ^ hash_mpz(value_.get_den());
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

RationalVector::RationalVector(std::size_t dim) : coords_(dim, Rational(0)) {}

RationalVector RationalVector::unit(std::size_t dim, std::size_t k) {
  std::vector<Rational> c(dim, Rational(0));
  c.at(k) = 1;
  return RationalVector(std::move(c));
}

bool RationalVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.is_zero(); });
}

int RationalVector::leading_sign() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return c.sign();
  }
  return 0;
}

std::string RationalVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ", ";
    out << coords_[i].to_string();
  }
  out << ')';
  return out.str();
}

RationalVector RationalVector::operator-() const {
  std::vector<Rational> c;
  c.reserve(coords_.size());
  for (const auto& x : coords_) c.push_back(-x);
  return RationalVector(std::move(c));
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  require_same_dim(a, b, "add");
  std::vector<Rational> c;
  c.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c.push_back(a[i] + b[i]);
  return RationalVector(std::move(c));
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  require_same_dim(a, b, "subtract");
  std::vector<Rational> c;
  c.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) c.push_back(a[i] - b[i]);
  return RationalVector(std::move(c));
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
  std::vector<Rational> c;
  c.reserve(v.dim());
  for (const auto& x : v.coords()) c.push_back(s * x);
  return RationalVector(std::move(c));
}

RationalVector operator/(const RationalVector& v, const Rational& s) {
  if (s.is_zero()) throw DomainError("division of vector by zero");
  return (Rational(1) / s) * v;
}

std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                b.coords_.begin(), b.coords_.end());
}

std::size_t RationalVector::hash() const {
  std::size_t h = coords_.size();
  for (const auto& c : coords_) h = h * 0x9e3779b97f4a7c15ull ^ c.hash();
  return h;
}

Rational dot(const RationalVector& x, const RationalVector& y) {
  require_same_dim(x, y, "dot");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) acc += x[i].raw() * y[i].raw();
  return Rational(std::move(acc));
}

Rational norm2(const RationalVector& x) { return dot(x, x); }

RationalVector coroot(const RationalVector& alpha) {
  if (alpha.is_zero()) throw DomainError("coroot of the zero vector");
  return (Rational(2) / norm2(alpha)) * alpha;
}

Rational pairing(const RationalVector& alpha, const RationalVector& x) {
  if (alpha.is_zero()) throw DomainError("pairing with the zero vector");
  return Rational(2) * dot(alpha, x) / norm2(alpha);
}

RationalVector reflect(const RationalVector& alpha, const RationalVector& x) {
  if (alpha.is_zero()) throw DomainError("reflection in the zero vector");
  Rational p = pairing(alpha, x);
  if (p.is_zero()) return x;
  return x - p * alpha;
}

RationalVector solve_in_span(std::span<const RationalVector> basis,
                             std::span<const Constraint> constraints, std::size_t ambient_dim) {
  for (const auto& b : basis) {
    if (b.dim() != ambient_dim) throw StructuralError("solve_in_span: basis dimension mismatch");
  }
  for (const auto& c : constraints) {
    if (c.normal.dim() != ambient_dim) {
      throw StructuralError("solve_in_span: constraint dimension mismatch");
    }
  }
  if (rank_of(basis) != basis.size()) throw SolverError("solve_in_span: basis is dependent");
  Matrix a;
  std::vector<Rational> rhs;
  for (const auto& c : constraints) {
    std::vector<Rational> row;
    for (const auto& b : basis) row.push_back(dot(c.normal, b));
    a.push_back(std::move(row));
    rhs.push_back(c.value);
  }
  auto y = solve_unique(std::move(a), rhs, basis.size());
  RationalVector x(ambient_dim);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!y[k].is_zero()) x = x + y[k] * basis[k];
  }
  return x;
}

std::size_t rank_of(std::span<const RationalVector> rows) {
  if (rows.empty()) return 0;
  Matrix m;
  for (const auto& r : rows) {
    if (r.dim() != rows[0].dim()) throw StructuralError("rank: dimension mismatch");
    m.push_back(r.coords());
  }
  return row_reduce(m, rows[0].dim()).size();
}

std::vector<Rational> coordinates_in(std::span<const RationalVector> basis,
                                     const RationalVector& target) {
  // Columns are basis vectors: one equation per ambient coordinate.
  Matrix a(target.dim(), std::vector<Rational>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    require_same_dim(basis[k], target, "coordinates_in");
    for (std::size_t i = 0; i < target.dim(); ++i) a[i][k] = basis[k][i];
  }
  return solve_unique(std::move(a), target.coords(), basis.size());
}

mpz_class determinant(const IntegerMatrix& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  Matrix a;
  for (const auto& row : m) {
    if (row.size() != n) throw StructuralError("determinant: matrix not square");
    std::vector<Rational> r;
    for (const auto& e : row) r.emplace_back(mpq_class(e));
    a.push_back(std::move(r));
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det.numerator();
}

std::vector<mpz_class> smith_invariants(IntegerMatrix m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::vector<mpz_class> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Move a smallest nonzero entry of the trailing block to (t, t).
    auto place_pivot = [&]() -> bool {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (m[r][c] != 0 && (pr == rows || ::abs(m[r][c]) < ::abs(m[pr][pc]))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == rows) return false;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      return true;
    };
    if (!place_pivot()) break;
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        mpz_class q = m[r][t] / m[t][t];
        if (q != 0) {
          for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        }
        if (m[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        mpz_class q = m[t][c] / m[t][t];
        if (q != 0) {
          for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        }
        if (m[t][c] != 0) clean = false;
      }
      if (clean) {
        // Divisibility: fold any non-multiple in the trailing block into row t.
        bool divides = true;
        for (std::size_t r = t + 1; r < rows && divides; ++r) {
          for (std::size_t c = t + 1; c < cols; ++c) {
            if (m[r][c] % m[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) m[t][k] += m[r][k];
              divides = false;
              break;
            }
          }
        }
        if (divides) break;
      }
      place_pivot();
    }
    out.push_back(::abs(m[t][t]));
  }
  return out;
}

}  // namespace rootfold
