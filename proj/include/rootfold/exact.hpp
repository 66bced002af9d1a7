#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rootfold {

// Exact rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : value_(static_cast<long>(v)) {}  // NOLINT(implicit)
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  // Accepts "p" or "p/q" with optional leading '-'.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  // Throws DomainError unless integral and representable as long.
  long to_long() const;
  std::string to_string() const { return value_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class value_;
};

Rational abs(const Rational& x);

// Immutable coordinate vector; equality and ordering are exact and lexicographic.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim);
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  static RationalVector unit(std::size_t dim, std::size_t k);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;
  // Sign of the first nonzero coordinate; 0 for the zero vector.
  int leading_sign() const;
  std::string to_string() const;

  RationalVector operator-() const;
  friend RationalVector operator+(const RationalVector& a, const RationalVector& b);
  friend RationalVector operator-(const RationalVector& a, const RationalVector& b);
  friend RationalVector operator*(const Rational& s, const RationalVector& v);
  friend RationalVector operator/(const RationalVector& v, const Rational& s);
  friend bool operator==(const RationalVector& a, const RationalVector& b) = default;
  friend std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b);

  std::size_t hash() const;

 private:
  std::vector<Rational> coords_;
};

struct RationalVectorHash {
  std::size_t operator()(const RationalVector& v) const { return v.hash(); }
};

Rational dot(const RationalVector& x, const RationalVector& y);
Rational norm2(const RationalVector& x);
RationalVector coroot(const RationalVector& alpha);
RationalVector reflect(const RationalVector& alpha, const RationalVector& x);
// Pairing (alpha^vee, x).
Rational pairing(const RationalVector& alpha, const RationalVector& x);

struct Constraint {
  RationalVector normal;
  Rational value;
};

// Unique x in span(basis) with dot(normal, x) = value for every constraint.
// ambient_dim fixes the result dimension when basis is empty.
RationalVector solve_in_span(std::span<const RationalVector> basis,
                             std::span<const Constraint> constraints, std::size_t ambient_dim);

// Row rank of the given vectors.
std::size_t rank_of(std::span<const RationalVector> rows);

// Coordinates y with sum_k y_k basis[k] = target for an independent basis.
// Throws SolverError when target is outside the span.
std::vector<Rational> coordinates_in(std::span<const RationalVector> basis,
                                     const RationalVector& target);

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

mpz_class determinant(const IntegerMatrix& m);
// Nonnegative invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<mpz_class> smith_invariants(IntegerMatrix m);

}  // namespace rootfold

template <>
struct std::hash<rootfold::RationalVector> {
  std::size_t operator()(const rootfold::RationalVector& v) const { return v.hash(); }
};
