#pragma once

// Exact scalars and the small dense linear algebra used by the solvers.
//
// Rational is a thin value wrapper around GMP's mpq_class. All arithmetic
// results are canonical (reduced, positive denominator); nothing in this
// library ever touches floating point.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "polarlp/errors.hpp"

namespace polarlp {

class Rational {
public:
  Rational() = default;
  Rational(int v) : q_(v) {} // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {} // NOLINT(google-explicit-constructor)
  Rational(long long v);      // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class &q);

  /// Parses `[+-]?digits(/digits)?`; the denominator must be positive.
  /// Throws DomainError on malformed text.
  static Rational parse(std::string_view text);

  std::string to_string() const;

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  std::string numerator_string() const { return q_.get_num().get_str(); }
  std::string denominator_string() const { return q_.get_den().get_str(); }

  /// Reduced-form invariant: gcd(|num|, den) = 1 and den > 0.
  bool is_canonical() const;

  const mpq_class &raw() const { return q_; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  /// Throws DomainError for zero.
  Rational inverse() const;

  Rational &operator+=(const Rational &o);
  Rational &operator-=(const Rational &o);
  Rational &operator*=(const Rational &o);
  /// Throws DomainError on division by zero.
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class q_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

/// A Rational or one of the two infinities. Used for optimal values,
/// support and radial functions.
class ExtendedRational {
public:
  enum class Kind { Finite, PlusInfinity, MinusInfinity };

  ExtendedRational() = default;
  ExtendedRational(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {} // NOLINT
  ExtendedRational(int v) : ExtendedRational(Rational(v)) {}                   // NOLINT

  static ExtendedRational plus_infinity() { return ExtendedRational(Kind::PlusInfinity); }
  static ExtendedRational minus_infinity() { return ExtendedRational(Kind::MinusInfinity); }

  /// Accepts everything Rational::parse does, plus `+inf`, `inf` and `-inf`.
  static ExtendedRational parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_plus_infinity() const { return kind_ == Kind::PlusInfinity; }
  bool is_minus_infinity() const { return kind_ == Kind::MinusInfinity; }
  /// Throws DomainError for an infinity.
  const Rational &value() const;

  std::string to_string() const;

  ExtendedRational operator-() const;
  /// 1/(+-inf) = 0, 1/0 = +inf (the zero is read as approached from above).
  ExtendedRational reciprocal() const;

  /// inf - inf is rejected with DomainError.
  friend ExtendedRational operator+(const ExtendedRational &a, const ExtendedRational &b);
  friend ExtendedRational operator-(const ExtendedRational &a, const ExtendedRational &b) {
    return a + (-b);
  }
  /// 0 * inf is rejected with DomainError.
  friend ExtendedRational operator*(const ExtendedRational &a, const ExtendedRational &b);

  friend bool operator==(const ExtendedRational &a, const ExtendedRational &b);
  friend std::strong_ordering operator<=>(const ExtendedRational &a, const ExtendedRational &b);

private:
  explicit ExtendedRational(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Rational value_;
};

std::ostream &operator<<(std::ostream &os, const ExtendedRational &r);

class Vector {
public:
  Vector() = default;
  explicit Vector(std::size_t dim) : entries_(dim) {}
  Vector(std::initializer_list<Rational> init) : entries_(init) {}
  explicit Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  static Vector zero(std::size_t dim) { return Vector(dim); }
  static Vector unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return entries_.size(); }
  bool is_zero() const;

  Rational &operator[](std::size_t i) { return entries_[i]; }
  const Rational &operator[](std::size_t i) const { return entries_[i]; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }

  std::span<const Rational> entries() const { return entries_; }
  void push_back(Rational r) { entries_.push_back(std::move(r)); }

  Vector operator-() const;
  Vector &operator+=(const Vector &o);
  Vector &operator-=(const Vector &o);
  Vector &operator*=(const Rational &s);
  Vector &operator/=(const Rational &s);
  friend Vector operator+(Vector a, const Vector &b) { return a += b; }
  friend Vector operator-(Vector a, const Vector &b) { return a -= b; }
  friend Vector operator*(Vector a, const Rational &s) { return a *= s; }
  friend Vector operator*(const Rational &s, Vector a) { return a *= s; }
  friend Vector operator/(Vector a, const Rational &s) { return a /= s; }

  friend bool operator==(const Vector &, const Vector &) = default;
  /// Lexicographic; only meaningful for equal dimensions.
  friend std::strong_ordering operator<=>(const Vector &a, const Vector &b);

  /// Space separated rationals, no trailing newline.
  std::string to_string() const;
  /// Parses whitespace separated rationals.
  static Vector parse(std::string_view text);

private:
  std::vector<Rational> entries_;
};

std::ostream &operator<<(std::ostream &os, const Vector &v);

/// Dense m x n matrix stored by rows. The column count is stored separately
/// so that a matrix with no rows still knows its width.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t m, std::size_t n);
  /// All rows must have dimension n.
  Matrix(std::vector<Vector> rows, std::size_t n);
  /// Infers n from the first row; requires at least one row.
  Matrix(std::initializer_list<Vector> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const Vector &row(std::size_t i) const { return rows_[i]; }
  Vector &row(std::size_t i) { return rows_[i]; }
  const Rational &operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Rational &operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }

  Vector column(std::size_t j) const;
  Matrix transpose() const;
  void append_row(Vector r);

  /// A x
  Vector apply(const Vector &x) const;

  std::span<const Vector> row_span() const { return rows_; }

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  std::vector<Vector> rows_;
  std::size_t cols_ = 0;
};

/// Exact inner product. Throws DimensionError on mismatch.
Rational dot(const Vector &u, const Vector &v);

/// Sum over i of y_i a_i, i.e. A^T y.
Vector transpose_apply(const Matrix &a, const Vector &y);

/// Rank by exact Gaussian elimination.
std::size_t rank(const Matrix &a);

/// One solution of a x = rhs with every non-pivot variable set to zero;
/// nullopt when the system is inconsistent.
std::optional<Vector> solve_particular(const Matrix &a, const Vector &rhs);

} // namespace polarlp
