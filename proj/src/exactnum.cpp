#include "polarlp/exactnum.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace polarlp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      return false;
  return true;
}

} // namespace

Rational::Rational(long long v) : q_(mpz_class(std::to_string(v))) {}

Rational::Rational(long long num, long long den)
    : q_(mpz_class(std::to_string(num)), mpz_class(std::to_string(den))) {
  if (den == 0)
    throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw DomainError("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw DomainError("zero denominator in '" + std::string(text) + "'");
  if (negative)
    n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  Rational r;
  r.q_ = std::move(q);
  return r;
}

std::string Rational::to_string() const { return q_.get_str(10); }

bool Rational::is_integer() const { return q_.get_den() == 1; }

bool Rational::is_canonical() const {
  if (q_.get_den() <= 0)
    return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return g == 1;
}

Rational Rational::inverse() const {
  if (is_zero())
    throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational &Rational::operator+=(const Rational &o) {
  q_ += o.q_;
  return *this;
}

Rational &Rational::operator-=(const Rational &o) {
  q_ -= o.q_;
  return *this;
}

Rational &Rational::operator*=(const Rational &o) {
  q_ *= o.q_;
  return *this;
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------
// ExtendedRational

ExtendedRational ExtendedRational::parse(std::string_view text) {
  if (text == "+inf" || text == "inf")
    return plus_infinity();
  if (text == "-inf")
    return minus_infinity();
  return ExtendedRational(Rational::parse(text));
}

const Rational &ExtendedRational::value() const {
  if (!is_finite())
    throw DomainError("value() of an infinite extended rational");
  return value_;
}

std::string ExtendedRational::to_string() const {
  switch (kind_) {
  case Kind::PlusInfinity:
    return "+inf";
  case Kind::MinusInfinity:
    return "-inf";
  case Kind::Finite:
    break;
  }
  return value_.to_string();
}

ExtendedRational ExtendedRational::operator-() const {
  switch (kind_) {
  case Kind::PlusInfinity:
    return minus_infinity();
  case Kind::MinusInfinity:
    return plus_infinity();
  case Kind::Finite:
    break;
  }
  return ExtendedRational(-value_);
}

ExtendedRational ExtendedRational::reciprocal() const {
  if (!is_finite())
    return ExtendedRational(Rational(0));
  if (value_.is_zero())
    return plus_infinity();
  return ExtendedRational(value_.inverse());
}

ExtendedRational operator+(const ExtendedRational &a, const ExtendedRational &b) {
  if (a.is_finite() && b.is_finite())
    return ExtendedRational(a.value_ + b.value_);
  if (!a.is_finite() && !b.is_finite() && a.kind_ != b.kind_)
    throw DomainError("indeterminate form inf - inf");
  return a.is_finite() ? b : a;
}

ExtendedRational operator*(const ExtendedRational &a, const ExtendedRational &b) {
  if (a.is_finite() && b.is_finite())
    return ExtendedRational(a.value_ * b.value_);
  const int sa = a.is_finite() ? a.value_.sign() : (a.is_plus_infinity() ? 1 : -1);
  const int sb = b.is_finite() ? b.value_.sign() : (b.is_plus_infinity() ? 1 : -1);
  if (sa == 0 || sb == 0)
    throw DomainError("indeterminate form 0 * inf");
  return sa * sb > 0 ? ExtendedRational::plus_infinity() : ExtendedRational::minus_infinity();
}

bool operator==(const ExtendedRational &a, const ExtendedRational &b) {
  if (a.kind_ != b.kind_)
    return false;
  return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational &a, const ExtendedRational &b) {
  auto rank = [](const ExtendedRational &x) {
    return x.is_minus_infinity() ? 0 : (x.is_finite() ? 1 : 2);
  };
  if (rank(a) != rank(b))
    return rank(a) <=> rank(b);
  if (a.is_finite())
    return a.value_ <=> b.value_;
  return std::strong_ordering::equal;
}

std::ostream &operator<<(std::ostream &os, const ExtendedRational &r) {
  return os << r.to_string();
}

// ---------------------------------------------------------------------------
// Vector

Vector Vector::unit(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v[i] = 1;
  return v;
}

bool Vector::is_zero() const {
  for (const auto &e : entries_)
    if (!e.is_zero())
      return false;
  return true;
}

Vector Vector::operator-() const {
  Vector r(*this);
  for (auto &e : r.entries_)
    e = -e;
  return r;
}

Vector &Vector::operator+=(const Vector &o) {
  if (o.dim() != dim())
    throw DimensionError("vector sum of dimensions " + std::to_string(dim()) + " and " +
                         std::to_string(o.dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    entries_[i] += o.entries_[i];
  return *this;
}

Vector &Vector::operator-=(const Vector &o) {
  if (o.dim() != dim())
    throw DimensionError("vector difference of dimensions " + std::to_string(dim()) + " and " +
                         std::to_string(o.dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    entries_[i] -= o.entries_[i];
  return *this;
}

Vector &Vector::operator*=(const Rational &s) {
  for (auto &e : entries_)
    e *= s;
  return *this;
}

Vector &Vector::operator/=(const Rational &s) {
  if (s.is_zero())
    throw DomainError("vector division by zero");
  for (auto &e : entries_)
    e /= s;
  return *this;
}

std::strong_ordering operator<=>(const Vector &a, const Vector &b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a[i] <=> b[i]; c != std::strong_ordering::equal)
      return c;
  return a.dim() <=> b.dim();
}

std::string Vector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i)
      out += ' ';
    out += entries_[i].to_string();
  }
  return out;
}

Vector Vector::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  Vector v;
  std::string tok;
  while (in >> tok)
    v.push_back(Rational::parse(tok));
  return v;
}

std::ostream &operator<<(std::ostream &os, const Vector &v) { return os << v.to_string(); }

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t m, std::size_t n) : rows_(m, Vector(n)), cols_(n) {}

Matrix::Matrix(std::vector<Vector> rows, std::size_t n) : rows_(std::move(rows)), cols_(n) {
  for (const auto &r : rows_)
    if (r.dim() != n)
      throw DimensionError("matrix row of dimension " + std::to_string(r.dim()) +
                           ", expected " + std::to_string(n));
}

Matrix::Matrix(std::initializer_list<Vector> rows)
    : Matrix(std::vector<Vector>(rows), rows.size() ? rows.begin()->dim() : 0) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector c(rows());
  for (std::size_t i = 0; i < rows(); ++i)
    c[i] = rows_[i][j];
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = rows_[i][j];
  return t;
}

void Matrix::append_row(Vector r) {
  if (r.dim() != cols_)
    throw DimensionError("appended row of dimension " + std::to_string(r.dim()) +
                         ", expected " + std::to_string(cols_));
  rows_.push_back(std::move(r));
}

Vector Matrix::apply(const Vector &x) const {
  if (x.dim() != cols_)
    throw DimensionError("matrix with " + std::to_string(cols_) +
                         " columns applied to vector of dimension " + std::to_string(x.dim()));
  Vector out(rows());
  for (std::size_t i = 0; i < rows(); ++i)
    out[i] = dot(rows_[i], x);
  return out;
}

Rational dot(const Vector &u, const Vector &v) {
  if (u.dim() != v.dim())
    throw DimensionError("dot product of dimensions " + std::to_string(u.dim()) + " and " +
                         std::to_string(v.dim()));
  mpq_class acc = 0;
  for (std::size_t i = 0; i < u.dim(); ++i)
    acc += u[i].raw() * v[i].raw();
  return Rational(acc);
}

Vector transpose_apply(const Matrix &a, const Vector &y) {
  if (y.dim() != a.rows())
    throw DimensionError("transpose_apply: y has dimension " + std::to_string(y.dim()) +
                         " but A has " + std::to_string(a.rows()) + " rows");
  Vector out(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (y[i].is_zero())
      continue;
    for (std::size_t j = 0; j < a.cols(); ++j)
      out[j] += y[i] * a(i, j);
  }
  return out;
}

namespace {

// Reduced row echelon form of [a | rhs] in place; returns pivot columns
// (only columns < ncols are eligible).
std::vector<std::size_t> rref(std::vector<Vector> &rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col].is_zero())
      ++sel;
    if (sel == rows.size())
      continue;
    std::swap(rows[r], rows[sel]);
    rows[r] /= Rational(rows[r][col]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero())
        continue;
      const Rational f = rows[i][col];
      rows[i] -= rows[r] * f;
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

} // namespace

std::size_t rank(const Matrix &a) {
  std::vector<Vector> rows(a.row_span().begin(), a.row_span().end());
  return rref(rows, a.cols()).size();
}

std::optional<Vector> solve_particular(const Matrix &a, const Vector &rhs) {
  if (rhs.dim() != a.rows())
    throw DimensionError("solve_particular: right-hand side dimension mismatch");
  const std::size_t n = a.cols();
  std::vector<Vector> aug;
  aug.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vector r = a.row(i);
    r.push_back(rhs[i]);
    aug.push_back(std::move(r));
  }
  const auto pivots = rref(aug, n);
  for (std::size_t i = pivots.size(); i < aug.size(); ++i)
    if (!aug[i][n].is_zero())
      return std::nullopt;
  Vector x(n);
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x[pivots[k]] = aug[k][n];
  return x;
}

} // namespace polarlp
