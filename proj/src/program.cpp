#include "polarlp/program.hpp"

#include <string>

namespace polarlp {

namespace {

void check_shape(const Matrix &a, const Vector &b, const Vector &c) {
  if (a.cols() != c.dim())
    throw DimensionError("objective has dimension " + std::to_string(c.dim()) + " but A has " +
                         std::to_string(a.cols()) + " columns");
  if (a.rows() != b.dim())
    throw DimensionError("right-hand side has dimension " + std::to_string(b.dim()) +
                         " but A has " + std::to_string(a.rows()) + " rows");
}

} // namespace

LinearProgram::LinearProgram(Matrix a_, Vector b_, Vector c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  check_shape(a, b, c);
}

std::optional<std::size_t> LinearProgram::first_violated(const Vector &x) const {
  if (x.dim() != num_variables())
    throw DimensionError("point of dimension " + std::to_string(x.dim()) + " for a program in " +
                         std::to_string(num_variables()) + " variables");
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (dot(a.row(i), x) > b[i])
      return i;
  return std::nullopt;
}

bool LinearProgram::is_feasible(const Vector &x) const { return !first_violated(x).has_value(); }

DualProgram::DualProgram(Matrix a_, Vector b_, Vector c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  check_shape(a, b, c);
}

bool DualProgram::is_feasible(const Vector &y) const {
  if (y.dim() != a.rows())
    throw DimensionError("dual point of dimension " + std::to_string(y.dim()) + ", expected " +
                         std::to_string(a.rows()));
  for (const auto &yi : y)
    if (yi.sign() < 0)
      return false;
  return transpose_apply(a, y) == c;
}

DualProgram dualize(const LinearProgram &p) { return DualProgram(p.a, p.b, p.c); }

LinearProgram dual_as_primal(const DualProgram &d) {
  const std::size_t m = d.a.rows();
  const std::size_t n = d.a.cols();
  const Matrix at = d.a.transpose();
  Matrix rows(0, m);
  Vector rhs;
  for (std::size_t j = 0; j < n; ++j) {
    rows.append_row(at.row(j));
    rhs.push_back(d.c[j]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    rows.append_row(-at.row(j));
    rhs.push_back(-d.c[j]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    rows.append_row(-Vector::unit(m, i));
    rhs.push_back(0);
  }
  return LinearProgram(std::move(rows), std::move(rhs), -d.b);
}

LinearProgram canonicalize(const LinearProgram &p) {
  const std::size_t n = p.num_variables();
  Matrix a = p.a;
  Vector b = p.b;
  for (std::size_t j = 0; j < n; ++j) {
    a.append_row(-Vector::unit(n, j));
    b.push_back(0);
  }
  return LinearProgram(std::move(a), std::move(b), p.c);
}

LinearProgram symmetric_dual(const LinearProgram &p) {
  const std::size_t m = p.num_constraints();
  const std::size_t n = p.num_variables();
  const Matrix at = p.a.transpose();
  Matrix rows(0, m);
  Vector rhs;
  for (std::size_t j = 0; j < n; ++j) {
    rows.append_row(-at.row(j));
    rhs.push_back(-p.c[j]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    rows.append_row(-Vector::unit(m, i));
    rhs.push_back(0);
  }
  return LinearProgram(std::move(rows), std::move(rhs), -p.b);
}

TranslatedProgram translate(const LinearProgram &p, const Vector &x0) {
  if (auto bad = p.first_violated(x0))
    throw DomainError("translation anchor violates constraint " + std::to_string(*bad));
  LinearProgram shifted(p.a, p.b - p.a.apply(x0), p.c);
  return TranslatedProgram{std::move(shifted), x0, dot(p.c, x0)};
}

ExtendedRational untranslate_value(const ExtendedRational &v, const TranslatedProgram &t) {
  return v + ExtendedRational(t.objective_offset);
}

} // namespace polarlp
