#pragma once

// Linear programs in the form
//
//   (P)  maximize <c, x>  subject to  A x <= b
//
// and the transforms between (P), its asymmetric dual
//
//   (D)  minimize <b, y>  subject to  A^T y = c,  y >= 0,
//
// the canonical form, the symmetric dual and the translation x' = x - x0.

#include <cstddef>
#include <optional>

#include "polarlp/exactnum.hpp"

namespace polarlp {

struct LinearProgram {
  Matrix a;
  Vector b;
  Vector c;

  LinearProgram() = default;
  /// Throws DimensionError unless a.cols() == c.dim() and a.rows() == b.dim().
  LinearProgram(Matrix a, Vector b, Vector c);

  std::size_t num_constraints() const { return a.rows(); }
  std::size_t num_variables() const { return a.cols(); }

  /// Exact check of A x <= b.
  bool is_feasible(const Vector &x) const;
  /// Index of the first row with <a_i, x> > b_i.
  std::optional<std::size_t> first_violated(const Vector &x) const;
  Rational objective(const Vector &x) const { return dot(c, x); }

  friend bool operator==(const LinearProgram &, const LinearProgram &) = default;
};

/// min <b, y> s.t. A^T y = c, y >= 0. Carries the same data as the primal it
/// came from; only the reading differs.
struct DualProgram {
  Matrix a;
  Vector b;
  Vector c;

  DualProgram() = default;
  DualProgram(Matrix a, Vector b, Vector c);

  std::size_t num_variables() const { return a.rows(); }

  /// A^T y = c and y >= 0, exactly.
  bool is_feasible(const Vector &y) const;
  Rational objective(const Vector &y) const { return dot(b, y); }

  friend bool operator==(const DualProgram &, const DualProgram &) = default;
};

/// P' = P translated by an anchor x0: b' = b - A x0, objective offset <c, x0>.
struct TranslatedProgram {
  LinearProgram program;
  Vector anchor;
  Rational objective_offset;
};

DualProgram dualize(const LinearProgram &p);

/// Encodes (D) as a maximization in (P)-form over y:
///   maximize <-b, y>  s.t.  A^T y <= c,  -A^T y <= -c,  -y <= 0.
/// Rows appear in exactly that order (n, n, m). The optimum of the encoded
/// program is -nu_min.
LinearProgram dual_as_primal(const DualProgram &d);

/// Appends -x_j <= 0 for j = 1..n after the existing rows. Not idempotent:
/// applying it twice appends the sign rows twice.
LinearProgram canonicalize(const LinearProgram &p);

/// Reads p as the canonical program max <c,x> s.t. Ax <= b, x >= 0 and
/// returns its symmetric dual min <b,y> s.t. A^T y >= c, y >= 0, encoded as
///   maximize <-b, y>  s.t.  -A^T y <= -c,  -y <= 0.
LinearProgram symmetric_dual(const LinearProgram &p);

/// Throws DomainError if x0 is not feasible for p.
TranslatedProgram translate(const LinearProgram &p, const Vector &x0);

/// v + <c, x0>; infinities pass through.
ExtendedRational untranslate_value(const ExtendedRational &v, const TranslatedProgram &t);

} // namespace polarlp
