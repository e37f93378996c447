#pragma once

// H-polyhedra {x : A x <= b}, their support and radial functions, and the
// polar body of an origin-containing polyhedron kept in generator form
//
//   K* = { sum mu_i a_i : mu_i >= 0, sum mu_i b_i <= 1 }.
//
// Every query on the polar is answered by an exact LP over that form; it is
// never converted back to inequalities.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polarlp/exactnum.hpp"
#include "polarlp/program.hpp"
#include "polarlp/solver.hpp"

namespace polarlp {

/// <normal, x> <= offset
struct HalfSpace {
  Vector normal;
  Rational offset;

  friend bool operator==(const HalfSpace &, const HalfSpace &) = default;
};

class HPolyhedron {
public:
  explicit HPolyhedron(std::size_t dim) : dim_(dim) {}
  /// Throws DimensionError if a normal has the wrong dimension.
  HPolyhedron(std::size_t dim, std::vector<HalfSpace> constraints);

  /// The feasible region of a program.
  static HPolyhedron from_program(const LinearProgram &p);

  std::size_t dim() const { return dim_; }
  const std::vector<HalfSpace> &constraints() const { return constraints_; }
  void add(Vector normal, Rational offset);

  /// max <u, x> s.t. A x <= b
  LinearProgram program_for(const Vector &objective) const;

  /// Text form: `vars n` then `row <n rationals> <= <rational>` per line.
  std::string to_text() const;
  static HPolyhedron parse(std::string_view text);

  friend bool operator==(const HPolyhedron &, const HPolyhedron &) = default;

private:
  std::size_t dim_;
  std::vector<HalfSpace> constraints_;
};

struct ProvenEmpty {};

/// Drops 0 <= b rows with b >= 0; a single 0 <= b row with b < 0 proves the
/// polyhedron empty.
std::variant<HPolyhedron, ProvenEmpty> normalize_rows(const HPolyhedron &p);

bool contains(const HPolyhedron &p, const Vector &x);

/// h_P(u) = sup over P of <x, u>. Throws DomainError if u = 0 or P is empty.
ExtendedRational support(const HPolyhedron &p, const Vector &u, const FmOptions &opts = {});

/// rho_P(u) = sup { lambda >= 0 : lambda u in P }. Requires 0 in P.
ExtendedRational radial(const HPolyhedron &p, const Vector &u);

struct Segment {
  Vector endpoint;
  friend bool operator==(const Segment &, const Segment &) = default;
};
struct Ray {
  Vector direction;
  friend bool operator==(const Ray &, const Ray &) = default;
};
/// Polar of one half-space: the segment [0, a/b] for b > 0, the ray
/// {lambda a : lambda >= 0} for b = 0.
using PolarGenerator = std::variant<Segment, Ray>;

PolarGenerator polar_halfspace(const Vector &a, const Rational &b);

struct PolarTerm {
  Vector normal;
  Rational weight;
  friend bool operator==(const PolarTerm &, const PolarTerm &) = default;
};

/// { sum mu_i a_i : mu >= 0, sum mu_i b_i <= 1 } over the stored (a_i, b_i).
class PolarRep {
public:
  /// Throws DomainError if some a_i = 0 or b_i < 0.
  PolarRep(std::size_t dim, std::vector<PolarTerm> terms);

  std::size_t dim() const { return dim_; }
  const std::vector<PolarTerm> &terms() const { return terms_; }

  /// The segment or ray each term contributes.
  std::vector<PolarGenerator> generators() const;

  /// One `gen <n rationals> weight <rational>` line per term.
  std::string to_text() const;

  friend bool operator==(const PolarRep &, const PolarRep &) = default;

private:
  std::size_t dim_;
  std::vector<PolarTerm> terms_;
};

/// Requires nonzero normals (apply normalize_rows first) and every offset
/// >= 0, i.e. 0 in P; throws DomainError otherwise.
PolarRep polar(const HPolyhedron &p);

bool polar_contains(const PolarRep &q, const Vector &y, const FmOptions &opts = {});

/// h_{K*}(u): max sum z_i <a_i, u> s.t. z >= 0, <b, z> <= 1.
ExtendedRational polar_support(const PolarRep &q, const Vector &u, const FmOptions &opts = {});

/// The program behind polar_radial over variables (z_1..z_m, rho):
///   maximize rho  s.t.  rho u = sum z_i a_i,  z >= 0,  <b, z> <= 1,  rho >= 0.
/// Equalities appear as opposing row pairs.
LinearProgram radial_program(const Matrix &normals, const Vector &weights, const Vector &u);

/// rho_{K*}(u). Throws DomainError if u = 0.
ExtendedRational polar_radial(const PolarRep &q, const Vector &u, const FmOptions &opts = {});

/// Membership in (K*)*: y = 0, or h_{K*}(y) <= 1.
bool bipolar_contains(const PolarRep &q, const Vector &y, const FmOptions &opts = {});

/// h = 1/rho under 1/inf = 0 and 1/0 = inf. The pairings (0, 0) and
/// (inf, inf) fail.
bool reciprocal_pair(const ExtendedRational &h, const ExtendedRational &rho);

std::ostream &operator<<(std::ostream &os, const PolarGenerator &g);

} // namespace polarlp
