#pragma once

// Certificate-producing duality procedures.
//
// strong_duality() recovers an optimal dual solution geometrically: for a
// program with 0 feasible, the largest rho with rho c in the polar of the
// feasible region gives y = z / rho with <b, y> = 1 / rho. Programs without
// 0 feasible are first translated by a feasible point. Every report is
// verified before it is returned.

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "polarlp/exactnum.hpp"
#include "polarlp/program.hpp"
#include "polarlp/solver.hpp"

namespace polarlp {

struct WeakDualityCertificate {
  Vector x;
  Vector y;
  Rational primal_value; // <c, x>
  Rational dual_value;   // <b, y>
  /// <c, x> = <y, A x> <= <y, b>
  Rational chain_cx, chain_yax, chain_yb;
};

/// Throws DomainError naming the first violated constraint when x is not
/// feasible for (P) or y not feasible for (D), and InconsistencyError if the
/// chain fails for a feasible pair.
WeakDualityCertificate check_weak(const LinearProgram &p, const Vector &x, const Vector &y);

struct PolarDual {
  Vector y;
  Rational nu_min;
  /// Optimal rho of the auxiliary program; nullopt when it was unbounded and
  /// the dual was solved directly.
  std::optional<Rational> rho;
};

/// Requires 0 feasible, c != 0 and (P) bounded. Solves
///   max rho  s.t.  rho c = sum z_i a_i,  z >= 0,  <b, z> <= 1
/// and returns y = z / rho, nu_min = 1 / rho. If that program is unbounded
/// (h(c) = 0), solves (D) directly instead.
PolarDual dual_from_polar(const LinearProgram &p, const FmOptions &opts = {});

struct ZeroObjective {};
struct OriginFeasible {};
struct Translated {
  Vector anchor;
};
using DualityPath = std::variant<ZeroObjective, OriginFeasible, Translated>;

struct StrongDualityReport {
  SolveOutcome primal;
  std::optional<Vector> dual_witness;
  ExtendedRational nu_max;
  ExtendedRational nu_min;
  /// Set only when the primal is optimal.
  std::optional<DualityPath> path;
  /// Set only when the primal is optimal.
  std::optional<WeakDualityCertificate> certificate;

  /// Fixed field order: status, path, nu_max, nu_min, primal_witness,
  /// dual_witness, chain. One `key value` line each.
  std::string to_text() const;
};

struct StrongDualityOptions {
  FmOptions fm;
  /// Take the translated route with this anchor even when 0 is feasible.
  /// Ignored for c = 0 or a non-optimal primal. Must be feasible.
  std::optional<Vector> forced_anchor;
};

/// Runs the full pipeline and refuses to return an unverified report:
/// any failed cross-check raises InconsistencyError carrying a dump.
StrongDualityReport strong_duality(const LinearProgram &p, const StrongDualityOptions &opts = {});

enum class PairVerdict {
  Optimal,
  PrimalInfeasible,
  DualInfeasible,
  ValuesDiffer,
  DimensionMismatch,
};

std::string to_string(PairVerdict v);

/// Optimal iff x is feasible for (P), y for (D), and <c, x> = <b, y>.
PairVerdict verify_pair(const LinearProgram &p, const Vector &x, const Vector &y);

inline bool verify_optimal_pair(const LinearProgram &p, const Vector &x, const Vector &y) {
  return verify_pair(p, x, y) == PairVerdict::Optimal;
}

std::string to_string(const DualityPath &path);

} // namespace polarlp
