#pragma once

// Two independent exact LP oracles.
//
//  * solve_fm   - Fourier-Motzkin projection onto an objective variable t,
//                 witness recovered by interval back-substitution.
//  * solve_enum - feasibility and recession tests via Fourier-Motzkin, then
//                 enumeration of basic solutions by exact Gaussian elimination.
//
// Both are correctness oracles for desk-sized programs (a handful of
// variables, a few dozen rows). Neither is meant to be fast.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polarlp/exactnum.hpp"
#include "polarlp/program.hpp"

namespace polarlp {

/// <coeffs, x> <= rhs
struct Inequality {
  Vector coeffs;
  Rational rhs;

  friend bool operator==(const Inequality &, const Inequality &) = default;
};

struct InequalitySystem {
  std::size_t dim = 0;
  std::vector<Inequality> rows;
  /// eliminated[j] is set once variable j has been projected out; its
  /// coefficient is then zero in every row.
  std::vector<bool> eliminated;

  InequalitySystem() = default;
  explicit InequalitySystem(std::size_t dim_) : dim(dim_), eliminated(dim_, false) {}

  /// Throws DimensionError if coeffs.dim() != dim.
  void add(Vector coeffs, Rational rhs);
  bool is_satisfied(const Vector &x) const;

  /// A x <= b of a program.
  static InequalitySystem from_program(const LinearProgram &p);
};

struct FmOptions {
  /// Guard against row explosion; exceeding it raises RowLimitError.
  std::size_t max_rows = 100000;
};

/// Projects variable j (0-based) out of s. The result has the same dim,
/// coefficient j zero in every row and eliminated[j] set. Exact duplicates
/// and rows dominated by an identical-coefficient row with smaller rhs are
/// pruned; every row is rescaled to primitive integer coefficients.
InequalitySystem fm_eliminate(const InequalitySystem &s, std::size_t j,
                              const FmOptions &opts = {});

struct FmFeasibility {
  /// Set when the system is feasible.
  std::optional<Vector> point;
  /// Set when infeasible: nonnegative multipliers lambda over s.rows with
  /// sum lambda_i coeffs_i = 0 and sum lambda_i rhs_i < 0.
  std::optional<Vector> farkas;

  bool feasible() const { return point.has_value(); }
};

/// Decides feasibility by eliminating every variable. A feasible point is
/// rebuilt in reverse elimination order: midpoint of the residual interval,
/// lower + 1 or upper - 1 when only one side is bounded, 0 when free.
FmFeasibility fm_feasible(const InequalitySystem &s, const FmOptions &opts = {});

enum class SolveStatus { Optimal, Infeasible, Unbounded };

enum class Sense { Maximize, Minimize };

std::string to_string(SolveStatus s);

struct SolveOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  Sense sense = Sense::Maximize;
  Rational value;
  Vector witness;
  /// Unbounded: direction d with A d <= 0 and <c, d> >= 1, when known.
  std::optional<Vector> ray;
  /// Infeasible: multipliers y >= 0 over the rows with A^T y = 0 and
  /// <b, y> < 0, when known.
  std::optional<Vector> farkas;

  static SolveOutcome optimal(Rational value, Vector witness);
  static SolveOutcome infeasible(std::optional<Vector> farkas = std::nullopt);
  static SolveOutcome unbounded(std::optional<Vector> ray = std::nullopt);

  bool is_optimal() const { return status == SolveStatus::Optimal; }

  /// The optimal value with the usual conventions: an infeasible maximization
  /// is -inf and an unbounded one +inf; signs flip for Minimize.
  ExtendedRational extended_value() const;
};

SolveOutcome solve_fm(const LinearProgram &p, const FmOptions &opts = {});
SolveOutcome solve_enum(const LinearProgram &p, const FmOptions &opts = {});

struct PairClassification {
  SolveOutcome primal;
  /// Outcome of (D) with Sense::Minimize; value is nu_min itself and the
  /// witness is a dual point y.
  SolveOutcome dual;
};

/// Solves (P) and (D) with solve_fm and enforces the exclusion implied by
/// weak duality: an unbounded side forces the other to be infeasible.
/// Throws InconsistencyError when that fails.
PairClassification classify_pair(const LinearProgram &p, const FmOptions &opts = {});

} // namespace polarlp
