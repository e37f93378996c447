#pragma once

// Line-oriented LP text format:
//
//   problem max|min
//   vars <n>
//   objective <n rationals>
//   constraint <n rationals> <=|>=|= <rational>     (any number of lines)
//
// `#` starts a comment, blank lines are ignored. Internally everything is
// normalized to maximize <c, x> s.t. A x <= b.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "polarlp/exactnum.hpp"
#include "polarlp/program.hpp"
#include "polarlp/solver.hpp"

namespace polarlp {

enum class Relation { LessEqual, GreaterEqual, Equal };

std::string to_string(Relation r);

struct LpConstraint {
  Vector coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;

  friend bool operator==(const LpConstraint &, const LpConstraint &) = default;
};

struct LpFile {
  Sense sense = Sense::Maximize;
  std::size_t n = 0;
  Vector objective;
  std::vector<LpConstraint> constraints;

  /// Throws ParseError carrying the offending line number.
  static LpFile parse(std::string_view text);
  std::string to_text() const;

  /// `min c` becomes `max -c`; `>=` rows are negated; `=` rows become a
  /// `<=` row followed by its negation. Row order otherwise follows the file.
  LinearProgram to_program() const;

  /// Maps a value of the normalized maximization back to the file's sense.
  ExtendedRational restore_value(const ExtendedRational &v) const;

  friend bool operator==(const LpFile &, const LpFile &) = default;
};

/// (D) of p written in the LP text format:
///   problem min / vars m / objective b /
///   one `= c_j` row per column of A / one `>= 0` row per y_i.
LpFile dual_as_lpfile(const LinearProgram &p);

} // namespace polarlp
