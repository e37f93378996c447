#include "polarlp/solver.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace polarlp {

namespace {

// A row of the working system together with the nonnegative combination of
// the input rows it was derived from.
struct Row {
  Vector coeffs;
  Rational rhs;
  Vector mult;
};

void normalize(Row &r) {
  mpz_class l = 1;
  for (const auto &c : r.coeffs)
    if (!c.is_zero())
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  mpz_class g = 0;
  for (const auto &c : r.coeffs) {
    if (c.is_zero())
      continue;
    mpz_class k = c.raw().get_num() * (l / c.raw().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
  }
  if (g == 0)
    return;
  const Rational factor{mpq_class(l, g)};
  if (factor == Rational(1))
    return;
  r.coeffs *= factor;
  r.rhs *= factor;
  r.mult *= factor;
}

bool is_zero_row(const Row &r) { return r.coeffs.is_zero(); }

// Drops 0 <= nonnegative rows and keeps, for each coefficient vector, only
// the row with the smallest right-hand side. Insertion order is preserved.
std::vector<Row> prune(std::vector<Row> rows) {
  std::vector<Row> out;
  out.reserve(rows.size());
  std::map<Vector, std::size_t> seen;
  for (auto &r : rows) {
    if (is_zero_row(r) && r.rhs.sign() >= 0)
      continue;
    auto [it, inserted] = seen.emplace(r.coeffs, out.size());
    if (inserted) {
      out.push_back(std::move(r));
    } else if (r.rhs < out[it->second].rhs) {
      out[it->second] = std::move(r);
    }
  }
  return out;
}

const Row *find_contradiction(const std::vector<Row> &rows) {
  for (const auto &r : rows)
    if (is_zero_row(r) && r.rhs.sign() < 0)
      return &r;
  return nullptr;
}

// p has a positive and q a negative coefficient on variable j.
Row combine(const Row &p, const Row &q, std::size_t j) {
  const Rational alpha = -q.coeffs[j];
  const Rational beta = p.coeffs[j];
  Row r{p.coeffs * alpha + q.coeffs * beta, p.rhs * alpha + q.rhs * beta,
        p.mult * alpha + q.mult * beta};
  r.coeffs[j] = 0;
  normalize(r);
  return r;
}

struct Split {
  std::vector<std::size_t> pos, neg, zero;
};

Split split_on(const std::vector<Row> &rows, std::size_t j) {
  Split s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int sg = rows[i].coeffs[j].sign();
    (sg > 0 ? s.pos : (sg < 0 ? s.neg : s.zero)).push_back(i);
  }
  return s;
}

// A pair of rows p, q with q = -p encodes an equation; it lets us substitute
// instead of forming every positive/negative combination.
std::optional<std::pair<std::size_t, std::size_t>> find_equation(const std::vector<Row> &rows,
                                                                 const Split &s) {
  for (std::size_t p : s.pos)
    for (std::size_t q : s.neg)
      if (rows[q].rhs == -rows[p].rhs && rows[q].coeffs == -rows[p].coeffs)
        return std::make_pair(p, q);
  return std::nullopt;
}

std::vector<Row> eliminate(const std::vector<Row> &rows, std::size_t j, const FmOptions &opts) {
  const Split s = split_on(rows, j);
  std::vector<Row> out;
  for (std::size_t i : s.zero)
    out.push_back(rows[i]);

  if (auto eq = find_equation(rows, s)) {
    const auto [pe, qe] = *eq;
    for (std::size_t p : s.pos)
      if (p != pe)
        out.push_back(combine(rows[p], rows[qe], j));
    for (std::size_t q : s.neg)
      if (q != qe)
        out.push_back(combine(rows[pe], rows[q], j));
  } else {
    if (s.pos.size() * s.neg.size() + s.zero.size() > opts.max_rows)
      throw RowLimitError("Fourier-Motzkin would produce " +
                          std::to_string(s.pos.size() * s.neg.size() + s.zero.size()) +
                          " rows (limit " + std::to_string(opts.max_rows) + ")");
    for (std::size_t p : s.pos)
      for (std::size_t q : s.neg)
        out.push_back(combine(rows[p], rows[q], j));
  }
  out = prune(std::move(out));
  if (out.size() > opts.max_rows)
    throw RowLimitError("Fourier-Motzkin system grew to " + std::to_string(out.size()) +
                        " rows (limit " + std::to_string(opts.max_rows) + ")");
  return out;
}

std::vector<Row> tracked_rows(const InequalitySystem &s) {
  std::vector<Row> rows;
  rows.reserve(s.rows.size());
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    Row r{s.rows[i].coeffs, s.rows[i].rhs, Vector::unit(s.rows.size(), i)};
    normalize(r);
    rows.push_back(std::move(r));
  }
  return rows;
}

struct Projection {
  std::vector<std::size_t> order;
  // stages[k] holds the rows right before order[k] was eliminated.
  std::vector<std::vector<Row>> stages;
  std::vector<Row> rows;
  std::optional<Row> contradiction;
};

// Greedy order: variables that sit in an equation first, then the smallest
// number of generated rows. Ties go to the lowest index.
std::size_t pick_variable(const std::vector<Row> &rows, const std::vector<std::size_t> &pending) {
  std::size_t best = pending.front();
  bool best_eq = false;
  std::size_t best_cost = static_cast<std::size_t>(-1);
  for (std::size_t v : pending) {
    const Split s = split_on(rows, v);
    const bool eq = find_equation(rows, s).has_value();
    const std::size_t cost = s.pos.size() * s.neg.size();
    if ((eq && !best_eq) || (eq == best_eq && cost < best_cost)) {
      best = v;
      best_eq = eq;
      best_cost = cost;
    }
  }
  return best;
}

Projection project(std::vector<Row> rows, std::vector<std::size_t> pending,
                   const FmOptions &opts) {
  Projection pr;
  rows = prune(std::move(rows));
  if (const Row *bad = find_contradiction(rows)) {
    pr.contradiction = *bad;
    return pr;
  }
  while (!pending.empty()) {
    const std::size_t v = pick_variable(rows, pending);
    pending.erase(std::find(pending.begin(), pending.end(), v));
    pr.order.push_back(v);
    pr.stages.push_back(rows);
    rows = eliminate(rows, v, opts);
    if (const Row *bad = find_contradiction(rows)) {
      pr.contradiction = *bad;
      return pr;
    }
  }
  pr.rows = std::move(rows);
  return pr;
}

struct Interval {
  std::optional<Rational> lo, hi;
};

Interval interval_for(const std::vector<Row> &rows, std::size_t v, const Vector &x) {
  Interval iv;
  for (const auto &r : rows) {
    const Rational &a = r.coeffs[v];
    if (a.is_zero())
      continue;
    Rational slack = r.rhs;
    for (std::size_t i = 0; i < x.dim(); ++i)
      if (i != v && !r.coeffs[i].is_zero())
        slack -= r.coeffs[i] * x[i];
    const Rational bound = slack / a;
    if (a.sign() > 0) {
      if (!iv.hi || bound < *iv.hi)
        iv.hi = bound;
    } else {
      if (!iv.lo || bound > *iv.lo)
        iv.lo = bound;
    }
  }
  return iv;
}

Rational pick_in(const Interval &iv) {
  if (iv.lo && iv.hi)
    return (*iv.lo + *iv.hi) / Rational(2);
  if (iv.lo)
    return *iv.lo + Rational(1);
  if (iv.hi)
    return *iv.hi - Rational(1);
  return Rational(0);
}

void back_substitute(const Projection &pr, Vector &x) {
  for (std::size_t k = pr.order.size(); k-- > 0;) {
    const std::size_t v = pr.order[k];
    const Interval iv = interval_for(pr.stages[k], v, x);
    if (iv.lo && iv.hi && *iv.lo > *iv.hi)
      throw InconsistencyError("empty interval for variable " + std::to_string(v) +
                               " during back-substitution");
    x[v] = pick_in(iv);
  }
}

Vector prefix(const Vector &v, std::size_t k) {
  Vector out(k);
  for (std::size_t i = 0; i < k; ++i)
    out[i] = v[i];
  return out;
}

} // namespace

// ---------------------------------------------------------------------------

void InequalitySystem::add(Vector coeffs, Rational rhs) {
  if (coeffs.dim() != dim)
    throw DimensionError("inequality of dimension " + std::to_string(coeffs.dim()) +
                         " added to a system in " + std::to_string(dim) + " variables");
  rows.push_back(Inequality{std::move(coeffs), std::move(rhs)});
}

bool InequalitySystem::is_satisfied(const Vector &x) const {
  for (const auto &r : rows)
    if (dot(r.coeffs, x) > r.rhs)
      return false;
  return true;
}

InequalitySystem InequalitySystem::from_program(const LinearProgram &p) {
  InequalitySystem s(p.num_variables());
  for (std::size_t i = 0; i < p.num_constraints(); ++i)
    s.add(p.a.row(i), p.b[i]);
  return s;
}

InequalitySystem fm_eliminate(const InequalitySystem &s, std::size_t j, const FmOptions &opts) {
  if (j >= s.dim)
    throw DimensionError("variable index " + std::to_string(j) + " out of range for dimension " +
                         std::to_string(s.dim));
  const auto rows = eliminate(prune(tracked_rows(s)), j, opts);
  InequalitySystem out(s.dim);
  out.eliminated = s.eliminated;
  out.eliminated[j] = true;
  for (const auto &r : rows)
    out.rows.push_back(Inequality{r.coeffs, r.rhs});
  return out;
}

FmFeasibility fm_feasible(const InequalitySystem &s, const FmOptions &opts) {
  std::vector<std::size_t> vars;
  for (std::size_t j = 0; j < s.dim; ++j)
    vars.push_back(j);
  const Projection pr = project(tracked_rows(s), vars, opts);
  FmFeasibility res;
  if (pr.contradiction) {
    res.farkas = pr.contradiction->mult;
    return res;
  }
  Vector x(s.dim);
  back_substitute(pr, x);
  if (!s.is_satisfied(x))
    throw InconsistencyError("Fourier-Motzkin point " + x.to_string() + " violates the system");
  res.point = std::move(x);
  return res;
}

std::string to_string(SolveStatus s) {
  switch (s) {
  case SolveStatus::Optimal:
    return "optimal";
  case SolveStatus::Infeasible:
    return "infeasible";
  case SolveStatus::Unbounded:
    return "unbounded";
  }
  return "unknown";
}

SolveOutcome SolveOutcome::optimal(Rational value, Vector witness) {
  SolveOutcome o;
  o.status = SolveStatus::Optimal;
  o.value = std::move(value);
  o.witness = std::move(witness);
  return o;
}

SolveOutcome SolveOutcome::infeasible(std::optional<Vector> farkas) {
  SolveOutcome o;
  o.status = SolveStatus::Infeasible;
  o.farkas = std::move(farkas);
  return o;
}

SolveOutcome SolveOutcome::unbounded(std::optional<Vector> ray) {
  SolveOutcome o;
  o.status = SolveStatus::Unbounded;
  o.ray = std::move(ray);
  return o;
}

ExtendedRational SolveOutcome::extended_value() const {
  const bool max = sense == Sense::Maximize;
  switch (status) {
  case SolveStatus::Optimal:
    return value;
  case SolveStatus::Infeasible:
    return max ? ExtendedRational::minus_infinity() : ExtendedRational::plus_infinity();
  case SolveStatus::Unbounded:
    return max ? ExtendedRational::plus_infinity() : ExtendedRational::minus_infinity();
  }
  return value;
}

SolveOutcome solve_fm(const LinearProgram &p, const FmOptions &opts) {
  const std::size_t n = p.num_variables();
  const std::size_t m = p.num_constraints();

  // Variables x_0..x_{n-1} and t = x_n, with t = <c, x> as two rows.
  std::vector<Row> rows;
  const std::size_t total = m + 2;
  for (std::size_t i = 0; i < m; ++i) {
    Vector coeffs = p.a.row(i);
    coeffs.push_back(0);
    rows.push_back(Row{std::move(coeffs), p.b[i], Vector::unit(total, i)});
  }
  Vector up = -p.c;
  up.push_back(1);
  Vector down = p.c;
  down.push_back(-1);
  rows.push_back(Row{std::move(up), 0, Vector::unit(total, m)});
  rows.push_back(Row{std::move(down), 0, Vector::unit(total, m + 1)});
  for (auto &r : rows)
    normalize(r);

  std::vector<std::size_t> vars;
  for (std::size_t j = 0; j < n; ++j)
    vars.push_back(j);
  const Projection pr = project(std::move(rows), vars, opts);
  if (pr.contradiction)
    return SolveOutcome::infeasible(prefix(pr.contradiction->mult, m));

  // Remaining rows only mention t.
  const Row *upper = nullptr;
  const Row *lower = nullptr;
  std::optional<Rational> hi, lo;
  for (const auto &r : pr.rows) {
    const Rational &a = r.coeffs[n];
    const Rational bound = r.rhs / a;
    if (a.sign() > 0 && (!hi || bound < *hi)) {
      hi = bound;
      upper = &r;
    } else if (a.sign() < 0 && (!lo || bound > *lo)) {
      lo = bound;
      lower = &r;
    }
  }
  if (hi && lo && *lo > *hi) {
    Row both = combine(*upper, *lower, n);
    return SolveOutcome::infeasible(prefix(both.mult, m));
  }
  if (!hi)
    return SolveOutcome::unbounded();

  Vector x(n + 1);
  x[n] = *hi;
  back_substitute(pr, x);
  Vector witness = prefix(x, n);
  if (!p.is_feasible(witness) || p.objective(witness) != *hi)
    throw InconsistencyError("solve_fm witness " + witness.to_string() +
                             " does not attain value " + hi->to_string());
  return SolveOutcome::optimal(*hi, std::move(witness));
}

SolveOutcome solve_enum(const LinearProgram &p, const FmOptions &opts) {
  const std::size_t n = p.num_variables();
  const std::size_t m = p.num_constraints();

  const auto feas = fm_feasible(InequalitySystem::from_program(p), opts);
  if (!feas.feasible())
    return SolveOutcome::infeasible(feas.farkas);

  InequalitySystem recession(n);
  for (std::size_t i = 0; i < m; ++i)
    recession.add(p.a.row(i), 0);
  recession.add(-p.c, -1);
  if (auto ray = fm_feasible(recession, opts); ray.feasible())
    return SolveOutcome::unbounded(std::move(ray.point));

  // Bounded and feasible: the optimum is attained on a minimal face, which is
  // {x : A_S x = b_S} for some row set S of size and rank rank(A).
  const std::size_t r = rank(p.a);
  std::optional<Rational> best;
  Vector best_x;
  std::vector<std::size_t> idx(r);
  for (std::size_t k = 0; k < r; ++k)
    idx[k] = k;
  while (true) {
    Matrix sub(0, n);
    Vector rhs;
    for (std::size_t k : idx) {
      sub.append_row(p.a.row(k));
      rhs.push_back(p.b[k]);
    }
    if (rank(sub) == r) {
      if (auto x = solve_particular(sub, rhs); x && p.is_feasible(*x)) {
        Rational v = p.objective(*x);
        if (!best || v > *best || (v == *best && *x < best_x)) {
          best = std::move(v);
          best_x = std::move(*x);
        }
      }
    }
    // next combination of r indices out of m
    std::size_t k = r;
    while (k > 0 && idx[k - 1] == m - r + k - 1)
      --k;
    if (k == 0)
      break;
    ++idx[k - 1];
    for (std::size_t t = k; t < r; ++t)
      idx[t] = idx[t - 1] + 1;
  }
  if (!best)
    return solve_fm(p, opts);
  return SolveOutcome::optimal(std::move(*best), std::move(best_x));
}

PairClassification classify_pair(const LinearProgram &p, const FmOptions &opts) {
  PairClassification res;
  res.primal = solve_fm(p, opts);
  res.dual = solve_fm(dual_as_primal(dualize(p)), opts);
  res.dual.sense = Sense::Minimize;
  if (res.dual.is_optimal())
    res.dual.value = -res.dual.value;

  const auto ps = res.primal.status;
  const auto ds = res.dual.status;
  if ((ps == SolveStatus::Unbounded && ds != SolveStatus::Infeasible) ||
      (ds == SolveStatus::Unbounded && ps != SolveStatus::Infeasible)) {
    std::ostringstream msg;
    msg << "weak-duality exclusion violated: primal " << to_string(ps) << ", dual "
        << to_string(ds);
    throw InconsistencyError(msg.str());
  }
  return res;
}

} // namespace polarlp
