#include "polarlp/duality.hpp"

#include <sstream>

#include "polarlp/polyhedron.hpp"

namespace polarlp {

namespace {

std::string vector_field(const Vector &v) {
  std::string out;
  for (const auto &e : v)
    out += ' ' + e.to_string();
  return out;
}

[[noreturn]] void fail_report(const std::string &why, const LinearProgram &p,
                              const StrongDualityReport &r) {
  std::ostringstream os;
  os << "strong duality verification failed: " << why << "\n"
     << "A rows:";
  for (const auto &row : p.a.row_span())
    os << " [" << row << "]";
  os << "\nb " << p.b << "\nc " << p.c << "\n" << r.to_text();
  throw InconsistencyError(os.str());
}

} // namespace

WeakDualityCertificate check_weak(const LinearProgram &p, const Vector &x, const Vector &y) {
  if (x.dim() != p.num_variables())
    throw DimensionError("x has dimension " + std::to_string(x.dim()) + ", expected " +
                         std::to_string(p.num_variables()));
  if (y.dim() != p.num_constraints())
    throw DimensionError("y has dimension " + std::to_string(y.dim()) + ", expected " +
                         std::to_string(p.num_constraints()));
  if (auto bad = p.first_violated(x))
    throw DomainError("x violates primal constraint " + std::to_string(*bad));
  for (std::size_t i = 0; i < y.dim(); ++i)
    if (y[i].sign() < 0)
      throw DomainError("y violates sign constraint " + std::to_string(i));
  const Vector aty = transpose_apply(p.a, y);
  for (std::size_t j = 0; j < aty.dim(); ++j)
    if (aty[j] != p.c[j])
      throw DomainError("y violates dual equality constraint " + std::to_string(j));

  WeakDualityCertificate cert;
  cert.x = x;
  cert.y = y;
  cert.chain_cx = dot(p.c, x);
  cert.chain_yax = dot(y, p.a.apply(x));
  cert.chain_yb = dot(y, p.b);
  cert.primal_value = cert.chain_cx;
  cert.dual_value = cert.chain_yb;
  if (cert.chain_cx != cert.chain_yax || cert.chain_yax > cert.chain_yb)
    throw InconsistencyError("weak duality chain broken: " + cert.chain_cx.to_string() + ", " +
                             cert.chain_yax.to_string() + ", " + cert.chain_yb.to_string());
  return cert;
}

PolarDual dual_from_polar(const LinearProgram &p, const FmOptions &opts) {
  for (std::size_t i = 0; i < p.b.dim(); ++i)
    if (p.b[i].sign() < 0)
      throw DomainError("dual_from_polar: origin infeasible (b_" + std::to_string(i) + " < 0)");
  if (p.c.is_zero())
    throw DomainError("dual_from_polar: zero objective");

  const std::size_t m = p.num_constraints();
  const SolveOutcome aux = solve_fm(radial_program(p.a, p.b, p.c), opts);

  if (aux.status == SolveStatus::Infeasible)
    throw InconsistencyError("dual infeasible despite bounded primal");

  if (aux.status == SolveStatus::Unbounded) {
    // h(c) = 0: every multiple of c lies in the polar, rho is not attained.
    SolveOutcome d = solve_fm(dual_as_primal(dualize(p)), opts);
    if (!d.is_optimal())
      throw InconsistencyError("dual is " + to_string(d.status) +
                               " although the polar program is unbounded");
    return PolarDual{d.witness, -d.value, std::nullopt};
  }

  const Rational rho = aux.value;
  if (rho.sign() <= 0)
    throw DomainError("dual_from_polar: primal is unbounded (rho = 0)");
  Vector y(m);
  for (std::size_t i = 0; i < m; ++i)
    y[i] = aux.witness[i] / rho;
  Rational nu = dot(p.b, y);
  if (nu != rho.inverse())
    throw InconsistencyError("<b, y> = " + nu.to_string() + " differs from 1/rho = " +
                             rho.inverse().to_string());
  return PolarDual{std::move(y), std::move(nu), rho};
}

std::string to_string(const DualityPath &path) {
  if (std::holds_alternative<ZeroObjective>(path))
    return "zero-objective";
  if (std::holds_alternative<OriginFeasible>(path))
    return "origin-feasible";
  return "translated" + vector_field(std::get<Translated>(path).anchor);
}

std::string StrongDualityReport::to_text() const {
  std::ostringstream os;
  os << "status " << to_string(primal.status) << '\n';
  os << "path " << (path ? to_string(*path) : std::string("none")) << '\n';
  os << "nu_max " << nu_max << '\n';
  os << "nu_min " << nu_min << '\n';
  if (primal.is_optimal())
    os << "primal_witness" << vector_field(primal.witness) << '\n';
  else
    os << "primal_witness none\n";
  if (dual_witness)
    os << "dual_witness" << vector_field(*dual_witness) << '\n';
  else
    os << "dual_witness none\n";
  if (certificate)
    os << "chain " << certificate->chain_cx << ' ' << certificate->chain_yax << ' '
       << certificate->chain_yb << '\n';
  else
    os << "chain none\n";
  return os.str();
}

StrongDualityReport strong_duality(const LinearProgram &p, const StrongDualityOptions &opts) {
  StrongDualityReport r;
  r.primal = solve_fm(p, opts.fm);
  r.nu_max = r.primal.extended_value();

  if (!r.primal.is_optimal()) {
    const PairClassification pc = classify_pair(p, opts.fm);
    if (pc.primal.status != r.primal.status)
      fail_report("primal status changed between solves", p, r);
    r.nu_min = pc.dual.extended_value();
    if (pc.dual.is_optimal())
      r.dual_witness = pc.dual.witness;
    if (r.primal.status == SolveStatus::Unbounded && !r.nu_min.is_plus_infinity())
      fail_report("unbounded primal with a feasible dual", p, r);
    return r;
  }

  const std::size_t m = p.num_constraints();
  const Vector origin = Vector::zero(p.num_variables());
  Vector y;
  if (p.c.is_zero()) {
    r.path = ZeroObjective{};
    y = Vector::zero(m);
    r.nu_min = Rational(0);
  } else if (!opts.forced_anchor && p.is_feasible(origin)) {
    r.path = OriginFeasible{};
    PolarDual pd = dual_from_polar(p, opts.fm);
    y = std::move(pd.y);
    r.nu_min = pd.nu_min;
  } else {
    Vector anchor;
    if (opts.forced_anchor) {
      anchor = *opts.forced_anchor;
    } else {
      auto feas = fm_feasible(InequalitySystem::from_program(p), opts.fm);
      if (!feas.feasible())
        fail_report("no feasible anchor for an optimal primal", p, r);
      anchor = std::move(*feas.point);
    }
    const TranslatedProgram t = translate(p, anchor);
    PolarDual pd = dual_from_polar(t.program, opts.fm);
    y = std::move(pd.y);
    r.nu_min = untranslate_value(pd.nu_min, t);
    r.path = Translated{std::move(anchor)};
  }
  r.dual_witness = y;

  if (r.nu_max != r.nu_min)
    fail_report("nu_max != nu_min", p, r);
  if (!r.nu_min.is_finite() || dot(p.b, y) != r.nu_min.value())
    fail_report("<b, y> differs from nu_min", p, r);
  try {
    r.certificate = check_weak(p, r.primal.witness, y);
  } catch (const Error &e) {
    fail_report(e.what(), p, r);
  }
  if (!verify_optimal_pair(p, r.primal.witness, y))
    fail_report("primal and dual witnesses are not an optimal pair", p, r);
  return r;
}

std::string to_string(PairVerdict v) {
  switch (v) {
  case PairVerdict::Optimal:
    return "optimal";
  case PairVerdict::PrimalInfeasible:
    return "primal-infeasible";
  case PairVerdict::DualInfeasible:
    return "dual-infeasible";
  case PairVerdict::ValuesDiffer:
    return "values-differ";
  case PairVerdict::DimensionMismatch:
    return "dimension-mismatch";
  }
  return "unknown";
}

PairVerdict verify_pair(const LinearProgram &p, const Vector &x, const Vector &y) {
  if (x.dim() != p.num_variables() || y.dim() != p.num_constraints())
    return PairVerdict::DimensionMismatch;
  if (!p.is_feasible(x))
    return PairVerdict::PrimalInfeasible;
  if (!dualize(p).is_feasible(y))
    return PairVerdict::DualInfeasible;
  if (dot(p.c, x) != dot(p.b, y))
    return PairVerdict::ValuesDiffer;
  return PairVerdict::Optimal;
}

} // namespace polarlp
