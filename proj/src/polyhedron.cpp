#include "polarlp/polyhedron.hpp"

#include <ostream>
#include <sstream>

namespace polarlp {

namespace {

void require_nonzero(const Vector &u, const char *what) {
  if (u.is_zero())
    throw DomainError(std::string(what) + ": direction must be nonzero");
}

void require_dim(std::size_t expected, const Vector &v, const char *what) {
  if (v.dim() != expected)
    throw DimensionError(std::string(what) + ": vector of dimension " + std::to_string(v.dim()) +
                         ", expected " + std::to_string(expected));
}

ExtendedRational as_sup(const SolveOutcome &o) {
  switch (o.status) {
  case SolveStatus::Optimal:
    return o.value;
  case SolveStatus::Unbounded:
    return ExtendedRational::plus_infinity();
  case SolveStatus::Infeasible:
    break;
  }
  throw InconsistencyError("supremum over an empty set");
}

Matrix normals_of(const PolarRep &q) {
  Matrix a(0, q.dim());
  for (const auto &t : q.terms())
    a.append_row(t.normal);
  return a;
}

Vector weights_of(const PolarRep &q) {
  Vector b;
  for (const auto &t : q.terms())
    b.push_back(t.weight);
  return b;
}

} // namespace

HPolyhedron::HPolyhedron(std::size_t dim, std::vector<HalfSpace> constraints)
    : dim_(dim), constraints_(std::move(constraints)) {
  for (const auto &h : constraints_)
    require_dim(dim_, h.normal, "HPolyhedron");
}

HPolyhedron HPolyhedron::from_program(const LinearProgram &p) {
  HPolyhedron poly(p.num_variables());
  for (std::size_t i = 0; i < p.num_constraints(); ++i)
    poly.add(p.a.row(i), p.b[i]);
  return poly;
}

void HPolyhedron::add(Vector normal, Rational offset) {
  require_dim(dim_, normal, "HPolyhedron::add");
  constraints_.push_back(HalfSpace{std::move(normal), std::move(offset)});
}

LinearProgram HPolyhedron::program_for(const Vector &objective) const {
  require_dim(dim_, objective, "program_for");
  Matrix a(0, dim_);
  Vector b;
  for (const auto &h : constraints_) {
    a.append_row(h.normal);
    b.push_back(h.offset);
  }
  return LinearProgram(std::move(a), std::move(b), objective);
}

std::string HPolyhedron::to_text() const {
  std::ostringstream os;
  os << "vars " << dim_ << '\n';
  for (const auto &h : constraints_) {
    os << "row";
    for (const auto &e : h.normal)
      os << ' ' << e;
    os << " <= " << h.offset << '\n';
  }
  return os.str();
}

HPolyhedron HPolyhedron::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<HPolyhedron> poly;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;)
      tok.push_back(t);
    if (tok.empty())
      continue;
    try {
      if (!poly) {
        if (tok[0] != "vars" || tok.size() != 2)
          throw ParseError(lineno, "expected 'vars <n>'");
        const long n = std::stol(tok[1]);
        if (n <= 0 || tok[1].find_first_not_of("0123456789") != std::string::npos)
          throw ParseError(lineno, "variable count must be a positive integer");
        poly.emplace(static_cast<std::size_t>(n));
        continue;
      }
      if (tok[0] != "row")
        throw ParseError(lineno, "unknown keyword '" + tok[0] + "'");
      const std::size_t n = poly->dim();
      if (tok.size() != n + 3 || tok[n + 1] != "<=")
        throw ParseError(lineno, "expected 'row <" + std::to_string(n) + " rationals> <= <rational>'");
      Vector a(n);
      for (std::size_t j = 0; j < n; ++j)
        a[j] = Rational::parse(tok[j + 1]);
      poly->add(std::move(a), Rational::parse(tok[n + 2]));
    } catch (const DomainError &e) {
      throw ParseError(lineno, e.what());
    } catch (const std::logic_error &) {
      throw ParseError(lineno, "malformed integer");
    }
  }
  if (!poly)
    throw ParseError(lineno, "missing 'vars' header");
  return *poly;
}

std::variant<HPolyhedron, ProvenEmpty> normalize_rows(const HPolyhedron &p) {
  HPolyhedron out(p.dim());
  for (const auto &h : p.constraints()) {
    if (h.normal.is_zero()) {
      if (h.offset.sign() < 0)
        return ProvenEmpty{};
      continue;
    }
    out.add(h.normal, h.offset);
  }
  return out;
}

bool contains(const HPolyhedron &p, const Vector &x) {
  require_dim(p.dim(), x, "contains");
  for (const auto &h : p.constraints())
    if (dot(h.normal, x) > h.offset)
      return false;
  return true;
}

ExtendedRational support(const HPolyhedron &p, const Vector &u, const FmOptions &opts) {
  require_dim(p.dim(), u, "support");
  require_nonzero(u, "support");
  const auto out = solve_fm(p.program_for(u), opts);
  if (out.status == SolveStatus::Infeasible)
    throw DomainError("support: polyhedron is empty");
  return as_sup(out);
}

ExtendedRational radial(const HPolyhedron &p, const Vector &u) {
  require_dim(p.dim(), u, "radial");
  require_nonzero(u, "radial");
  if (!contains(p, Vector::zero(p.dim())))
    throw DomainError("radial: origin not contained");
  std::optional<Rational> best;
  for (const auto &h : p.constraints()) {
    const Rational s = dot(h.normal, u);
    if (s.sign() <= 0)
      continue;
    Rational lambda = h.offset / s;
    if (!best || lambda < *best)
      best = std::move(lambda);
  }
  if (!best)
    return ExtendedRational::plus_infinity();
  return *best;
}

PolarGenerator polar_halfspace(const Vector &a, const Rational &b) {
  if (a.is_zero())
    throw DomainError("polar_halfspace: zero normal");
  if (b.sign() < 0)
    throw DomainError("polar_halfspace: negative offset, origin not contained");
  if (b.is_zero())
    return Ray{a};
  return Segment{a / b};
}

PolarRep::PolarRep(std::size_t dim, std::vector<PolarTerm> terms)
    : dim_(dim), terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    require_dim(dim_, terms_[i].normal, "PolarRep");
    if (terms_[i].normal.is_zero())
      throw DomainError("PolarRep: generator " + std::to_string(i) + " has zero normal");
    if (terms_[i].weight.sign() < 0)
      throw DomainError("origin not contained: constraint " + std::to_string(i) +
                        " has negative offset");
  }
}

std::vector<PolarGenerator> PolarRep::generators() const {
  std::vector<PolarGenerator> out;
  out.reserve(terms_.size());
  for (const auto &t : terms_)
    out.push_back(polar_halfspace(t.normal, t.weight));
  return out;
}

std::string PolarRep::to_text() const {
  std::ostringstream os;
  for (const auto &t : terms_) {
    os << "gen";
    for (const auto &e : t.normal)
      os << ' ' << e;
    os << " weight " << t.weight << '\n';
  }
  return os.str();
}

PolarRep polar(const HPolyhedron &p) {
  std::vector<PolarTerm> terms;
  terms.reserve(p.constraints().size());
  for (const auto &h : p.constraints())
    terms.push_back(PolarTerm{h.normal, h.offset});
  return PolarRep(p.dim(), std::move(terms));
}

bool polar_contains(const PolarRep &q, const Vector &y, const FmOptions &opts) {
  require_dim(q.dim(), y, "polar_contains");
  const std::size_t m = q.terms().size();
  // sum z_i a_i = y, z >= 0, <b, z> <= 1
  InequalitySystem s(m);
  for (std::size_t j = 0; j < q.dim(); ++j) {
    Vector row(m);
    for (std::size_t i = 0; i < m; ++i)
      row[i] = q.terms()[i].normal[j];
    s.add(row, y[j]);
    s.add(-row, -y[j]);
  }
  for (std::size_t i = 0; i < m; ++i)
    s.add(-Vector::unit(m, i), 0);
  s.add(weights_of(q), 1);
  return fm_feasible(s, opts).feasible();
}

ExtendedRational polar_support(const PolarRep &q, const Vector &u, const FmOptions &opts) {
  require_dim(q.dim(), u, "polar_support");
  require_nonzero(u, "polar_support");
  const std::size_t m = q.terms().size();
  Matrix a(0, m);
  Vector b;
  for (std::size_t i = 0; i < m; ++i) {
    a.append_row(-Vector::unit(m, i));
    b.push_back(0);
  }
  a.append_row(weights_of(q));
  b.push_back(1);
  Vector c(m);
  for (std::size_t i = 0; i < m; ++i)
    c[i] = dot(q.terms()[i].normal, u);
  return as_sup(solve_fm(LinearProgram(std::move(a), std::move(b), std::move(c)), opts));
}

LinearProgram radial_program(const Matrix &normals, const Vector &weights, const Vector &u) {
  const std::size_t m = normals.rows();
  const std::size_t n = normals.cols();
  require_dim(n, u, "radial_program");
  require_dim(m, weights, "radial_program");
  const std::size_t vars = m + 1;
  Matrix a(0, vars);
  Vector b;
  for (std::size_t j = 0; j < n; ++j) {
    // rho u_j - sum z_i a_ij = 0
    Vector row(vars);
    for (std::size_t i = 0; i < m; ++i)
      row[i] = -normals(i, j);
    row[m] = u[j];
    a.append_row(row);
    b.push_back(0);
    a.append_row(-row);
    b.push_back(0);
  }
  for (std::size_t i = 0; i < m; ++i) {
    a.append_row(-Vector::unit(vars, i));
    b.push_back(0);
  }
  Vector budget(vars);
  for (std::size_t i = 0; i < m; ++i)
    budget[i] = weights[i];
  a.append_row(std::move(budget));
  b.push_back(1);
  a.append_row(-Vector::unit(vars, m));
  b.push_back(0);
  return LinearProgram(std::move(a), std::move(b), Vector::unit(vars, m));
}

ExtendedRational polar_radial(const PolarRep &q, const Vector &u, const FmOptions &opts) {
  require_dim(q.dim(), u, "polar_radial");
  require_nonzero(u, "polar_radial");
  return as_sup(solve_fm(radial_program(normals_of(q), weights_of(q), u), opts));
}

bool bipolar_contains(const PolarRep &q, const Vector &y, const FmOptions &opts) {
  require_dim(q.dim(), y, "bipolar_contains");
  if (y.is_zero())
    return true;
  return polar_support(q, y, opts) <= ExtendedRational(1);
}

bool reciprocal_pair(const ExtendedRational &h, const ExtendedRational &rho) {
  return h == rho.reciprocal();
}

std::ostream &operator<<(std::ostream &os, const PolarGenerator &g) {
  if (const auto *s = std::get_if<Segment>(&g))
    return os << "segment " << s->endpoint;
  return os << "ray " << std::get<Ray>(g).direction;
}

} // namespace polarlp
