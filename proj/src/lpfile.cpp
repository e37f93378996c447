#include "polarlp/lpfile.hpp"

#include <sstream>

namespace polarlp {

namespace {

std::vector<std::string> tokenize(const std::string &line) {
  std::istringstream ls(line);
  std::vector<std::string> tok;
  for (std::string t; ls >> t;)
    tok.push_back(t);
  return tok;
}

Rational parse_rational_at(const std::string &tok, std::size_t lineno) {
  try {
    return Rational::parse(tok);
  } catch (const DomainError &e) {
    throw ParseError(lineno, e.what());
  }
}

Vector parse_row(const std::vector<std::string> &tok, std::size_t first, std::size_t n,
                 std::size_t lineno) {
  Vector v(n);
  for (std::size_t j = 0; j < n; ++j)
    v[j] = parse_rational_at(tok[first + j], lineno);
  return v;
}

} // namespace

std::string to_string(Relation r) {
  switch (r) {
  case Relation::LessEqual:
    return "<=";
  case Relation::GreaterEqual:
    return ">=";
  case Relation::Equal:
    return "=";
  }
  return "?";
}

LpFile LpFile::parse(std::string_view text) {
  enum class Expect { Problem, Vars, Objective, Constraints } state = Expect::Problem;
  LpFile lp;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto tok = tokenize(line);
    if (tok.empty())
      continue;
    const std::string &kw = tok[0];
    switch (state) {
    case Expect::Problem:
      if (kw != "problem")
        throw ParseError(lineno, "missing header: expected 'problem max|min'");
      if (tok.size() != 2 || (tok[1] != "max" && tok[1] != "min"))
        throw ParseError(lineno, "expected 'problem max' or 'problem min'");
      lp.sense = tok[1] == "max" ? Sense::Maximize : Sense::Minimize;
      state = Expect::Vars;
      break;
    case Expect::Vars: {
      if (kw != "vars")
        throw ParseError(lineno, "missing header: expected 'vars <n>'");
      if (tok.size() != 2 || tok[1].find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(lineno, "expected 'vars <positive integer>'");
      std::size_t n = 0;
      try {
        n = std::stoul(tok[1]);
      } catch (const std::exception &) {
        throw ParseError(lineno, "variable count out of range");
      }
      if (n == 0)
        throw ParseError(lineno, "variable count must be positive");
      lp.n = n;
      state = Expect::Objective;
      break;
    }
    case Expect::Objective:
      if (kw != "objective")
        throw ParseError(lineno, "missing header: expected 'objective'");
      if (tok.size() != lp.n + 1)
        throw ParseError(lineno, "objective has " + std::to_string(tok.size() - 1) +
                                     " coefficients, expected " + std::to_string(lp.n));
      lp.objective = parse_row(tok, 1, lp.n, lineno);
      state = Expect::Constraints;
      break;
    case Expect::Constraints: {
      if (kw != "constraint")
        throw ParseError(lineno, "unknown keyword '" + kw + "'");
      if (tok.size() != lp.n + 3)
        throw ParseError(lineno, "constraint has wrong arity: expected " +
                                     std::to_string(lp.n) + " coefficients, a relation and a "
                                     "right-hand side");
      const std::string &rel = tok[lp.n + 1];
      LpConstraint c;
      if (rel == "<=")
        c.relation = Relation::LessEqual;
      else if (rel == ">=")
        c.relation = Relation::GreaterEqual;
      else if (rel == "=")
        c.relation = Relation::Equal;
      else
        throw ParseError(lineno, "unknown relation '" + rel + "'");
      c.coeffs = parse_row(tok, 1, lp.n, lineno);
      c.rhs = parse_rational_at(tok[lp.n + 2], lineno);
      lp.constraints.push_back(std::move(c));
      break;
    }
    }
  }
  if (state != Expect::Constraints)
    throw ParseError(lineno, "missing header lines");
  return lp;
}

std::string LpFile::to_text() const {
  std::ostringstream os;
  os << "problem " << (sense == Sense::Maximize ? "max" : "min") << '\n';
  os << "vars " << n << '\n';
  os << "objective " << objective << '\n';
  for (const auto &c : constraints)
    os << "constraint " << c.coeffs << ' ' << to_string(c.relation) << ' ' << c.rhs << '\n';
  return os.str();
}

LinearProgram LpFile::to_program() const {
  Matrix a(0, n);
  Vector b;
  for (const auto &c : constraints) {
    switch (c.relation) {
    case Relation::LessEqual:
      a.append_row(c.coeffs);
      b.push_back(c.rhs);
      break;
    case Relation::GreaterEqual:
      a.append_row(-c.coeffs);
      b.push_back(-c.rhs);
      break;
    case Relation::Equal:
      a.append_row(c.coeffs);
      b.push_back(c.rhs);
      a.append_row(-c.coeffs);
      b.push_back(-c.rhs);
      break;
    }
  }
  return LinearProgram(std::move(a), std::move(b), sense == Sense::Maximize ? objective : -objective);
}

ExtendedRational LpFile::restore_value(const ExtendedRational &v) const {
  return sense == Sense::Maximize ? v : -v;
}

LpFile dual_as_lpfile(const LinearProgram &p) {
  const std::size_t m = p.num_constraints();
  LpFile d;
  d.sense = Sense::Minimize;
  d.n = m;
  d.objective = p.b;
  for (std::size_t j = 0; j < p.num_variables(); ++j)
    d.constraints.push_back(LpConstraint{p.a.column(j), Relation::Equal, p.c[j]});
  for (std::size_t i = 0; i < m; ++i)
    d.constraints.push_back(LpConstraint{Vector::unit(m, i), Relation::GreaterEqual, 0});
  return d;
}

} // namespace polarlp
