#include "polarlp/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "polarlp/duality.hpp"
#include "polarlp/lpfile.hpp"
#include "polarlp/polyhedron.hpp"

namespace polarlp::cli {

namespace {

struct Args {
  std::string command;
  std::string input;
  std::map<std::string, Vector> vectors; // --dir, --x, --y
  std::string solver = "fm";
};

class UsageError : public Error {
public:
  using Error::Error;
};

bool parses_as_rational(const std::string &tok) {
  try {
    Rational::parse(tok);
    return true;
  } catch (const DomainError &) {
    return false;
  }
}

// Vector flags take any number of values: `--dir 1 -1/2 file.lp` or a single
// quoted "1 -1/2". CLI11 lets a vector flag swallow the trailing input path,
// so a non-rational last value is handed back as the input.
Args parse_args(const std::vector<std::string> &args) {
  if (args.empty())
    throw UsageError("missing command");
  CLI::App app;
  app.set_help_flag();
  app.require_subcommand(1);
  std::map<std::string, std::vector<std::string>> raw;
  std::string input, solver = "fm";
  for (const char *name : {"solve", "dualize", "duality", "polar", "support", "radial", "verify"}) {
    CLI::App *sub = app.add_subcommand(name);
    sub->add_option("input", input)->required();
    if (std::string(name) == "solve")
      sub->add_option("--solver", solver)->check(CLI::IsMember({"fm", "enum"}));
    for (const char *flag : {"dir", "x", "y"})
      sub->add_option(std::string("--") + flag, raw[flag])
          ->expected(1, CLI::detail::expected_max_vector_size);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::RequiredError &) {
    // the input path may sit inside a vector flag's values; checked below
  } catch (const CLI::ParseError &e) {
    throw UsageError(e.what());
  }

  if (app.get_subcommands().empty())
    throw UsageError("unknown command '" + args[0] + "'");
  Args a;
  a.command = app.get_subcommands()[0]->get_name();
  a.solver = solver;
  a.input = input;
  for (auto &[flag, values] : raw) {
    if (values.empty())
      continue;
    if (a.input.empty() && !parses_as_rational(values.back()) &&
        values.back().find(' ') == std::string::npos) {
      a.input = values.back();
      values.pop_back();
    }
    Vector v;
    for (const auto &tok : values) {
      try {
        for (const auto &e : Vector::parse(tok))
          v.push_back(e);
      } catch (const DomainError &e) {
        throw UsageError("--" + flag + ": " + e.what());
      }
    }
    if (v.dim() == 0)
      throw UsageError("--" + flag + " expects at least one rational");
    a.vectors[flag] = std::move(v);
  }
  if (a.input.empty())
    throw UsageError("missing input file");
  return a;
}

std::string read_input(const std::string &path, std::istream &in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw UsageError("cannot open '" + path + "'");
  buf << f.rdbuf();
  return buf.str();
}

std::string first_keyword(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (ls >> kw)
      return kw;
  }
  return {};
}

// Polyhedron commands accept either an LP file (its feasible region) or the
// `vars`/`row` polyhedron format.
HPolyhedron load_polyhedron(const std::string &text) {
  if (first_keyword(text) == "vars")
    return HPolyhedron::parse(text);
  return HPolyhedron::from_program(LpFile::parse(text).to_program());
}

const Vector &require_vector(const Args &a, const std::string &name, std::size_t dim) {
  auto it = a.vectors.find(name);
  if (it == a.vectors.end())
    throw UsageError(a.command + " requires --" + name);
  if (it->second.dim() != dim)
    throw UsageError("--" + name + " has " + std::to_string(it->second.dim()) +
                     " entries, expected " + std::to_string(dim));
  return it->second;
}

int exit_for(SolveStatus s) {
  switch (s) {
  case SolveStatus::Optimal:
    return kOk;
  case SolveStatus::Infeasible:
    return kInfeasible;
  case SolveStatus::Unbounded:
    return kUnbounded;
  }
  return kError;
}

int cmd_solve(const Args &a, const std::string &text, std::ostream &out) {
  const LpFile lp = LpFile::parse(text);
  const LinearProgram p = lp.to_program();
  const SolveOutcome o = a.solver == "enum" ? solve_enum(p) : solve_fm(p);
  out << "status " << to_string(o.status) << '\n';
  out << "value " << lp.restore_value(o.extended_value()) << '\n';
  if (o.is_optimal())
    out << "witness " << o.witness << '\n';
  return exit_for(o.status);
}

int cmd_dualize(const std::string &text, std::ostream &out) {
  const LpFile lp = LpFile::parse(text);
  out << dual_as_lpfile(lp.to_program()).to_text();
  return kOk;
}

int cmd_duality(const std::string &text, std::ostream &out) {
  const LpFile lp = LpFile::parse(text);
  const StrongDualityReport r = strong_duality(lp.to_program());
  out << r.to_text();
  return exit_for(r.primal.status);
}

int cmd_polar(const std::string &text, std::ostream &out, std::ostream &err) {
  const auto norm = normalize_rows(load_polyhedron(text));
  if (std::holds_alternative<ProvenEmpty>(norm)) {
    err << "polyhedron is empty (a row reads 0 <= negative)\n";
    return kInfeasible;
  }
  out << polar(std::get<HPolyhedron>(norm)).to_text();
  return kOk;
}

int cmd_support(const Args &a, const std::string &text, std::ostream &out, std::ostream &err) {
  const HPolyhedron p = load_polyhedron(text);
  const Vector &u = require_vector(a, "dir", p.dim());
  if (solve_fm(p.program_for(u)).status == SolveStatus::Infeasible) {
    err << "support: polyhedron is empty\n";
    return kInfeasible;
  }
  const ExtendedRational h = support(p, u);
  out << h << '\n';
  return h.is_plus_infinity() ? kUnbounded : kOk;
}

int cmd_radial(const Args &a, const std::string &text, std::ostream &out) {
  const HPolyhedron p = load_polyhedron(text);
  const Vector &u = require_vector(a, "dir", p.dim());
  out << radial(p, u) << '\n';
  return kOk;
}

int cmd_verify(const Args &a, const std::string &text, std::ostream &out) {
  const LinearProgram p = LpFile::parse(text).to_program();
  const Vector &x = require_vector(a, "x", p.num_variables());
  const Vector &y = require_vector(a, "y", p.num_constraints());
  WeakDualityCertificate cert;
  try {
    cert = check_weak(p, x, y);
  } catch (const DomainError &e) {
    out << "FAIL " << e.what() << '\n';
    return kError;
  }
  out << "chain " << cert.chain_cx << ' ' << cert.chain_yax << ' ' << cert.chain_yb << '\n';
  out << "optimal " << (verify_optimal_pair(p, x, y) ? "yes" : "no") << '\n';
  out << "OK\n";
  return kOk;
}

} // namespace

std::string usage() {
  return "usage: polarlp <command> [flags] <input-file | ->\n"
         "commands:\n"
         "  solve [--solver fm|enum]   solve the program, print status/value/witness\n"
         "  dualize                    print the asymmetric dual as an LP file\n"
         "  duality                    run the certified strong-duality pipeline\n"
         "  polar                      print the polar body generators\n"
         "  support --dir <rationals>  support function in a direction\n"
         "  radial --dir <rationals>   radial function in a direction\n"
         "  verify --x <rationals> --y <rationals>\n"
         "                             check a primal/dual pair\n"
         "exit codes: 0 optimal/ok, 1 error, 2 infeasible, 3 unbounded\n";
}

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  try {
    const Args a = parse_args(args);
    const std::string text = read_input(a.input, in);
    if (a.command == "solve")
      return cmd_solve(a, text, out);
    if (a.command == "dualize")
      return cmd_dualize(text, out);
    if (a.command == "duality")
      return cmd_duality(text, out);
    if (a.command == "polar")
      return cmd_polar(text, out, err);
    if (a.command == "support")
      return cmd_support(a, text, out, err);
    if (a.command == "radial")
      return cmd_radial(a, text, out);
    if (a.command == "verify")
      return cmd_verify(a, text, out);
    throw UsageError("unknown command '" + a.command + "'");
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n' << usage();
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

} // namespace polarlp::cli
