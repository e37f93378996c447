// Acceptance suite. Prints one PASS/FAIL line per criterion.
//   acceptance            run all nine
//   acceptance --only N   run criterion N
// Exit status is 0 iff every selected criterion passes.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "polarlp/cli.hpp"
#include "polarlp/duality.hpp"
#include "polarlp/lpfile.hpp"
#include "polarlp/polyhedron.hpp"
#include "support/oracles.hpp"
#include "support/random_lp.hpp"

using namespace polarlp;
using polarlp::testing::Gen;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  // keeps the first failure only
  void fail(const std::string &why) {
    if (!pass)
      return;
    pass = false;
    detail.str("");
    detail << why;
  }
};

std::string str(const LinearProgram &p) {
  std::ostringstream os;
  os << "A=[";
  for (const auto &r : p.a.row_span())
    os << '[' << r << ']';
  os << "] b=[" << p.b << "] c=[" << p.c << ']';
  return os.str();
}

// The shared random corpus: n in 1..4, m in 1..8, numerators in [-5, 5],
// denominators in {1, 2, 3}.
constexpr std::uint64_t kCorpusSeed = 20261016;
constexpr int kOptimalTarget = 1000;

template <typename F> int for_each_corpus_instance(F &&f) {
  Gen g(kCorpusSeed);
  int optimal = 0, total = 0;
  while (optimal < kOptimalTarget) {
    const LinearProgram p = g.program(4, 8);
    const SolveOutcome o = solve_fm(p);
    ++total;
    if (o.is_optimal())
      ++optimal;
    if (!f(p, o))
      break;
  }
  return total;
}

void criterion1(Verdict &v) {
  int optimal = 0;
  const int total = for_each_corpus_instance([&](const LinearProgram &p, const SolveOutcome &o) {
    if (!o.is_optimal())
      return true;
    ++optimal;
    try {
      const StrongDualityReport r = strong_duality(p);
      if (r.nu_max != r.nu_min)
        v.fail("nu_max " + r.nu_max.to_string() + " != nu_min " + r.nu_min.to_string() + " on " +
               str(p));
      else if (!r.dual_witness || !verify_optimal_pair(p, r.primal.witness, *r.dual_witness))
        v.fail("verify_optimal_pair rejected the pipeline pair on " + str(p));
    } catch (const Error &e) {
      v.fail(std::string("pipeline threw: ") + e.what());
    }
    return v.pass;
  });
  if (v.pass)
    v.detail << optimal << " optimal instances out of " << total
             << "; nu_max = nu_min exactly and every pair verified";
}

void criterion2(Verdict &v) {
  long pairs = 0;
  Gen mix(kCorpusSeed + 2);
  for_each_corpus_instance([&](const LinearProgram &p, const SolveOutcome &) {
    const auto xs = polarlp::testing::vertices(p);
    const auto ys = polarlp::testing::dual_basic_solutions(p);
    if (xs.empty() || ys.empty())
      return true;
    std::vector<Vector> xpool = xs, ypool = ys;
    // interior points: convex combinations of two basic solutions
    for (int k = 0; k < 3; ++k) {
      const Rational t = Rational(mix.uniform_int(0, 6), 6);
      const auto &x1 = xs[mix.uniform_int(0, static_cast<int>(xs.size()) - 1)];
      const auto &x2 = xs[mix.uniform_int(0, static_cast<int>(xs.size()) - 1)];
      xpool.push_back(x1 * t + x2 * (Rational(1) - t));
      const auto &y1 = ys[mix.uniform_int(0, static_cast<int>(ys.size()) - 1)];
      const auto &y2 = ys[mix.uniform_int(0, static_cast<int>(ys.size()) - 1)];
      ypool.push_back(y1 * t + y2 * (Rational(1) - t));
    }
    const DualProgram d = dualize(p);
    for (const auto &x : xpool)
      for (const auto &y : ypool) {
        if (!p.is_feasible(x) || !d.is_feasible(y)) {
          v.fail("sampled point is not feasible on " + str(p));
          return false;
        }
        ++pairs;
        if (dot(p.c, x) > dot(p.b, y)) {
          v.fail("<c,x> > <b,y> for x=[" + x.to_string() + "] y=[" + y.to_string() + "] on " +
                 str(p));
          return false;
        }
      }
    return true;
  });
  if (v.pass)
    v.detail << pairs << " feasible pairs, <c,x> <= <b,y> on all";
}

void criterion3(Verdict &v) {
  int both_optimal = 0;
  const int total = for_each_corpus_instance([&](const LinearProgram &p, const SolveOutcome &fm) {
    const SolveOutcome en = solve_enum(p);
    if (fm.status != en.status) {
      v.fail("status fm=" + to_string(fm.status) + " enum=" + to_string(en.status) + " on " +
             str(p));
      return false;
    }
    if (fm.is_optimal()) {
      ++both_optimal;
      if (fm.value != en.value) {
        v.fail("value fm=" + fm.value.to_string() + " enum=" + en.value.to_string() + " on " +
               str(p));
        return false;
      }
    }
    return true;
  });
  if (v.pass)
    v.detail << total << " instances agree on status, " << both_optimal << " on exact value";
}

void criterion4(Verdict &v) {
  Gen g(kCorpusSeed + 4);
  int checks = 0, infinite = 0;
  for (int trial = 0; trial < 600 && v.pass; ++trial) {
    const HPolyhedron k = g.origin_polyhedron(4, 8);
    const PolarRep ks = polar(k);
    const Vector u = g.nonzero_vector(k.dim());
    const ExtendedRational h = support(k, u);
    const ExtendedRational rho_s = polar_radial(ks, u);
    const ExtendedRational hs = polar_support(ks, u);
    const ExtendedRational rho = radial(k, u);
    if (!reciprocal_pair(h, rho_s))
      v.fail("h_K(u) = " + h.to_string() + " but rho_K*(u) = " + rho_s.to_string());
    else if (!reciprocal_pair(hs, rho))
      v.fail("h_K*(u) = " + hs.to_string() + " but rho_K(u) = " + rho.to_string());
    checks += 2;
    infinite += !h.is_finite() + !hs.is_finite();
  }
  if (v.pass)
    v.detail << "600 polyhedra, " << checks << " reciprocity checks (" << infinite
             << " with an infinite factor)";
}

void criterion5(Verdict &v) {
  Gen g(kCorpusSeed + 5);
  int probes = 0, inside = 0;
  for (int trial = 0; trial < 500 && v.pass; ++trial) {
    const HPolyhedron k = g.origin_polyhedron(4, 8);
    const PolarRep ks = polar(k);
    for (int j = 0; j < 20 && v.pass; ++j) {
      Vector y = g.vector(k.dim());
      // every other probe is pushed onto the boundary when the ray leaves K
      if (j % 2 == 1 && !y.is_zero()) {
        const ExtendedRational r = radial(k, y);
        if (r.is_finite() && r.value().sign() > 0)
          y = y * r.value().inverse();
      }
      const bool expected = contains(k, y);
      if (bipolar_contains(ks, y) != expected)
        v.fail("bipolar_contains disagrees with contains at [" + y.to_string() + "]");
      ++probes;
      inside += expected;
    }
  }
  if (v.pass)
    v.detail << "500 polyhedra, " << probes << " probes (" << inside << " inside), all agree";
}

void criterion6(Verdict &v) {
  Gen g(kCorpusSeed + 6);
  int unbounded_primal = 0, unbounded_dual = 0;
  for (int trial = 0; trial < 1500 && v.pass; ++trial) {
    const LinearProgram p = g.program(4, 8);
    const PairClassification pc = classify_pair(p);
    if (pc.primal.status == SolveStatus::Unbounded) {
      ++unbounded_primal;
      if (pc.dual.status != SolveStatus::Infeasible)
        v.fail("primal unbounded but dual " + to_string(pc.dual.status) + " on " + str(p));
    }
    if (pc.dual.status == SolveStatus::Unbounded) {
      ++unbounded_dual;
      if (pc.primal.status != SolveStatus::Infeasible)
        v.fail("dual unbounded but primal " + to_string(pc.primal.status) + " on " + str(p));
    }
  }
  if (!v.pass)
    return;
  v.detail << "exclusion holds on 1500 instances (" << unbounded_primal << " primal unbounded, "
           << unbounded_dual << " dual unbounded); ";

  // Fixed fixture that should show an infeasible primal next to an optimal dual.
  const fs::path fixture = fs::path(POLARLP_FIXTURE_DIR) / "infeasible_primal.lp";
  std::ifstream f(fixture);
  std::stringstream text;
  text << f.rdbuf();
  const LinearProgram p = LpFile::parse(text.str()).to_program();
  const PairClassification pc = classify_pair(p);
  std::ostringstream got;
  got << "fixture " << fixture.filename().string() << ": primal " << to_string(pc.primal.status)
      << ", dual " << to_string(pc.dual.status);
  if (pc.primal.status != SolveStatus::Infeasible || pc.dual.status != SolveStatus::Optimal) {
    std::string extra;
    if (pc.primal.farkas) {
      const Vector &lam = *pc.primal.farkas;
      extra = " (Farkas ray [" + lam.to_string() + "], A^T ray = [" +
              transpose_apply(p.a, lam).to_string() + "], <b, ray> = " +
              dot(p.b, lam).to_string() + ")";
    }
    v.pass = false;
    v.detail << got.str() << ", expected primal infeasible, dual optimal" << extra;
    return;
  }
  v.detail << got.str();
}

void criterion7(Verdict &v) {
  Gen g(kCorpusSeed + 7);
  int translated = 0, generated = 0;
  while (translated < 300 && v.pass) {
    ++generated;
    const LinearProgram p = g.program(4, 8);
    if (p.is_feasible(Vector::zero(p.num_variables())) || p.c.is_zero())
      continue;
    const SolveOutcome o = solve_fm(p);
    if (!o.is_optimal())
      continue;
    ++translated;
    const StrongDualityReport r = strong_duality(p);
    if (!r.path || !std::holds_alternative<Translated>(*r.path)) {
      v.fail("pipeline did not take the translated path on " + str(p));
      break;
    }
    // oracle: minimum of <b, y> over the basic feasible solutions of (D)
    std::optional<Rational> best;
    for (const auto &y : polarlp::testing::dual_basic_solutions(p)) {
      const Rational val = dot(p.b, y);
      if (!best || val < *best)
        best = val;
    }
    if (!best || r.nu_min != ExtendedRational(*best)) {
      v.fail("translated nu_min " + r.nu_min.to_string() + " but oracle " +
             (best ? best->to_string() : std::string("none")) + " on " + str(p));
      break;
    }
    const Vector &anchor = std::get<Translated>(*r.path).anchor;
    const DualProgram d = dualize(p);
    const DualProgram dt = dualize(translate(p, anchor).program);
    if (!(d.a == dt.a) || !(d.c == dt.c))
      v.fail("dual constraint systems differ after translation on " + str(p));
  }
  if (v.pass)
    v.detail << translated << " instances with the origin infeasible (" << generated
             << " generated): nu_min matches the oracle, dual constraints unchanged";
}

void criterion8(Verdict &v) {
  Gen g(kCorpusSeed + 8);
  int both = 0;
  for (int trial = 0; trial < 300 && v.pass; ++trial) {
    const LinearProgram p = g.program(3, 6);
    const LinearProgram can = canonicalize(p);
    const LinearProgram sym = symmetric_dual(p);
    const SolveOutcome a = solve_fm(can);
    const SolveOutcome b = solve_fm(sym);
    if (a.is_optimal() != b.is_optimal()) {
      v.fail("canonical " + to_string(a.status) + " but symmetric dual " + to_string(b.status) +
             " on " + str(p));
      break;
    }
    if (!a.is_optimal())
      continue;
    ++both;
    const auto oa = polarlp::testing::max_over(polarlp::testing::vertices(can), can.c);
    const auto ob = polarlp::testing::max_over(polarlp::testing::vertices(sym), sym.c);
    if (!oa || !ob || *oa != a.value || *ob != b.value)
      v.fail("solver and vertex oracle disagree on " + str(p));
    else if (a.value != -b.value)
      v.fail("canonical value " + a.value.to_string() + " != symmetric dual value " +
             (-b.value).to_string() + " on " + str(p));
  }
  if (v.pass)
    v.detail << "300 canonical instances, statuses coincide, " << both
             << " with equal optimal values";
}

// Documented exit code of `solve` for every LP fixture.
const std::map<std::string, int> kSolveExit = {
    {"covering_min.lp", 0},      {"equality.lp", 0},        {"flat_direction.lp", 0},
    {"fractions.lp", 0},         {"infeasible_max.lp", 2},  {"infeasible_min.lp", 2},
    {"infeasible_primal.lp", 2}, {"square_max.lp", 0},      {"square_min.lp", 0},
    {"translated.lp", 0},        {"unbounded_max.lp", 3},   {"unbounded_min.lp", 3},
    {"zero_objective.lp", 0},
};

struct Run {
  int code;
  std::string out, err;
};

Run run_inprocess(const std::vector<std::string> &args) {
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

Run run_binary(const std::vector<std::string> &args) {
  const fs::path tmp = fs::temp_directory_path();
  const fs::path out = tmp / "polarlp_acceptance.out";
  const fs::path err = tmp / "polarlp_acceptance.err";
  std::string cmd = "'" + std::string(POLARLP_CLI_PATH) + "'";
  for (const auto &a : args)
    cmd += " '" + a + "'";
  cmd += " >'" + out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

void criterion9(Verdict &v) {
  std::vector<fs::path> files;
  for (const auto &e : fs::directory_iterator(POLARLP_FIXTURE_DIR))
    files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::map<std::string, int> status_count;
  bool saw_min = false, saw_max = false, saw_zero = false, saw_translated = false;
  int runs = 0;
  for (const auto &f : files) {
    const std::string name = f.filename().string();
    std::vector<std::vector<std::string>> cmds;
    std::map<std::size_t, int> expected;
    if (f.extension() == ".lp") {
      const auto it = kSolveExit.find(name);
      if (it == kSolveExit.end()) {
        v.fail("no documented exit code for " + name);
        return;
      }
      cmds = {{"solve", f.string()},
              {"solve", "--solver", "enum", f.string()},
              {"duality", f.string()},
              {"dualize", f.string()}};
      expected = {{0, it->second}, {1, it->second}, {2, it->second}, {3, 0}};
      const LpFile lp = LpFile::parse(slurp(f));
      (lp.sense == Sense::Maximize ? saw_max : saw_min) = true;
      saw_zero |= lp.objective.is_zero();
    } else {
      const std::size_t n = HPolyhedron::parse(slurp(f)).dim();
      std::vector<std::string> plus = {"support", "--dir"}, minus = {"radial", "--dir"};
      for (std::size_t j = 0; j < n; ++j) {
        plus.push_back("1");
        minus.push_back("-1");
      }
      plus.push_back(f.string());
      minus.push_back(f.string());
      cmds = {{"polar", f.string()}, plus, minus};
      expected = {{0, 0}, {2, 0}};
    }
    for (std::size_t k = 0; k < cmds.size(); ++k) {
      const Run a = run_inprocess(cmds[k]);
      const Run b = run_inprocess(cmds[k]);
      const Run c = run_binary(cmds[k]);
      const Run d = run_binary(cmds[k]);
      runs += 4;
      for (const Run *r : {&b, &c, &d})
        if (r->code != a.code || r->out != a.out || r->err != a.err) {
          v.fail("output differs between runs of '" + cmds[k][0] + "' on " + name);
          return;
        }
      if (auto e = expected.find(k); e != expected.end() && a.code != e->second) {
        v.fail("'" + cmds[k][0] + "' on " + name + " exited " + std::to_string(a.code) +
               ", documented " + std::to_string(e->second));
        return;
      }
      if (k == 0 && f.extension() == ".lp")
        ++status_count[a.out.substr(0, a.out.find('\n'))];
      if (cmds[k][0] == "duality")
        saw_translated |= a.out.find("\npath translated") != std::string::npos;
    }
  }
  if (files.size() < 12)
    v.fail("only " + std::to_string(files.size()) + " fixtures");
  else if (status_count.size() != 3)
    v.fail("fixtures do not cover all three statuses");
  else if (!saw_min || !saw_max || !saw_zero || !saw_translated)
    v.fail("fixtures miss a sense, the zero objective or the translated path");
  if (v.pass)
    v.detail << files.size() << " fixtures, " << runs
             << " runs (in-process and binary), byte-identical with documented exit codes";
}

} // namespace

int main(int argc, char **argv) {
  const std::vector<std::pair<std::string, std::function<void(Verdict &)>>> criteria = {
      {"strong duality", criterion1},      {"weak duality", criterion2},
      {"fm/enum agreement", criterion3},   {"support/radial reciprocity", criterion4},
      {"bipolar membership", criterion5},  {"exclusion and non-involution", criterion6},
      {"translation", criterion7},         {"canonical/symmetric", criterion8},
      {"cli determinism", criterion9},
  };
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--only")
    only = std::atoi(argv[2]);
  else if (argc != 1) {
    std::cerr << "usage: acceptance [--only N]\n";
    return 2;
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only)
      continue;
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception &e) {
      v.fail(std::string("uncaught: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << " (" << criteria[i].first
              << "): " << (v.pass ? "PASS" : "FAIL") << " - " << v.detail.str() << std::endl;
    all &= v.pass;
  }
  return all ? 0 : 1;
}
