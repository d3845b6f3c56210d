#include "npnas/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "npnas/decider.hpp"
#include "npnas/error.hpp"
#include "npnas/eubridge.hpp"
#include "npnas/foreduce.hpp"
#include "npnas/oracle.hpp"
#include "npnas/syntax.hpp"

namespace npnas::cli {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kValidationError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_stats(std::ostream& out, const SearchStats& s) {
  out << "stats: nodes=" << s.nodes << " normal-forms=" << s.normal_forms << "\n";
}

// Moved names only, in name order; "id" when nothing moves.
std::string print_perm(const Permutation& pi) {
  std::set<Name> support;
  for (const auto& [a, b] : pi.swaps()) {
    support.insert(a);
    support.insert(b);
  }
  std::string s;
  for (const Name& n : support) {
    Name m = pi.apply(n);
    if (m == n) continue;
    if (!s.empty()) s += " ";
    s += n.to_string() + "->" + m.to_string();
  }
  return s.empty() ? "id" : "{" + s + "}";
}

int cmd_check(const std::string& file, std::ostream& out) {
  ProblemDocument doc = parse_problem(slurp(file));
  out << "ok: " << doc.problem.env.size() << " variables, " << doc.problem.constraints.size()
      << " constraints\n";
  return kOk;
}

struct SolveArgs {
  std::string file;
  bool witness = false;
  std::string strategy = "focused";
  std::optional<std::size_t> budget;
  bool trace = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  ProblemDocument doc = parse_problem(slurp(a.file));
  SolveOptions opts;
  opts.strategy = a.strategy == "full" ? Strategy::kFull : Strategy::kFocused;
  opts.node_budget = a.budget;
  if (a.trace) {
    opts.trace = [&out](const Problem&, const Selection& s, std::size_t depth) {
      out << "trace: depth=" << depth << " " << s.to_string() << "\n";
    };
  }
  Verdict v = decide(doc.signature, doc.problem, opts);
  switch (v.status) {
    case Verdict::Status::kSat:
      out << "result: sat\n";
      if (v.witness) out << print_valuation(*v.witness);
      print_stats(out, v.stats);
      return kOk;
    case Verdict::Status::kUnsat:
      out << "result: unsat\n";
      out << "reason: " << to_string(v.reason) << "\n";
      print_stats(out, v.stats);
      return kUnsat;
    case Verdict::Status::kBudgetExceeded:
      out << "result: budget-exceeded\n";
      print_stats(out, v.stats);
      return kGuard;
  }
  return kGuard;
}

int cmd_fo(const std::string& file, std::ostream& out) {
  ProblemDocument doc = parse_problem(slurp(file));
  ReducedProblem rp = fl_reduce(doc.signature, doc.problem);
  out << print_problem(rp.signature, rp.problem);
  std::optional<FOValuation> w = fo_solve(rp);
  if (!w) {
    out << "result: unsat\n";
    return kUnsat;
  }
  out << "result: sat\n" << print_valuation(*w);
  return kOk;
}

int cmd_oracle(const std::string& file, std::size_t size, std::size_t pool, std::ostream& out) {
  ProblemDocument doc = parse_problem(slurp(file));
  OracleResult r = brute_sat(doc.signature, doc.problem, EnumBounds{size, pool});
  if (r.sat) {
    out << "result: sat\n" << print_valuation(*r.witness);
  } else {
    out << "result: unsat\n";
  }
  out << "exact: " << (r.exact || r.sat ? "true" : "false") << "\n";
  return r.sat ? kOk : kUnsat;
}

int cmd_translate(const std::string& file, const std::string& output, std::ostream& out) {
  EUProblem s = parse_eu(slurp(file));
  EUTranslation t = translate_problem(s);
  std::string text = print_problem(eu_signature(), t.problem);
  if (output.empty() || output == "-") {
    out << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw Error(ErrorKind::kValidationError, "cannot write '" + output + "'");
    f << text;
    out << "wrote " << output << ": " << t.problem.env.size() << " variables, "
        << t.problem.constraints.size() << " constraints\n";
  }
  return kOk;
}

int cmd_eu_oracle(const std::string& file, std::ostream& out) {
  EUProblem s = parse_eu(slurp(file));
  EUOracleResult r = eu_brute_sat(s);
  if (!r.sat) {
    out << "result: unsat\n";
    return kUnsat;
  }
  out << "result: sat\n";
  for (const auto& [a, n] : r.witness->name_vars) out << a << " = " << n.to_string() << "\n";
  for (const auto& [q, pi] : r.witness->perms) out << q << " = " << print_perm(pi) << "\n";
  return kOk;
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::kPoolTooLarge:
    case ErrorKind::kSearchSpaceTooLarge:
      return kGuard;
    default:
      return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constraint solver for non-permutative nominal abstract syntax", "npnas"};
  app.require_subcommand(1);

  std::string file;
  auto* check = app.add_subcommand("check", "Parse, validate and typecheck a problem");
  check->add_option("file", file)->required();

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Decide satisfiability");
  solve->add_option("file", sa.file)->required();
  solve->add_flag("--witness", sa.witness, "Print a witness on sat (the default)");
  solve->add_option("--strategy", sa.strategy)->check(CLI::IsMember({"focused", "full"}));
  solve->add_option("--budget", sa.budget, "Maximum rewrite nodes");
  solve->add_flag("--trace", sa.trace, "Dump each selection");

  auto* fo = app.add_subcommand("fo", "Print the name-erased reduction and its verdict");
  fo->add_option("file", file)->required();

  std::size_t size = 7, pool = 3;
  auto* oracle = app.add_subcommand("oracle", "Bounded brute-force search");
  oracle->add_option("file", file)->required();
  oracle->add_option("--size", size, "Maximum tree size")->capture_default_str();
  oracle->add_option("--pool", pool, "Free names per sort")->capture_default_str();

  std::string output;
  auto* translate = app.add_subcommand("translate-eu", "Encode an EU problem");
  translate->add_option("file", file)->required();
  translate->add_option("-o,--output", output, "Output file (stdout if omitted)");

  auto* eu_oracle = app.add_subcommand("eu-oracle", "Brute-force an EU problem");
  eu_oracle->add_option("file", file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(file, out);
    if (*solve) return cmd_solve(sa, out);
    if (*fo) return cmd_fo(file, out);
    if (*oracle) return cmd_oracle(file, size, pool, out);
    if (*translate) return cmd_translate(file, output, out);
    if (*eu_oracle) return cmd_eu_oracle(file, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.kind());
  }
  return kUsage;
}

}  // namespace npnas::cli
