#ifndef LATPOLY_CLI_HPP
#define LATPOLY_CLI_HPP

#include <CLI11.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "latpoly/characterization.hpp"
#include "latpoly/config.hpp"
#include "latpoly/error.hpp"
#include "latpoly/function_table.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/lattice_io.hpp"
#include "latpoly/normal_form.hpp"
#include "latpoly/report.hpp"
#include "latpoly/table_io.hpp"
#include "latpoly/term.hpp"
#include "latpoly/term_parser.hpp"
#include "latpoly/verify.hpp"

namespace latpoly::cli {

enum ExitCode : int { kHolds = 0, kFails = 1, kUsage = 2, kBudget = 3 };

struct Invocation {
  std::string command;
  std::string lattice_path;
  std::size_t arity = 1;
  std::vector<std::string> terms;
  std::string table_path;
  std::string conditions = "ii,iii,iv,v,vi";
  std::string scope = "interval";
  std::uint64_t budget = kDefaultEvaluationBudget;
  std::uint64_t limit = 1'000'000;
  bool list = false;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::string condition = "iv";
};

/// "builtin:<spec>" selects a fixture (chain:K, boolean:K, N5, M3);
/// anything else is a lattice file.
inline LatticePtr load_lattice_arg(const std::string& arg) {
  if (arg.starts_with("builtin:")) return standard_lattice(arg.substr(8));
  return load_lattice(arg);
}

/// Lattice plus the function named by --term or --table.
struct Inputs {
  LatticePtr lattice;
  std::vector<Term> terms;
  std::optional<FunctionTable> function;
};

inline Inputs load_inputs(const Invocation& inv) {
  Inputs in;
  in.lattice = load_lattice_arg(inv.lattice_path);
  for (const auto& t : inv.terms) in.terms.push_back(parse_term(t, *in.lattice, inv.arity));
  if (!inv.table_path.empty()) {
    auto f = load_table(inv.table_path, in.lattice);
    if (f.arity() != inv.arity)
      throw ArityMismatch(inv.table_path + ": table has arity " + std::to_string(f.arity()) + " but --arity is " +
                          std::to_string(inv.arity));
    in.function = std::move(f);
  } else if (in.terms.size() == 1) {
    in.function = materialize(in.lattice, in.terms.front(), inv.arity);
  }
  return in;
}

namespace detail {

inline std::vector<ConditionId> parse_condition_list(const std::string& text) {
  std::vector<ConditionId> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(parse_condition(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

inline void require_single_source(const Invocation& inv) {
  const std::size_t sources = inv.terms.size() + (inv.table_path.empty() ? 0 : 1);
  if (sources != 1) throw InvalidParams(inv.command + " takes exactly one of --term or --table");
}

inline int run_check(const Invocation& inv, std::ostream& out) {
  require_single_source(inv);
  ConditionOptions options;
  options.conditions = parse_condition_list(inv.conditions);
  if (inv.scope != "interval" && inv.scope != "all") throw InvalidParams("--scope must be interval or all");
  options.scope = inv.scope == "all" ? Scope::all : Scope::interval;
  const auto in = load_inputs(inv);
  const auto report = evaluate_all_conditions(*in.function, options);
  const auto text = format_report(*in.lattice, report);
  out << text;
  return text.find("FAIL") == std::string::npos ? kHolds : kFails;
}

inline int run_normalize(const Invocation& inv, std::ostream& out) {
  require_single_source(inv);
  const auto in = load_inputs(inv);
  const auto alpha = extract_alpha(*in.function);
  out << format_dnf(alpha);
  out << "term: " << format_term(*in.lattice, dnf_to_term(alpha)) << "\n";
  if (!dnf_membership(alpha, *in.function)) {
    out << "normal-form: FAIL (alpha_f does not represent f)\n";
    return kFails;
  }
  return kHolds;
}

inline int run_equiv(const Invocation& inv, std::ostream& out) {
  if (inv.terms.size() != 2 || !inv.table_path.empty()) throw InvalidParams("equiv takes exactly two --term options");
  const auto in = load_inputs(inv);
  const auto r = equivalent(in.lattice, in.terms[0], in.terms[1], inv.arity);
  const std::string domain = r.full_domain ? "full" : "characteristic";
  if (r.equivalent) {
    out << "equiv: PASS domain=" << domain << "\n";
    return kHolds;
  }
  out << "equiv: FAIL at x=" << format_point(*in.lattice, *r.witness) << " domain=" << domain << "\n";
  return kFails;
}

inline int run_dnf_count(const Invocation& inv, std::ostream& out) {
  require_single_source(inv);
  const auto in = load_inputs(inv);
  try {
    const auto r = enumerate_dnf(*in.function, inv.list ? EnumerationMode::list : EnumerationMode::count, inv.limit);
    out << "count=" << r.count << (r.truncated ? " (truncated)" : "") << "\n";
    for (std::size_t i = 0; i < r.members.size(); ++i) out << "# member " << i + 1 << "\n" << format_dnf(r.members[i]);
    return kHolds;
  } catch (const LimitExceeded& e) {
    out << "count>=" << e.lower_bound() << " (limit reached)\n";
    return kBudget;
  }
}

inline int run_verify(const Invocation& inv, std::ostream& out) {
  const auto L = load_lattice_arg(inv.lattice_path);
  const auto r = verify_main_theorem(L, inv.arity, {inv.samples, inv.seed});
  out << format_verification(*L, r);
  return r.inconsistencies.empty() ? kHolds : kFails;
}

inline int run_witness(const Invocation& inv, std::ostream& out) {
  const auto L = load_lattice_arg(inv.lattice_path);
  const auto id = parse_condition(inv.condition);
  const auto w = find_nondistributive_witness(L, inv.arity, id);
  if (!w) {
    out << "witness lattice=" << L->name() << " n=" << inv.arity << " condition=" << inv.condition << ": none\n";
    return kFails;
  }
  out << "witness lattice=" << L->name() << " n=" << inv.arity << " condition=" << inv.condition
      << " direction=" << direction_name(w->direction) << "\n";
  out << format_table(w->table);
  if (w->evidence) out << "evidence:" << format_witness(*L, *w->evidence, true) << "\n";
  return kHolds;
}

}  // namespace detail

/// Entry point behind the `latpoly` binary. `args` excludes the program name.
/// Exit codes: 0 all requested properties hold, 1 some property fails,
/// 2 usage or input error, 3 budget or limit exceeded.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite lattice polynomial functions: normal forms and characterizations", "latpoly"};
  app.require_subcommand(1);
  Invocation inv;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--lattice", inv.lattice_path, "Lattice file, or builtin:<chain:K|boolean:K|N5|M3>")->required();
    sub->add_option("--arity", inv.arity, "Number of variables n")->required()->check(CLI::Range(1, 64));
    sub->add_option("--budget", inv.budget, "Point-evaluation budget per operation");
  };
  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--term", inv.terms, "Lattice polynomial expression");
    sub->add_option("--table", inv.table_path, "Function table file");
  };

  auto* check = app.add_subcommand("check", "Evaluate the characterization conditions for one function");
  add_common(check);
  add_source(check);
  check->add_option("--conditions", inv.conditions, "Comma-separated subset of ii,iii,iv,v,vi");
  check->add_option("--scope", inv.scope, "Homogeneity constants: interval or all");

  auto* normalize = app.add_subcommand("normalize", "Emit the normal form built from f on {0,1}^n");
  add_common(normalize);
  add_source(normalize);

  auto* equiv = app.add_subcommand("equiv", "Decide whether two terms denote the same function");
  add_common(equiv);
  equiv->add_option("--term", inv.terms, "Term (give exactly two)");

  auto* count = app.add_subcommand("dnf-count", "Count the disjunctive normal forms of f");
  add_common(count);
  add_source(count);
  count->add_option("--limit", inv.limit, "Stop after this many normal forms");
  count->add_flag("--list", inv.list, "Print every normal form found");

  auto* verify = app.add_subcommand("verify", "Check that all conditions agree on every monotone table");
  add_common(verify);
  verify->add_option("--samples", inv.samples, "Random tables in sampled mode");
  verify->add_option("--seed", inv.seed, "Seed for sampled mode");

  auto* witness = app.add_subcommand("witness", "Search a non-distributive lattice for a counterexample");
  add_common(witness);
  witness->add_option("--condition", inv.condition, "One of iii, iv, v, vi");

  std::vector<const char*> argv{"latpoly"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  auto* chosen = app.get_subcommands().front();
  inv.command = chosen->get_name();
  try {
    ScopedBudget budget(inv.budget);
    if (chosen == check) return detail::run_check(inv, out);
    if (chosen == normalize) return detail::run_normalize(inv, out);
    if (chosen == equiv) return detail::run_equiv(inv, out);
    if (chosen == count) return detail::run_dnf_count(inv, out);
    if (chosen == verify) return detail::run_verify(inv, out);
    return detail::run_witness(inv, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace latpoly::cli

#endif  // LATPOLY_CLI_HPP
