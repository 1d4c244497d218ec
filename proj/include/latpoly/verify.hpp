#ifndef LATPOLY_VERIFY_HPP
#define LATPOLY_VERIFY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "latpoly/characterization.hpp"
#include "latpoly/closure.hpp"
#include "latpoly/config.hpp"
#include "latpoly/error.hpp"
#include "latpoly/function_table.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/monotone.hpp"

namespace latpoly {

struct VerifyOptions {
  std::size_t samples = 1000;  // random monotone tables in sampled mode
  std::uint64_t seed = 1;
};

struct Inconsistency {
  std::vector<Element> table;
  bool closure_member = false;
  bool reconstruct_verdict = false;
  std::vector<ConditionEntry> conditions;
};

struct VerificationReport {
  std::string lattice;
  std::size_t arity = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::uint64_t checked = 0;
  std::uint64_t polynomial = 0;
  std::vector<Inconsistency> inconsistencies;
};

/// Runs every condition on every order-preserving table of L^n -> L and
/// compares each verdict with closure membership. When the monotone tables
/// do not fit the evaluation budget, the closure polynomials plus a seeded
/// sample of random monotone tables are checked instead.
inline VerificationReport verify_main_theorem(const LatticePtr& L, std::size_t n, const VerifyOptions& options = {}) {
  if (!L->is_distributive())
    throw NotDistributive("verification needs a distributive lattice; " + L->name() + " is not");
  const auto closure = closure_polynomials(L, n);
  const auto maps = MonotoneMaps::over_points(L, n);
  const std::uint64_t points = PointSpace(L->size(), n).size();
  const std::uint64_t cap = evaluation_budget() / std::max<std::uint64_t>(points, 1);

  VerificationReport report;
  report.lattice = L->name();
  report.arity = n;

  auto check = [&](std::span<const Element> values) {
    FunctionTable f(L, n, {values.begin(), values.end()});
    const bool member = closure.contains(f);
    auto conditions = evaluate_all_conditions(f);
    ++report.checked;
    if (member) ++report.polynomial;
    bool ok = conditions.polynomial.polynomial == member;
    for (const auto& e : conditions.conditions) ok = ok && (e.verdict == Verdict::pass) == member;
    if (!ok)
      report.inconsistencies.push_back(
          {{values.begin(), values.end()}, member, conditions.polynomial.polynomial, std::move(conditions.conditions)});
    return true;
  };

  if (maps.count(cap) <= cap) {
    maps.for_each(check);
    return report;
  }

  report.sampled = true;
  report.seed = options.seed;
  for (const auto& t : closure.raw()) check(t);
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.samples; ++i) check(maps.sample(rng));
  return report;
}

/// Header, totals, then one line per inconsistency.
inline std::string format_verification(const FiniteLattice& L, const VerificationReport& r) {
  std::string out = "verify lattice=" + r.lattice + " n=" + std::to_string(r.arity) + " mode=" +
                    (r.sampled ? "sampled seed=" + std::to_string(r.seed) : std::string("exhaustive")) + "\n";
  out += "checked=" + std::to_string(r.checked) + " polynomial=" + std::to_string(r.polynomial) +
         " inconsistent=" + std::to_string(r.inconsistencies.size()) + "\n";
  for (const auto& inc : r.inconsistencies) {
    out += "inconsistent table=[";
    for (std::size_t i = 0; i < inc.table.size(); ++i) out += (i ? " " : "") + L.name_of(inc.table[i]);
    out += "] closure=" + std::string(inc.closure_member ? "yes" : "no") +
           " polynomial=" + (inc.reconstruct_verdict ? "yes" : "no");
    for (const auto& e : inc.conditions)
      out += " " + std::string(condition_name(e.id)) + "=" +
             (e.verdict == Verdict::pass ? "pass" : e.verdict == Verdict::fail ? "fail" : "skip");
    out += "\n";
  }
  return out;
}

enum class WitnessDirection {
  polynomial_violates,      // a polynomial function fails the condition
  non_polynomial_satisfies  // an order-preserving non-polynomial satisfies it
};

inline std::string_view direction_name(WitnessDirection d) {
  return d == WitnessDirection::polynomial_violates ? "polynomial-violates" : "non-polynomial-satisfies";
}

struct NondistributiveWitness {
  FunctionTable table;
  ConditionId condition;
  WitnessDirection direction;
  std::optional<Witness> evidence;  // failing equation, direction polynomial_violates only
};

/// Searches for a function separating the named condition from
/// polynomiality on a non-distributive lattice: first among the closure
/// polynomials for one violating it, then among the remaining
/// order-preserving tables for one satisfying it.
inline std::optional<NondistributiveWitness> find_nondistributive_witness(const LatticePtr& L, std::size_t n,
                                                                          ConditionId condition) {
  if (L->is_distributive())
    throw NotNonDistributive("lattice " + L->name() + " is distributive; the conditions are all equivalent there");
  const auto closure = closure_polynomials(L, n);
  for (std::size_t i = 0; i < closure.size(); ++i) {
    auto f = closure.table(i);
    auto r = check_condition(f, condition);
    if (!r) return NondistributiveWitness{std::move(f), condition, WitnessDirection::polynomial_violates, r.witness};
  }

  const auto points = PointSpace(L->size(), n).size();
  BudgetMeter meter("find_nondistributive_witness");
  std::optional<NondistributiveWitness> found;
  MonotoneMaps::over_points(L, n).for_each([&](std::span<const Element> values) {
    meter.charge(points);
    if (closure.contains(values)) return true;
    FunctionTable f(L, n, {values.begin(), values.end()});
    if (!check_condition(f, condition)) return true;
    found = NondistributiveWitness{std::move(f), condition, WitnessDirection::non_polynomial_satisfies, std::nullopt};
    return false;
  });
  return found;
}

}  // namespace latpoly

#endif  // LATPOLY_VERIFY_HPP
