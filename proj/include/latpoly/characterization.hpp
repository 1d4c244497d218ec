#ifndef LATPOLY_CHARACTERIZATION_HPP
#define LATPOLY_CHARACTERIZATION_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "latpoly/closure.hpp"
#include "latpoly/config.hpp"
#include "latpoly/error.hpp"
#include "latpoly/function_table.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/normal_form.hpp"

namespace latpoly {

/// Equation tags carried by witnesses. The numbered tags follow the
/// conventional numbering of the characterization conditions.
namespace eq {
inline constexpr std::string_view order = "order";
inline constexpr std::string_view median = "(1)";
inline constexpr std::string_view self_composition = "(2)";
inline constexpr std::string_view homogeneity = "(3)";
inline constexpr std::string_view homogeneity_dual = "dual(3)";
inline constexpr std::string_view horizontal = "(4)";
inline constexpr std::string_view horizontal_dual = "dual(4)";
inline constexpr std::string_view range_idempotency = "(5)";
inline constexpr std::string_view convex_range = "convex-range";
inline constexpr std::string_view convex_section = "convex-section";
inline constexpr std::string_view delta_meet = "delta-meet";
inline constexpr std::string_view delta_join = "delta-join";
}  // namespace eq

/// First failure of a check in canonical enumeration order. Only the fields
/// meaningful for the failing equation are set.
struct Witness {
  Point x;
  std::optional<Point> y;            // larger point of an order violation
  std::optional<std::size_t> k;      // 1-based coordinate
  std::optional<Element> c;          // constant
  std::optional<SubsetMask> frozen;  // K of a substituted function f_K^a (x holds a)
  std::optional<std::pair<Element, Element>> pair;
  std::string equation;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckResult {
  bool holds = true;
  std::optional<Witness> witness;

  static CheckResult pass() { return {}; }
  static CheckResult fail(Witness w) { return {false, std::move(w)}; }
  explicit operator bool() const noexcept { return holds; }
};

enum class Side { meet, join };
enum class Scope { interval, all };
enum class DeltaOps { meet, join, both };

namespace detail {

inline std::vector<std::size_t> strides(const FunctionTable& f) {
  std::vector<std::size_t> s(f.arity(), 1);
  for (std::size_t i = f.arity(); i-- > 1;) s[i - 1] = s[i] * f.lattice().size();
  return s;
}

inline std::uint64_t points_times(const FunctionTable& f, std::uint64_t factor) {
  return saturating_mul(f.space().size(), factor);
}

/// Walks L^n in canonical order calling fn(index, x); stops at the first
/// non-empty result.
template <typename Fn>
CheckResult scan_points(const FunctionTable& f, Fn&& fn) {
  const auto space = f.space();
  Point x = space.first();
  std::size_t i = 0;
  do {
    if (std::optional<Witness> w = fn(i, static_cast<const Point&>(x))) return CheckResult::fail(std::move(*w));
    ++i;
  } while (space.next(x));
  return CheckResult::pass();
}

struct ConvexityGap {
  Element low, high, missing;
};

/// First (u, v, y) with u <= y <= v, u and v in the set, y outside it.
inline std::optional<ConvexityGap> convexity_gap(const FiniteLattice& L, const std::vector<char>& in_set) {
  for (auto u : L.elements()) {
    if (!in_set[u.index()]) continue;
    for (auto v : L.elements()) {
      if (!in_set[v.index()] || !L.leq(u, v)) continue;
      for (auto y : L.elements())
        if (!in_set[y.index()] && L.leq(u, y) && L.leq(y, v)) return ConvexityGap{u, v, y};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// x <= y implies f(x) <= f(y); checked on cover-adjacent pairs of points.
inline CheckResult is_order_preserving(const FunctionTable& f) {
  const auto& L = f.lattice();
  require_budget("is_order_preserving", detail::points_times(f, f.arity() * L.size()));
  const auto stride = detail::strides(f);
  return detail::scan_points(f, [&](std::size_t i, const Point& x) -> std::optional<Witness> {
    for (std::size_t k = 0; k < f.arity(); ++k)
      for (auto u : L.upper_covers(x[k])) {
        const auto j = i + (u.index() - x[k].index()) * stride[k];
        if (!L.leq(f.at(i), f.at(j))) {
          Point y = x;
          y[k] = u;
          return Witness{x, y, k + 1, std::nullopt, std::nullopt, std::nullopt, std::string(eq::order)};
        }
      }
    return std::nullopt;
  });
}

inline void require_order_preserving(const FunctionTable& f, const std::string& what) {
  if (!is_order_preserving(f))
    throw HypothesisViolated(what + " requires an order-preserving function");
}

/// The bound interval [f(0..0), f(1..1)].
inline std::vector<Element> bound_interval(const FunctionTable& f) {
  const auto& L = f.lattice();
  const auto lo = f.diagonal(L.bottom());
  const auto hi = f.diagonal(L.top());
  if (!L.leq(lo, hi))
    throw HypothesisViolated("f(0..0) = " + L.name_of(lo) + " is not below f(1..1) = " + L.name_of(hi));
  return interval(L, lo, hi);
}

/// f(x) = med(f(x_k^0), x_k, f(x_k^1)) for every x and k.
inline CheckResult check_median_decomposition(const FunctionTable& f) {
  const auto& L = f.lattice();
  require_budget("check_median_decomposition", detail::points_times(f, f.arity()));
  const auto stride = detail::strides(f);
  const auto top_offset = L.top().index();
  return detail::scan_points(f, [&](std::size_t i, const Point& x) -> std::optional<Witness> {
    for (std::size_t k = 0; k < f.arity(); ++k) {
      const auto at_zero = i - x[k].index() * stride[k];
      const auto at_one = at_zero + top_offset * stride[k];
      if (med(L, f.at(at_zero), x[k], f.at(at_one)) != f.at(i))
        return Witness{x, std::nullopt, k + 1, std::nullopt, std::nullopt, std::nullopt, std::string(eq::median)};
    }
    return std::nullopt;
  });
}

/// f(x_1, ..., f(x), ..., x_n) = f(x) at every coordinate; for n = 1 this is f o f = f.
inline CheckResult check_self_composition(const FunctionTable& f) {
  require_budget("check_self_composition", detail::points_times(f, f.arity()));
  const auto stride = detail::strides(f);
  return detail::scan_points(f, [&](std::size_t i, const Point& x) -> std::optional<Witness> {
    const auto v = f.at(i);
    for (std::size_t k = 0; k < f.arity(); ++k) {
      const auto j = i - x[k].index() * stride[k] + v.index() * stride[k];
      if (f.at(j) != v)
        return Witness{x, std::nullopt, k + 1, std::nullopt, std::nullopt, std::nullopt,
                       std::string(eq::self_composition)};
    }
    return std::nullopt;
  });
}

/// meet: f(x ^ c..c) = f(x) ^ c; join: f(x v c..c) = f(x) v c. The constant
/// ranges over the bound interval, or over all of L for scope = all.
inline CheckResult check_homogeneity(const FunctionTable& f, Side side, Scope scope = Scope::interval) {
  const auto& L = f.lattice();
  std::vector<Element> constants;
  if (scope == Scope::interval) {
    require_order_preserving(f, "homogeneity on the bound interval");
    constants = bound_interval(f);
  } else {
    for (auto e : L.elements()) constants.push_back(e);
  }
  require_budget("check_homogeneity", detail::points_times(f, constants.size()));
  const auto tag = side == Side::meet ? eq::homogeneity : eq::homogeneity_dual;
  return detail::scan_points(f, [&](std::size_t i, const Point& x) -> std::optional<Witness> {
    for (auto c : constants) {
      const bool ok = side == Side::meet ? f(meet_with(L, x, c)) == L.meet(f.at(i), c)
                                         : f(join_with(L, x, c)) == L.join(f.at(i), c);
      if (!ok) return Witness{x, std::nullopt, std::nullopt, c, std::nullopt, std::nullopt, std::string(tag)};
    }
    return std::nullopt;
  });
}

/// meet: f(x) = f(x ^ c..c) v f([x]_c); join: f(x) = f(x v c..c) ^ f([x]^c),
/// for c in the bound interval.
inline CheckResult check_horizontal(const FunctionTable& f, Side side) {
  const auto& L = f.lattice();
  require_order_preserving(f, "horizontal decomposition");
  const auto constants = bound_interval(f);
  require_budget("check_horizontal", detail::points_times(f, 2 * constants.size()));
  const auto tag = side == Side::meet ? eq::horizontal : eq::horizontal_dual;
  return detail::scan_points(f, [&](std::size_t i, const Point& x) -> std::optional<Witness> {
    for (auto c : constants) {
      const auto rhs = side == Side::meet
                           ? L.join(f(meet_with(L, x, c)), f(truncate(L, x, c, Truncation::below)))
                           : L.meet(f(join_with(L, x, c)), f(truncate(L, x, c, Truncation::above)));
      if (rhs != f.at(i))
        return Witness{x, std::nullopt, std::nullopt, c, std::nullopt, std::nullopt, std::string(tag)};
    }
    return std::nullopt;
  });
}

/// f(c..c) = c for every c in the bound interval.
inline CheckResult check_range_idempotency(const FunctionTable& f) {
  require_order_preserving(f, "range idempotency");
  for (auto c : bound_interval(f))
    if (f.diagonal(c) != c)
      return CheckResult::fail(Witness{Point(f.arity(), c), std::nullopt, std::nullopt, c, std::nullopt,
                                       std::nullopt, std::string(eq::range_idempotency)});
  return CheckResult::pass();
}

/// The range of f and every section range {f(a_k^x) : x in L} are convex.
inline CheckResult check_range_convexity(const FunctionTable& f) {
  const auto& L = f.lattice();
  require_budget("check_range_convexity", detail::points_times(f, saturating_mul(f.arity(), L.size())));
  std::vector<char> range(L.size(), 0);
  for (auto v : f.values()) range[v.index()] = 1;
  if (auto gap = detail::convexity_gap(L, range)) {
    const auto space = f.space();
    std::size_t i = 0;
    while (f.at(i) != gap->high) ++i;
    return CheckResult::fail(Witness{space.point(i), std::nullopt, std::nullopt, gap->missing, std::nullopt,
                                     std::nullopt, std::string(eq::convex_range)});
  }
  // A section depends only on the other coordinates, so the first failing
  // (a, k) always has a_k = 0.
  const auto stride = detail::strides(f);
  std::vector<char> section(L.size());
  return detail::scan_points(f, [&](std::size_t i, const Point& a) -> std::optional<Witness> {
    for (std::size_t k = 0; k < f.arity(); ++k) {
      if (a[k] != L.bottom()) continue;
      std::fill(section.begin(), section.end(), 0);
      for (auto x : L.elements()) section[f.at(i + x.index() * stride[k]).index()] = 1;
      if (auto gap = detail::convexity_gap(L, section))
        return Witness{a, std::nullopt, k + 1, gap->missing, std::nullopt, std::nullopt,
                       std::string(eq::convex_section)};
    }
    return std::nullopt;
  });
}

/// delta_g preserves meet and/or join for g = f and every g = f_K^a with
/// K a proper subset of [n]. Duplicate diagonals are checked once.
inline CheckResult check_delta_preservation(const FunctionTable& f, DeltaOps ops) {
  const auto& L = f.lattice();
  const std::size_t n = f.arity();
  const std::size_t m = L.size();
  require_mask_width(n);
  require_budget("check_delta_preservation",
                 saturating_add(saturating_mul(saturating_pow(m + 1, n), m), saturating_pow(m + 1, n + 2)));
  const SubsetMask full = static_cast<SubsetMask>((std::uint64_t{1} << n) - 1);
  const auto stride = detail::strides(f);
  std::unordered_set<std::vector<Element>, ValuesHash> seen;
  std::vector<Element> diag(m);

  for (auto K : subsets_by_cardinality(n)) {
    if (K == full && n > 0) continue;
    std::vector<std::size_t> frozen;
    std::size_t free_stride = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (K >> i & 1u)
        frozen.push_back(i);
      else
        free_stride += stride[i];
    }
    const PointSpace sub(m, frozen.size());
    Point values = sub.first();
    do {
      Point a(n, L.bottom());
      std::size_t base = 0;
      for (std::size_t j = 0; j < frozen.size(); ++j) {
        a[frozen[j]] = values[j];
        base += values[j].index() * stride[frozen[j]];
      }
      for (auto x : L.elements()) diag[x.index()] = f.at(base + x.index() * free_stride);
      if (!seen.insert(diag).second) continue;
      for (auto x : L.elements())
        for (auto y : L.elements()) {
          const bool meet_ok = L.meet(diag[x.index()], diag[y.index()]) == diag[L.meet(x, y).index()];
          const bool join_ok = L.join(diag[x.index()], diag[y.index()]) == diag[L.join(x, y).index()];
          std::string_view failed;
          if (ops != DeltaOps::join && !meet_ok)
            failed = eq::delta_meet;
          else if (ops != DeltaOps::meet && !join_ok)
            failed = eq::delta_join;
          if (!failed.empty())
            return CheckResult::fail(
                Witness{a, std::nullopt, std::nullopt, std::nullopt, K, std::pair{x, y}, std::string(failed)});
        }
    } while (sub.next(values));
  }
  return CheckResult::pass();
}

// ---------------------------------------------------------------------------
// Conditions and reports.

enum class ConditionId { ii, iii, iv, v, vi };

inline constexpr std::array<ConditionId, 5> kAllConditions{ConditionId::ii, ConditionId::iii, ConditionId::iv,
                                                           ConditionId::v, ConditionId::vi};

inline std::string_view condition_name(ConditionId id) {
  switch (id) {
    case ConditionId::ii: return "ii";
    case ConditionId::iii: return "iii";
    case ConditionId::iv: return "iv";
    case ConditionId::v: return "v";
    case ConditionId::vi: return "vi";
  }
  return "?";
}

inline ConditionId parse_condition(std::string_view name) {
  for (auto id : kAllConditions)
    if (condition_name(id) == name) return id;
  throw InvalidParams("unknown condition '" + std::string(name) + "' (expected ii, iii, iv, v or vi)");
}

/// Evaluates one condition as a conjunction of its equations; the witness
/// is that of the first failing equation in the order the condition lists
/// them. Conditions iii-vi require an order-preserving f. The scope applies
/// to the homogeneity equations of condition iv.
inline CheckResult check_condition(const FunctionTable& f, ConditionId id, Scope scope = Scope::interval) {
  if (id == ConditionId::ii) return check_median_decomposition(f);
  require_order_preserving(f, "condition " + std::string(condition_name(id)));
  auto all = [](std::initializer_list<std::function<CheckResult()>> parts) {
    for (const auto& part : parts)
      if (auto r = part(); !r) return r;
    return CheckResult::pass();
  };
  switch (id) {
    case ConditionId::iii:
      return all({[&] { return check_delta_preservation(f, DeltaOps::both); },
                  [&] { return check_range_convexity(f); }, [&] { return check_self_composition(f); }});
    case ConditionId::iv:
      return all({[&] { return check_homogeneity(f, Side::meet, scope); },
                  [&] { return check_homogeneity(f, Side::join, scope); }});
    case ConditionId::v:
      return all({[&] { return check_delta_preservation(f, DeltaOps::join); },
                  [&] { return check_homogeneity(f, Side::meet); }, [&] { return check_horizontal(f, Side::meet); }});
    case ConditionId::vi:
      return all({[&] { return check_delta_preservation(f, DeltaOps::both); },
                  [&] { return check_horizontal(f, Side::meet); }, [&] { return check_horizontal(f, Side::join); },
                  [&] { return check_range_idempotency(f); }});
    default:
      break;
  }
  return CheckResult::pass();
}

struct PolynomialVerdict {
  bool polynomial = false;
  std::optional<Point> witness;  // reconstruction disagreement, distributive lattices only
  bool by_closure = false;
};

/// Designated polynomiality test: normal-form reconstruction on distributive
/// lattices, closure membership otherwise.
inline PolynomialVerdict is_polynomial(const FunctionTable& f) {
  if (f.lattice().is_distributive()) {
    auto r = reconstruct(f);
    return {r.is_polynomial, std::move(r.witness), false};
  }
  return {closure_polynomials(f.lattice_ptr(), f.arity()).contains(f), std::nullopt, true};
}

enum class Verdict { pass, fail, skipped };

struct ConditionEntry {
  ConditionId id;
  Verdict verdict;
  std::optional<Witness> witness;
};

struct ConditionReport {
  CheckResult order_preserving;
  std::vector<ConditionEntry> conditions;  // in the requested order
  PolynomialVerdict polynomial;
  bool consistent = true;

  const ConditionEntry* find(ConditionId id) const {
    for (const auto& e : conditions)
      if (e.id == id) return &e;
    return nullptr;
  }
};

struct ConditionOptions {
  std::vector<ConditionId> conditions{kAllConditions.begin(), kAllConditions.end()};
  Scope scope = Scope::interval;
};

/// Runs the order test, the requested conditions and the designated
/// polynomiality test. Conditions iii-vi are skipped for functions that are
/// not order-preserving; `consistent` says whether every verdict that ran
/// agrees with the polynomial verdict.
inline ConditionReport evaluate_all_conditions(const FunctionTable& f, const ConditionOptions& options = {}) {
  ConditionReport report;
  report.order_preserving = is_order_preserving(f);
  for (auto id : options.conditions) {
    if (id != ConditionId::ii && !report.order_preserving) {
      report.conditions.push_back({id, Verdict::skipped, std::nullopt});
      continue;
    }
    auto r = check_condition(f, id, options.scope);
    report.conditions.push_back({id, r ? Verdict::pass : Verdict::fail, std::move(r.witness)});
  }
  report.polynomial = is_polynomial(f);
  for (const auto& e : report.conditions)
    if (e.verdict != Verdict::skipped && (e.verdict == Verdict::pass) != report.polynomial.polynomial)
      report.consistent = false;
  return report;
}

struct Classification {
  bool polynomial = false;
  bool term_function = false;
  bool sugeno = false;
};

/// Polynomial functions with f(0..0) = 0 and f(1..1) = 1 are the discrete
/// Sugeno integrals; term functions additionally keep {0,1}^n inside {0,1}.
inline Classification classify(const FunctionTable& f) {
  const auto& L = f.lattice();
  Classification c;
  c.polynomial = is_polynomial(f).polynomial;
  if (!c.polynomial) return c;
  c.sugeno = f.diagonal(L.bottom()) == L.bottom() && f.diagonal(L.top()) == L.top();
  c.term_function = c.sugeno;
  if (c.term_function) {
    require_mask_width(f.arity());
    for (std::size_t mask = 0; mask < (std::size_t{1} << f.arity()) && c.term_function; ++mask) {
      const auto v = f(characteristic_vector(L, f.arity(), static_cast<SubsetMask>(mask)));
      c.term_function = v == L.bottom() || v == L.top();
    }
  }
  return c;
}

/// The global range {f(x) : x in L^n}, in canonical order.
inline std::vector<Element> range_of(const FunctionTable& f) {
  std::vector<char> in(f.lattice().size(), 0);
  for (auto v : f.values()) in[v.index()] = 1;
  std::vector<Element> out;
  for (auto e : f.lattice().elements())
    if (in[e.index()]) out.push_back(e);
  return out;
}

}  // namespace latpoly

#endif  // LATPOLY_CHARACTERIZATION_HPP
