#ifndef LATPOLY_NORMAL_FORM_HPP
#define LATPOLY_NORMAL_FORM_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latpoly/config.hpp"
#include "latpoly/error.hpp"
#include "latpoly/function_table.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/term.hpp"

namespace latpoly {

/// Subset of [n] as a bit mask; bit i-1 stands for coordinate i.
using SubsetMask = std::uint32_t;

inline void require_mask_width(std::size_t n) {
  if (n > mask_width())
    throw InvalidParams("arity " + std::to_string(n) + " exceeds the subset mask width " +
                        std::to_string(mask_width()));
}

/// All subsets of [n] by increasing cardinality, then numerically.
inline std::vector<SubsetMask> subsets_by_cardinality(std::size_t n) {
  require_mask_width(n);
  std::vector<SubsetMask> out(std::size_t{1} << n);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<SubsetMask>(i);
  std::stable_sort(out.begin(), out.end(),
                   [](SubsetMask a, SubsetMask b) { return std::popcount(a) < std::popcount(b); });
  return out;
}

/// "{}" or "{1,3}"
inline std::string format_subset(SubsetMask mask) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; mask >> i; ++i)
    if (mask >> i & 1u) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

/// Coefficient map alpha: 2^[n] -> L of a disjunctive normal form
///   V_I ( alpha(I) ^ /\_{i in I} x_i ).
class DnfMap {
 public:
  DnfMap(LatticePtr lattice, std::size_t arity, std::vector<Element> coeffs)
      : lattice_(std::move(lattice)), arity_(arity), coeffs_(std::move(coeffs)) {
    require_mask_width(arity_);
    if (coeffs_.size() != std::size_t{1} << arity_)
      throw ArityMismatch("DNF of arity " + std::to_string(arity_) + " needs " +
                          std::to_string(std::size_t{1} << arity_) + " coefficients");
    for (auto c : coeffs_)
      if (!lattice_->contains(c)) throw BadIndex("DNF coefficient outside lattice " + lattice_->name());
  }

  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  std::size_t arity() const noexcept { return arity_; }
  std::span<const Element> coeffs() const noexcept { return coeffs_; }
  Element operator[](SubsetMask mask) const { return coeffs_.at(mask); }

  friend bool operator==(const DnfMap& a, const DnfMap& b) {
    return a.lattice_.get() == b.lattice_.get() && a.arity_ == b.arity_ && a.coeffs_ == b.coeffs_;
  }

 private:
  LatticePtr lattice_;
  std::size_t arity_;
  std::vector<Element> coeffs_;
};

/// alpha_f(I) = f(e_I)
inline DnfMap extract_alpha(const FunctionTable& f) {
  require_mask_width(f.arity());
  const std::size_t count = std::size_t{1} << f.arity();
  std::vector<Element> coeffs(count);
  for (std::size_t mask = 0; mask < count; ++mask)
    coeffs[mask] = f(characteristic_vector(f.lattice(), f.arity(), static_cast<SubsetMask>(mask)));
  return DnfMap(f.lattice_ptr(), f.arity(), std::move(coeffs));
}

namespace detail {

// Evaluates a DNF using prefix meets over the subset lattice: 2^n meets and
// joins per point, with a reusable buffer.
class DnfEvaluator {
 public:
  explicit DnfEvaluator(const DnfMap& alpha) : alpha_(alpha), prefix_(alpha.coeffs().size()) {}

  Element operator()(std::span<const Element> x) {
    const auto& L = alpha_.lattice();
    prefix_[0] = L.top();
    Element acc = alpha_[0];
    for (std::size_t mask = 1; mask < prefix_.size(); ++mask) {
      const auto low = static_cast<std::size_t>(std::countr_zero(mask));
      prefix_[mask] = L.meet(prefix_[mask & (mask - 1)], x[low]);
      acc = L.join(acc, L.meet(alpha_[static_cast<SubsetMask>(mask)], prefix_[mask]));
    }
    return acc;
  }

 private:
  const DnfMap& alpha_;
  std::vector<Element> prefix_;
};

}  // namespace detail

/// Value of the normal form at x; the empty meet is the top element.
inline Element dnf_evaluate(const DnfMap& alpha, std::span<const Element> x) {
  if (x.size() != alpha.arity())
    throw ArityMismatch("point of length " + std::to_string(x.size()) + " for DNF of arity " +
                        std::to_string(alpha.arity()));
  validate_point(alpha.lattice(), x);
  return detail::DnfEvaluator(alpha)(x);
}

inline FunctionTable dnf_materialize(const DnfMap& alpha) {
  const PointSpace space(alpha.lattice().size(), alpha.arity());
  require_budget("DNF materialization", saturating_mul(space.size(), std::uint64_t{1} << alpha.arity()));
  detail::DnfEvaluator eval(alpha);
  return FunctionTable::tabulate(alpha.lattice_ptr(), alpha.arity(), [&](const Point& x) { return eval(x); });
}

/// cumulative(I) = V_{J subset of I} alpha(J), accumulated along
/// increasing-cardinality order from the immediate subsets of I.
inline std::vector<Element> cumulative_joins(const DnfMap& alpha) {
  const auto& L = alpha.lattice();
  std::vector<Element> cum(alpha.coeffs().begin(), alpha.coeffs().end());
  for (auto mask : subsets_by_cardinality(alpha.arity()))
    for (SubsetMask rest = mask; rest; rest &= rest - 1) {
      const SubsetMask bit = rest & (~rest + 1);
      cum[mask] = L.join(cum[mask], cum[mask ^ bit]);
    }
  return cum;
}

struct Reconstruction {
  bool is_polynomial = false;
  std::optional<Point> witness;  // first point where the DNF of alpha_f differs from f
};

/// Polynomiality test on a distributive lattice: f is polynomial iff the
/// normal form built from alpha_f reproduces f everywhere.
inline Reconstruction reconstruct(const FunctionTable& f) {
  const auto& L = f.lattice();
  if (!L.is_distributive())
    throw NotDistributive("reconstruction is only sound on distributive lattices; " + L.name() + " is not");
  require_mask_width(f.arity());
  const auto space = f.space();
  require_budget("reconstruct", saturating_add(std::uint64_t{1} << f.arity(), space.size()));
  const auto alpha = extract_alpha(f);
  detail::DnfEvaluator eval(alpha);
  Reconstruction result{true, std::nullopt};
  std::size_t i = 0;
  Point x = space.first();
  do {
    if (eval(x) != f.at(i)) return {false, x};
    ++i;
  } while (space.next(x));
  return result;
}

/// Membership via the join criterion: V_{J subset of I} alpha(J) = alpha_f(I)
/// for every I. Valid when f is polynomial on a distributive lattice.
inline bool dnf_membership_by_joins(const DnfMap& alpha, const FunctionTable& f) {
  if (alpha.arity() != f.arity()) throw ArityMismatch("DNF and table arities differ");
  const auto cum = cumulative_joins(alpha);
  const auto alpha_f = extract_alpha(f);
  for (std::size_t mask = 0; mask < cum.size(); ++mask)
    if (cum[mask] != alpha_f[static_cast<SubsetMask>(mask)]) return false;
  return true;
}

/// Membership by definition: the normal form equals f at every point.
inline bool dnf_membership_by_evaluation(const DnfMap& alpha, const FunctionTable& f) {
  if (alpha.arity() != f.arity()) throw ArityMismatch("DNF and table arities differ");
  const auto space = f.space();
  require_budget("DNF membership", saturating_mul(space.size(), std::uint64_t{1} << f.arity()));
  detail::DnfEvaluator eval(alpha);
  std::size_t i = 0;
  Point x = space.first();
  do {
    if (eval(x) != f.at(i++)) return false;
  } while (space.next(x));
  return true;
}

/// Whether alpha is a disjunctive normal form of f.
inline bool dnf_membership(const DnfMap& alpha, const FunctionTable& f) {
  if (alpha.arity() != f.arity()) throw ArityMismatch("DNF and table arities differ");
  if (&alpha.lattice() != &f.lattice()) throw InvalidParams("DNF and table live on different lattices");
  if (f.lattice().is_distributive() && reconstruct(f).is_polynomial) return dnf_membership_by_joins(alpha, f);
  return dnf_membership_by_evaluation(alpha, f);
}

enum class EnumerationMode { count, list };

struct DnfEnumeration {
  std::uint64_t count = 0;
  std::vector<DnfMap> members;  // list mode only
  bool truncated = false;       // list mode hit the limit
};

/// Enumerates DNF(f) by depth-first search over subsets in increasing
/// cardinality. At subset I the admissible coefficients are the a with
/// a v beta(I) = alpha_f(I), beta(I) being the join of the choices made for
/// proper subsets of I. Count mode throws LimitExceeded when more than
/// `limit` members exist; list mode returns the first `limit`.
inline DnfEnumeration enumerate_dnf(const FunctionTable& f, EnumerationMode mode, std::uint64_t limit) {
  const auto rec = reconstruct(f);
  if (!rec.is_polynomial) throw NotPolynomial("function is not a polynomial function; DNF(f) is empty");
  const auto& L = f.lattice();
  const std::size_t n = f.arity();
  const auto order = subsets_by_cardinality(n);
  const auto alpha_f = extract_alpha(f);

  DnfEnumeration result;
  std::vector<Element> chosen(order.size(), L.bottom());
  std::vector<Element> cum(order.size(), L.bottom());
  BudgetMeter meter("enumerate_dnf");
  bool stop = false;

  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    if (stop) return;
    if (depth == order.size()) {
      if (result.count == limit) {
        if (mode == EnumerationMode::count) throw LimitExceeded(limit + 1);
        result.truncated = true;
        stop = true;
        return;
      }
      ++result.count;
      if (mode == EnumerationMode::list) result.members.emplace_back(f.lattice_ptr(), n, chosen);
      return;
    }
    const SubsetMask mask = order[depth];
    Element beta = L.bottom();
    for (SubsetMask rest = mask; rest; rest &= rest - 1) beta = L.join(beta, cum[mask ^ (rest & (~rest + 1))]);
    meter.charge(L.size());
    for (auto a : L.elements()) {
      if (L.join(a, beta) != alpha_f[mask]) continue;
      chosen[mask] = a;
      cum[mask] = L.join(a, beta);
      self(self, depth + 1);
      if (stop) return;
    }
  };
  dfs(dfs, 0);
  return result;
}

/// The normal form as a term: summands with a bottom coefficient are
/// dropped and top coefficients are left implicit.
inline TermNode dnf_to_term(const DnfMap& alpha) {
  const auto& L = alpha.lattice();
  std::vector<TermNode> summands;
  for (auto mask : subsets_by_cardinality(alpha.arity())) {
    const auto c = alpha[mask];
    if (c == L.bottom()) continue;
    std::vector<TermNode> factors;
    if (c != L.top() || mask == 0) factors.push_back(constant(c));
    for (std::size_t i = 0; i < alpha.arity(); ++i)
      if (mask >> i & 1u) factors.push_back(var(i + 1));
    summands.push_back(meet(std::move(factors)));
  }
  if (summands.empty()) return constant(L.bottom());
  return join(std::move(summands));
}

/// One line per subset in increasing cardinality: "{i,j} -> <element>".
inline std::string format_dnf(const DnfMap& alpha) {
  std::string out;
  for (auto mask : subsets_by_cardinality(alpha.arity()))
    out += format_subset(mask) + " -> " + alpha.lattice().name_of(alpha[mask]) + "\n";
  return out;
}

struct Equivalence {
  bool equivalent = false;
  std::optional<Point> witness;  // first point where the terms differ
  bool full_domain = false;      // compared over all of L^n rather than {0,1}^n
};

/// Decides whether two terms denote the same function on L^n. On a
/// distributive lattice the characteristic vectors suffice.
inline Equivalence equivalent(const LatticePtr& L, const Term& t1, const Term& t2, std::size_t n) {
  const auto a = t1.with_arity(n);
  const auto b = t2.with_arity(n);
  if (L->is_distributive()) {
    for (auto mask : subsets_by_cardinality(n)) {
      const auto x = characteristic_vector(*L, n, mask);
      if (evaluate(*L, a.root(), x) != evaluate(*L, b.root(), x)) return {false, x, false};
    }
    return {true, std::nullopt, false};
  }
  const PointSpace space(L->size(), n);
  require_budget("equivalence", space.size());
  Point x = space.first();
  do {
    if (evaluate(*L, a.root(), x) != evaluate(*L, b.root(), x)) return {false, x, true};
  } while (space.next(x));
  return {true, std::nullopt, true};
}

}  // namespace latpoly

#endif  // LATPOLY_NORMAL_FORM_HPP
