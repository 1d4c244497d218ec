#ifndef LATPOLY_CLOSURE_HPP
#define LATPOLY_CLOSURE_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "latpoly/config.hpp"
#include "latpoly/error.hpp"
#include "latpoly/function_table.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/monotone.hpp"
#include "latpoly/normal_form.hpp"

namespace latpoly {

/// Deduplicated set of n-ary tables on one lattice, iterated in
/// lexicographic order of their value sequences.
class FunctionSet {
 public:
  FunctionSet(LatticePtr lattice, std::size_t arity, std::vector<std::vector<Element>> tables)
      : lattice_(std::move(lattice)), arity_(arity), tables_(std::move(tables)) {
    std::sort(tables_.begin(), tables_.end());
    tables_.erase(std::unique(tables_.begin(), tables_.end()), tables_.end());
    index_.insert(tables_.begin(), tables_.end());
  }

  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return tables_.size(); }

  bool contains(std::span<const Element> values) const {
    return index_.contains(std::vector<Element>(values.begin(), values.end()));
  }
  bool contains(const FunctionTable& f) const {
    return &f.lattice() == lattice_.get() && f.arity() == arity_ && contains(f.values());
  }

  FunctionTable table(std::size_t i) const { return FunctionTable(lattice_, arity_, tables_.at(i)); }
  const std::vector<std::vector<Element>>& raw() const noexcept { return tables_; }

  friend bool operator==(const FunctionSet& a, const FunctionSet& b) {
    return a.lattice_.get() == b.lattice_.get() && a.arity_ == b.arity_ && a.tables_ == b.tables_;
  }

 private:
  LatticePtr lattice_;
  std::size_t arity_;
  std::vector<std::vector<Element>> tables_;
  std::unordered_set<std::vector<Element>, ValuesHash> index_;
};

/// All polynomial functions L^n -> L, generated as the closure of the
/// projections and constants under pointwise meet and join. Valid on any
/// lattice.
inline FunctionSet closure_polynomials(const LatticePtr& L, std::size_t n) {
  const PointSpace space(L->size(), n);
  require_budget("closure_polynomials", saturating_mul(space.size(), L->size()));
  BudgetMeter meter("closure_polynomials");
  const std::size_t points = space.size();

  std::vector<std::vector<Element>> members;
  std::unordered_set<std::vector<Element>, ValuesHash> seen;
  auto add = [&](std::vector<Element> t) {
    if (seen.insert(t).second) members.push_back(std::move(t));
  };
  for (std::size_t k = 1; k <= n; ++k) {
    auto p = FunctionTable::projection(L, n, k);
    add({p.values().begin(), p.values().end()});
  }
  for (auto c : L->elements()) add(std::vector<Element>(points, c));

  // Worklist: member i is combined with every member j <= i once.
  std::vector<Element> scratch(points);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      meter.charge(2 * points);
      for (std::size_t p = 0; p < points; ++p) scratch[p] = L->meet(members[i][p], members[j][p]);
      add(scratch);
      for (std::size_t p = 0; p < points; ++p) scratch[p] = L->join(members[i][p], members[j][p]);
      add(scratch);
    }
  }
  return FunctionSet(L, n, std::move(members));
}

/// All polynomial functions on a distributive lattice, as the images of
/// the monotone coefficient maps 2^[n] -> L under the normal form.
inline FunctionSet enumerate_polynomials_distributive(const LatticePtr& L, std::size_t n) {
  if (!L->is_distributive())
    throw NotDistributive("normal-form enumeration requires a distributive lattice; " + L->name() + " is not");
  require_mask_width(n);
  const PointSpace space(L->size(), n);
  const auto per_map = saturating_mul(space.size(), std::uint64_t{1} << n);
  BudgetMeter meter("enumerate_polynomials_distributive");
  std::vector<std::vector<Element>> tables;
  std::unordered_set<std::vector<Element>, ValuesHash> seen;
  MonotoneMaps::over_subsets(L, n).for_each([&](std::span<const Element> coeffs) {
    meter.charge(per_map);
    DnfMap alpha(L, n, {coeffs.begin(), coeffs.end()});
    detail::DnfEvaluator eval(alpha);
    std::vector<Element> values;
    values.reserve(space.size());
    space.for_each([&](const Point& x) { values.push_back(eval(x)); });
    if (seen.insert(values).second) tables.push_back(std::move(values));
    return true;
  });
  return FunctionSet(L, n, std::move(tables));
}

}  // namespace latpoly

#endif  // LATPOLY_CLOSURE_HPP
