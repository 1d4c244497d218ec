#ifndef LATPOLY_MONOTONE_HPP
#define LATPOLY_MONOTONE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "latpoly/config.hpp"
#include "latpoly/function_table.hpp"
#include "latpoly/lattice.hpp"

namespace latpoly {

/// Order-preserving maps from a finite poset into L. The domain is given by
/// its lower covers, with positions numbered so that every lower cover of a
/// position precedes it. Maps are generated position by position; the
/// candidates at a position are the values above the join of its
/// already-assigned lower covers, so the search never dead-ends.
class MonotoneMaps {
 public:
  MonotoneMaps(LatticePtr lattice, std::vector<std::vector<std::size_t>> lower_covers)
      : lattice_(std::move(lattice)), lower_(std::move(lower_covers)) {}

  /// Domain L^n under the componentwise order, positions in canonical point order.
  static MonotoneMaps over_points(LatticePtr lattice, std::size_t n) {
    const PointSpace space(lattice->size(), n);
    require_budget("monotone table domain", space.size());
    std::vector<std::size_t> stride(n, 1);
    for (std::size_t i = n; i-- > 1;) stride[i - 1] = stride[i] * lattice->size();
    std::vector<std::vector<std::size_t>> lower(space.size());
    std::size_t idx = 0;
    space.for_each([&](const Point& x) {
      for (std::size_t k = 0; k < n; ++k)
        for (auto l : lattice->lower_covers(x[k])) lower[idx].push_back(idx - (x[k].index() - l.index()) * stride[k]);
      ++idx;
    });
    return MonotoneMaps(std::move(lattice), std::move(lower));
  }

  /// Domain 2^[n] under inclusion, positions indexed by subset mask.
  static MonotoneMaps over_subsets(LatticePtr lattice, std::size_t n) {
    std::vector<std::vector<std::size_t>> lower(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < lower.size(); ++mask)
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u) lower[mask].push_back(mask ^ (std::size_t{1} << i));
    return MonotoneMaps(std::move(lattice), std::move(lower));
  }

  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  std::size_t domain_size() const noexcept { return lower_.size(); }

  /// Calls fn(values) for every monotone map in lexicographic order of the
  /// value sequence; fn returns false to stop early. Returns false if stopped.
  template <typename Fn>
  bool for_each(Fn&& fn) const {
    std::vector<Element> values(lower_.size());
    return descend(0, values, fn);
  }

  /// Number of maps, or cap + 1 if there are more than cap.
  std::uint64_t count(std::uint64_t cap) const {
    std::uint64_t n = 0;
    for_each([&](std::span<const Element>) { return ++n <= cap; });
    return n;
  }

  /// A random map: each position draws uniformly from its candidates.
  std::vector<Element> sample(std::mt19937_64& rng) const {
    const auto& L = *lattice_;
    std::vector<Element> values(lower_.size());
    std::vector<Element> candidates;
    for (std::size_t p = 0; p < lower_.size(); ++p) {
      candidates.clear();
      const auto floor = lower_bound_at(p, values);
      for (auto v : L.elements())
        if (L.leq(floor, v)) candidates.push_back(v);
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      values[p] = candidates[pick(rng)];
    }
    return values;
  }

 private:
  Element lower_bound_at(std::size_t p, const std::vector<Element>& values) const {
    Element floor = lattice_->bottom();
    for (auto q : lower_[p]) floor = lattice_->join(floor, values[q]);
    return floor;
  }

  template <typename Fn>
  bool descend(std::size_t p, std::vector<Element>& values, Fn& fn) const {
    if (p == lower_.size()) return fn(std::span<const Element>(values));
    const auto& L = *lattice_;
    const auto floor = lower_bound_at(p, values);
    for (auto v : L.elements()) {
      if (!L.leq(floor, v)) continue;
      values[p] = v;
      if (!descend(p + 1, values, fn)) return false;
    }
    return true;
  }

  LatticePtr lattice_;
  std::vector<std::vector<std::size_t>> lower_;
};

}  // namespace latpoly

#endif  // LATPOLY_MONOTONE_HPP
