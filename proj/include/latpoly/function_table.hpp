#ifndef LATPOLY_FUNCTION_TABLE_HPP
#define LATPOLY_FUNCTION_TABLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latpoly/config.hpp"
#include "latpoly/error.hpp"
#include "latpoly/lattice.hpp"

namespace latpoly {

/// Mixed-radix enumeration of L^n. Coordinate 1 is the most significant
/// digit and digits follow the lattice's canonical element order.
class PointSpace {
 public:
  PointSpace(std::size_t radix, std::size_t arity) : radix_(radix), arity_(arity) {
    size_ = saturating_pow(radix, arity);
  }

  std::size_t radix() const noexcept { return radix_; }
  std::size_t arity() const noexcept { return arity_; }
  /// Number of points, saturated at UINT64_MAX.
  std::uint64_t size() const noexcept { return size_; }

  std::size_t index(std::span<const Element> x) const {
    std::size_t idx = 0;
    for (auto e : x) idx = idx * radix_ + e.index();
    return idx;
  }

  Point point(std::size_t index) const {
    Point x(arity_);
    for (std::size_t i = arity_; i-- > 0;) {
      x[i] = Element{index % radix_};
      index /= radix_;
    }
    return x;
  }

  Point first() const { return Point(arity_, Element{0}); }

  /// Advances x to the next point; returns false after the last one.
  bool next(Point& x) const {
    for (std::size_t i = arity_; i-- > 0;) {
      if (x[i].index() + 1 < radix_) {
        x[i] = Element{x[i].index() + 1};
        return true;
      }
      x[i] = Element{0};
    }
    return false;
  }

  /// Calls fn(x) for every point in canonical order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    Point x = first();
    do {
      fn(static_cast<const Point&>(x));
    } while (next(x));
  }

 private:
  std::size_t radix_;
  std::size_t arity_;
  std::uint64_t size_;
};

/// Characteristic vector e_I of a subset of [n] given as a bit mask (bit i-1
/// for coordinate i).
inline Point characteristic_vector(const FiniteLattice& L, std::size_t arity, std::uint32_t mask) {
  Point x(arity, L.bottom());
  for (std::size_t i = 0; i < arity; ++i)
    if (mask >> i & 1u) x[i] = L.top();
  return x;
}

struct ValuesHash {
  std::size_t operator()(std::span<const Element> values) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : values) {
      h ^= e.id;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
  std::size_t operator()(const std::vector<Element>& values) const noexcept {
    return (*this)(std::span<const Element>(values));
  }
};

/// Explicit map L^n -> L stored densely in canonical point order.
class FunctionTable {
 public:
  FunctionTable(LatticePtr lattice, std::size_t arity, std::vector<Element> values)
      : lattice_(std::move(lattice)), arity_(arity), values_(std::move(values)) {
    const PointSpace space(lattice_->size(), arity_);
    if (values_.size() != space.size())
      throw ArityMismatch("table of arity " + std::to_string(arity_) + " needs " + std::to_string(space.size()) +
                          " entries, got " + std::to_string(values_.size()));
    for (auto v : values_)
      if (!lattice_->contains(v)) throw BadIndex("table entry outside lattice " + lattice_->name());
  }

  /// Evaluates fn at every point of L^n in canonical order.
  template <typename Fn>
  static FunctionTable tabulate(LatticePtr lattice, std::size_t arity, Fn&& fn) {
    const PointSpace space(lattice->size(), arity);
    require_budget("tabulate", space.size());
    std::vector<Element> values;
    values.reserve(space.size());
    space.for_each([&](const Point& x) { values.push_back(fn(x)); });
    return FunctionTable(std::move(lattice), arity, std::move(values));
  }

  static FunctionTable constant(LatticePtr lattice, std::size_t arity, Element c) {
    const PointSpace space(lattice->size(), arity);
    require_budget("constant table", space.size());
    return FunctionTable(std::move(lattice), arity, std::vector<Element>(space.size(), c));
  }

  /// x -> x_k, with k 1-based.
  static FunctionTable projection(LatticePtr lattice, std::size_t arity, std::size_t k) {
    if (k == 0 || k > arity) throw BadIndex("projection index " + std::to_string(k) + " outside [1, arity]");
    return tabulate(std::move(lattice), arity, [k](const Point& x) { return x[k - 1]; });
  }

  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return values_.size(); }
  PointSpace space() const { return PointSpace(lattice_->size(), arity_); }
  std::span<const Element> values() const noexcept { return values_; }

  Element operator()(std::span<const Element> x) const {
    if (x.size() != arity_)
      throw ArityMismatch("point of length " + std::to_string(x.size()) + " for table of arity " +
                          std::to_string(arity_));
    return values_[space().index(x)];
  }
  Element at(std::size_t index) const { return values_.at(index); }

  /// f(c, ..., c)
  Element diagonal(Element c) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < arity_; ++i) idx = idx * lattice_->size() + c.index();
    return values_[idx];
  }

  friend bool operator==(const FunctionTable& a, const FunctionTable& b) {
    return a.lattice_.get() == b.lattice_.get() && a.arity_ == b.arity_ && a.values_ == b.values_;
  }

 private:
  LatticePtr lattice_;
  std::size_t arity_;
  std::vector<Element> values_;
};

namespace detail {
template <typename Op>
FunctionTable pointwise(const FunctionTable& f, const FunctionTable& g, Op op) {
  if (f.arity() != g.arity() || &f.lattice() != &g.lattice())
    throw ArityMismatch("pointwise combination of incompatible tables");
  std::vector<Element> values(f.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = op(f.at(i), g.at(i));
  return FunctionTable(f.lattice_ptr(), f.arity(), std::move(values));
}
}  // namespace detail

inline FunctionTable pointwise_meet(const FunctionTable& f, const FunctionTable& g) {
  const auto& L = f.lattice();
  return detail::pointwise(f, g, [&L](Element a, Element b) { return L.meet(a, b); });
}

inline FunctionTable pointwise_join(const FunctionTable& f, const FunctionTable& g) {
  const auto& L = f.lattice();
  return detail::pointwise(f, g, [&L](Element a, Element b) { return L.join(a, b); });
}

/// f_K^a: freezes the coordinates in K (1-based) at the values of `a`; the
/// remaining coordinates keep their relative order.
inline FunctionTable substitute(const FunctionTable& f, std::span<const std::size_t> frozen,
                                std::span<const Element> a) {
  const std::size_t n = f.arity();
  if (a.size() != n)
    throw ArityMismatch("substitution vector has length " + std::to_string(a.size()) + ", expected " +
                        std::to_string(n));
  validate_point(f.lattice(), a);
  std::vector<char> is_frozen(n, 0);
  for (auto k : frozen) {
    if (k == 0 || k > n) throw BadIndex("substitution index " + std::to_string(k) + " outside [1, " +
                                        std::to_string(n) + "]");
    is_frozen[k - 1] = 1;
  }
  std::vector<std::size_t> free_coords;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_frozen[i]) free_coords.push_back(i);

  Point full(a.begin(), a.end());
  return FunctionTable::tabulate(f.lattice_ptr(), free_coords.size(), [&](const Point& rest) {
    for (std::size_t j = 0; j < free_coords.size(); ++j) full[free_coords[j]] = rest[j];
    return f(full);
  });
}

/// delta_f(x) = f(x, ..., x)
inline FunctionTable delta(const FunctionTable& f) {
  std::vector<Element> values;
  values.reserve(f.lattice().size());
  for (auto x : f.lattice().elements()) values.push_back(f.diagonal(x));
  return FunctionTable(f.lattice_ptr(), 1, std::move(values));
}

}  // namespace latpoly

#endif  // LATPOLY_FUNCTION_TABLE_HPP
