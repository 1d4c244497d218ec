#ifndef LATPOLY_TESTS_TEST_SUPPORT_HPP
#define LATPOLY_TESTS_TEST_SUPPORT_HPP

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "latpoly/latpoly.hpp"

namespace latpoly::testing {

/// Random term of depth <= depth over x1..xn and the lattice constants.
inline TermNode random_node(std::mt19937_64& rng, const FiniteLattice& L, std::size_t n, int depth) {
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 1 : 4);
  std::uniform_int_distribution<std::size_t> pick_var(1, n);
  std::uniform_int_distribution<std::size_t> pick_elem(0, L.size() - 1);
  std::uniform_int_distribution<int> arity(2, 3);
  switch (kind(rng)) {
    case 0:
      return var(pick_var(rng));
    case 1:
      return std::uniform_int_distribution<int>(0, 2)(rng) == 0 ? constant(Element{pick_elem(rng)})
                                                                : var(pick_var(rng));
    case 2:
    case 3: {
      std::vector<TermNode> parts;
      const int k = arity(rng);
      for (int i = 0; i < k; ++i) parts.push_back(random_node(rng, L, n, depth - 1));
      return kind(rng) % 2 == 0 ? meet(std::move(parts)) : join(std::move(parts));
    }
    default:
      return med(random_node(rng, L, n, depth - 1), random_node(rng, L, n, depth - 1),
                 random_node(rng, L, n, depth - 1));
  }
}

inline Term random_term(std::mt19937_64& rng, const FiniteLattice& L, std::size_t n, int depth = 5) {
  return Term(random_node(rng, L, n, depth), n);
}

/// Brute-force glb from the order relation alone.
inline std::optional<Element> brute_glb(const FiniteLattice& L, Element a, Element b) {
  for (auto g : L.elements()) {
    if (!L.leq(g, a) || !L.leq(g, b)) continue;
    bool greatest = true;
    for (auto x : L.elements())
      if (L.leq(x, a) && L.leq(x, b) && !L.leq(x, g)) greatest = false;
    if (greatest) return g;
  }
  return std::nullopt;
}

inline std::optional<Element> brute_lub(const FiniteLattice& L, Element a, Element b) {
  for (auto g : L.elements()) {
    if (!L.leq(a, g) || !L.leq(b, g)) continue;
    bool least = true;
    for (auto x : L.elements())
      if (L.leq(a, x) && L.leq(b, x) && !L.leq(g, x)) least = false;
    if (least) return g;
  }
  return std::nullopt;
}

/// Distributivity by scanning every triple, using brute-force bounds.
inline bool brute_distributive(const FiniteLattice& L) {
  for (auto x : L.elements())
    for (auto y : L.elements())
      for (auto z : L.elements()) {
        auto lhs = *brute_glb(L, x, *brute_lub(L, y, z));
        auto rhs = *brute_lub(L, *brute_glb(L, x, y), *brute_glb(L, x, z));
        if (lhs != rhs) return false;
      }
  return true;
}

/// Monotonicity over all comparable pairs, not just covers.
inline bool brute_monotone(const FunctionTable& f) {
  const auto& L = f.lattice();
  const auto space = f.space();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) {
      const auto x = space.point(i);
      const auto y = space.point(j);
      bool below = true;
      for (std::size_t k = 0; k < x.size(); ++k) below = below && L.leq(x[k], y[k]);
      if (below && !L.leq(f.at(i), f.at(j))) return false;
    }
  return true;
}

/// Every table L^n -> L (for tiny domains).
inline std::vector<FunctionTable> all_tables(const LatticePtr& L, std::size_t n) {
  const PointSpace points(L->size(), n);
  const PointSpace tables(L->size(), points.size());
  std::vector<FunctionTable> out;
  tables.for_each([&](const Point& values) { out.emplace_back(L, n, values); });
  return out;
}

/// Unary table from element names in canonical order.
inline FunctionTable unary(const LatticePtr& L, const std::vector<std::string>& images) {
  std::vector<Element> values;
  for (const auto& name : images) values.push_back(L->element(name));
  return FunctionTable(L, 1, values);
}

inline Point point(const FiniteLattice& L, const std::vector<std::string>& names) {
  Point x;
  for (const auto& name : names) x.push_back(L.element(name));
  return x;
}

}  // namespace latpoly::testing

#endif  // LATPOLY_TESTS_TEST_SUPPORT_HPP
