#ifndef LATPOLY_LATTICE_HPP
#define LATPOLY_LATTICE_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <queue>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latpoly/config.hpp"
#include "latpoly/error.hpp"

namespace latpoly {

/// Dense index into a lattice's element list. Ids follow the lattice's
/// canonical linear extension, so bottom is always 0 and top is size()-1.
struct Element {
  std::uint16_t id = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::size_t i) : id(static_cast<std::uint16_t>(i)) {}

  constexpr std::size_t index() const noexcept { return id; }
  friend constexpr auto operator<=>(Element, Element) = default;
};

/// A point of L^n.
using Point = std::vector<Element>;

struct Cover {
  std::string low;
  std::string high;
};

struct BuildOptions {
  std::size_t max_elements = kDefaultMaxElements;
};

class FiniteLattice;
using LatticePtr = std::shared_ptr<const FiniteLattice>;

struct OrderOps {
  bool leq;
  Element meet;
  Element join;
};

/// Finite bounded lattice with fully precomputed order, meet and join tables.
/// Immutable after construction.
class FiniteLattice {
 public:
  /// Builds a lattice from the reflexive-transitive closure of `covers`.
  static LatticePtr from_covers(std::string name, const std::vector<std::string>& names,
                                const std::vector<Cover>& covers, const BuildOptions& options = {});

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return names_.size(); }

  Element bottom() const noexcept { return Element{0}; }
  Element top() const noexcept { return Element{size() - 1}; }

  const std::string& name_of(Element e) const { return names_.at(e.index()); }
  std::optional<Element> find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }
  /// Looks up an element by name; throws UnknownElement.
  Element element(std::string_view name) const {
    if (auto e = find(name)) return *e;
    throw UnknownElement("unknown element '" + std::string(name) + "' in lattice " + name_);
  }
  bool contains(Element e) const noexcept { return e.index() < size(); }

  bool leq(Element a, Element b) const noexcept { return leq_[a.index() * size() + b.index()] != 0; }
  Element meet(Element a, Element b) const noexcept { return meet_[a.index() * size() + b.index()]; }
  Element join(Element a, Element b) const noexcept { return join_[a.index() * size() + b.index()]; }
  OrderOps order_ops(Element a, Element b) const noexcept { return {leq(a, b), meet(a, b), join(a, b)}; }

  bool is_distributive() const noexcept { return distributive_; }

  std::span<const Element> upper_covers(Element e) const { return upper_covers_.at(e.index()); }
  std::span<const Element> lower_covers(Element e) const { return lower_covers_.at(e.index()); }

  /// All elements in canonical order.
  auto elements() const {
    return std::views::iota(std::size_t{0}, size()) | std::views::transform([](std::size_t i) { return Element{i}; });
  }

  /// Hasse diagram edges, as name pairs, in canonical order.
  std::vector<Cover> covers() const {
    std::vector<Cover> out;
    for (auto e : elements())
      for (auto u : upper_covers(e)) out.push_back({name_of(e), name_of(u)});
    return out;
  }

 private:
  FiniteLattice() = default;

  std::string name_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> by_name_;
  std::vector<char> leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<std::vector<Element>> upper_covers_;
  std::vector<std::vector<Element>> lower_covers_;
  bool distributive_ = false;
};

namespace detail {

/// Square bit matrix; row i holds the set {j : i <= j} or similar.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  bool test(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u; }
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  void or_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] |= bits_[src * words_ + w];
  }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Reflexive-transitive closure of an edge list over declared indices;
/// throws CycleError on any antisymmetry violation.
inline BitMatrix order_closure(const std::vector<std::string>& names,
                               const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const std::size_t m = names.size();
  BitMatrix reach(m);
  for (std::size_t i = 0; i < m; ++i) reach.set(i, i);
  for (auto [lo, hi] : edges) {
    if (lo == hi) throw CycleError("cycle in cover relation: " + names[lo] + " < " + names[hi]);
    reach.set(lo, hi);
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      if (reach.test(i, k)) reach.or_row(i, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (reach.test(i, j) && reach.test(j, i))
        throw CycleError("cycle in cover relation: " + names[i] + " and " + names[j] + " are mutually below");
  return reach;
}

inline std::vector<std::pair<std::size_t, std::size_t>> resolve_covers(const std::vector<std::string>& names,
                                                                       const std::vector<Cover>& covers) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw InvalidParams("element names must be non-empty");
    if (!index.emplace(names[i], i).second) throw InvalidParams("duplicate element name '" + names[i] + "'");
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(covers.size());
  for (const auto& c : covers) {
    auto lo = index.find(c.low);
    auto hi = index.find(c.high);
    if (lo == index.end()) throw UnknownElement("cover references undeclared element '" + c.low + "'");
    if (hi == index.end()) throw UnknownElement("cover references undeclared element '" + c.high + "'");
    edges.emplace_back(lo->second, hi->second);
  }
  return edges;
}

}  // namespace detail

inline LatticePtr FiniteLattice::from_covers(std::string name, const std::vector<std::string>& names,
                                             const std::vector<Cover>& covers, const BuildOptions& options) {
  if (names.empty()) throw InvalidParams("a lattice needs at least one element");
  if (options.max_elements > 65535) throw InvalidParams("element cap cannot exceed 65535");
  if (names.size() > options.max_elements)
    throw SizeLimitExceeded("lattice has " + std::to_string(names.size()) + " elements, cap is " +
                            std::to_string(options.max_elements));

  const auto edges = detail::resolve_covers(names, covers);
  const std::size_t m = names.size();
  const auto reach = detail::order_closure(names, edges);

  // Linear extension: Kahn's algorithm, ties broken by declaration order.
  std::vector<std::vector<std::size_t>> succ(m);
  std::vector<std::size_t> indegree(m, 0);
  for (auto [lo, hi] : edges) {
    succ[lo].push_back(hi);
    ++indegree[hi];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < m; ++i)
    if (indegree[i] == 0) ready.push(i);
  std::vector<std::size_t> order;  // canonical position -> declared index
  order.reserve(m);
  while (!ready.empty()) {
    auto i = ready.top();
    ready.pop();
    order.push_back(i);
    for (auto j : succ[i])
      if (--indegree[j] == 0) ready.push(j);
  }

  auto lattice = std::shared_ptr<FiniteLattice>(new FiniteLattice());
  auto& L = *lattice;
  L.name_ = std::move(name);
  L.names_.reserve(m);
  for (auto i : order) L.names_.push_back(names[i]);
  for (std::size_t i = 0; i < m; ++i) L.by_name_.emplace(L.names_[i], Element{i});

  // down[b] = {a : a <= b}, up[a] = {b : a <= b}, both in canonical ids.
  detail::BitMatrix down(m), up(m);
  L.leq_.assign(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (reach.test(order[a], order[b])) {
        L.leq_[a * m + b] = 1;
        down.set(b, a);
        up.set(a, b);
      }

  auto is_bottom = [&](std::size_t a) {
    for (std::size_t x = 0; x < m; ++x)
      if (!L.leq_[a * m + x]) return false;
    return true;
  };
  auto is_top = [&](std::size_t a) {
    for (std::size_t x = 0; x < m; ++x)
      if (!L.leq_[x * m + a]) return false;
    return true;
  };
  if (!is_bottom(0)) throw NoBounds("lattice " + L.name_ + " has no least element");
  if (!is_top(m - 1)) throw NoBounds("lattice " + L.name_ + " has no greatest element");

  // The glb of a, b, if it exists, is the lower bound latest in the linear
  // extension; it must then dominate every other common lower bound.
  L.meet_.assign(m * m, Element{});
  L.join_.assign(m * m, Element{});
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      std::optional<std::size_t> glb, lub;
      for (std::size_t x = m; x-- > 0;)
        if (down.test(a, x) && down.test(b, x)) {
          glb = x;
          break;
        }
      for (std::size_t x = 0; x < m; ++x)
        if (up.test(a, x) && up.test(b, x)) {
          lub = x;
          break;
        }
      for (std::size_t x = 0; x < m; ++x) {
        if (down.test(a, x) && down.test(b, x) && !L.leq_[x * m + *glb])
          throw NotALattice(L.names_[a], L.names_[b], "greatest lower bound");
        if (up.test(a, x) && up.test(b, x) && !L.leq_[*lub * m + x])
          throw NotALattice(L.names_[a], L.names_[b], "least upper bound");
      }
      L.meet_[a * m + b] = L.meet_[b * m + a] = Element{*glb};
      L.join_[a * m + b] = L.join_[b * m + a] = Element{*lub};
    }
  }

  L.upper_covers_.assign(m, {});
  L.lower_covers_.assign(m, {});
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      if (!L.leq_[a * m + b]) continue;
      bool cover = true;
      for (std::size_t c = a + 1; c < b && cover; ++c)
        if (L.leq_[a * m + c] && L.leq_[c * m + b]) cover = false;
      if (cover) {
        L.upper_covers_[a].push_back(Element{b});
        L.lower_covers_[b].push_back(Element{a});
      }
    }

  L.distributive_ = true;
  for (std::size_t x = 0; x < m && L.distributive_; ++x)
    for (std::size_t y = 0; y < m && L.distributive_; ++y)
      for (std::size_t z = 0; z < m; ++z) {
        auto lhs = L.meet(Element{x}, L.join(Element{y}, Element{z}));
        auto rhs = L.join(L.meet(Element{x}, Element{y}), L.meet(Element{x}, Element{z}));
        if (lhs != rhs) {
          L.distributive_ = false;
          break;
        }
      }

  return lattice;
}

inline LatticePtr build_from_covers(std::string name, const std::vector<std::string>& names,
                                    const std::vector<Cover>& covers, const BuildOptions& options = {}) {
  return FiniteLattice::from_covers(std::move(name), names, covers, options);
}

// ---------------------------------------------------------------------------
// Standard fixtures.

/// k-element chain. Elements are 0 < m < 1 for k = 3, otherwise 0 < m1 < ... < 1.
inline LatticePtr chain(std::size_t k) {
  if (k < 2) throw InvalidParams("chain needs k >= 2");
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i + 1 < k; ++i) names.push_back(k == 3 ? "m" : "m" + std::to_string(i));
  names.push_back("1");
  std::vector<Cover> covers;
  for (std::size_t i = 0; i + 1 < k; ++i) covers.push_back({names[i], names[i + 1]});
  return build_from_covers("chain" + std::to_string(k), names, covers);
}

/// Boolean lattice of subsets of k atoms a, b, c, ...; bottom is 0 and top is 1.
inline LatticePtr boolean(std::size_t k) {
  if (k < 1 || k > 16) throw InvalidParams("boolean needs 1 <= k <= 16");
  const std::size_t m = std::size_t{1} << k;
  auto name_of = [&](std::size_t mask) -> std::string {
    if (mask == 0) return "0";
    if (mask == m - 1) return "1";
    std::string s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) s += static_cast<char>('a' + i);
    return s;
  };
  std::vector<std::string> names;
  std::vector<Cover> covers;
  for (std::size_t mask = 0; mask < m; ++mask) {
    names.push_back(name_of(mask));
    for (std::size_t i = 0; i < k; ++i)
      if (!(mask >> i & 1u)) covers.push_back({name_of(mask), name_of(mask | std::size_t{1} << i)});
  }
  return build_from_covers("B" + std::to_string(k), names, covers);
}

/// Direct product; elements are named "(x,y)".
inline LatticePtr product(const FiniteLattice& first, const FiniteLattice& second) {
  auto pair_name = [&](Element x, Element y) { return "(" + first.name_of(x) + "," + second.name_of(y) + ")"; };
  std::vector<std::string> names;
  std::vector<Cover> covers;
  for (auto x : first.elements())
    for (auto y : second.elements()) {
      names.push_back(pair_name(x, y));
      for (auto u : first.upper_covers(x)) covers.push_back({pair_name(x, y), pair_name(u, y)});
      for (auto u : second.upper_covers(y)) covers.push_back({pair_name(x, y), pair_name(x, u)});
    }
  return build_from_covers(first.name() + "x" + second.name(), names, covers);
}

/// A finite poset given by generating order pairs.
struct Poset {
  std::vector<std::string> names;
  std::vector<Cover> order;
};

/// Lattice of down-closed subsets of a poset ordered by inclusion. Always
/// distributive; every finite distributive lattice arises this way.
inline LatticePtr downsets(const Poset& poset) {
  const std::size_t p = poset.names.size();
  if (p > 20) throw InvalidParams("downset construction supports at most 20 poset elements");
  const auto reach = detail::order_closure(poset.names, detail::resolve_covers(poset.names, poset.order));
  std::vector<std::uint32_t> below(p, 0);  // strict down-set masks
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      if (i != j && reach.test(j, i)) below[i] |= std::uint32_t{1} << j;

  std::vector<std::uint32_t> sets;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << p); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < p && closed; ++i)
      if ((mask >> i & 1u) && (below[i] & ~mask) != 0) closed = false;
    if (closed) {
      sets.push_back(mask);
      if (sets.size() > kDefaultMaxElements)
        throw SizeLimitExceeded("downset lattice exceeds " + std::to_string(kDefaultMaxElements) + " elements");
    }
  }
  auto set_name = [&](std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < p; ++i)
      if (mask >> i & 1u) {
        if (!first) s += ",";
        s += poset.names[i];
        first = false;
      }
    return s + "}";
  };
  std::vector<std::string> names;
  std::vector<Cover> covers;
  for (auto mask : sets) {
    names.push_back(set_name(mask));
    for (std::size_t i = 0; i < p; ++i) {
      const auto bigger = mask | std::uint32_t{1} << i;
      if (bigger != mask && std::binary_search(sets.begin(), sets.end(), bigger))
        covers.push_back({set_name(mask), set_name(bigger)});
    }
  }
  return build_from_covers("downsets", names, covers);
}

/// The pentagon: 0 < a < b < 1 and 0 < c < 1.
inline LatticePtr pentagon() {
  return build_from_covers("N5", {"0", "a", "b", "c", "1"},
                           {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

/// The diamond: three pairwise incomparable atoms a, b, c.
inline LatticePtr diamond() {
  return build_from_covers("M3", {"0", "a", "b", "c", "1"},
                           {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

/// Builds a fixture from a short spec: "chain:K", "boolean:K", "N5" or "M3".
inline LatticePtr standard_lattice(std::string_view spec) {
  auto parse_param = [&](std::string_view rest) -> std::size_t {
    std::size_t v = 0;
    if (rest.empty()) throw InvalidParams("missing parameter in lattice spec '" + std::string(spec) + "'");
    for (char ch : rest) {
      if (ch < '0' || ch > '9' || v > 1'000'000)
        throw InvalidParams("bad parameter in lattice spec '" + std::string(spec) + "'");
      v = v * 10 + static_cast<std::size_t>(ch - '0');
    }
    return v;
  };
  if (spec == "N5") return pentagon();
  if (spec == "M3") return diamond();
  if (spec.starts_with("chain:")) return chain(parse_param(spec.substr(6)));
  if (spec.starts_with("boolean:")) return boolean(parse_param(spec.substr(8)));
  throw InvalidParams("unknown lattice spec '" + std::string(spec) + "'");
}

// ---------------------------------------------------------------------------
// Primitive operations.

/// (x v y) ^ (x v z) ^ (y v z)
inline Element med(const FiniteLattice& L, Element x, Element y, Element z) {
  return L.meet(L.meet(L.join(x, y), L.join(x, z)), L.join(y, z));
}

/// x ^ y evaluated across a whole point.
inline Point meet_with(const FiniteLattice& L, std::span<const Element> x, Element c) {
  Point out(x.begin(), x.end());
  for (auto& e : out) e = L.meet(e, c);
  return out;
}

inline Point join_with(const FiniteLattice& L, std::span<const Element> x, Element c) {
  Point out(x.begin(), x.end());
  for (auto& e : out) e = L.join(e, c);
  return out;
}

enum class Truncation { below, above };

/// below: coordinates <= c become 0; above: coordinates >= c become 1.
inline Point truncate(const FiniteLattice& L, std::span<const Element> x, Element c, Truncation direction) {
  Point out(x.begin(), x.end());
  for (auto& e : out) {
    if (direction == Truncation::below && L.leq(e, c)) e = L.bottom();
    if (direction == Truncation::above && L.leq(c, e)) e = L.top();
  }
  return out;
}

/// All x with a <= x <= b, in canonical order.
inline std::vector<Element> interval(const FiniteLattice& L, Element a, Element b) {
  if (!L.leq(a, b)) throw EmptyInterval("empty interval [" + L.name_of(a) + ", " + L.name_of(b) + "]");
  std::vector<Element> out;
  for (auto x : L.elements())
    if (L.leq(a, x) && L.leq(x, b)) out.push_back(x);
  return out;
}

inline void validate_point(const FiniteLattice& L, std::span<const Element> x) {
  for (auto e : x)
    if (!L.contains(e)) throw BadIndex("element id " + std::to_string(e.id) + " outside lattice " + L.name());
}

/// "(a,b,...)" using element names.
inline std::string format_point(const FiniteLattice& L, std::span<const Element> x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) s += ",";
    s += L.name_of(x[i]);
  }
  return s + ")";
}

}  // namespace latpoly

template <>
struct std::hash<latpoly::Element> {
  std::size_t operator()(latpoly::Element e) const noexcept { return e.id; }
};

#endif  // LATPOLY_LATTICE_HPP
