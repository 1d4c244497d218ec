#ifndef LATPOLY_TERM_HPP
#define LATPOLY_TERM_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "latpoly/config.hpp"
#include "latpoly/error.hpp"
#include "latpoly/function_table.hpp"
#include "latpoly/lattice.hpp"

namespace latpoly {

/// Node kinds, declared in canonical sort order.
enum class TermKind { var, meet, join, med, constant };

/// Lattice polynomial expression. Meet/Join are n-ary, flattened and keep
/// their children sorted; Med keeps its three arguments in order.
struct TermNode {
  TermKind kind = TermKind::constant;
  std::size_t var = 0;  // 1-based, kind == var
  Element constant{};   // kind == constant
  std::vector<TermNode> children;

  friend bool operator==(const TermNode&, const TermNode&) = default;
};

inline std::strong_ordering compare(const TermNode& a, const TermNode& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  switch (a.kind) {
    case TermKind::var:
      return a.var <=> b.var;
    case TermKind::constant:
      return a.constant <=> b.constant;
    default:
      break;
  }
  const auto n = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = compare(a.children[i], b.children[i]); c != 0) return c;
  return a.children.size() <=> b.children.size();
}

inline TermNode var(std::size_t k) {
  TermNode t;
  t.kind = TermKind::var;
  t.var = k;
  return t;
}

inline TermNode constant(Element c) {
  TermNode t;
  t.kind = TermKind::constant;
  t.constant = c;
  return t;
}

namespace detail {
inline TermNode associative(TermKind kind, std::vector<TermNode> parts) {
  if (parts.empty()) throw InvalidParams("meet/join needs at least one operand");
  std::vector<TermNode> flat;
  for (auto& p : parts) {
    if (p.kind == kind) {
      for (auto& c : p.children) flat.push_back(std::move(c));
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.size() == 1) return std::move(flat.front());
  std::sort(flat.begin(), flat.end(), [](const TermNode& a, const TermNode& b) { return compare(a, b) < 0; });
  TermNode t;
  t.kind = kind;
  t.children = std::move(flat);
  return t;
}
}  // namespace detail

/// Flattened, sorted meet; a single operand is returned unchanged.
inline TermNode meet(std::vector<TermNode> parts) { return detail::associative(TermKind::meet, std::move(parts)); }
inline TermNode join(std::vector<TermNode> parts) { return detail::associative(TermKind::join, std::move(parts)); }

inline TermNode med(TermNode x, TermNode y, TermNode z) {
  TermNode t;
  t.kind = TermKind::med;
  t.children.reserve(3);
  t.children.push_back(std::move(x));
  t.children.push_back(std::move(y));
  t.children.push_back(std::move(z));
  return t;
}

inline std::size_t max_var(const TermNode& t) {
  std::size_t m = t.kind == TermKind::var ? t.var : 0;
  for (const auto& c : t.children) m = std::max(m, max_var(c));
  return m;
}

/// A term together with its declared arity n; all variables lie in [1, n].
class Term {
 public:
  Term(TermNode root, std::size_t arity) : root_(std::move(root)), arity_(arity) {
    check_vars(root_);
  }

  const TermNode& root() const noexcept { return root_; }
  std::size_t arity() const noexcept { return arity_; }

  /// Same expression, re-declared over a larger (or equal) arity.
  Term with_arity(std::size_t arity) const { return Term(root_, arity); }

  friend bool operator==(const Term&, const Term&) = default;

 private:
  void check_vars(const TermNode& t) const {
    if (t.kind == TermKind::var && (t.var == 0 || t.var > arity_))
      throw VarOutOfRange("variable x" + std::to_string(t.var) + " outside [1, " + std::to_string(arity_) + "]");
    for (const auto& c : t.children) check_vars(c);
  }

  TermNode root_;
  std::size_t arity_;
};

inline Element evaluate(const FiniteLattice& L, const TermNode& t, std::span<const Element> x) {
  switch (t.kind) {
    case TermKind::var:
      return x[t.var - 1];
    case TermKind::constant:
      return t.constant;
    case TermKind::meet: {
      Element acc = L.top();
      for (const auto& c : t.children) acc = L.meet(acc, evaluate(L, c, x));
      return acc;
    }
    case TermKind::join: {
      Element acc = L.bottom();
      for (const auto& c : t.children) acc = L.join(acc, evaluate(L, c, x));
      return acc;
    }
    case TermKind::med:
      return med(L, evaluate(L, t.children[0], x), evaluate(L, t.children[1], x), evaluate(L, t.children[2], x));
  }
  return L.bottom();
}

inline Element evaluate(const FiniteLattice& L, const Term& t, std::span<const Element> x) {
  if (x.size() != t.arity())
    throw ArityMismatch("point of length " + std::to_string(x.size()) + " for term of arity " +
                        std::to_string(t.arity()));
  validate_point(L, x);
  return evaluate(L, t.root(), x);
}

/// Tabulates t over L^n; n must cover every variable of t.
inline FunctionTable materialize(const LatticePtr& L, const Term& t, std::size_t n) {
  if (max_var(t.root()) > n)
    throw VarOutOfRange("term uses x" + std::to_string(max_var(t.root())) + " but arity is " + std::to_string(n));
  const PointSpace space(L->size(), n);
  require_budget("materialize", space.size());
  const auto& root = t.root();
  return FunctionTable::tabulate(L, n, [&](const Point& x) { return evaluate(*L, root, x); });
}

namespace detail {
inline void format_node(const FiniteLattice& L, const TermNode& t, std::string& out) {
  switch (t.kind) {
    case TermKind::var:
      out += "x" + std::to_string(t.var);
      return;
    case TermKind::constant:
      out += "'" + L.name_of(t.constant) + "'";
      return;
    case TermKind::med:
      out += "med(";
      for (std::size_t i = 0; i < 3; ++i) {
        if (i > 0) out += ", ";
        format_node(L, t.children[i], out);
      }
      out += ")";
      return;
    case TermKind::meet:
    case TermKind::join: {
      const bool is_meet = t.kind == TermKind::meet;
      for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i > 0) out += is_meet ? " & " : " | ";
        const auto& c = t.children[i];
        const bool parens = is_meet && c.kind == TermKind::join;
        if (parens) out += "(";
        format_node(L, c, out);
        if (parens) out += ")";
      }
      return;
    }
  }
}
}  // namespace detail

/// Text that re-parses to the same canonical AST, with minimal parentheses
/// ('&' binds tighter than '|').
inline std::string format_term(const FiniteLattice& L, const TermNode& t) {
  std::string out;
  detail::format_node(L, t, out);
  return out;
}

inline std::string format_term(const FiniteLattice& L, const Term& t) { return format_term(L, t.root()); }

}  // namespace latpoly

#endif  // LATPOLY_TERM_HPP
