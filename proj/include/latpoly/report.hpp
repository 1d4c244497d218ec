#ifndef LATPOLY_REPORT_HPP
#define LATPOLY_REPORT_HPP

#include <string>

#include "latpoly/characterization.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/normal_form.hpp"

namespace latpoly {

/// " x=(..) k=.. c=.. eq=.." with only the fields the witness carries.
inline std::string format_witness(const FiniteLattice& L, const Witness& w, bool with_equation) {
  std::string out = " x=" + format_point(L, w.x);
  if (w.y) out += " y=" + format_point(L, *w.y);
  if (w.k) out += " k=" + std::to_string(*w.k);
  if (w.c) out += " c=" + L.name_of(*w.c);
  if (w.frozen) out += " K=" + format_subset(*w.frozen);
  if (w.pair) out += " pair=(" + L.name_of(w.pair->first) + "," + L.name_of(w.pair->second) + ")";
  if (with_equation && !w.equation.empty()) out += " eq=" + w.equation;
  return out;
}

/// `<id>: PASS | FAIL at ... | SKIP(hypothesis)`. Condition ii is a single
/// equation, so its witness omits the tag.
inline std::string format_condition(const FiniteLattice& L, const ConditionEntry& e) {
  std::string out = std::string(condition_name(e.id)) + ": ";
  switch (e.verdict) {
    case Verdict::pass:
      return out + "PASS";
    case Verdict::skipped:
      return out + "SKIP(hypothesis)";
    case Verdict::fail:
      out += "FAIL at";
      if (e.witness) out += format_witness(L, *e.witness, e.id != ConditionId::ii);
      return out;
  }
  return out;
}

inline std::string format_report(const FiniteLattice& L, const ConditionReport& r) {
  std::string out = "order-preserving: ";
  if (r.order_preserving)
    out += "PASS\n";
  else
    out += "FAIL at" + format_witness(L, *r.order_preserving.witness, false) + "\n";
  for (const auto& e : r.conditions) out += format_condition(L, e) + "\n";
  out += "polynomial: ";
  if (r.polynomial.polynomial)
    out += "PASS";
  else if (r.polynomial.witness)
    out += "FAIL at x=" + format_point(L, *r.polynomial.witness);
  else
    out += "FAIL";
  out += r.polynomial.by_closure ? " (closure)\n" : "\n";
  out += std::string("consistent: ") + (r.consistent ? "yes" : "no") + "\n";
  return out;
}

}  // namespace latpoly

#endif  // LATPOLY_REPORT_HPP
