#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "latpoly/normal_form.hpp"
#include "latpoly/term_parser.hpp"
#include "test_support.hpp"

namespace latpoly {
namespace {

using testing::point;
using testing::random_term;
using testing::unary;

// Straight from the definition: join over I of alpha(I) ^ meet of x_i, i in I.
Element naive_dnf(const DnfMap& alpha, const Point& x) {
  const auto& L = alpha.lattice();
  Element acc = L.bottom();
  for (SubsetMask I = 0; I < (SubsetMask{1} << alpha.arity()); ++I) {
    Element term = alpha[I];
    for (std::size_t i = 0; i < alpha.arity(); ++i)
      if (I >> i & 1u) term = L.meet(term, x[i]);
    acc = L.join(acc, term);
  }
  return acc;
}

bool naive_represents(const DnfMap& alpha, const FunctionTable& f) {
  bool ok = true;
  std::size_t i = 0;
  f.space().for_each([&](const Point& x) { ok = ok && naive_dnf(alpha, x) == f.at(i++); });
  return ok;
}

// Every coefficient map in L^(2^n) that represents f.
std::vector<DnfMap> brute_dnfs(const FunctionTable& f) {
  const auto& L = f.lattice_ptr();
  const PointSpace maps(L->size(), std::size_t{1} << f.arity());
  std::vector<DnfMap> out;
  maps.for_each([&](const Point& coeffs) {
    DnfMap alpha(L, f.arity(), coeffs);
    if (naive_represents(alpha, f)) out.push_back(alpha);
  });
  return out;
}

FunctionTable table_of(const LatticePtr& L, const std::string& text, std::size_t n) {
  return materialize(L, parse_term(text, *L, n), n);
}

std::vector<Element> elems(const FiniteLattice& L, const std::vector<std::string>& names) {
  return point(L, names);
}

TEST(Subsets, CardinalityOrder) {
  EXPECT_EQ(subsets_by_cardinality(3), (std::vector<SubsetMask>{0, 1, 2, 4, 3, 5, 6, 7}));
  EXPECT_EQ(format_subset(0), "{}");
  EXPECT_EQ(format_subset(5), "{1,3}");
}

TEST(Subsets, MaskWidthIsCapped) {
  EXPECT_THROW(require_mask_width(kDefaultMaskWidth + 1), InvalidParams);
  EXPECT_NO_THROW(require_mask_width(3));
}

TEST(ExtractAlpha, Examples) {
  auto c2 = chain(2);
  EXPECT_EQ(extract_alpha(table_of(c2, "x1 & x2", 2)), DnfMap(c2, 2, elems(*c2, {"0", "0", "0", "1"})));
  auto c3 = chain(3);
  EXPECT_EQ(extract_alpha(table_of(c3, "med(x1,'m',x2)", 2)), DnfMap(c3, 2, elems(*c3, {"0", "m", "m", "1"})));
  const auto m = c3->element("m");
  const auto alpha = extract_alpha(FunctionTable::constant(c3, 3, m));
  for (auto c : alpha.coeffs()) EXPECT_EQ(c, m);
}

TEST(DnfEvaluate, Examples) {
  auto c3 = chain(3);
  const DnfMap alpha(c3, 2, elems(*c3, {"0", "m", "m", "1"}));
  EXPECT_EQ(dnf_evaluate(alpha, point(*c3, {"m", "0"})), c3->element("m"));
  const DnfMap zero(c3, 2, elems(*c3, {"0", "0", "0", "0"}));
  const DnfMap top(c3, 2, elems(*c3, {"1", "0", "0", "0"}));
  PointSpace(3, 2).for_each([&](const Point& x) {
    EXPECT_EQ(dnf_evaluate(zero, x), c3->bottom());
    EXPECT_EQ(dnf_evaluate(top, x), c3->top());
  });
  EXPECT_THROW(dnf_evaluate(alpha, point(*c3, {"m"})), ArityMismatch);
  EXPECT_THROW(dnf_evaluate(alpha, Point{Element{0}, Element{9}}), BadIndex);
}

TEST(DnfEvaluate, AgreesWithNaiveExpansion) {
  std::mt19937_64 rng(21);
  for (const auto& L : {chain(4), boolean(2), pentagon()}) {
    std::uniform_int_distribution<std::size_t> pick(0, L->size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      Point coeffs(8);
      for (auto& c : coeffs) c = Element{pick(rng)};
      const DnfMap alpha(L, 3, coeffs);
      const auto table = dnf_materialize(alpha);
      std::size_t i = 0;
      table.space().for_each([&](const Point& x) { EXPECT_EQ(table.at(i++), naive_dnf(alpha, x)); });
    }
  }
}

TEST(DnfMapType, Validation) {
  auto c2 = chain(2);
  EXPECT_THROW(DnfMap(c2, 2, elems(*c2, {"0", "1"})), ArityMismatch);
  EXPECT_THROW(DnfMap(c2, 1, {Element{0}, Element{4}}), BadIndex);
}

TEST(Membership, Examples) {
  auto c2 = chain(2);
  const auto id = unary(c2, {"0", "1"});
  EXPECT_TRUE(dnf_membership(extract_alpha(id), id));
  const DnfMap bad(c2, 1, elems(*c2, {"1", "0"}));
  EXPECT_FALSE(dnf_membership(bad, id));
  EXPECT_FALSE(dnf_membership_by_joins(bad, id));
  EXPECT_FALSE(dnf_membership_by_evaluation(bad, id));
}

TEST(Membership, NonPolynomialHasNoNormalForm) {
  auto c3 = chain(3);
  const auto step = unary(c3, {"0", "0", "1"});
  PointSpace(3, 2).for_each([&](const Point& coeffs) {
    const DnfMap alpha(c3, 1, coeffs);
    EXPECT_FALSE(dnf_membership(alpha, step));
    EXPECT_FALSE(dnf_membership_by_evaluation(alpha, step));
  });
}

TEST(Membership, BothPathsAgreeOnRandomCoefficients) {
  std::mt19937_64 rng(22);
  for (const auto& L : {chain(3), boolean(2)}) {
    std::uniform_int_distribution<std::size_t> pick(0, L->size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const auto f = materialize(L, random_term(rng, *L, 2, 3), 2);
      Point coeffs(4);
      for (auto& c : coeffs) c = Element{pick(rng)};
      const DnfMap alpha(L, 2, coeffs);
      const bool expected = naive_represents(alpha, f);
      EXPECT_EQ(dnf_membership_by_joins(alpha, f), expected);
      EXPECT_EQ(dnf_membership_by_evaluation(alpha, f), expected);
    }
  }
}

TEST(Reconstruct, Examples) {
  auto c3 = chain(3);
  EXPECT_TRUE(reconstruct(table_of(c3, "med(x1,'m',x2) | x1 & 'm'", 2)).is_polynomial);
  const auto r = reconstruct(unary(c3, {"0", "0", "1"}));
  EXPECT_FALSE(r.is_polynomial);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, point(*c3, {"m"}));
  EXPECT_TRUE(reconstruct(FunctionTable::constant(c3, 2, c3->element("m"))).is_polynomial);
  EXPECT_THROW(reconstruct(unary(pentagon(), {"0", "a", "b", "c", "1"})), NotDistributive);
}

TEST(Reconstruct, NormalFormRoundTrip) {
  std::mt19937_64 rng(23);
  for (const auto& L : {chain(4), boolean(2), downsets({{"p", "q", "r"}, {{"p", "q"}}})}) {
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + trial % 3;
      const auto f = materialize(L, random_term(rng, *L, n), n);
      const auto alpha = extract_alpha(f);
      EXPECT_EQ(dnf_materialize(alpha), f);
      EXPECT_TRUE(reconstruct(f).is_polynomial);
    }
  }
}

TEST(Reconstruct, AgreesWithBruteForceNormalForms) {
  // On chain(3), n = 1, a table is polynomial iff some coefficient pair represents it.
  auto c3 = chain(3);
  for (const auto& f : testing::all_tables(c3, 1))
    EXPECT_EQ(reconstruct(f).is_polynomial, !brute_dnfs(f).empty()) << format_point(*c3, f.values());
}

TEST(Enumerate, Examples) {
  auto c2 = chain(2);
  const auto id = enumerate_dnf(unary(c2, {"0", "1"}), EnumerationMode::list, 100);
  EXPECT_EQ(id.count, 1u);
  ASSERT_EQ(id.members.size(), 1u);
  EXPECT_EQ(id.members[0], DnfMap(c2, 1, elems(*c2, {"0", "1"})));

  auto b2 = boolean(2);
  const auto r = enumerate_dnf(table_of(b2, "x1 | 'a'", 1), EnumerationMode::list, 100);
  EXPECT_EQ(r.count, 2u);
  ASSERT_EQ(r.members.size(), 2u);
  EXPECT_EQ(r.members[0], DnfMap(b2, 1, elems(*b2, {"a", "b"})));
  EXPECT_EQ(r.members[1], DnfMap(b2, 1, elems(*b2, {"a", "1"})));

  EXPECT_THROW(enumerate_dnf(unary(chain(3), {"0", "0", "1"}), EnumerationMode::count, 10), NotPolynomial);
}

TEST(Enumerate, LimitBehaviour) {
  auto b2 = boolean(2);
  const auto f = table_of(b2, "x1 | 'a'", 1);
  try {
    enumerate_dnf(f, EnumerationMode::count, 1);
    FAIL() << "expected LimitExceeded";
  } catch (const LimitExceeded& e) {
    EXPECT_EQ(e.lower_bound(), 2u);
  }
  const auto listed = enumerate_dnf(f, EnumerationMode::list, 1);
  EXPECT_TRUE(listed.truncated);
  EXPECT_EQ(listed.members.size(), 1u);
}

TEST(Enumerate, MatchesBruteForceOverAllCoefficientMaps) {
  std::mt19937_64 rng(24);
  for (const auto& L : {chain(3), boolean(2)}) {
    for (int trial = 0; trial < 15; ++trial) {
      const auto f = materialize(L, random_term(rng, *L, 2, 3), 2);
      auto expected = brute_dnfs(f);
      const auto got = enumerate_dnf(f, EnumerationMode::list, 1'000'000);
      ASSERT_EQ(got.count, expected.size());
      for (const auto& alpha : got.members)
        EXPECT_NE(std::find(expected.begin(), expected.end(), alpha), expected.end());
    }
  }
}

TEST(Enumerate, MembersAreDominatedByAlphaF) {
  std::mt19937_64 rng(25);
  auto b2 = boolean(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = materialize(b2, random_term(rng, *b2, 2), 2);
    const auto alpha_f = extract_alpha(f);
    const auto r = enumerate_dnf(f, EnumerationMode::list, 1'000'000);
    bool has_alpha_f = false;
    for (const auto& alpha : r.members) {
      has_alpha_f = has_alpha_f || alpha == alpha_f;
      for (SubsetMask I = 0; I < 4; ++I) EXPECT_TRUE(b2->leq(alpha[I], alpha_f[I]));
    }
    EXPECT_TRUE(has_alpha_f);
  }
}

TEST(Enumerate, AlphaFIsMonotone) {
  std::mt19937_64 rng(26);
  auto c4 = chain(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto alpha = extract_alpha(materialize(c4, random_term(rng, *c4, 3), 3));
    for (SubsetMask I = 0; I < 8; ++I)
      for (SubsetMask J = 0; J < 8; ++J)
        if ((I & J) == I) {
          EXPECT_TRUE(c4->leq(alpha[I], alpha[J]));
        }
  }
}

TEST(CumulativeJoins, MatchAlphaFForPolynomials) {
  auto c3 = chain(3);
  const auto f = table_of(c3, "med(x1,'m',x2)", 2);
  const DnfMap small(c3, 2, elems(*c3, {"0", "m", "0", "1"}));
  EXPECT_EQ(cumulative_joins(small), elems(*c3, {"0", "m", "0", "1"}));
  const DnfMap lean(c3, 2, elems(*c3, {"0", "m", "m", "0"}));
  EXPECT_EQ(cumulative_joins(lean), elems(*c3, {"0", "m", "m", "m"}));
  EXPECT_FALSE(dnf_membership(lean, f));
}

TEST(DnfToTerm, DenotesTheSameFunction) {
  std::mt19937_64 rng(27);
  for (const auto& L : {chain(3), boolean(2)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto f = materialize(L, random_term(rng, *L, 2), 2);
      const Term t(dnf_to_term(extract_alpha(f)), 2);
      EXPECT_EQ(materialize(L, t, 2), f) << format_term(*L, t);
    }
  }
  auto c3 = chain(3);
  EXPECT_EQ(format_term(*c3, dnf_to_term(extract_alpha(table_of(c3, "med(x1,'m',x2)", 2)))),
            "x1 & x2 | x1 & 'm' | x2 & 'm'");
  EXPECT_EQ(format_term(*c3, dnf_to_term(DnfMap(c3, 1, elems(*c3, {"0", "0"})))), "'0'");
}

TEST(FormatDnf, Lines) {
  auto c3 = chain(3);
  EXPECT_EQ(format_dnf(DnfMap(c3, 2, elems(*c3, {"0", "m", "m", "1"}))), "{} -> 0\n{1} -> m\n{2} -> m\n{1,2} -> 1\n");
}

TEST(Equivalence, Examples) {
  auto c2 = chain(2);
  auto r = equivalent(c2, parse_term("x1 & (x2 | x3)", *c2, 3), parse_term("x1 & x2 | x1 & x3", *c2, 3), 3);
  EXPECT_TRUE(r.equivalent);
  EXPECT_FALSE(r.full_domain);
  auto c3 = chain(3);
  EXPECT_TRUE(equivalent(c3, parse_term("med(x1,x2,x3)", *c3, 3),
                         parse_term("(x1|x2)&(x1|x3)&(x2|x3)", *c3, 3), 3)
                  .equivalent);
  auto diff = equivalent(c2, parse_term("x1", *c2, 2), parse_term("x2", *c2, 2), 2);
  EXPECT_FALSE(diff.equivalent);
  EXPECT_EQ(*diff.witness, point(*c2, {"1", "0"}));
}

TEST(Equivalence, NonDistributiveUsesFullDomain) {
  auto n5 = pentagon();
  auto lhs = parse_term("x1 & (x2 | x3)", *n5, 3);
  auto rhs = parse_term("x1 & x2 | x1 & x3", *n5, 3);
  const auto r = equivalent(n5, lhs, rhs, 3);
  EXPECT_TRUE(r.full_domain);
  EXPECT_FALSE(r.equivalent);
  // The two sides agree on {0,1}^3 yet differ in L^3.
  for (SubsetMask mask = 0; mask < 8; ++mask) {
    const auto x = characteristic_vector(*n5, 3, mask);
    EXPECT_EQ(evaluate(*n5, lhs, x), evaluate(*n5, rhs, x));
  }
}

TEST(Equivalence, CharacteristicVectorsDecideOnChains) {
  std::mt19937_64 rng(28);
  auto c3 = chain(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_term(rng, *c3, 3, 3);
    const auto t = random_term(rng, *c3, 3, 3);
    const bool full = materialize(c3, s, 3) == materialize(c3, t, 3);
    EXPECT_EQ(equivalent(c3, s, t, 3).equivalent, full);
  }
}

}  // namespace
}  // namespace latpoly
