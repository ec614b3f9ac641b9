#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace sigspec {
namespace {

using testing::graph_of;
using testing::random_point;
using testing::resolvent_form;

TEST(SignedCoronal, SpecExamples) {
  const CoronalTriple k2 = signed_coronal(adjacency_matrix(complete(2)), Marking::all_plus(2));
  EXPECT_EQ(k2.P, (Polynomial{2}));
  EXPECT_EQ(k2.F, (Polynomial{-1, 1}));
  EXPECT_EQ(k2.R, (Polynomial{1, 1}));

  const CoronalTriple k1 = signed_coronal(adjacency_matrix(complete(1)), Marking::all_plus(1));
  EXPECT_EQ(k1.P, (Polynomial{1}));
  EXPECT_EQ(k1.F, (Polynomial{0, 1}));
  EXPECT_EQ(k1.R, (Polynomial{1}));
}

TEST(SignedCoronal, SignedStarWithCanonicalMarking) {
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      const SignedGraph s = graph_of(3, {{0, 1, s1}, {0, 2, s2}});
      const MarkedSignedGraph mg = with_canonical_marking(s);
      const CoronalTriple c = adjacency_coronal(mg);
      const long center = value(mg.marking[0]);
      EXPECT_EQ(c.P, (Polynomial{4 * center, 3}));
      EXPECT_EQ(c.F, (Polynomial{-2, 0, 1}));
      EXPECT_EQ(c.R, (Polynomial{0, 1}));
    }
}

TEST(StarClosedForm, SpecExamples) {
  const RationalFunction a = star_coronal_closed_form(2, Sign::minus);
  EXPECT_EQ(a.numerator(), (Polynomial{-4, 3}));
  EXPECT_EQ(a.denominator(), (Polynomial{-2, 0, 1}));

  const RationalFunction b = star_coronal_closed_form(1, Sign::plus);
  EXPECT_EQ(b.numerator(), (Polynomial{2}));
  EXPECT_EQ(b.denominator(), (Polynomial{-1, 1}));
  const CoronalTriple k2 = adjacency_coronal(with_canonical_marking(complete(2)));
  EXPECT_EQ(k2.as_function(), b);

  const RationalFunction c = star_coronal_closed_form(3, Sign::plus);
  EXPECT_EQ(c.numerator(), (Polynomial{6, 4}));
  EXPECT_EQ(c.denominator(), (Polynomial{-3, 0, 1}));

  EXPECT_THROW(star_coronal_closed_form(0, Sign::plus), std::invalid_argument);
}

TEST(RegularBalancedCoronal, SpecExamples) {
  const RationalFunction c3 = regular_balanced_coronal(2, 3);
  EXPECT_EQ(c3.numerator(), (Polynomial{3}));
  EXPECT_EQ(c3.denominator(), (Polynomial{-2, 1}));
  EXPECT_EQ(adjacency_coronal(with_canonical_marking(cycle(3))).as_function(), c3);

  const RationalFunction k4 = regular_balanced_coronal(3, 4);
  EXPECT_EQ(k4.numerator(), (Polynomial{4}));
  EXPECT_EQ(k4.denominator(), (Polynomial{-3, 1}));

  const RationalFunction k1 = regular_balanced_coronal(0, 1);
  EXPECT_EQ(k1.numerator(), (Polynomial{1}));
  EXPECT_EQ(k1.denominator(), (Polynomial{0, 1}));

  EXPECT_THROW(regular_balanced_coronal(3, 3), std::invalid_argument);
}

// With the raw signed adjacency, equal regularity does not give equal
// coronals; through the mu-signed graph it does.
TEST(RegularBalancedCoronal, RawSignedAdjacencyDiffers) {
  const auto pos = with_canonical_marking(complete(4));
  const auto neg = with_canonical_marking(complete(4, Signature::all_negative()));
  const CoronalTriple cp = adjacency_coronal(pos);
  const CoronalTriple cn = adjacency_coronal(neg);
  EXPECT_EQ(cp.as_function(), regular_balanced_coronal(3, 4));
  EXPECT_EQ(cn.P, (Polynomial{4}));
  EXPECT_EQ(cn.F, (Polynomial{3, 1}));
  EXPECT_FALSE(cp.same_coronal(cn));
  EXPECT_TRUE(adjacency_coronal(mu_signed(pos)).same_coronal(adjacency_coronal(mu_signed(neg))));
}

TEST(RegularBalancedCoronal, MuSignedRegularGraphsMatchClosedForm) {
  sigspec::Rng gen(77);
  std::mt19937_64 rng(77);
  for (int t = 0; t < 60; ++t) {
    const RandomInstance inst = random_regular_graph(gen, 6, true);
    const SignedGraph g = testing::resign(inst.graph.graph, rng);
    const MarkedSignedGraph mg(g, testing::random_marking(rng, g.order()));
    const int r = *regular_degree(g);
    EXPECT_EQ(adjacency_coronal(mu_signed(mg)).as_function(), regular_balanced_coronal(r, g.order())) << inst.description;
  }
}

TEST(SignedCoronal, TripleInvariantsAndPointCheck) {
  sigspec::Rng gen(91);
  std::mt19937_64 rng(91);
  for (int t = 0; t < 60; ++t) {
    const MarkedSignedGraph mg = random_marked_graph(gen, 7);
    const GraphMatrices m = matrices(mg);
    for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::laplacian, MatrixKind::signless_laplacian}) {
      const ExactMatrix& n = m[kind];
      const CoronalTriple c = signed_coronal(n, mg.marking);
      const Polynomial f = charpoly(n);
      EXPECT_EQ(c.F * c.R, f);
      EXPECT_TRUE(c.F.is_monic());
      EXPECT_TRUE(c.R.is_monic());
      EXPECT_EQ(poly_gcd(c.P, c.F), (Polynomial{1}));
      EXPECT_LT(c.P.degree(), c.F.degree());

      const Rational x0 = random_point(rng);
      if (f(x0) == 0) continue;
      const auto direct = resolvent_form(n, mg.marking.as_vector(), x0);
      ASSERT_TRUE(direct.has_value());
      EXPECT_EQ(c.P(x0) / c.F(x0), *direct);
    }
  }
}

TEST(SignedCoronal, RejectsShapeMismatch) {
  EXPECT_THROW(signed_coronal(ExactMatrix(2, 3), Marking::all_plus(2)), std::invalid_argument);
  EXPECT_THROW(signed_coronal(ExactMatrix(2, 2), Marking::all_plus(3)), std::invalid_argument);
}

}  // namespace
}  // namespace sigspec
