#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace sigspec {
namespace {

using testing::brute_force_balanced;
using testing::graph_of;

std::vector<int> marks(const Marking& m) {
  std::vector<int> out;
  for (Sign s : m.values()) out.push_back(value(s));
  return out;
}

TEST(SignedGraph, RejectsInvalidEdges) {
  EXPECT_THROW(graph_of(2, {{0, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(graph_of(2, {{0, 2, 1}}), std::invalid_argument);
  EXPECT_THROW(graph_of(3, {{0, 1, 1}, {1, 0, -1}}), std::invalid_argument);
  EXPECT_THROW(MarkedSignedGraph(complete(3), Marking::all_plus(2)), std::invalid_argument);
}

TEST(CanonicalMarking, SpecExamples) {
  EXPECT_EQ(marks(canonical_marking(cycle(3))), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(marks(canonical_marking(graph_of(3, {{0, 1, 1}, {0, 2, -1}}))), (std::vector<int>{-1, 1, -1}));
  EXPECT_EQ(marks(canonical_marking(cycle(3, Signature::all_negative()))), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(marks(canonical_marking(SignedGraph(2, {}))), (std::vector<int>{1, 1}));
}

TEST(MuSignedGraph, SpecExamples) {
  const auto neg_c3 = with_canonical_marking(cycle(3, Signature::all_negative()));
  EXPECT_EQ(mu_signed_graph(neg_c3), cycle(3));

  const SignedGraph mixed = graph_of(4, {{0, 1, -1}, {1, 2, 1}, {2, 3, -1}});
  EXPECT_EQ(mu_signed_graph(MarkedSignedGraph(mixed, Marking::all_plus(4))), mixed.underlying());

  const SignedGraph s = graph_of(3, {{0, 1, 1}, {0, 2, -1}});
  const SignedGraph mu = mu_signed_graph(with_canonical_marking(s));
  EXPECT_EQ(mu, graph_of(3, {{0, 1, -1}, {0, 2, 1}}));
}

TEST(Balance, SpecExamples) {
  EXPECT_TRUE(is_balanced(cycle(3)));
  EXPECT_FALSE(is_balanced(cycle(3, Signature::all_negative())));
  EXPECT_TRUE(is_balanced(cycle(4, Signature::all_negative())));
}

TEST(Balance, AgreesWithBruteForceAndWitnessIsValid) {
  sigspec::Rng gen(101);
  for (int t = 0; t < 200; ++t) {
    const MarkedSignedGraph mg = random_marked_graph(gen, 7);
    const auto witness = balancing_marking(mg.graph);
    EXPECT_EQ(witness.has_value(), brute_force_balanced(mg.graph));
    if (witness) {
      for (const auto& e : mg.graph.edges()) EXPECT_EQ((*witness)[e.u] * (*witness)[e.v], e.sign);
    }
  }
}

// For a balanced graph, switching by the witness gives the all-positive
// underlying graph, so the adjacency charpolys coincide.
TEST(Balance, BalancedGraphsAreCospectralWithUnderlying) {
  sigspec::Rng gen(7);
  int balanced = 0;
  for (int t = 0; t < 200; ++t) {
    const MarkedSignedGraph mg = random_marked_graph(gen, 6);
    if (!is_balanced(mg.graph)) continue;
    ++balanced;
    EXPECT_EQ(charpoly(adjacency_matrix(mg.graph)), charpoly(adjacency_matrix(mg.graph.underlying())));
  }
  EXPECT_GT(balanced, 10);
}

TEST(RegularDegree, SpecExamples) {
  EXPECT_EQ(regular_degree(cycle(4)), 2);
  EXPECT_FALSE(regular_degree(star(3)).has_value());
  EXPECT_EQ(regular_degree(complete(4)), 3);
}

TEST(Generators, ShapesAndSigns) {
  const SignedGraph s = star(3);
  EXPECT_EQ(s.order(), 3);
  EXPECT_EQ(s.size(), 2);
  const SignedGraph neg = cycle(3, Signature::all_negative());
  for (const auto& e : neg.edges()) EXPECT_EQ(e.sign, Sign::minus);
  EXPECT_EQ(path(4).size(), 3);
  EXPECT_EQ(complete(5).size(), 10);
  EXPECT_EQ(complete_bipartite(3, 3).size(), 9);
  EXPECT_EQ(prism(3).size(), 9);
  EXPECT_EQ(regular_degree(prism(3)), 3);
  EXPECT_THROW(cycle(2), std::invalid_argument);
  EXPECT_THROW(star(0), std::invalid_argument);

  const SignedGraph lk = line_graph(complete_bipartite(3, 3));
  EXPECT_EQ(lk.order(), 9);
  EXPECT_EQ(regular_degree(lk), 4);
  const SignedGraph l2 = line_graph(line_graph(prism(3)));
  EXPECT_EQ(l2.order(), 18);
  EXPECT_EQ(regular_degree(l2), 6);
}

TEST(Generators, ExplicitSignsFollowGeneratorOrder) {
  const SignedGraph c = cycle(3, Signature::explicit_signs({Sign::plus, Sign::minus, Sign::minus}));
  // generator order (0,1), (1,2), (0,2)
  EXPECT_EQ(c, graph_of(3, {{0, 1, 1}, {1, 2, -1}, {0, 2, -1}}));
  EXPECT_THROW(cycle(3, Signature::explicit_signs({Sign::plus})), std::invalid_argument);
}

TEST(Matrices, SpecExamples) {
  const auto k2neg = matrices(graph_of(2, {{0, 1, -1}}));
  ExactMatrix a(2, 2);
  a(0, 1) = a(1, 0) = Rational(-1);
  EXPECT_EQ(k2neg.adjacency, a);
  EXPECT_EQ(k2neg.degree, ExactMatrix::identity(2));

  const auto c3neg = matrices(cycle(3, Signature::all_negative()));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(c3neg.laplacian(i, j), Rational(i == j ? 2 : 1));

  const auto empty = matrices(SignedGraph(3, {}));
  EXPECT_EQ(empty.adjacency, ExactMatrix(3, 3));
  EXPECT_EQ(empty.laplacian, ExactMatrix(3, 3));
  EXPECT_EQ(empty.signless_laplacian, ExactMatrix(3, 3));
}

TEST(Matrices, SymmetryAndLaplacianRowSums) {
  sigspec::Rng gen(55);
  for (int t = 0; t < 50; ++t) {
    const MarkedSignedGraph mg = random_marked_graph(gen, 7);
    const GraphMatrices m = matrices(mg);
    for (MatrixKind k : {MatrixKind::adjacency, MatrixKind::laplacian, MatrixKind::signless_laplacian})
      EXPECT_TRUE(m[k].is_symmetric());
    const GraphMatrices u = matrices(mg.graph.underlying());
    for (std::size_t i = 0; i < u.laplacian.rows(); ++i) {
      Rational row(0);
      for (std::size_t j = 0; j < u.laplacian.cols(); ++j) row += u.laplacian(i, j);
      EXPECT_EQ(row, 0);
    }
    EXPECT_EQ(canonical_marking(mg.graph.underlying()).values(), Marking::all_plus(mg.order()).values());
  }
}

}  // namespace
}  // namespace sigspec
