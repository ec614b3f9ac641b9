#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sigspec/matrix.hpp"
#include "sigspec/signed_graph.hpp"

namespace sigspec {

/// Where a product vertex came from: a_{ik} (copy k of first-factor
/// vertex i) or b_{iq} (vertex q of the second-factor copy attached to i).
struct ProductVertex {
  enum class Kind { a, b };
  Kind kind;
  int i;
  int k;
};

/// Sigma1 (*) Sigma2 on 2 n1 n2 vertices. The a-vertices a_{11}..a_{n1 n2}
/// come first, then b_{11}..b_{n1 n2}, both in row-major (i, k) order.
struct ProductGraph {
  MarkedSignedGraph result;
  int n1 = 0;
  int n2 = 0;

  int a_index(int i, int k) const { return i * n2 + k; }
  int b_index(int i, int q) const { return n1 * n2 + i * n2 + q; }

  ProductVertex origin(int v) const {
    const int half = n1 * n2;
    if (v < 0 || v >= 2 * half) throw std::out_of_range("product vertex out of range");
    if (v < half) return {ProductVertex::Kind::a, v / n2, v % n2};
    return {ProductVertex::Kind::b, (v - half) / n2, (v - half) % n2};
  }
};

inline int expected_product_order(int n1, int n2) { return 2 * n1 * n2; }
inline int expected_product_size(int n1, int e1, int n2, int e2) { return n2 * n2 * (n1 + e1) + n1 * e2; }

/// Builds the product edge by edge:
///  - (a_ik, a_jl) for every edge u_i u_j of Sigma1 and all k, l;
///  - (b_ri, b_rj) for every edge v_i v_j of Sigma2 and every r;
///  - (a_ip, b_iq) for every i and all p, q.
/// Every edge is signed by the product of its endpoint marks, where
/// mark(a_ik) = mu1(u_i) and mark(b_iq) = mu2(v_q).
inline ProductGraph product(const MarkedSignedGraph& mg1, const MarkedSignedGraph& mg2) {
  const int n1 = mg1.order();
  const int n2 = mg2.order();
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("product: both factors need at least one vertex");
  ProductGraph pg;
  pg.n1 = n1;
  pg.n2 = n2;

  std::vector<Sign> marks(static_cast<std::size_t>(2 * n1 * n2));
  for (int i = 0; i < n1; ++i)
    for (int k = 0; k < n2; ++k) {
      marks[static_cast<std::size_t>(pg.a_index(i, k))] = mg1.marking[i];
      marks[static_cast<std::size_t>(pg.b_index(i, k))] = mg2.marking[k];
    }
  auto mark = [&marks](int v) { return marks[static_cast<std::size_t>(v)]; };

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(expected_product_size(n1, mg1.graph.size(), n2, mg2.graph.size())));
  auto add = [&](int u, int v) { edges.push_back({u, v, mark(u) * mark(v)}); };

  for (const auto& e : mg1.graph.edges())
    for (int k = 0; k < n2; ++k)
      for (int l = 0; l < n2; ++l) add(pg.a_index(e.u, k), pg.a_index(e.v, l));
  for (const auto& e : mg2.graph.edges())
    for (int r = 0; r < n1; ++r) add(pg.b_index(r, e.u), pg.b_index(r, e.v));
  for (int i = 0; i < n1; ++i)
    for (int p = 0; p < n2; ++p)
      for (int q = 0; q < n2; ++q) add(pg.a_index(i, p), pg.b_index(i, q));

  pg.result = MarkedSignedGraph(SignedGraph(2 * n1 * n2, std::move(edges)), Marking(std::move(marks)));
  return pg;
}

/// phi(Sigma1) = diag(mu1).
inline ExactMatrix phi_matrix(const MarkedSignedGraph& mg1) {
  const std::vector<Rational> mu = mg1.marking.as_vector();
  return ExactMatrix::diagonal(mu);
}

/// Adjacency of the product assembled from Kronecker blocks:
///   [[ A(S1mu) (x) J,            phi (x) (1 mu2^T) ],
///    [ phi (x) (mu2 1^T),        I (x) A(S2mu)     ]]
inline ExactMatrix block_adjacency(const MarkedSignedGraph& mg1, const MarkedSignedGraph& mg2) {
  const auto n1 = static_cast<std::size_t>(mg1.order());
  const auto n2 = static_cast<std::size_t>(mg2.order());
  const ExactMatrix a1 = adjacency_matrix(mu_signed_graph(mg1));
  const ExactMatrix a2 = adjacency_matrix(mu_signed_graph(mg2));
  const ExactMatrix phi = phi_matrix(mg1);
  const std::vector<Rational> mu2 = mg2.marking.as_vector();
  const std::vector<Rational> ones(n2, Rational(1));
  const ExactMatrix one_mu = ExactMatrix::column(ones) * ExactMatrix::row(mu2);
  const ExactMatrix mu_one = ExactMatrix::column(mu2) * ExactMatrix::row(ones);
  return block2x2(kron(a1, ExactMatrix::ones(n2, n2)), kron(phi, one_mu), kron(phi, mu_one),
                  kron(ExactMatrix::identity(n1), a2));
}

/// Underlying degree of every product vertex.
inline std::vector<int> degrees(const ProductGraph& pg) {
  std::vector<int> d;
  d.reserve(static_cast<std::size_t>(pg.result.order()));
  for (int v = 0; v < pg.result.order(); ++v) d.push_back(pg.result.graph.degree(v));
  return d;
}

/// Corona Sigma1 o Sigma2: vertex i of Sigma1 is joined to every vertex of
/// its own copy of Sigma2. Vertices of Sigma1 come first, then copy 0,
/// copy 1, ... Signs are endpoint-mark products, with copy vertices marked
/// by mu2. Built independently of product().
inline MarkedSignedGraph corona(const MarkedSignedGraph& mg1, const MarkedSignedGraph& mg2) {
  const int n1 = mg1.order();
  const int n2 = mg2.order();
  std::vector<Sign> marks = mg1.marking.values();
  for (int c = 0; c < n1; ++c)
    for (int q = 0; q < n2; ++q) marks.push_back(mg2.marking[q]);
  auto copy_vertex = [n1, n2](int c, int q) { return n1 + c * n2 + q; };

  std::vector<Edge> edges;
  auto add = [&](int u, int v) {
    edges.push_back({u, v, marks[static_cast<std::size_t>(u)] * marks[static_cast<std::size_t>(v)]});
  };
  for (const auto& e : mg1.graph.edges()) add(e.u, e.v);
  for (int c = 0; c < n1; ++c) {
    for (const auto& e : mg2.graph.edges()) add(copy_vertex(c, e.u), copy_vertex(c, e.v));
    for (int q = 0; q < n2; ++q) add(c, copy_vertex(c, q));
  }
  const int total = n1 * (1 + n2);
  return {SignedGraph(total, std::move(edges)), Marking(std::move(marks))};
}

}  // namespace sigspec
