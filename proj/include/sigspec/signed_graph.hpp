#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sigspec/matrix.hpp"

namespace sigspec {

enum class Sign : int { minus = -1, plus = 1 };

constexpr int value(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) noexcept { return a == b ? Sign::plus : Sign::minus; }
constexpr Sign operator-(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr char to_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }

inline Sign sign_from_int(int v) {
  if (v == 1) return Sign::plus;
  if (v == -1) return Sign::minus;
  throw std::invalid_argument("sign must be +1 or -1, got " + std::to_string(v));
}

struct Edge {
  int u;  // u < v
  int v;
  Sign sign;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with a +/-1 signature.
/// Edges are kept sorted by (u, v).
class SignedGraph {
 public:
  SignedGraph() = default;

  SignedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& e : edges_) {
      if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 0 || e.v >= n) {
        throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                    ") out of range for n = " + std::to_string(n));
      }
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t k = 1; k < edges_.size(); ++k) {
      if (edges_[k].u == edges_[k - 1].u && edges_[k].v == edges_[k - 1].v) {
        throw std::invalid_argument("duplicate edge (" + std::to_string(edges_[k].u) + ", " +
                                    std::to_string(edges_[k].v) + ")");
      }
    }
    adjacency_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& e : edges_) {
      adjacency_[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.sign);
      adjacency_[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.sign);
    }
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// (neighbour, sign) pairs.
  const std::vector<std::pair<int, Sign>>& neighbours(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbours(v).size()); }

  /// Same edges, all signs +1.
  SignedGraph underlying() const {
    std::vector<Edge> e = edges_;
    for (auto& x : e) x.sign = Sign::plus;
    return SignedGraph(n_, std::move(e));
  }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, Sign>>> adjacency_;
};

/// Vertex signs mu: V -> {+1, -1}.
class Marking {
 public:
  Marking() = default;
  explicit Marking(std::vector<Sign> marks) : marks_(std::move(marks)) {}

  static Marking all_plus(int n) { return Marking(std::vector<Sign>(static_cast<std::size_t>(n), Sign::plus)); }

  int size() const noexcept { return static_cast<int>(marks_.size()); }
  Sign operator[](int i) const { return marks_.at(static_cast<std::size_t>(i)); }
  const std::vector<Sign>& values() const noexcept { return marks_; }

  std::vector<Rational> as_vector() const {
    std::vector<Rational> v;
    v.reserve(marks_.size());
    for (Sign s : marks_) v.emplace_back(value(s));
    return v;
  }

  friend bool operator==(const Marking&, const Marking&) = default;

 private:
  std::vector<Sign> marks_;
};

struct MarkedSignedGraph {
  SignedGraph graph;
  Marking marking;

  MarkedSignedGraph() = default;
  MarkedSignedGraph(SignedGraph g, Marking m) : graph(std::move(g)), marking(std::move(m)) {
    if (marking.size() != graph.order()) {
      throw std::invalid_argument("marking length " + std::to_string(marking.size()) + " does not match order " +
                                  std::to_string(graph.order()));
    }
  }

  int order() const noexcept { return graph.order(); }

  friend bool operator==(const MarkedSignedGraph&, const MarkedSignedGraph&) = default;
};

/// mu(v) = product of the signs of the edges at v; isolated vertices get +1.
inline Marking canonical_marking(const SignedGraph& g) {
  std::vector<Sign> mu(static_cast<std::size_t>(g.order()), Sign::plus);
  for (const auto& e : g.edges()) {
    mu[static_cast<std::size_t>(e.u)] = mu[static_cast<std::size_t>(e.u)] * e.sign;
    mu[static_cast<std::size_t>(e.v)] = mu[static_cast<std::size_t>(e.v)] * e.sign;
  }
  return Marking(std::move(mu));
}

inline MarkedSignedGraph with_canonical_marking(SignedGraph g) {
  Marking mu = canonical_marking(g);
  return {std::move(g), std::move(mu)};
}

/// Signature replaced by sigma(uv) = mu(u) mu(v).
inline SignedGraph mu_signed_graph(const MarkedSignedGraph& mg) {
  std::vector<Edge> e = mg.graph.edges();
  for (auto& x : e) x.sign = mg.marking[x.u] * mg.marking[x.v];
  return SignedGraph(mg.graph.order(), std::move(e));
}

/// mu-signed graph that keeps the marking.
inline MarkedSignedGraph mu_signed(const MarkedSignedGraph& mg) { return {mu_signed_graph(mg), mg.marking}; }

/// A marking with sigma(uv) = mu(u) mu(v) on every edge, if one exists.
/// Propagates marks by BFS in each component and checks consistency.
inline std::optional<Marking> balancing_marking(const SignedGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> mark(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (mark[start] != 0) continue;
    mark[start] = 1;
    std::queue<int> todo;
    todo.push(static_cast<int>(start));
    while (!todo.empty()) {
      const int v = todo.front();
      todo.pop();
      for (const auto& [w, s] : g.neighbours(v)) {
        const int expected = mark[static_cast<std::size_t>(v)] * value(s);
        int& mw = mark[static_cast<std::size_t>(w)];
        if (mw == 0) {
          mw = expected;
          todo.push(w);
        } else if (mw != expected) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Sign> out;
  out.reserve(n);
  for (int m : mark) out.push_back(sign_from_int(m));
  return Marking(std::move(out));
}

inline bool is_balanced(const SignedGraph& g) { return balancing_marking(g).has_value(); }

/// r when every vertex has degree r.
inline std::optional<int> regular_degree(const SignedGraph& g) {
  if (g.order() == 0) return std::nullopt;
  const int r = g.degree(0);
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) != r) return std::nullopt;
  return r;
}

enum class MatrixKind { adjacency, laplacian, signless_laplacian };

inline const char* matrix_kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::adjacency:
      return "A";
    case MatrixKind::laplacian:
      return "L";
    case MatrixKind::signless_laplacian:
      return "Q";
  }
  return "?";
}

struct GraphMatrices {
  ExactMatrix adjacency;
  ExactMatrix degree;
  ExactMatrix laplacian;
  ExactMatrix signless_laplacian;

  const ExactMatrix& operator[](MatrixKind k) const {
    switch (k) {
      case MatrixKind::adjacency:
        return adjacency;
      case MatrixKind::laplacian:
        return laplacian;
      case MatrixKind::signless_laplacian:
        return signless_laplacian;
    }
    throw std::invalid_argument("unknown matrix kind");
  }
};

inline ExactMatrix adjacency_matrix(const SignedGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  ExactMatrix a(n, n);
  for (const auto& e : g.edges()) {
    a(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)) = value(e.sign);
    a(static_cast<std::size_t>(e.v), static_cast<std::size_t>(e.u)) = value(e.sign);
  }
  return a;
}

/// A, D, L = D - A, Q = D + A. D holds underlying degrees.
inline GraphMatrices matrices(const SignedGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  ExactMatrix a = adjacency_matrix(g);
  ExactMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = g.degree(static_cast<int>(i));
  ExactMatrix l = d - a;
  ExactMatrix q = d + a;
  return {std::move(a), std::move(d), std::move(l), std::move(q)};
}

inline GraphMatrices matrices(const MarkedSignedGraph& mg) { return matrices(mg.graph); }

}  // namespace sigspec
