#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sigspec/signed_graph.hpp"

namespace sigspec {

/// How a generator signs its edges: uniformly, or from an explicit list
/// in the generator's edge order.
class Signature {
 public:
  static Signature all_positive() { return Signature(Sign::plus); }
  static Signature all_negative() { return Signature(Sign::minus); }
  static Signature explicit_signs(std::vector<Sign> signs) {
    Signature s(Sign::plus);
    s.explicit_ = std::move(signs);
    s.is_explicit_ = true;
    return s;
  }

  std::vector<Edge> apply(const std::vector<std::pair<int, int>>& pairs) const {
    if (is_explicit_ && explicit_.size() != pairs.size()) {
      throw std::invalid_argument("signature lists " + std::to_string(explicit_.size()) + " signs for " +
                                  std::to_string(pairs.size()) + " edges");
    }
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
      edges.push_back({pairs[k].first, pairs[k].second, is_explicit_ ? explicit_[k] : uniform_});
    return edges;
  }

 private:
  explicit Signature(Sign uniform) : uniform_(uniform) {}

  Sign uniform_ = Sign::plus;
  bool is_explicit_ = false;
  std::vector<Sign> explicit_;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace detail

/// K_{1,n-1}: vertex 0 is the centre.
inline SignedGraph star(int n, const Signature& sig = Signature::all_positive()) {
  detail::require(n >= 1, "star needs n >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v) pairs.emplace_back(0, v);
  return SignedGraph(n, sig.apply(pairs));
}

inline SignedGraph path(int n, const Signature& sig = Signature::all_positive()) {
  detail::require(n >= 1, "path needs n >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
  return SignedGraph(n, sig.apply(pairs));
}

/// Edges (0,1), (1,2), ..., (n-2,n-1), (0,n-1).
inline SignedGraph cycle(int n, const Signature& sig = Signature::all_positive()) {
  detail::require(n >= 3, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
  pairs.emplace_back(0, n - 1);
  return SignedGraph(n, sig.apply(pairs));
}

inline SignedGraph complete(int n, const Signature& sig = Signature::all_positive()) {
  detail::require(n >= 1, "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return SignedGraph(n, sig.apply(pairs));
}

/// Parts {0..a-1} and {a..a+b-1}.
inline SignedGraph complete_bipartite(int a, int b, const Signature& sig = Signature::all_positive()) {
  detail::require(a >= 1 && b >= 1, "complete bipartite graph needs a, b >= 1");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) pairs.emplace_back(u, a + v);
  return SignedGraph(a + b, sig.apply(pairs));
}

/// C_n x K_2: outer cycle 0..n-1, inner cycle n..2n-1, rungs i -- n+i.
inline SignedGraph prism(int n, const Signature& sig = Signature::all_positive()) {
  detail::require(n >= 3, "prism needs n >= 3");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < n; ++v) pairs.emplace_back(v, (v + 1) % n);
  for (int v = 0; v < n; ++v) pairs.emplace_back(n + v, n + (v + 1) % n);
  for (int v = 0; v < n; ++v) pairs.emplace_back(v, n + v);
  for (auto& [u, v] : pairs)
    if (u > v) std::swap(u, v);
  return SignedGraph(2 * n, sig.apply(pairs));
}

/// Line graph of the underlying graph, all-positive. Vertex k is the k-th
/// edge of g in sorted order.
inline SignedGraph line_graph(const SignedGraph& g) {
  const auto& edges = g.edges();
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.order()));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    incident[static_cast<std::size_t>(edges[k].u)].push_back(static_cast<int>(k));
    incident[static_cast<std::size_t>(edges[k].v)].push_back(static_cast<int>(k));
  }
  std::vector<Edge> out;
  for (const auto& at : incident)
    for (std::size_t i = 0; i < at.size(); ++i)
      for (std::size_t j = i + 1; j < at.size(); ++j) out.push_back({at[i], at[j], Sign::plus});
  return SignedGraph(static_cast<int>(edges.size()), std::move(out));
}

/// Disjoint union; vertices of b are shifted by a.order().
inline SignedGraph disjoint_union(const SignedGraph& a, const SignedGraph& b) {
  std::vector<Edge> edges = a.edges();
  for (const auto& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order(), e.sign});
  return SignedGraph(a.order() + b.order(), std::move(edges));
}

}  // namespace sigspec
