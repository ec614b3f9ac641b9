#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sigspec/generators.hpp"
#include "sigspec/signed_graph.hpp"

namespace sigspec {

/// Seeded source of random choices. Uses the engine's raw output so the
/// same seed gives the same instances with any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }
  bool coin() { return (engine_() >> 11) & 1U; }
  Sign sign() { return coin() ? Sign::plus : Sign::minus; }

 private:
  std::mt19937_64 engine_;
};

/// Per-trial seed derived from a base seed (splitmix64 finalizer).
inline std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// A generated marked graph plus a short description of how it was made.
struct RandomInstance {
  MarkedSignedGraph graph;
  std::string description;
};

namespace detail {

inline std::vector<Sign> random_signs(Rng& rng, int count) {
  std::vector<Sign> s;
  for (int k = 0; k < count; ++k) s.push_back(rng.sign());
  return s;
}

inline std::string sign_string(const std::vector<Sign>& s) {
  std::string out;
  for (Sign x : s) out += to_char(x);
  return out;
}

/// Signs the edges of `shape` and picks a marking (canonical or random).
inline RandomInstance finish(Rng& rng, const SignedGraph& shape, const std::string& family, bool signed_inputs) {
  std::vector<Edge> edges = shape.edges();
  std::vector<Sign> sig;
  for (auto& e : edges) {
    e.sign = signed_inputs ? rng.sign() : Sign::plus;
    sig.push_back(e.sign);
  }
  SignedGraph g(shape.order(), std::move(edges));
  std::string desc = family + "(" + std::to_string(g.order()) + ") signs=" + sign_string(sig);
  Marking mu;
  if (signed_inputs && rng.coin()) {
    mu = Marking(random_signs(rng, g.order()));
    desc += " marking=" + sign_string(mu.values());
  } else {
    mu = signed_inputs ? canonical_marking(g) : Marking::all_plus(g.order());
    desc += signed_inputs ? " marking=canonical" : " marking=ones";
  }
  return {MarkedSignedGraph(std::move(g), std::move(mu)), std::move(desc)};
}

}  // namespace detail

/// star / cycle / complete / path on 1..max_n vertices.
inline RandomInstance random_generator_graph(Rng& rng, int max_n, bool signed_inputs) {
  const int n = rng.uniform(1, max_n);
  std::vector<std::string> families{"star", "complete", "path"};
  if (n >= 3) families.push_back("cycle");
  const std::string family = families[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(families.size()) - 1))];
  SignedGraph shape;
  if (family == "star")
    shape = star(n);
  else if (family == "complete")
    shape = complete(n);
  else if (family == "path")
    shape = path(n);
  else
    shape = cycle(n);
  return detail::finish(rng, shape, family, signed_inputs);
}

/// cycle or complete graph on 1..max_n vertices (always regular).
inline RandomInstance random_regular_graph(Rng& rng, int max_n, bool signed_inputs) {
  const int n = rng.uniform(1, max_n);
  const bool use_cycle = n >= 3 && rng.coin();
  return detail::finish(rng, use_cycle ? cycle(n) : complete(n), use_cycle ? "cycle" : "complete", signed_inputs);
}

/// Erdos-Renyi style graph with edge probability 1/2, random signs and a
/// random marking.
inline MarkedSignedGraph random_marked_graph(Rng& rng, int max_n) {
  const int n = rng.uniform(1, max_n);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.coin()) edges.push_back({u, v, rng.sign()});
  return {SignedGraph(n, std::move(edges)), Marking(detail::random_signs(rng, n))};
}

}  // namespace sigspec
