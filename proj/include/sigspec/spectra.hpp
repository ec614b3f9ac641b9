#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "sigspec/charpoly.hpp"
#include "sigspec/integer_roots.hpp"
#include "sigspec/matrix.hpp"
#include "sigspec/signed_graph.hpp"

namespace sigspec {

inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr double kEnergyTolerance = 1e-9;

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  MatrixKind source = MatrixKind::adjacency;
};

struct EnergyValue {
  double value = 0.0;
  double tolerance = kEnergyTolerance;
};

/// Cyclic Jacobi rotations until every off-diagonal entry is below tol.
inline std::vector<double> symmetric_eigenvalues(RealMatrix m, double tol = kJacobiTolerance) {
  if (!m.is_square()) throw std::invalid_argument("symmetric_eigenvalues: matrix is not square");
  if (!(tol > 0)) throw std::invalid_argument("symmetric_eigenvalues: tolerance must be positive");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > 1e-12) throw std::invalid_argument("symmetric_eigenvalues: matrix is not symmetric");

  auto max_off = [&m, n] {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) worst = std::max(worst, std::abs(m(i, j)));
    return worst;
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && max_off() >= tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (std::abs(apq) < tol * 1e-3) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double mkp = m(k, p);
          const double mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double mpk = m(p, k);
          const double mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = m(i, i);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline Spectrum spectrum(const SignedGraph& g, MatrixKind kind = MatrixKind::adjacency, double tol = kJacobiTolerance) {
  return {symmetric_eigenvalues(to_real(matrices(g)[kind]), tol), kind};
}

inline EnergyValue energy(const SignedGraph& g) {
  double total = 0.0;
  for (double ev : spectrum(g).eigenvalues) total += std::abs(ev);
  return {total, kEnergyTolerance};
}

inline EnergyValue energy(const MarkedSignedGraph& mg) { return energy(mg.graph); }

/// Exact det(xI - M) for the chosen matrix of g.
inline Polynomial graph_charpoly(const SignedGraph& g, MatrixKind kind = MatrixKind::adjacency) {
  return charpoly(matrices(g)[kind]);
}

/// Exact: compares characteristic polynomials, never floats.
inline bool cospectral(const SignedGraph& g1, const SignedGraph& g2, MatrixKind kind = MatrixKind::adjacency) {
  if (g1.order() != g2.order()) return false;
  return graph_charpoly(g1, kind) == graph_charpoly(g2, kind);
}

inline bool cospectral(const MarkedSignedGraph& a, const MarkedSignedGraph& b, MatrixKind kind = MatrixKind::adjacency) {
  return cospectral(a.graph, b.graph, kind);
}

struct IntegralityVerdict {
  bool integral = false;
  std::vector<long> roots;  // integer eigenvalues found, descending
  Polynomial remaining;     // part of the charpoly without integer roots
};

inline IntegralityVerdict is_integral(const SignedGraph& g) {
  IntegerRootSplit split = integer_roots(graph_charpoly(g));
  const bool ok = split.complete();
  return {ok, std::move(split.roots), std::move(split.remaining)};
}

inline IntegralityVerdict is_integral(const MarkedSignedGraph& mg) { return is_integral(mg.graph); }

}  // namespace sigspec
