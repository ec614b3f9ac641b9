#pragma once

#include <stdexcept>
#include <string>

#include "sigspec/charpoly.hpp"
#include "sigspec/polynomial.hpp"
#include "sigspec/rational_function.hpp"
#include "sigspec/signed_graph.hpp"

namespace sigspec {

/// Reduced coronal mu^T (xI - N)^-1 mu = P / F, with R the common factor
/// cancelled from p / f (so f = F R).
struct CoronalTriple {
  Polynomial P;
  Polynomial F;  // monic
  Polynomial R;  // monic

  int reduced_degree() const { return F.degree(); }
  RationalFunction as_function() const { return {P, F}; }

  /// Equality of the reduced pair (P, F); R is not compared.
  bool same_coronal(const CoronalTriple& o) const { return P == o.P && F == o.F; }

  std::string to_string() const { return P.to_string() + " / " + F.to_string(); }
};

inline CoronalTriple signed_coronal(const ExactMatrix& n, const Marking& mu) {
  if (!n.is_square()) throw std::invalid_argument("signed_coronal: matrix is not square");
  if (static_cast<std::size_t>(mu.size()) != n.rows())
    throw std::invalid_argument("signed_coronal: marking length does not match matrix order");
  const std::vector<Rational> u = mu.as_vector();
  const Polynomial p = adjugate_quadratic_form(n, u);
  const Polynomial f = charpoly(n);
  // f is monic and so is the gcd, hence F = f / g is monic as well.
  const Polynomial g = poly_gcd(p, f);
  return {exact_divide(p, g), exact_divide(f, g), g};
}

/// Coronal of A(mg.graph) with mg's own marking.
inline CoronalTriple adjacency_coronal(const MarkedSignedGraph& mg) {
  return signed_coronal(adjacency_matrix(mg.graph), mg.marking);
}

/// Signed star K_{1,n}: ((n+1)x + 2n mu(centre)) / (x^2 - n), reduced.
inline RationalFunction star_coronal_closed_form(int n, Sign center_mark) {
  if (n < 1) throw std::invalid_argument("star coronal needs n >= 1");
  const Polynomial num{2L * n * value(center_mark), n + 1L};
  const Polynomial den{-static_cast<long>(n), 0, 1};
  return {num, den};
}

/// n / (x - r): coronal of the mu-signed graph of any r-regular signed
/// graph on n vertices, taken with its own marking.
inline RationalFunction regular_balanced_coronal(int r, int n) {
  if (n < 1 || r < 0 || r >= n) throw std::invalid_argument("regular coronal needs n >= 1 and 0 <= r < n");
  return {Polynomial::constant(Rational(n)), Polynomial::linear_root(Rational(r))};
}

}  // namespace sigspec
