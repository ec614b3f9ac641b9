#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "sigspec/charpoly.hpp"
#include "sigspec/coronal.hpp"
#include "sigspec/polynomial.hpp"
#include "sigspec/product.hpp"
#include "sigspec/signed_graph.hpp"
#include "sigspec/spectra.hpp"

namespace sigspec {

/// Which a-vertex degree constant the Laplacian-type factorizations use.
/// `constructed` is n2 (r1 + 1), the degree in the product as built.
/// `paper` is r1 + 2 n2, as stated in the literature.
enum class DegreeMode { constructed, paper };

/// Sign of the coronal term in the Laplacian bracket. `derived` follows
/// from the Schur complement of xI - L; `printed` is the form with the
/// same sign as the signless case.
enum class BracketSign { derived, printed };

inline const char* to_string(DegreeMode m) { return m == DegreeMode::constructed ? "constructed" : "paper"; }
inline const char* to_string(BracketSign s) { return s == BracketSign::derived ? "derived" : "printed"; }

class NotRegularError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Factored characteristic polynomial of a product:
///   power_base^power_exponent * r_factor^r_exponent * bracket_product,
/// where bracket_product = prod_i bracket(lambda'_i) over the spectrum of
/// A(Sigma1mu). `assembled` is the monic expansion.
struct FactoredCharPoly {
  Polynomial power_base;
  int power_exponent = 0;
  Polynomial r_factor;
  int r_exponent = 0;
  Polynomial bracket_product;
  Polynomial assembled;
  CoronalTriple coronal;  // of A(Sigma2mu) with mu2
  int a_degree = 0;       // degree constant used for the a-block (0 for A)
  int b_degree = 0;
};

namespace detail {

inline int require_regular(const SignedGraph& g, const char* which) {
  if (g.order() == 0) throw NotRegularError(std::string(which) + " has no vertices");
  const int r = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != r) {
      throw NotRegularError("vertex " + std::to_string(v) + " of the " + which + " has degree " +
                            std::to_string(g.degree(v)) + " but vertex 0 has degree " + std::to_string(r));
    }
  }
  return r;
}

inline FactoredCharPoly assemble(Polynomial base, int base_exp, Polynomial r_factor, int r_exp, Polynomial bracket,
                                 CoronalTriple coronal, int a_degree, int b_degree) {
  FactoredCharPoly out;
  out.assembled = (base.pow(base_exp) * r_factor.pow(r_exp) * bracket).monic();
  out.power_base = std::move(base);
  out.power_exponent = base_exp;
  out.r_factor = std::move(r_factor);
  out.r_exponent = r_exp;
  out.bracket_product = std::move(bracket);
  out.coronal = std::move(coronal);
  out.a_degree = a_degree;
  out.b_degree = b_degree;
  return out;
}

}  // namespace detail

/// x^{n1(n2-1)} R'(x)^{n1} prod_i [x F'(x) - n2 (lambda'_i F'(x) + P'(x))].
/// The product over lambda'_i (eigenvalues of A(Sigma1mu)) is formed as
/// (n2 F')^{n1} g(alpha / (n2 F')) with g the charpoly of A(Sigma1mu) and
/// alpha = x F' - n2 P', so no eigenvalue is ever computed.
inline FactoredCharPoly adjacency_factored(const MarkedSignedGraph& mg1, const MarkedSignedGraph& mg2) {
  const int n1 = mg1.order();
  const int n2 = mg2.order();
  const Polynomial g1 = charpoly(adjacency_matrix(mu_signed_graph(mg1)));
  CoronalTriple cor = signed_coronal(adjacency_matrix(mu_signed_graph(mg2)), mg2.marking);
  const Rational n2r(n2);
  const Polynomial x = Polynomial::x();
  const Polynomial alpha = x * cor.F - n2r * cor.P;
  const Polynomial gamma = n2r * cor.F;
  Polynomial bracket = compose_with_rational(g1, alpha, gamma);
  Polynomial r = cor.R;
  return detail::assemble(x, n1 * (n2 - 1), std::move(r), n1, std::move(bracket), std::move(cor), 0, 0);
}

namespace detail {

/// Shared body of the L and Q factorizations. `arg` is the
/// argument fed to P', F', R' (d_b - x for L, x - d_b for Q).
inline FactoredCharPoly laplacian_like(const MarkedSignedGraph& mg1, const MarkedSignedGraph& mg2, DegreeMode mode,
                                       bool laplacian, BracketSign sign) {
  const int r1 = require_regular(mg1.graph, "first factor");
  const int r2 = require_regular(mg2.graph, "second factor");
  const int n1 = mg1.order();
  const int n2 = mg2.order();
  const int d_a = mode == DegreeMode::constructed ? n2 * (r1 + 1) : r1 + 2 * n2;
  const int d_b = r2 + n2;

  const Polynomial g1 = charpoly(adjacency_matrix(mu_signed_graph(mg1)));
  CoronalTriple cor = signed_coronal(adjacency_matrix(mu_signed_graph(mg2)), mg2.marking);

  const Polynomial arg = laplacian ? Polynomial{d_b, -1} : Polynomial{-d_b, 1};
  const Polynomial F = cor.F.compose(arg);
  const Polynomial P = cor.P.compose(arg);
  Polynomial R = cor.R.compose(arg);
  const Polynomial base = Polynomial::linear_root(Rational(d_a));
  const Rational n2r(n2);

  // Bracket (x - d_a) F + s n2 (lambda F + P), written as alpha - lambda gamma.
  const bool plus = laplacian && sign == BracketSign::derived;
  const Polynomial alpha = plus ? base * F + n2r * P : base * F - n2r * P;
  const Polynomial gamma = plus ? Rational(-n2r) * F : n2r * F;
  Polynomial bracket = compose_with_rational(g1, alpha, gamma);
  return assemble(base, n1 * (n2 - 1), std::move(R), n1, std::move(bracket), std::move(cor), d_a, d_b);
}

}  // namespace detail

/// det(xI - L) of the product for regular factors, up to sign:
/// (x - d_a)^{n1(n2-1)} R'(t)^{n1} prod_i [(x - d_a) F'(t) + n2 (lambda'_i F'(t) + P'(t))]
/// with t = r2 + n2 - x.
inline FactoredCharPoly laplacian_factored(const MarkedSignedGraph& mg1, const MarkedSignedGraph& mg2,
                                           DegreeMode mode = DegreeMode::constructed,
                                           BracketSign sign = BracketSign::derived) {
  return detail::laplacian_like(mg1, mg2, mode, true, sign);
}

/// det(xI - Q) of the product for regular factors:
/// (x - d_a)^{n1(n2-1)} R'(s)^{n1} prod_i [(x - d_a) F'(s) - n2 (lambda'_i F'(s) + P'(s))]
/// with s = x - r2 - n2.
inline FactoredCharPoly signless_factored(const MarkedSignedGraph& mg1, const MarkedSignedGraph& mg2,
                                          DegreeMode mode = DegreeMode::constructed) {
  return detail::laplacian_like(mg1, mg2, mode, false, BracketSign::derived);
}

inline FactoredCharPoly factored(MatrixKind kind, const MarkedSignedGraph& mg1, const MarkedSignedGraph& mg2,
                                 DegreeMode mode = DegreeMode::constructed, BracketSign sign = BracketSign::derived) {
  switch (kind) {
    case MatrixKind::adjacency:
      return adjacency_factored(mg1, mg2);
    case MatrixKind::laplacian:
      return laplacian_factored(mg1, mg2, mode, sign);
    case MatrixKind::signless_laplacian:
      return signless_factored(mg1, mg2, mode);
  }
  throw std::invalid_argument("unknown matrix kind");
}

enum class ProductSide { left, right };

inline const char* to_string(ProductSide s) { return s == ProductSide::left ? "left" : "right"; }

struct CospectralFamilyReport {
  ProductSide side = ProductSide::left;
  bool mu_graphs_cospectral = false;
  std::optional<bool> same_coronal;  // checked for the right side only
  bool hypothesis_holds = false;
  bool products_a_cospectral = false;
  std::optional<bool> products_l_cospectral;  // when every input is regular
  std::optional<bool> products_q_cospectral;

  /// The corollary's conclusion holds whenever its hypothesis does.
  bool consistent() const {
    if (!hypothesis_holds) return true;
    return products_a_cospectral && products_l_cospectral.value_or(true) && products_q_cospectral.value_or(true);
  }
};

/// left: compares mgA (*) mg with mgB (*) mg; right: mg (*) mgA with mg (*) mgB.
inline CospectralFamilyReport cospectral_family_check(const MarkedSignedGraph& mgA, const MarkedSignedGraph& mgB,
                                                      const MarkedSignedGraph& mg, ProductSide side) {
  CospectralFamilyReport rep;
  rep.side = side;
  rep.mu_graphs_cospectral = cospectral(mu_signed_graph(mgA), mu_signed_graph(mgB));
  rep.hypothesis_holds = rep.mu_graphs_cospectral;
  if (side == ProductSide::right) {
    const bool same = mgA.order() == mgB.order() && adjacency_coronal(mu_signed(mgA)).same_coronal(adjacency_coronal(mu_signed(mgB)));
    rep.same_coronal = same;
    rep.hypothesis_holds = rep.hypothesis_holds && same;
  }
  const ProductGraph p1 = side == ProductSide::left ? product(mgA, mg) : product(mg, mgA);
  const ProductGraph p2 = side == ProductSide::left ? product(mgB, mg) : product(mg, mgB);
  rep.products_a_cospectral = cospectral(p1.result, p2.result, MatrixKind::adjacency);
  const bool all_regular =
      regular_degree(mgA.graph).has_value() && regular_degree(mgB.graph).has_value() && regular_degree(mg.graph).has_value();
  if (all_regular) {
    rep.products_l_cospectral = cospectral(p1.result, p2.result, MatrixKind::laplacian);
    rep.products_q_cospectral = cospectral(p1.result, p2.result, MatrixKind::signless_laplacian);
  }
  return rep;
}

}  // namespace sigspec
