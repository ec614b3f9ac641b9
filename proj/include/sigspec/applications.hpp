#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "sigspec/coronal.hpp"
#include "sigspec/generators.hpp"
#include "sigspec/integer_roots.hpp"
#include "sigspec/product.hpp"
#include "sigspec/spectra.hpp"
#include "sigspec/theorems.hpp"

namespace sigspec {

// ---------------------------------------------------------------------------
// Integral products

/// Integrality of Sigma1 (*) Sigma2 read off the adjacency factorization.
/// The x-power factor only contributes the root 0, so the product is
/// integral exactly when R' and the bracket product split over Z.
struct IntegralityReport {
  bool overall = false;
  bool power_factor_integral = true;
  IntegerRootSplit r_factor;
  IntegerRootSplit bracket;
};

inline IntegralityReport integral_product_check(const MarkedSignedGraph& mg1, const MarkedSignedGraph& mg2) {
  const FactoredCharPoly f = adjacency_factored(mg1, mg2);
  IntegralityReport rep;
  rep.r_factor = integer_roots(f.r_factor);
  rep.bracket = integer_roots(f.bracket_product);
  rep.overall = rep.power_factor_integral && rep.r_factor.complete() && rep.bracket.complete();
  return rep;
}

/// Integrality of Sigma1 (*) K_{1,n} from the closed-form star coronal.
///
/// For every eigenvalue l of A(Sigma1mu) the bracket numerator is the cubic
///   x (x^2 - n) - n2 l (x^2 - n) - n2 ((n+1) x + 2 n c),   n2 = n + 1,
/// which splits as constant_part - l * lambda_part. The mu-signed star
/// with its own marking has sigma_mu(u1 v) mu(v) = mu(u1) on every leaf,
/// so its coronal is the closed form at c = +1 whatever the centre mark.
struct StarIntegralityReport {
  int n = 0;
  int n2 = 0;
  Sign center_mark = Sign::plus;
  bool integral = false;
  IntegerRootSplit r_factor;
  IntegerRootSplit bracket;

  /// Cubic with c = centre mark of Sigma2 (coronal of Sigma2 itself).
  Polynomial cubic_constant_part;
  Polynomial cubic_lambda_part;
  bool literal_center_integral = false;

  /// x^3 - n2 l x^2 - (n2^2 - n2 + 1) x + n2 (n2 - 1)(l - 2c), as printed.
  Polynomial printed_constant_part;
  Polynomial printed_lambda_part;
  bool printed_matches_expansion = false;

  bool star_spectrum_integral = false;
};

namespace detail {

/// Centre of a star on n + 1 vertices, or -1.
inline int star_center(const SignedGraph& g) {
  const int total = g.order();
  if (total < 2 || g.size() != total - 1) return -1;
  for (int c = 0; c < total; ++c) {
    if (g.degree(c) != total - 1) continue;
    bool leaves = true;
    for (int v = 0; v < total && leaves; ++v)
      if (v != c && g.degree(v) != 1) leaves = false;
    if (leaves) return c;
  }
  return -1;
}

/// x^{n-1} (x^2 - n).
inline Polynomial star_charpoly(int n) {
  return Polynomial::monomial(Rational(1), n - 1) * Polynomial{-static_cast<long>(n), 0, 1};
}

/// Both halves of the star bracket numerator for centre mark c.
inline std::pair<Polynomial, Polynomial> star_cubic(int n, Sign c) {
  const Rational n2(n + 1);
  const Polynomial x = Polynomial::x();
  const Polynomial quad{-static_cast<long>(n), 0, 1};
  const Polynomial coronal_num{2L * n * value(c), n + 1L};
  return {x * quad - n2 * coronal_num, n2 * quad};
}

inline bool splits_over_z(const Polynomial& g1, const std::pair<Polynomial, Polynomial>& cubic) {
  return integer_roots(compose_with_rational(g1, cubic.first, cubic.second)).complete();
}

}  // namespace detail

inline StarIntegralityReport star_product_integral_check(const MarkedSignedGraph& mg1, const MarkedSignedGraph& star2) {
  const int center = detail::star_center(star2.graph);
  if (center < 0) throw std::invalid_argument("second factor is not a star K_{1,n}");
  const int n = star2.order() - 1;
  StarIntegralityReport rep;
  rep.n = n;
  rep.n2 = n + 1;
  rep.center_mark = star2.marking[center];

  const Polynomial g1 = charpoly(adjacency_matrix(mu_signed_graph(mg1)));
  const RationalFunction chi = star_coronal_closed_form(n, Sign::plus);
  const Polynomial& F = chi.denominator();
  const Polynomial& P = chi.numerator();
  const Rational n2(rep.n2);
  const Polynomial R = exact_divide(detail::star_charpoly(n), F);
  rep.r_factor = integer_roots(R);
  rep.bracket = integer_roots(compose_with_rational(g1, Polynomial::x() * F - n2 * P, n2 * F));
  rep.integral = rep.r_factor.complete() && rep.bracket.complete();

  auto literal = detail::star_cubic(n, rep.center_mark);
  rep.literal_center_integral = detail::splits_over_z(g1, literal);
  rep.cubic_constant_part = std::move(literal.first);
  rep.cubic_lambda_part = std::move(literal.second);

  const long m = rep.n2;
  const long c = value(rep.center_mark);
  rep.printed_constant_part = Polynomial{-2 * m * (m - 1) * c, -(m * m - m + 1), 0, 1};
  rep.printed_lambda_part = Polynomial{-m * (m - 1), 0, m};
  rep.printed_matches_expansion =
      rep.printed_constant_part == rep.cubic_constant_part && rep.printed_lambda_part == rep.cubic_lambda_part;

  const long root = std::lround(std::sqrt(static_cast<double>(n)));
  rep.star_spectrum_integral = root * root == n;
  return rep;
}

/// Star K_{1,n} (centre 0) whose canonical centre mark is center_mark.
inline MarkedSignedGraph signed_star(int n, Sign center_mark) {
  std::vector<Sign> signs(static_cast<std::size_t>(n), Sign::plus);
  signs[0] = center_mark;
  return with_canonical_marking(star(n + 1, Signature::explicit_signs(std::move(signs))));
}

inline StarIntegralityReport star_product_integral_check(const MarkedSignedGraph& mg1, int n, Sign center_mark) {
  if (n < 1) throw std::invalid_argument("star needs n >= 1");
  return star_product_integral_check(mg1, signed_star(n, center_mark));
}

// ---------------------------------------------------------------------------
// Equienergetic families

struct EquienergeticTolerances {
  double inputs = 1e-9;
  double products = 1e-7;
};

/// Certificate that Sigma (*) Sigma1 and Sigma (*) Sigma2 are equienergetic
/// but not cospectral. Hypotheses on the mu-signed inputs are checked,
/// never assumed.
struct EquienergeticCertificate {
  // hypotheses
  bool same_order = false;
  bool inputs_non_cospectral = false;
  double input_energy_1 = 0.0;
  double input_energy_2 = 0.0;
  bool inputs_equienergetic = false;
  bool same_coronal = false;
  bool coronal_from_regularity = false;  // equal via n / (x - r), not computed
  std::string failed_clause;             // empty when every hypothesis holds

  // conclusion
  ProductGraph product_1;
  ProductGraph product_2;
  Polynomial charpoly_1;
  Polynomial charpoly_2;
  double product_energy_1 = 0.0;
  double product_energy_2 = 0.0;
  bool products_cospectral = false;
  bool products_equienergetic = false;

  bool hypotheses_hold() const { return failed_clause.empty(); }
  bool valid() const { return hypotheses_hold() && products_equienergetic && !products_cospectral; }
};

inline EquienergeticCertificate equienergetic_family(const MarkedSignedGraph& mg1, const MarkedSignedGraph& mg2,
                                                     const MarkedSignedGraph& mg, EquienergeticTolerances tol = {}) {
  EquienergeticCertificate cert;
  const MarkedSignedGraph mu1 = mu_signed(mg1);
  const MarkedSignedGraph mu2 = mu_signed(mg2);

  cert.same_order = mu1.order() == mu2.order();
  cert.inputs_non_cospectral = !cospectral(mu1, mu2);
  cert.input_energy_1 = energy(mu1).value;
  cert.input_energy_2 = energy(mu2).value;
  cert.inputs_equienergetic = std::abs(cert.input_energy_1 - cert.input_energy_2) <= tol.inputs;

  const auto r1 = regular_degree(mu1.graph);
  const auto r2 = regular_degree(mu2.graph);
  if (cert.same_order && r1 && r2 && *r1 == *r2 && *r1 < mu1.order()) {
    cert.coronal_from_regularity = true;
    cert.same_coronal = true;
  } else if (cert.same_order) {
    cert.same_coronal = adjacency_coronal(mu1).same_coronal(adjacency_coronal(mu2));
  }

  if (!cert.same_order)
    cert.failed_clause = "inputs have different orders";
  else if (!cert.inputs_non_cospectral)
    cert.failed_clause = "mu-signed inputs are cospectral";
  else if (!cert.inputs_equienergetic)
    cert.failed_clause = "mu-signed inputs are not equienergetic";
  else if (!cert.same_coronal)
    cert.failed_clause = "mu-signed inputs have different coronals";

  cert.product_1 = product(mg, mg1);
  cert.product_2 = product(mg, mg2);
  cert.charpoly_1 = graph_charpoly(cert.product_1.result.graph);
  cert.charpoly_2 = graph_charpoly(cert.product_2.result.graph);
  cert.products_cospectral = cert.charpoly_1 == cert.charpoly_2;
  cert.product_energy_1 = energy(cert.product_1.result).value;
  cert.product_energy_2 = energy(cert.product_2.result).value;
  cert.products_equienergetic = std::abs(cert.product_energy_1 - cert.product_energy_2) <= tol.products;
  return cert;
}

/// Second iterated line graphs of K_{3,3} and of the triangular prism,
/// all-positive: both 6-regular on 18 vertices with energy 36.
inline std::pair<MarkedSignedGraph, MarkedSignedGraph> equienergetic_demo_pair() {
  return {with_canonical_marking(line_graph(line_graph(complete_bipartite(3, 3)))),
          with_canonical_marking(line_graph(line_graph(prism(3))))};
}

}  // namespace sigspec
