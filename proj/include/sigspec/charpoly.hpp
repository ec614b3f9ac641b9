#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sigspec/matrix.hpp"
#include "sigspec/polynomial.hpp"

namespace sigspec {

/// det(xI - a), exact. Reduces a to upper Hessenberg form by similarity
/// transforms over Q, then runs the Hessenberg determinant recurrence.
/// O(n^3) field operations.
inline Polynomial charpoly(const ExactMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("charpoly: matrix is not square");
  const std::size_t n = a.rows();
  ExactMatrix h = a;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t pivot = m;
    while (pivot < n && h(pivot, m - 1) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(pivot, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, pivot), h(j, m));
    }
    const Rational p = h(m, m - 1);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h(i, m - 1) == 0) continue;
      const Rational u = h(i, m - 1) / p;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(m, j);
      for (std::size_t j = 0; j < n; ++j) h(j, m) += u * h(j, i);
    }
  }

  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}, 1-based.
  std::vector<Polynomial> p;
  p.reserve(n + 1);
  p.push_back(Polynomial::constant(Rational(1)));
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial next = Polynomial::linear_root(h(k, k)) * p[k];
    Rational sub(1);
    for (std::size_t i = k; i-- > 0;) {
      sub *= h(i + 1, i);
      if (sub == 0) break;
      const Rational term = sub * h(i, k);
      if (term != 0) next -= term * p[i];
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

/// Faddeev-LeVerrier sequence: charpoly coefficients together with the
/// matrices M_1..M_n with adj(xI - a) = sum_k M_k x^(n-k).
struct FaddeevLeVerrier {
  Polynomial charpoly;
  std::vector<ExactMatrix> adjugate_terms;
};

inline FaddeevLeVerrier faddeev_leverrier(const ExactMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("faddeev_leverrier: matrix is not square");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  std::vector<ExactMatrix> terms;
  ExactMatrix m(n, n);
  const ExactMatrix id = ExactMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    terms.push_back(m);
    c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
  }
  return {Polynomial(std::move(c)), std::move(terms)};
}

/// u^T adj(xI - a) u. Uses det(xI - a - u u^T) = f(x) - u^T adj(xI - a) u,
/// so the result is charpoly(a) - charpoly(a + u u^T).
inline Polynomial adjugate_quadratic_form(const ExactMatrix& a, std::span<const Rational> u) {
  if (!a.is_square()) throw std::invalid_argument("adjugate_quadratic_form: matrix is not square");
  if (u.size() != a.rows()) throw std::invalid_argument("adjugate_quadratic_form: vector length mismatch");
  ExactMatrix shifted = a;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) shifted(i, j) += u[i] * u[j];
  return charpoly(a) - charpoly(shifted);
}

}  // namespace sigspec
