#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "sigspec/polynomial.hpp"
#include "sigspec/rational.hpp"

namespace sigspec {

struct IntegerRootSplit {
  /// Integer roots with multiplicity, sorted descending.
  std::vector<long> roots;
  /// p / prod (x - root); has no integer roots left.
  Polynomial remaining;

  bool complete() const { return remaining.is_constant(); }
};

namespace detail {

/// Integer coefficient vector proportional to p.
inline std::vector<Integer> integer_coefficients(const Polynomial& p) {
  Integer lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Integer v = c.get_num() * (lcm / c.get_den());
    out.push_back(v);
  }
  return out;
}

/// Fujiwara bound 2 * max_i |a_{n-i} / a_n|^(1/i), rounded up to an integer.
inline Integer root_bound(const std::vector<Integer>& a) {
  const std::size_t n = a.size() - 1;
  const Integer lead = abs(a[n]);
  Integer bound = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const Integer num = abs(a[n - i]);
    if (num == 0) continue;
    Integer ratio_ceil = (num + lead - 1) / lead;
    Integer r;
    mpz_root(r.get_mpz_t(), ratio_ceil.get_mpz_t(), static_cast<unsigned long>(i));
    Integer candidate = 2 * (r + 1);
    if (candidate > bound) bound = candidate;
  }
  return bound;
}

/// Synthetic division by (x - k). Returns true and replaces a with the
/// quotient when k is a root.
inline bool divide_out_root(std::vector<Integer>& a, const Integer& k) {
  const std::size_t n = a.size() - 1;
  std::vector<Integer> q(n);
  Integer carry = 0;
  for (std::size_t idx = n; idx >= 1; --idx) {
    carry = a[idx] + carry * k;
    q[idx - 1] = carry;
  }
  if (a[0] + carry * k != 0) return false;
  a = std::move(q);
  return true;
}

}  // namespace detail

/// Splits off every integer root of p (with multiplicity). Candidates are
/// divisors of the constant term inside the Fujiwara root bound.
inline IntegerRootSplit integer_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("integer_roots: zero polynomial");
  std::vector<Integer> a = detail::integer_coefficients(p);
  std::vector<long> roots;
  while (a.size() > 1 && a[0] == 0) {
    roots.push_back(0);
    a.erase(a.begin());
  }
  if (a.size() > 1) {
    Integer bound = detail::root_bound(a);
    const Integer a0 = abs(a[0]);
    if (a0 < bound) bound = a0;
    if (!bound.fits_slong_p()) throw std::overflow_error("integer_roots: root bound exceeds machine range");
    const long limit = bound.get_si();
    for (long k = 1; k <= limit && a.size() > 1; ++k) {
      for (long candidate : {k, -k}) {
        const Integer kk = candidate;
        while (a.size() > 1 && mpz_divisible_p(a[0].get_mpz_t(), kk.get_mpz_t()) != 0 && detail::divide_out_root(a, kk))
          roots.push_back(candidate);
      }
    }
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  Polynomial product = Polynomial::constant(Rational(1));
  for (long r : roots) product *= Polynomial::linear_root(Rational(r));
  return {std::move(roots), exact_divide(p, product)};
}

}  // namespace sigspec
