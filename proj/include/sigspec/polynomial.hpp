#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sigspec/rational.hpp"

namespace sigspec {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static Polynomial constant(const Rational& v) { return Polynomial(std::vector<Rational>{v}); }
  static Polynomial x() { return Polynomial{0, 1}; }
  /// x - root
  static Polynomial linear_root(const Rational& root) { return Polynomial(std::vector<Rational>{-root, Rational(1)}); }
  static Polynomial monomial(const Rational& coeff, int degree) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
    c.back() = coeff;
    return Polynomial(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  Rational coeff(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
  }
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& at) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  double evaluate(double at) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + it->get_d();
    return acc;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial p = *this;
    const Rational lead = c_.back();
    for (auto& v : p.c_) v /= lead;
    return p;
  }

  bool is_monic() const { return !is_zero() && c_.back() == 1; }

  /// p(inner(x)) by Horner's scheme.
  Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
    return Polynomial(std::move(d));
  }

  Polynomial pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial result = constant(Rational(1));
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Human-readable form, highest degree first: "x^3 - 3x - 2".
  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Rational& v = c_[static_cast<std::size_t>(k)];
      if (v == 0) continue;
      const bool negative = v < 0;
      const Rational mag = negative ? Rational(-v) : v;
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      std::string magnitude = mag.get_str();
      if (!is_integer(mag)) magnitude = "(" + magnitude + ")";
      if (k == 0)
        out += magnitude;
      else {
        if (mag != 1) out += magnitude;
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  /// Exact coefficient strings, lowest degree first.
  std::vector<std::string> coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(v.get_str());
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

struct DivModResult {
  Polynomial quotient;
  Polynomial remainder;
};

inline DivModResult divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1, Rational(0));
  const Rational lead = b.leading();
  for (int k = da - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// a / b when b divides a exactly; throws otherwise.
inline Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_divide: nonzero remainder");
  return q;
}

/// Monic gcd by the Euclidean algorithm over Q.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: both arguments are zero");
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// den(x)^k * g(num(x) / den(x)) where k = deg g, expanded exactly.
/// Lets products over the (possibly irrational) roots of g be formed
/// without the roots: prod_i (num - root_i * den) = lead(g)^-1 * result.
inline Polynomial compose_with_rational(const Polynomial& g, const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("compose_with_rational: zero denominator");
  const int k = g.degree();
  if (k < 0) return {};
  // Precompute num^j and den^(k-j).
  std::vector<Polynomial> num_pows{Polynomial::constant(Rational(1))};
  std::vector<Polynomial> den_pows{Polynomial::constant(Rational(1))};
  for (int j = 1; j <= k; ++j) {
    num_pows.push_back(num_pows.back() * num);
    den_pows.push_back(den_pows.back() * den);
  }
  Polynomial acc;
  for (int j = 0; j <= k; ++j) {
    const Rational& gj = g.coefficients()[static_cast<std::size_t>(j)];
    if (gj == 0) continue;
    acc += gj * (num_pows[static_cast<std::size_t>(j)] * den_pows[static_cast<std::size_t>(k - j)]);
  }
  return acc;
}

}  // namespace sigspec
