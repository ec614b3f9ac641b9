#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "sigspec/polynomial.hpp"

namespace sigspec {

/// num / den in lowest terms with den monic.
class RationalFunction {
 public:
  RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    if (num.is_zero()) {
      num_ = Polynomial();
      den_ = Polynomial::constant(Rational(1));
      return;
    }
    const Polynomial g = poly_gcd(num, den);
    num_ = exact_divide(num, g);
    den_ = exact_divide(den, g);
    const Rational lead = den_.leading();
    num_ *= Rational(1) / lead;
    den_ = den_.monic();
  }

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  Rational operator()(const Rational& at) const { return num_(at) / den_(at); }

  std::string to_string() const { return "(" + num_.to_string() + ") / (" + den_.to_string() + ")"; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace sigspec
