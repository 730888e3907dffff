#pragma once

#include "modcalc/rational.hpp"

#include <string>

namespace modcalc {

// An exact affine value c + s*B in the single global parameter B, which is
// only known to satisfy B >= 6.  Sign predicates are quantified over all
// B >= 6; for affine functions this reduces to the value at B = 6 plus the
// sign of the slope.
class ParamValue {
 public:
  ParamValue() = default;
  ParamValue(Rational constant) : const_(std::move(constant)) {}  // NOLINT: implicit by design
  ParamValue(long constant) : const_(constant) {}                 // NOLINT
  ParamValue(Rational constant, Rational slope)
      : const_(std::move(constant)), slope_(std::move(slope)) {}

  static ParamValue b_multiple(Rational slope) { return ParamValue(Rational(0), std::move(slope)); }

  const Rational& constant() const { return const_; }
  const Rational& slope() const { return slope_; }

  bool is_zero() const { return const_ == 0 && slope_ == 0; }
  bool b_free() const { return slope_ == 0; }

  // Value at a concrete parameter choice.
  Rational at(const Rational& b) const { return const_ + slope_ * b; }
  Rational at_min_b() const { return at(Rational(6)); }

  // Quantified over every admissible B (>= 6).
  bool certainly_positive() const { return at_min_b() > 0 && slope_ >= 0; }
  bool certainly_negative() const { return at_min_b() < 0 && slope_ <= 0; }
  bool certainly_nonnegative() const { return at_min_b() >= 0 && slope_ >= 0; }
  bool certainly_nonpositive() const { return at_min_b() <= 0 && slope_ <= 0; }

  // The exact rational value, available only when B-free.
  const Rational& exact() const;

  ParamValue operator-() const { return ParamValue(-const_, -slope_); }
  ParamValue& operator+=(const ParamValue& o);
  ParamValue& operator-=(const ParamValue& o);
  // Throws ParameterAmbiguous when the product would carry a B^2 term.
  ParamValue& operator*=(const ParamValue& o);

  friend ParamValue operator+(ParamValue a, const ParamValue& b) { return a += b; }
  friend ParamValue operator-(ParamValue a, const ParamValue& b) { return a -= b; }
  friend ParamValue operator*(ParamValue a, const ParamValue& b) { return a *= b; }
  friend bool operator==(const ParamValue& a, const ParamValue& b) {
    return a.const_ == b.const_ && a.slope_ == b.slope_;
  }
  friend bool operator!=(const ParamValue& a, const ParamValue& b) { return !(a == b); }

  // "p/q" when B-free, otherwise "p/q + p/q*B".
  std::string str() const;

 private:
  Rational const_ = 0;
  Rational slope_ = 0;
};

}  // namespace modcalc
