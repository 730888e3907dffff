#include "modcalc/param_value.hpp"

#include "modcalc/errors.hpp"

namespace modcalc {

const Rational& ParamValue::exact() const {
  if (slope_ != 0) {
    fail(ErrorCode::ParameterAmbiguous, "value " + str() + " depends on the parameter B");
  }
  return const_;
}

ParamValue& ParamValue::operator+=(const ParamValue& o) {
  const_ += o.const_;
  slope_ += o.slope_;
  return *this;
}

ParamValue& ParamValue::operator-=(const ParamValue& o) {
  const_ -= o.const_;
  slope_ -= o.slope_;
  return *this;
}

ParamValue& ParamValue::operator*=(const ParamValue& o) {
  if (slope_ != 0 && o.slope_ != 0) {
    fail(ErrorCode::ParameterAmbiguous,
         "product (" + str() + ")*(" + o.str() + ") is not affine in B");
  }
  slope_ = const_ * o.slope_ + slope_ * o.const_;
  const_ *= o.const_;
  return *this;
}

std::string ParamValue::str() const {
  if (slope_ == 0) return to_fraction(const_);
  return to_fraction(const_) + " + " + to_fraction(slope_) + "*B";
}

}  // namespace modcalc
