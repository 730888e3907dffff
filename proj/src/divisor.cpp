#include "modcalc/divisor.hpp"

#include "modcalc/errors.hpp"

namespace modcalc {

DivisorClass::DivisorClass(ModuliSignature sig,
                           const std::vector<std::pair<BasisClass, ParamValue>>& terms)
    : sig_(std::move(sig)) {
  DivisorBuilder builder(sig_);
  for (const auto& [b, v] : terms) builder.add(b, v);
  coeffs_ = builder.take().coeffs_;
}

ParamValue DivisorClass::coefficient(const BasisClass& b) const {
  BasisClass key = canonical_basis_class(b, sig_);
  auto it = coeffs_.find(key);
  return it == coeffs_.end() ? ParamValue() : it->second;
}

bool DivisorClass::b_free() const {
  for (const auto& [b, v] : coeffs_) {
    if (!v.b_free()) return false;
  }
  return true;
}

void DivisorBuilder::add(const BasisClass& b, ParamValue value) {
  add_canonical(canonical_basis_class(b, result_.sig_), std::move(value));
}

void DivisorBuilder::add_canonical(BasisClass b, ParamValue value) {
  if (value.is_zero()) return;
  auto [it, inserted] = result_.coeffs_.try_emplace(std::move(b), std::move(value));
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) result_.coeffs_.erase(it);
  }
}

DivisorClass DivisorBuilder::take() { return std::move(result_); }

DivisorClass combine(const std::vector<std::pair<ParamValue, DivisorClass>>& terms) {
  if (terms.empty()) {
    fail(ErrorCode::SignatureMismatch, "combine requires at least one term");
  }
  const ModuliSignature& sig = terms.front().second.signature();
  DivisorBuilder builder(sig);
  for (const auto& [scalar, cls] : terms) {
    if (cls.signature() != sig) {
      fail(ErrorCode::SignatureMismatch,
           "combine over " + sig.str() + " got class on " + cls.signature().str());
    }
    if (scalar.is_zero()) continue;
    for (const auto& [b, v] : cls.coefficients()) {
      builder.add_canonical(b, scalar * v);
    }
  }
  return builder.take();
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  return combine({{ParamValue(1), a}, {ParamValue(1), b}});
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  return combine({{ParamValue(1), a}, {ParamValue(-1), b}});
}

DivisorClass operator*(const ParamValue& scalar, const DivisorClass& d) {
  return combine({{scalar, d}});
}

DivisorClass basis_divisor(const ModuliSignature& sig, const BasisClass& b) {
  return DivisorClass(sig, {{b, ParamValue(1)}});
}

}  // namespace modcalc
