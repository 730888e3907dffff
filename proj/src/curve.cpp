#include "modcalc/curve.hpp"

#include "modcalc/errors.hpp"

namespace modcalc {

ParamValue CurveClass::pairing(const BasisClass& b) const {
  BasisClass key = canonical_basis_class(b, sig_);
  auto it = pairings_.find(key);
  return it == pairings_.end() ? ParamValue() : it->second;
}

void CurveBuilder::add(const BasisClass& b, ParamValue value) {
  add_canonical(canonical_basis_class(b, result_.sig_), std::move(value));
}

void CurveBuilder::add_canonical(BasisClass b, ParamValue value) {
  if (value.is_zero()) return;
  auto [it, inserted] = result_.pairings_.try_emplace(std::move(b), std::move(value));
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) result_.pairings_.erase(it);
  }
}

CurveClass CurveBuilder::take() { return std::move(result_); }

CurveClass curve_from_pairings(const ModuliSignature& sig,
                               const std::vector<std::pair<BasisClass, ParamValue>>& entries) {
  std::map<BasisClass, ParamValue> seen;
  for (const auto& [b, v] : entries) {
    BasisClass key = canonical_basis_class(b, sig);
    auto [it, inserted] = seen.try_emplace(std::move(key), v);
    if (!inserted && it->second != v) {
      fail(ErrorCode::ConflictingEntry,
           "conflicting pairings for " + it->first.str() + ": " + it->second.str() + " vs " + v.str());
    }
  }
  CurveClass out(sig);
  for (auto& [b, v] : seen) {
    if (!v.is_zero()) out.pairings_.emplace(b, std::move(v));
  }
  return out;
}

ParamValue pair(const CurveClass& curve, const DivisorClass& divisor) {
  if (curve.signature() != divisor.signature()) {
    fail(ErrorCode::SignatureMismatch,
         "pairing of curve on " + curve.signature().str() + " with divisor on " +
             divisor.signature().str());
  }
  ParamValue total;
  // Both maps are canonically keyed; iterate the smaller support.
  const bool curve_smaller = curve.pairings().size() <= divisor.coefficients().size();
  if (curve_smaller) {
    for (const auto& [b, v] : curve.pairings()) {
      auto it = divisor.coefficients().find(b);
      if (it != divisor.coefficients().end()) total += v * it->second;
    }
  } else {
    for (const auto& [b, v] : divisor.coefficients()) {
      auto it = curve.pairings().find(b);
      if (it != curve.pairings().end()) total += v * it->second;
    }
  }
  return total;
}

}  // namespace modcalc
