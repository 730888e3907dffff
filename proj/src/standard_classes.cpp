#include "modcalc/standard_classes.hpp"

#include "modcalc/errors.hpp"

#include <cstdlib>

namespace modcalc {

namespace {

// Applies fn to each canonical boundary index of the signature, once per
// boundary divisor.
template <typename Fn>
void for_each_canonical_boundary(const ModuliSignature& sig, Fn&& fn) {
  const int g = sig.genus();
  const std::size_t n = sig.n();
  if (n > 16) fail(ErrorCode::InvalidSpec, "boundary enumeration limited to n <= 16");
  const auto& marks = sig.markings().items();
  for (int i = 0; 2 * i <= g; ++i) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Label> side;
      for (std::size_t k = 0; k < n; ++k) {
        if (mask & (std::size_t{1} << k)) side.push_back(marks[k]);
      }
      LabelSet s(std::move(side));
      if (!boundary_index_valid(i, s, sig)) continue;
      BoundaryIndex canon = canonicalize_index(i, s, sig);
      if (canon.genus_part != i || !(canon.side == s)) continue;  // seen via the partner
      fn(std::move(canon));
    }
  }
}

}  // namespace

DivisorClass canonical_class(const ModuliSignature& sig) {
  DivisorBuilder builder(sig);
  builder.add_canonical(BasisClass::lambda(), ParamValue(13));
  for (const Label& l : sig.markings()) {
    builder.add_canonical(BasisClass::psi(l), ParamValue(1));
  }
  builder.add_canonical(BasisClass::delta_irr(), ParamValue(-2));
  for_each_canonical_boundary(sig, [&](BoundaryIndex idx) {
    builder.add_canonical(BasisClass::delta(std::move(idx)), ParamValue(-2));
  });
  if (boundary_index_valid(1, {}, sig)) {
    builder.add(BasisClass::delta(canonicalize_index(1, {}, sig)), ParamValue(-1));
  }
  return builder.take();
}

DivisorClass logan_class(int g) {
  ModuliSignature sig = standard_signature(g, g);
  DivisorBuilder builder(sig);
  builder.add_canonical(BasisClass::lambda(), ParamValue(-1));
  for (const Label& l : sig.markings()) {
    builder.add_canonical(BasisClass::psi(l), ParamValue(1));
  }
  // binom(||S|-i|+1, 2) is invariant under (i,S) -> (g-i,S^c), so assigning it
  // once per canonical index realizes the full sum over 0 <= i <= g/2, all S.
  for_each_canonical_boundary(sig, [&](BoundaryIndex idx) {
    const long size_gap = std::labs(static_cast<long>(idx.side.size()) - idx.genus_part);
    Rational coeff = binomial(size_gap + 1, 2);
    if (coeff == 0) return;
    builder.add_canonical(BasisClass::delta(std::move(idx)), ParamValue(-coeff));
  });
  return builder.take();
}

DivisorClass k3_locus_class() {
  ModuliSignature sig(10, {});
  auto delta = [&](int i) { return BasisClass::delta(canonicalize_index(i, {}, sig)); };
  return DivisorClass(sig, {
      {BasisClass::lambda(), ParamValue(7)},
      {BasisClass::delta_irr(), ParamValue(-1)},
      {delta(1), ParamValue(-5)},
      {delta(2), ParamValue(-9)},
      {delta(3), ParamValue(-12)},
      {delta(4), ParamValue(-14)},
      {delta(5), ParamValue::b_multiple(-1)},
  });
}

SlopeResult slope(const DivisorClass& d) {
  const ModuliSignature& sig = d.signature();
  if (sig.n() != 0) {
    fail(ErrorCode::SlopeUndefined, "slope is defined on unmarked signatures, got " + sig.str());
  }
  ParamValue a = d.coefficient(BasisClass::lambda());
  if (!a.certainly_positive()) {
    fail(ErrorCode::SlopeUndefined, "lambda coefficient " + a.str() + " is not positive");
  }
  bool pinned = !a.b_free();

  std::vector<BasisClass> boundary;
  boundary.push_back(BasisClass::delta_irr());
  for (int i = 1; 2 * i <= sig.genus(); ++i) {
    boundary.push_back(BasisClass::delta(canonicalize_index(i, {}, sig)));
  }

  bool have_min = false;
  Rational min_b;
  for (const BasisClass& b : boundary) {
    ParamValue coeff = d.coefficient(b);
    if (!coeff.certainly_negative()) {
      fail(ErrorCode::SlopeUndefined,
           "boundary coefficient of " + b.str() + " is " + coeff.str() + ", need < 0");
    }
    if (!coeff.b_free()) pinned = true;
    Rational bound = -coeff.at_min_b();
    if (!have_min || bound < min_b) {
      min_b = bound;
      have_min = true;
    }
  }
  return SlopeResult{a.at_min_b() / min_b, pinned};
}

}  // namespace modcalc
