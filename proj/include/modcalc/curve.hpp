#pragma once

#include "modcalc/divisor.hpp"

#include <map>
#include <utility>
#include <vector>

namespace modcalc {

// A numerical curve class: the linear functional on Pic_Q given by its
// pairing with each basis element.  Stored sparsely on canonical keys, no
// zeros; immutable after construction.
class CurveClass {
 public:
  using Pairings = std::map<BasisClass, ParamValue>;

  static CurveClass zero(ModuliSignature sig) { return CurveClass(std::move(sig)); }

  const ModuliSignature& signature() const { return sig_; }
  const Pairings& pairings() const { return pairings_; }
  bool is_zero() const { return pairings_.empty(); }

  // Pairing with one generator; non-canonical boundary keys agree with their
  // canonical images.
  ParamValue pairing(const BasisClass& b) const;

  bool operator==(const CurveClass& o) const {
    return sig_ == o.sig_ && pairings_ == o.pairings_;
  }
  bool operator!=(const CurveClass& o) const { return !(*this == o); }

 private:
  explicit CurveClass(ModuliSignature sig) : sig_(std::move(sig)) {}
  friend class CurveBuilder;
  friend CurveClass curve_from_pairings(
      const ModuliSignature&, const std::vector<std::pair<BasisClass, ParamValue>>&);

  ModuliSignature sig_;
  Pairings pairings_;
};

// Accumulating builder (collisions summed), used by the map machinery.
class CurveBuilder {
 public:
  explicit CurveBuilder(ModuliSignature sig) : result_(std::move(sig)) {}
  void add(const BasisClass& b, ParamValue value);          // canonicalizes
  void add_canonical(BasisClass b, ParamValue value);
  CurveClass take();

 private:
  CurveClass result_;
};

// Builds a curve from explicit pairings.  Entries for equivalent boundary
// representatives must agree; disagreement is ConflictingEntry (entries are
// never summed here, unlike the builder).
CurveClass curve_from_pairings(const ModuliSignature& sig,
                               const std::vector<std::pair<BasisClass, ParamValue>>& entries);

// Exact bilinear evaluation of the intersection pairing.
// Throws SignatureMismatch.
ParamValue pair(const CurveClass& curve, const DivisorClass& divisor);

}  // namespace modcalc
