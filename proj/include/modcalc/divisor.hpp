#pragma once

#include "modcalc/basis.hpp"
#include "modcalc/param_value.hpp"

#include <map>
#include <utility>
#include <vector>

namespace modcalc {

// A divisor class in Pic_Q(Mbar_{g,n}): sparse coefficient vector over the
// standard basis.  Keys are canonical and zero coefficients are never stored,
// so equality of classes is equality of the maps.  Immutable after
// construction; all operations return new values.
class DivisorClass {
 public:
  using Coefficients = std::map<BasisClass, ParamValue>;

  static DivisorClass zero(ModuliSignature sig) { return DivisorClass(std::move(sig)); }

  // Canonicalizes keys, merges collisions, drops zeros.
  DivisorClass(ModuliSignature sig, const std::vector<std::pair<BasisClass, ParamValue>>& terms);

  const ModuliSignature& signature() const { return sig_; }
  const Coefficients& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }

  // Stored value or zero; non-canonical boundary keys are canonicalized first.
  ParamValue coefficient(const BasisClass& b) const;

  bool b_free() const;

  bool operator==(const DivisorClass& o) const {
    return sig_ == o.sig_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const DivisorClass& o) const { return !(*this == o); }

 private:
  explicit DivisorClass(ModuliSignature sig) : sig_(std::move(sig)) {}
  friend class DivisorBuilder;

  ModuliSignature sig_;
  Coefficients coeffs_;
};

// Accumulator used by constructors and the map machinery.  Keys are
// canonicalized on insertion and collisions are summed.
class DivisorBuilder {
 public:
  explicit DivisorBuilder(ModuliSignature sig) : result_(std::move(sig)) {}

  void add(const BasisClass& b, ParamValue value);
  // Adds without canonicalizing (key must already be canonical).
  void add_canonical(BasisClass b, ParamValue value);

  DivisorClass take();

 private:
  DivisorClass result_;
};

// Exact linear combination; all classes must share one signature.
// Throws SignatureMismatch.
DivisorClass combine(const std::vector<std::pair<ParamValue, DivisorClass>>& terms);

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(const ParamValue& scalar, const DivisorClass& d);

// Single-generator class with coefficient 1.
DivisorClass basis_divisor(const ModuliSignature& sig, const BasisClass& b);

}  // namespace modcalc
