#pragma once

#include "modcalc/signature.hpp"

#include <compare>
#include <vector>

namespace modcalc {

// Index of a separating-node boundary divisor delta_{i:S}, subject to the
// identification (i, S) ~ (g - i, S^c).  Instances produced by
// canonicalize_index are in canonical form: i < g - i, or i = g - i and S is
// the tie-break representative (the empty side if one side is empty,
// otherwise the side containing the least marking label).
struct BoundaryIndex {
  int genus_part = 0;
  LabelSet side;

  std::strong_ordering operator<=>(const BoundaryIndex& o) const {
    if (auto c = genus_part <=> o.genus_part; c != 0) return c;
    return side <=> o.side;
  }
  bool operator==(const BoundaryIndex& o) const = default;

  std::string str() const;  // "d:0:{1,2}"
};

// True when (i, S) names a boundary divisor of the given signature:
// S is a subset of the markings, 0 <= i <= g, a genus-0 side carries at
// least two markings.  Validity is involution-symmetric.
bool boundary_index_valid(int i, const LabelSet& s, const ModuliSignature& sig);

// The canonical representative of delta_{i:S}.  Idempotent, and
// canonicalize(i, S) == canonicalize(g-i, S^c).  Throws InvalidIndex.
BoundaryIndex canonicalize_index(int i, const LabelSet& s, const ModuliSignature& sig);

// One generator of Pic_Q: lambda, psi_l, delta_irr, or delta_{i:S}.
class BasisClass {
 public:
  enum class Kind { Lambda = 0, Psi = 1, DeltaIrr = 2, Delta = 3 };

  static BasisClass lambda() { return BasisClass(Kind::Lambda); }
  static BasisClass delta_irr() { return BasisClass(Kind::DeltaIrr); }
  static BasisClass psi(Label l) {
    BasisClass b(Kind::Psi);
    b.label_ = std::move(l);
    return b;
  }
  static BasisClass delta(BoundaryIndex idx) {
    BasisClass b(Kind::Delta);
    b.index_ = std::move(idx);
    return b;
  }
  // Convenience: canonicalizes on the spot.
  static BasisClass delta(int i, const LabelSet& s, const ModuliSignature& sig) {
    return delta(canonicalize_index(i, s, sig));
  }

  Kind kind() const { return kind_; }
  bool is_lambda() const { return kind_ == Kind::Lambda; }
  bool is_psi() const { return kind_ == Kind::Psi; }
  bool is_delta_irr() const { return kind_ == Kind::DeltaIrr; }
  bool is_delta() const { return kind_ == Kind::Delta; }

  const Label& psi_label() const { return label_; }
  const BoundaryIndex& delta_index() const { return index_; }

  std::strong_ordering operator<=>(const BasisClass& o) const {
    if (auto c = static_cast<int>(kind_) <=> static_cast<int>(o.kind_); c != 0) return c;
    if (kind_ == Kind::Psi) return label_ <=> o.label_;
    if (kind_ == Kind::Delta) return index_ <=> o.index_;
    return std::strong_ordering::equal;
  }
  bool operator==(const BasisClass& o) const {
    return (*this <=> o) == std::strong_ordering::equal;
  }

  std::string str() const;  // key syntax: "lambda", "psi:3", "dirr", "d:0:{1,2}"

 private:
  explicit BasisClass(Kind k) : kind_(k) {}

  Kind kind_;
  Label label_;
  BoundaryIndex index_;
};

// Checks membership of a basis class in the signature's basis; boundary
// indices must already be canonical.  Throws InvalidIndex.
void validate_basis_class(const BasisClass& b, const ModuliSignature& sig);

// Returns b with a non-canonical boundary index replaced by its canonical
// representative (other kinds pass through unchanged, after validation).
BasisClass canonical_basis_class(const BasisClass& b, const ModuliSignature& sig);

// The full standard basis of Pic_Q for the signature, in BasisClass order:
// lambda, psi_l (each marking), delta_irr, then canonical delta_{i:S}.
// Intended for signatures with few markings; enumeration is exponential in n.
std::vector<BasisClass> enumerate_basis(const ModuliSignature& sig);

}  // namespace modcalc
