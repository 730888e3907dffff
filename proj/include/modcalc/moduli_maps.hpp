#pragma once

#include "modcalc/curve.hpp"
#include "modcalc/divisor.hpp"

#include <map>
#include <vector>

namespace modcalc {

// Symbolic description of one moduli map, used for divisor pullback and
// curve pushforward.  Source/target signatures are derived in context:
//
//   Forgetful(p)              (g, M u {p})   -> (g, M)        drop marking p
//   Relabeling(beta)          (g, dom(beta)) -> (g, im(beta)) rename markings
//   AttachRationalTail(T, r)  (g, R u {r})   -> (g, R u T)    glue a fixed
//       generic rational tail carrying the markings T at the point r
//   AttachFixedCurve(i, x)    (g - i, {x})   -> (g, {})       glue a fixed
//       general genus-i curve at x
class MapDescriptor {
 public:
  enum class Kind { Forgetful, Relabeling, AttachRationalTail, AttachFixedCurve };

  static MapDescriptor forgetful(Label p);
  static MapDescriptor relabeling(std::map<Label, Label> source_to_target);
  // Swap of two labels, identity elsewhere, on the given marking set.
  static MapDescriptor transposition(const LabelSet& markings, const Label& a, const Label& b);
  static MapDescriptor attach_rational_tail(LabelSet tail_markings, Label glue_point);
  static MapDescriptor attach_fixed_curve(int genus, Label glue_point);

  Kind kind() const { return kind_; }
  const Label& forgotten() const { return label_; }
  const std::map<Label, Label>& relabel_map() const { return relabel_; }
  const LabelSet& tail_markings() const { return tail_; }
  const Label& glue_point() const { return label_; }
  int attached_genus() const { return attached_genus_; }

  // Throws SignatureMismatch when the descriptor does not compose.
  ModuliSignature source_signature(const ModuliSignature& target) const;
  ModuliSignature target_signature(const ModuliSignature& source) const;

  std::string str() const;

 private:
  explicit MapDescriptor(Kind k) : kind_(k) {}

  Kind kind_;
  Label label_;                      // forgotten marking or glue point
  std::map<Label, Label> relabel_;   // Relabeling only
  LabelSet tail_;                    // AttachRationalTail only
  int attached_genus_ = 0;           // AttachFixedCurve only
};

// Maps listed in composition order: chain[0] is applied first (innermost for
// pushforward, outermost for pullback).
using MapChain = std::vector<MapDescriptor>;

// Pullback of a single generator: the sparse class on the source signature.
// All coefficients are integers (0, +-1); see the rule set in the
// implementation.  Throws UnsupportedIndex on internal rule violations.
std::vector<std::pair<BasisClass, int>> pullback_basis(const BasisClass& b,
                                                       const MapDescriptor& m,
                                                       const ModuliSignature& target,
                                                       const ModuliSignature& source);

// Exact linear pullback.  D must live on the map's target signature.
DivisorClass pullback(const DivisorClass& d, const MapDescriptor& m);

// Fold of pullback over the chain, rightmost map applied first.
DivisorClass pullback_chain(const DivisorClass& d, const MapChain& chain);

// Pushforward of a curve class: the functional b -> pair(c, pullback(b)),
// computed map by map through the chain.
CurveClass pushforward_curve(const CurveClass& c, const MapChain& chain);

}  // namespace modcalc
