#include "modcalc/moduli_maps.hpp"

#include "modcalc/errors.hpp"

#include <algorithm>

namespace modcalc {

MapDescriptor MapDescriptor::forgetful(Label p) {
  MapDescriptor m(Kind::Forgetful);
  m.label_ = std::move(p);
  return m;
}

MapDescriptor MapDescriptor::relabeling(std::map<Label, Label> source_to_target) {
  MapDescriptor m(Kind::Relabeling);
  std::vector<Label> values;
  values.reserve(source_to_target.size());
  for (const auto& [from, to] : source_to_target) values.push_back(to);
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    fail(ErrorCode::InvalidSpec, "relabeling is not injective");
  }
  m.relabel_ = std::move(source_to_target);
  return m;
}

MapDescriptor MapDescriptor::transposition(const LabelSet& markings, const Label& a,
                                           const Label& b) {
  if (!markings.contains(a) || !markings.contains(b)) {
    fail(ErrorCode::InvalidSpec, "transposition labels must be markings");
  }
  std::map<Label, Label> map;
  for (const Label& l : markings) map.emplace(l, l);
  map[a] = b;
  map[b] = a;
  return relabeling(std::move(map));
}

MapDescriptor MapDescriptor::attach_rational_tail(LabelSet tail_markings, Label glue_point) {
  if (tail_markings.size() < 2) {
    fail(ErrorCode::InvalidSpec, "rational tail must carry at least two markings");
  }
  if (tail_markings.contains(glue_point)) {
    fail(ErrorCode::InvalidSpec, "glue point '" + glue_point.text() + "' collides with tail markings");
  }
  MapDescriptor m(Kind::AttachRationalTail);
  m.tail_ = std::move(tail_markings);
  m.label_ = std::move(glue_point);
  return m;
}

MapDescriptor MapDescriptor::attach_fixed_curve(int genus, Label glue_point) {
  if (genus < 1) fail(ErrorCode::InvalidSpec, "attached curve must have genus >= 1");
  MapDescriptor m(Kind::AttachFixedCurve);
  m.attached_genus_ = genus;
  m.label_ = std::move(glue_point);
  return m;
}

ModuliSignature MapDescriptor::source_signature(const ModuliSignature& target) const {
  switch (kind_) {
    case Kind::Forgetful:
      if (target.markings().contains(label_)) {
        fail(ErrorCode::SignatureMismatch,
             "forgetful target " + target.str() + " already carries '" + label_.text() + "'");
      }
      return ModuliSignature(target.genus(), target.markings().with(label_));
    case Kind::Relabeling: {
      std::vector<Label> image, domain;
      for (const auto& [from, to] : relabel_) {
        domain.push_back(from);
        image.push_back(to);
      }
      if (!(LabelSet(image) == target.markings())) {
        fail(ErrorCode::SignatureMismatch, "relabeling image does not match " + target.str());
      }
      return ModuliSignature(target.genus(), LabelSet(domain));
    }
    case Kind::AttachRationalTail: {
      if (!target.markings().contains_all(tail_)) {
        fail(ErrorCode::SignatureMismatch,
             "tail markings " + tail_.str() + " not carried by " + target.str());
      }
      LabelSet retained = target.markings().set_minus(tail_);
      if (retained.contains(label_)) {
        fail(ErrorCode::SignatureMismatch, "glue point '" + label_.text() + "' is a retained marking");
      }
      return ModuliSignature(target.genus(), retained.with(label_));
    }
    case Kind::AttachFixedCurve:
      if (target.n() != 0) {
        fail(ErrorCode::SignatureMismatch, "attach-curve target must be unmarked, got " + target.str());
      }
      return ModuliSignature(target.genus() - attached_genus_, LabelSet({label_}));
  }
  fail(ErrorCode::SignatureMismatch, "unreachable");
}

ModuliSignature MapDescriptor::target_signature(const ModuliSignature& source) const {
  switch (kind_) {
    case Kind::Forgetful:
      if (!source.markings().contains(label_)) {
        fail(ErrorCode::SignatureMismatch,
             "forgetful source " + source.str() + " lacks '" + label_.text() + "'");
      }
      return ModuliSignature(source.genus(), source.markings().without(label_));
    case Kind::Relabeling: {
      std::vector<Label> image, domain;
      for (const auto& [from, to] : relabel_) {
        domain.push_back(from);
        image.push_back(to);
      }
      if (!(LabelSet(domain) == source.markings())) {
        fail(ErrorCode::SignatureMismatch, "relabeling domain does not match " + source.str());
      }
      return ModuliSignature(source.genus(), LabelSet(image));
    }
    case Kind::AttachRationalTail: {
      if (!source.markings().contains(label_)) {
        fail(ErrorCode::SignatureMismatch, "tail source " + source.str() + " lacks glue point");
      }
      LabelSet retained = source.markings().without(label_);
      if (!retained.disjoint_from(tail_)) {
        fail(ErrorCode::SignatureMismatch, "tail markings collide with retained markings");
      }
      return ModuliSignature(source.genus(), retained.set_union(tail_));
    }
    case Kind::AttachFixedCurve:
      if (!(source.markings() == LabelSet({label_}))) {
        fail(ErrorCode::SignatureMismatch,
             "attach-curve source must be marked exactly by the glue point");
      }
      return ModuliSignature(source.genus() + attached_genus_, LabelSet{});
  }
  fail(ErrorCode::SignatureMismatch, "unreachable");
}

std::string MapDescriptor::str() const {
  switch (kind_) {
    case Kind::Forgetful: return "forget(" + label_.text() + ")";
    case Kind::Relabeling: {
      std::string out = "relabel(";
      bool first = true;
      for (const auto& [from, to] : relabel_) {
        if (from == to) continue;
        if (!first) out += ',';
        out += from.text() + "->" + to.text();
        first = false;
      }
      return out + ")";
    }
    case Kind::AttachRationalTail:
      return "tail(" + tail_.str() + " at " + label_.text() + ")";
    case Kind::AttachFixedCurve:
      return "attach(genus " + std::to_string(attached_genus_) + " at " + label_.text() + ")";
  }
  return "?";
}

namespace {

using Term = std::pair<BasisClass, int>;

void push_dedup(std::vector<Term>& out, BasisClass b, int coeff) {
  for (auto& [existing, _] : out) {
    if (existing == b) return;  // the two preimage branches name one divisor
  }
  out.emplace_back(std::move(b), coeff);
}

// Pullback rules under the map forgetting p.
std::vector<Term> pullback_forgetful(const BasisClass& b, const Label& p,
                                     const ModuliSignature& source) {
  switch (b.kind()) {
    case BasisClass::Kind::Lambda:
    case BasisClass::Kind::DeltaIrr:
      return {{b, 1}};
    case BasisClass::Kind::Psi: {
      LabelSet section({b.psi_label(), p});
      return {{b, 1}, {BasisClass::delta(canonicalize_index(0, section, source)), -1}};
    }
    case BasisClass::Kind::Delta: {
      const BoundaryIndex& idx = b.delta_index();
      std::vector<Term> out;
      push_dedup(out, BasisClass::delta(canonicalize_index(idx.genus_part, idx.side, source)), 1);
      push_dedup(out,
                 BasisClass::delta(canonicalize_index(idx.genus_part, idx.side.with(p), source)), 1);
      return out;
    }
  }
  fail(ErrorCode::UnsupportedIndex, "unreachable");
}

std::vector<Term> pullback_relabeling(const BasisClass& b, const std::map<Label, Label>& fwd,
                                      const ModuliSignature& source) {
  std::map<Label, Label> inverse;
  for (const auto& [from, to] : fwd) inverse.emplace(to, from);
  switch (b.kind()) {
    case BasisClass::Kind::Lambda:
    case BasisClass::Kind::DeltaIrr:
      return {{b, 1}};
    case BasisClass::Kind::Psi:
      return {{BasisClass::psi(inverse.at(b.psi_label())), 1}};
    case BasisClass::Kind::Delta: {
      std::vector<Label> renamed;
      renamed.reserve(b.delta_index().side.size());
      for (const Label& l : b.delta_index().side) renamed.push_back(inverse.at(l));
      return {{BasisClass::delta(canonicalize_index(b.delta_index().genus_part,
                                                    LabelSet(std::move(renamed)), source)),
               1}};
    }
  }
  fail(ErrorCode::UnsupportedIndex, "unreachable");
}

// Pullback rules under gluing a fixed generic rational tail carrying T at r.
// The slice is a fixed generic point of the delta_{0:T} stratum, so boundary
// classes meeting the tail in a partial set of markings restrict to zero, and
// delta_{0:T} itself restricts to the self-intersection class -psi_r.
std::vector<Term> pullback_tail(const BasisClass& b, const LabelSet& tail, const Label& r,
                                const ModuliSignature& target, const ModuliSignature& source) {
  switch (b.kind()) {
    case BasisClass::Kind::Lambda:
    case BasisClass::Kind::DeltaIrr:
      return {{b, 1}};
    case BasisClass::Kind::Psi:
      if (tail.contains(b.psi_label())) return {};
      return {{b, 1}};
    case BasisClass::Kind::Delta: {
      const BoundaryIndex& idx = b.delta_index();
      if (b == BasisClass::delta(canonicalize_index(0, tail, target))) {
        return {{BasisClass::psi(r), -1}};
      }
      if (idx.side.contains_all(tail)) {
        LabelSet moved = idx.side.set_minus(tail).with(r);
        return {{BasisClass::delta(canonicalize_index(idx.genus_part, std::move(moved), source)), 1}};
      }
      if (idx.side.disjoint_from(tail)) {
        return {{BasisClass::delta(canonicalize_index(idx.genus_part, idx.side, source)), 1}};
      }
      return {};  // partial overlap with the tail
    }
  }
  fail(ErrorCode::UnsupportedIndex, "unreachable");
}

// Pullback rules under gluing a fixed general genus-i0 curve at x.  A
// delta_j stratum meets the slice where the separating node lies on the
// moving curve (either side of it), and delta_{i0} additionally meets it in
// the gluing node itself, contributing the excess class -psi_x.
std::vector<Term> pullback_attach(const BasisClass& b, int i0, const Label& x,
                                  const ModuliSignature& source) {
  switch (b.kind()) {
    case BasisClass::Kind::Lambda:
    case BasisClass::Kind::DeltaIrr:
      return {{b, 1}};
    case BasisClass::Kind::Psi:
      fail(ErrorCode::UnsupportedIndex, "psi class on an unmarked signature");
    case BasisClass::Kind::Delta: {
      const int j = b.delta_index().genus_part;
      const int source_genus = source.genus();
      std::vector<Term> out;
      if (j >= 1 && j <= source_genus - 1) {
        push_dedup(out, BasisClass::delta(canonicalize_index(j, {}, source)), 1);
      }
      if (j - i0 >= 1) {
        push_dedup(out, BasisClass::delta(canonicalize_index(j - i0, LabelSet({x}), source)), 1);
      }
      if (j == i0) out.emplace_back(BasisClass::psi(x), -1);
      return out;
    }
  }
  fail(ErrorCode::UnsupportedIndex, "unreachable");
}

}  // namespace

std::vector<std::pair<BasisClass, int>> pullback_basis(const BasisClass& b,
                                                       const MapDescriptor& m,
                                                       const ModuliSignature& target,
                                                       const ModuliSignature& source) {
  validate_basis_class(b, target);
  switch (m.kind()) {
    case MapDescriptor::Kind::Forgetful:
      return pullback_forgetful(b, m.forgotten(), source);
    case MapDescriptor::Kind::Relabeling:
      return pullback_relabeling(b, m.relabel_map(), source);
    case MapDescriptor::Kind::AttachRationalTail:
      return pullback_tail(b, m.tail_markings(), m.glue_point(), target, source);
    case MapDescriptor::Kind::AttachFixedCurve:
      return pullback_attach(b, m.attached_genus(), m.glue_point(), source);
  }
  fail(ErrorCode::UnsupportedIndex, "unreachable");
}

DivisorClass pullback(const DivisorClass& d, const MapDescriptor& m) {
  const ModuliSignature& target = d.signature();
  ModuliSignature source = m.source_signature(target);
  DivisorBuilder builder(source);
  for (const auto& [b, v] : d.coefficients()) {
    for (auto& [a, c] : pullback_basis(b, m, target, source)) {
      builder.add_canonical(std::move(a), ParamValue(Rational(c)) * v);
    }
  }
  return builder.take();
}

DivisorClass pullback_chain(const DivisorClass& d, const MapChain& chain) {
  DivisorClass current = d;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    current = pullback(current, *it);
  }
  return current;
}

namespace {

// Adjoint transport of one curve entry under the map forgetting p.  Every
// source generator appears in the pullback of at most one target generator;
// see pullback_forgetful for the forward rules.
void push_entry_forgetful(CurveBuilder& out, const ModuliSignature& source,
                          const ModuliSignature& target, const Label& p, const BasisClass& a,
                          const ParamValue& v) {
  switch (a.kind()) {
    case BasisClass::Kind::Lambda:
    case BasisClass::Kind::DeltaIrr:
      out.add_canonical(a, v);
      return;
    case BasisClass::Kind::Psi:
      if (!(a.psi_label() == p)) out.add_canonical(a, v);
      return;
    case BasisClass::Kind::Delta: {
      const BoundaryIndex& idx = a.delta_index();
      // psi correction: delta_{0:{q,p}} appears in pullback(psi_q) with -1.
      if (idx.genus_part == 0 && idx.side.size() == 2 && idx.side.contains(p)) {
        Label q = idx.side.without(p).items().front();
        out.add_canonical(BasisClass::psi(std::move(q)), -v);
      }
      // Take the representative of a whose side omits p.
      int j = idx.genus_part;
      LabelSet side = idx.side;
      if (side.contains(p)) {
        j = source.genus() - j;
        side = source.complement(side);
      }
      if (boundary_index_valid(j, side, target)) {
        out.add_canonical(BasisClass::delta(canonicalize_index(j, side, target)), v);
      }
      return;
    }
  }
}

void push_entry_tail(CurveBuilder& out, const ModuliSignature& source,
                     const ModuliSignature& target, const LabelSet& tail, const Label& r,
                     const BasisClass& a, const ParamValue& v) {
  switch (a.kind()) {
    case BasisClass::Kind::Lambda:
    case BasisClass::Kind::DeltaIrr:
      out.add_canonical(a, v);
      return;
    case BasisClass::Kind::Psi:
      if (a.psi_label() == r) {
        out.add_canonical(BasisClass::delta(canonicalize_index(0, tail, target)), -v);
      } else {
        out.add_canonical(a, v);
      }
      return;
    case BasisClass::Kind::Delta: {
      // Take the representative whose side contains the glue point; its image
      // carries the tail markings in place of r.
      int j = a.delta_index().genus_part;
      LabelSet side = a.delta_index().side;
      if (!side.contains(r)) {
        j = source.genus() - j;
        side = source.complement(side);
      }
      LabelSet moved = side.without(r).set_union(tail);
      if (!boundary_index_valid(j, moved, target)) {
        fail(ErrorCode::UnsupportedIndex,
             "tail pushforward produced invalid index d:" + std::to_string(j) + ":" + moved.str());
      }
      out.add_canonical(BasisClass::delta(canonicalize_index(j, std::move(moved), target)), v);
      return;
    }
  }
}

CurveClass pushforward_one(const CurveClass& c, const MapDescriptor& m) {
  const ModuliSignature& source = c.signature();
  ModuliSignature target = m.target_signature(source);
  CurveBuilder out(target);
  switch (m.kind()) {
    case MapDescriptor::Kind::Forgetful:
      for (const auto& [a, v] : c.pairings()) {
        push_entry_forgetful(out, source, target, m.forgotten(), a, v);
      }
      break;
    case MapDescriptor::Kind::Relabeling: {
      const auto& fwd = m.relabel_map();
      for (const auto& [a, v] : c.pairings()) {
        switch (a.kind()) {
          case BasisClass::Kind::Lambda:
          case BasisClass::Kind::DeltaIrr:
            out.add_canonical(a, v);
            break;
          case BasisClass::Kind::Psi:
            out.add_canonical(BasisClass::psi(fwd.at(a.psi_label())), v);
            break;
          case BasisClass::Kind::Delta: {
            std::vector<Label> renamed;
            renamed.reserve(a.delta_index().side.size());
            for (const Label& l : a.delta_index().side) renamed.push_back(fwd.at(l));
            out.add_canonical(BasisClass::delta(canonicalize_index(
                                  a.delta_index().genus_part, LabelSet(std::move(renamed)), target)),
                              v);
            break;
          }
        }
      }
      break;
    }
    case MapDescriptor::Kind::AttachRationalTail:
      for (const auto& [a, v] : c.pairings()) {
        push_entry_tail(out, source, target, m.tail_markings(), m.glue_point(), a, v);
      }
      break;
    case MapDescriptor::Kind::AttachFixedCurve: {
      // The target basis is tiny (unmarked signature); evaluate the defining
      // identity pair(push(c), b) = pair(c, pullback(b)) directly.
      for (const BasisClass& b : enumerate_basis(target)) {
        ParamValue total;
        for (const auto& [a, coeff] : pullback_basis(b, m, target, source)) {
          total += ParamValue(Rational(coeff)) * c.pairing(a);
        }
        out.add_canonical(b, std::move(total));
      }
      break;
    }
  }
  return out.take();
}

}  // namespace

CurveClass pushforward_curve(const CurveClass& c, const MapChain& chain) {
  CurveClass current = c;
  for (const MapDescriptor& m : chain) {
    current = pushforward_one(current, m);
  }
  return current;
}

}  // namespace modcalc
