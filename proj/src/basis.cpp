#include "modcalc/basis.hpp"

#include "modcalc/errors.hpp"

#include <algorithm>

namespace modcalc {

std::string BoundaryIndex::str() const {
  return "d:" + std::to_string(genus_part) + ":" + side.str();
}

bool boundary_index_valid(int i, const LabelSet& s, const ModuliSignature& sig) {
  const int g = sig.genus();
  if (i < 0 || i > g) return false;
  if (!sig.markings().contains_all(s)) return false;
  const std::size_t n = sig.n();
  if (i == 0 && s.size() < 2) return false;
  if (i == g && s.size() + 2 > n) return false;
  return true;
}

BoundaryIndex canonicalize_index(int i, const LabelSet& s, const ModuliSignature& sig) {
  if (!sig.markings().contains_all(s)) {
    fail(ErrorCode::InvalidIndex, "side " + s.str() + " is not a subset of the markings of " + sig.str());
  }
  if (!boundary_index_valid(i, s, sig)) {
    fail(ErrorCode::InvalidIndex,
         "(" + std::to_string(i) + ", " + s.str() + ") is not a boundary index of " + sig.str());
  }
  const int g = sig.genus();
  const int j = g - i;
  if (i < j) return BoundaryIndex{i, s};
  LabelSet comp = sig.complement(s);
  if (i > j) return BoundaryIndex{j, std::move(comp)};
  // i == g - i: tie-break.  Prefer the empty side; otherwise the side
  // containing the least marking label.
  if (s.empty()) return BoundaryIndex{i, s};
  if (comp.empty()) return BoundaryIndex{i, std::move(comp)};
  const Label& least = sig.markings().items().front();
  if (s.contains(least)) return BoundaryIndex{i, s};
  return BoundaryIndex{i, std::move(comp)};
}

std::string BasisClass::str() const {
  switch (kind_) {
    case Kind::Lambda: return "lambda";
    case Kind::Psi: return "psi:" + label_.text();
    case Kind::DeltaIrr: return "dirr";
    case Kind::Delta: return index_.str();
  }
  return "?";
}

void validate_basis_class(const BasisClass& b, const ModuliSignature& sig) {
  switch (b.kind()) {
    case BasisClass::Kind::Lambda:
    case BasisClass::Kind::DeltaIrr:
      return;
    case BasisClass::Kind::Psi:
      if (!sig.markings().contains(b.psi_label())) {
        fail(ErrorCode::InvalidIndex,
             "psi label '" + b.psi_label().text() + "' is not a marking of " + sig.str());
      }
      return;
    case BasisClass::Kind::Delta: {
      const BoundaryIndex& idx = b.delta_index();
      BoundaryIndex canon = canonicalize_index(idx.genus_part, idx.side, sig);
      if (!(canon == idx)) {
        fail(ErrorCode::InvalidIndex, "boundary index " + idx.str() + " is not canonical");
      }
      return;
    }
  }
}

BasisClass canonical_basis_class(const BasisClass& b, const ModuliSignature& sig) {
  if (b.is_delta()) {
    const BoundaryIndex& idx = b.delta_index();
    return BasisClass::delta(canonicalize_index(idx.genus_part, idx.side, sig));
  }
  validate_basis_class(b, sig);
  return b;
}

std::vector<BasisClass> enumerate_basis(const ModuliSignature& sig) {
  const std::size_t n = sig.n();
  if (n > 16) {
    fail(ErrorCode::InvalidSpec, "basis enumeration limited to n <= 16, got n = " + std::to_string(n));
  }
  std::vector<BasisClass> out;
  out.push_back(BasisClass::lambda());
  for (const Label& l : sig.markings()) out.push_back(BasisClass::psi(l));
  out.push_back(BasisClass::delta_irr());

  const int g = sig.genus();
  const auto& marks = sig.markings().items();
  std::vector<BasisClass> deltas;
  for (int i = 0; 2 * i <= g; ++i) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Label> side;
      for (std::size_t k = 0; k < n; ++k) {
        if (mask & (std::size_t{1} << k)) side.push_back(marks[k]);
      }
      LabelSet s(std::move(side));
      if (!boundary_index_valid(i, s, sig)) continue;
      BoundaryIndex canon = canonicalize_index(i, s, sig);
      if (canon.genus_part == i && canon.side == s) {
        deltas.push_back(BasisClass::delta(std::move(canon)));
      }
    }
  }
  std::sort(deltas.begin(), deltas.end());
  out.insert(out.end(), deltas.begin(), deltas.end());
  return out;
}

}  // namespace modcalc
