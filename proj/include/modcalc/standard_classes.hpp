#pragma once

#include "modcalc/divisor.hpp"

namespace modcalc {

// 13*lambda + sum psi_l - 2*delta_irr - 2*sum delta_{i:S} - delta_{1:empty},
// with the extra -1 merged onto the canonical delta_{1:empty} key.
DivisorClass canonical_class(const ModuliSignature& sig);

// The pointed-Brill-Noether divisor on (g, {1..g}): closure of the locus
// where the g marked points move in a pencil.
// -lambda + sum psi_l - sum binom(||S|-i|+1, 2) * delta_{i:S}.
DivisorClass logan_class(int g);

// The closure of the locus of genus-10 curves lying on a K3 surface, on
// (10, {}): 7*lambda - delta_irr - 5 d1 - 9 d2 - 12 d3 - 14 d4 - B d5.
// The d5 coefficient carries the free parameter B (B >= 6).
DivisorClass k3_locus_class();

struct SlopeResult {
  Rational value;
  // True when a coefficient depends on B; the slope is then evaluated with B
  // pinned at its lower bound 6.
  bool at_b_lower_bound = false;
};

// a / min(b_irr, b_1, ..., b_floor(g/2)) for D = a*lambda - b_irr*delta_irr
// - sum b_i*delta_i on an unmarked signature.  Throws SlopeUndefined when the
// lambda coefficient is not certainly positive or any boundary coefficient is
// absent or not certainly negative.
SlopeResult slope(const DivisorClass& d);

}  // namespace modcalc
