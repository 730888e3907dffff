#pragma once

#include "modcalc/curve.hpp"
#include "modcalc/moduli_maps.hpp"

#include <string>
#include <vector>

namespace modcalc {

// Combinatorial data of a pencil of curves on a K3 surface of genus g blown
// up at delta doubled points and ell simple points.  Only the numerical
// output of the construction is represented.
struct PencilSpec {
  int g = 0;      // genus of the K3 polarization
  int delta = 0;  // doubled points
  int ell = 0;    // simple points

  int moduli_genus() const { return g - delta; }
  int marking_count() const { return 2 * delta + ell; }
};

// Throws InvalidSpec naming the violated inequality.
void validate_spec(const PencilSpec& spec);
bool spec_valid(const PencilSpec& spec);

// Marking scheme e1_1, e1_2, ..., f1, f2, ...: the 2*delta section labels
// from the doubled points come first, then the ell simple-point sections.
Label e_label(int i, int a);
Label f_label(int j);
ModuliSignature gamma_signature(const PencilSpec& spec);

// The identification of the construction's markings with {1, ..., 2d+l}.
MapDescriptor standard_identification(const PencilSpec& spec);

// The test curve Gamma(g, delta, ell) as a numerical class on
// (g - delta, {e..., f...}):
//   lambda       -> 2^d (g - d + 1)
//   delta_irr    -> 2^d (18 + 6g - 7d)
//   psi_e        -> 2^(d-1) + 4          (each of the 2d doubled sections)
//   psi_f        -> 2^d                  (each of the l simple sections)
//   delta_{0:{e_i1,e_i2}} -> 2           (each doubled pair)
// and zero against every other generator.
CurveClass gamma_curve(const PencilSpec& spec);

// Gamma pushed to the standard markings {1..2d+l}.
CurveClass gamma_curve_standard(const PencilSpec& spec);

struct SurfaceInvariants {
  Rational c1_sq;
  Rational c2;
  Rational chi_holo;
  long base_points = 0;
};

// Chern numbers of the resolved family and the base-point count of the
// pencil, in closed form.
SurfaceInvariants pencil_surface_invariants(const PencilSpec& spec);

struct CrossCheckItem {
  std::string identity;
  std::string lhs;
  std::string rhs;
  bool ok = false;
};

struct CrossCheckReport {
  std::vector<CrossCheckItem> items;
  bool all_ok = true;
};

// Verifies, exactly, the two independent routes to the curve invariants:
//  (a) lambda pairing vs holomorphic Euler characteristics,
//  (b) c2 vs topological Euler characteristic plus nodal-fiber count.
// Throws ConsistencyFailure when an identity breaks (a library bug).
CrossCheckReport cross_check(const PencilSpec& spec);

}  // namespace modcalc
