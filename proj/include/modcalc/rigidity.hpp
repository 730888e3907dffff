#pragma once

#include "modcalc/json_io.hpp"
#include "modcalc/lefschetz.hpp"
#include "modcalc/standard_classes.hpp"

#include <map>
#include <string>
#include <vector>

namespace modcalc {

// An irreducible effective class together with a curve class sweeping it.
// The geometric covering statement is consumed as an assumption (recorded in
// certificates); the numeric condition pair(curve, component) < 0 is checked.
struct CoveringCertificate {
  std::string name;
  DivisorClass component;
  CurveClass curve;
  std::string assumption_note;
};

struct PeelingStep {
  int sweep = 0;  // 1-based; 0 marks the closing active-set solve
  std::size_t certificate = 0;
  Rational increment;
  Rational multiplicity_after;
};

struct PeelingResult {
  std::vector<Rational> multiplicities;  // aligned with the certificates
  DivisorClass remainder;
  std::vector<PeelingStep> trace;
  bool converged = false;
  int sweeps_used = 0;
  bool active_set_solved = false;
};

// Computes the smallest componentwise t >= 0 with
// pair(curve_j, input - sum_k t_k component_k) >= 0 for every j, by monotone
// Gauss-Seidel sweeps followed by an exact solve on the active set, then
// mandatory verification (nonnegativity, residual signs, complementarity).
//
// Preconditions (checked): components pairwise distinct; every diagonal
// pairing certainly negative (NonCoveringCertificate); every cross pairing
// certainly nonnegative (CrossTermNegative).  Residuals entering updates must
// be B-free (ParameterAmbiguous otherwise).
PeelingResult peel(const DivisorClass& input, const std::vector<CoveringCertificate>& certs,
                   int sweep_cap = 64);

// Theta_T on (10, {1..10}): Gamma(11,1,8) pushed through a marking swap,
// |T| - 1 forgetful maps and a rational-tail gluing; covers delta_{0:T}.
MapChain theta_chain(const LabelSet& t);
CurveClass theta_curve(const LabelSet& t);

// xi_i on (10, {}): Gamma(10-i, 0, 1) pushed through attaching a fixed
// general genus-i curve; covers delta_i.
CurveClass xi_curve(int i);

// Boundary coefficients c_{i:S} of K - D10 - 2 pi^* K3 on (10, {1..10}),
// with the vanishing of the non-boundary part and positivity of every
// coefficient verified (DecompositionFailure otherwise).
struct Decomposition {
  std::map<BoundaryIndex, ParamValue> coefficients;
  DivisorClass residual;  // the full class; equals the boundary part
};
Decomposition decomposition_m1010();

struct Assumption {
  std::string claim;
  std::string source;
};

struct CertStage {
  std::string name;
  bool verified = false;
  Json data;
};

struct RigidityCertificate {
  std::string pipeline;
  std::vector<CertStage> stages;
  std::vector<Assumption> assumptions;
  std::string conclusion;

  bool verified() const;
  // The name of the first unverified stage, or empty.
  std::string failing_stage() const;
  Json to_json() const;
};

// The full five-stage pipeline: decomposition, base-locus peel, domination
// by the pullback of B = 2 K3 + sum d_i delta_i, the unmarked negativity
// checks, and the assumption ledger.
RigidityCertificate certify_kodaira_zero_m1010();

struct FaceCheckReport {
  CurveClass curve;                      // pushforward of Gamma(11,1,0)
  std::vector<std::string> annihilated;  // generators paired to exact zero
  Json details;
};
// Verifies the nef curve pairings (lambda 22, delta_irr 154, zero against the
// K3 class and delta_1..delta_5, with no B-dependence).
// Throws FaceCheckFailure naming any nonzero pairing.
FaceCheckReport extremal_face_check();
RigidityCertificate extremal_face_certificate();

struct SlopeBoundResult {
  CurveClass curve;  // pushforward of Gamma(g+delta, delta, 0) to (g, {})
  Rational ratio;
  Rational threshold;
};
// Checks ratio (total boundary)/(lambda) == 6 + (12 - delta)/(g + 1) exactly
// and that the curve annihilates every delta_i, i >= 1.
SlopeBoundResult slope_bound(int g, int delta);

// A pipeline that must fail: runs a peel against a certificate whose curve
// does not pair negatively with its component.  Used to exercise the
// verification-failure reporting path end to end.
RigidityCertificate negative_control();

// Dispatch by pipeline name; throws InvalidSpec for unknown names.
RigidityCertificate run_pipeline(const std::string& name);
std::vector<std::string> pipeline_names();

}  // namespace modcalc
