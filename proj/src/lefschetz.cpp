#include "modcalc/lefschetz.hpp"

#include "modcalc/errors.hpp"

namespace modcalc {

namespace {

Rational pow2(int e) {
  if (e < 0) fail(ErrorCode::InvalidSpec, "negative power of two");
  Rational r = 1;
  for (int k = 0; k < e; ++k) r *= 2;
  return r;
}

std::string check_spec(const PencilSpec& spec) {
  if (spec.delta < 0 || spec.ell < 0) return "delta >= 0 and ell >= 0 violated";
  if (spec.g - spec.delta < 2) return "g - delta >= 2 violated";
  if (spec.g + 1 - 3 * spec.delta - spec.ell < 2) return "g+1-3*delta-ell >= 2 violated";
  if (2 * (spec.g - spec.delta) - 2 - 2 * spec.delta - spec.ell < 0) {
    return "2(g-delta)-2-2*delta-ell >= 0 violated";
  }
  return {};
}

}  // namespace

void validate_spec(const PencilSpec& spec) {
  if (std::string why = check_spec(spec); !why.empty()) {
    fail(ErrorCode::InvalidSpec,
         why + " for (g, delta, ell) = (" + std::to_string(spec.g) + ", " +
             std::to_string(spec.delta) + ", " + std::to_string(spec.ell) + ")");
  }
}

bool spec_valid(const PencilSpec& spec) { return check_spec(spec).empty(); }

Label e_label(int i, int a) {
  return Label("e" + std::to_string(i) + "_" + std::to_string(a));
}

Label f_label(int j) { return Label("f" + std::to_string(j)); }

ModuliSignature gamma_signature(const PencilSpec& spec) {
  validate_spec(spec);
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(spec.marking_count()));
  for (int i = 1; i <= spec.delta; ++i) {
    labels.push_back(e_label(i, 1));
    labels.push_back(e_label(i, 2));
  }
  for (int j = 1; j <= spec.ell; ++j) labels.push_back(f_label(j));
  return ModuliSignature(spec.moduli_genus(), LabelSet(std::move(labels)));
}

MapDescriptor standard_identification(const PencilSpec& spec) {
  std::map<Label, Label> map;
  long next = 1;
  for (int i = 1; i <= spec.delta; ++i) {
    map.emplace(e_label(i, 1), Label(next++));
    map.emplace(e_label(i, 2), Label(next++));
  }
  for (int j = 1; j <= spec.ell; ++j) map.emplace(f_label(j), Label(next++));
  return MapDescriptor::relabeling(std::move(map));
}

CurveClass gamma_curve(const PencilSpec& spec) {
  validate_spec(spec);
  ModuliSignature sig = gamma_signature(spec);
  const int d = spec.delta;
  std::vector<std::pair<BasisClass, ParamValue>> entries;
  entries.emplace_back(BasisClass::lambda(), ParamValue(pow2(d) * (spec.g - d + 1)));
  entries.emplace_back(BasisClass::delta_irr(),
                       ParamValue(pow2(d) * (18 + 6 * spec.g - 7 * d)));
  const Rational psi_e = d >= 1 ? pow2(d - 1) + 4 : Rational(0);
  for (int i = 1; i <= d; ++i) {
    entries.emplace_back(BasisClass::psi(e_label(i, 1)), ParamValue(psi_e));
    entries.emplace_back(BasisClass::psi(e_label(i, 2)), ParamValue(psi_e));
    entries.emplace_back(
        BasisClass::delta(canonicalize_index(0, LabelSet({e_label(i, 1), e_label(i, 2)}), sig)),
        ParamValue(2));
  }
  for (int j = 1; j <= spec.ell; ++j) {
    entries.emplace_back(BasisClass::psi(f_label(j)), ParamValue(pow2(d)));
  }
  return curve_from_pairings(sig, entries);
}

CurveClass gamma_curve_standard(const PencilSpec& spec) {
  return pushforward_curve(gamma_curve(spec), {standard_identification(spec)});
}

SurfaceInvariants pencil_surface_invariants(const PencilSpec& spec) {
  validate_spec(spec);
  const Rational p = pow2(spec.delta);
  const int g = spec.g;
  const int d = spec.delta;
  SurfaceInvariants inv;
  inv.c1_sq = (6 * p - 8) * g + (6 - 5 * p) * d + 8 - 6 * p;
  inv.c2 = (6 * p - 4) * g + (6 - 7 * p) * d + 18 * p + 4;
  inv.chi_holo = (inv.c1_sq + inv.c2) / 12;
  inv.base_points = 2 * (g - d) - 2 - 2 * d - spec.ell;
  return inv;
}

CrossCheckReport cross_check(const PencilSpec& spec) {
  validate_spec(spec);
  CurveClass gamma = gamma_curve(spec);
  SurfaceInvariants inv = pencil_surface_invariants(spec);
  CrossCheckReport report;

  // (a) deg(lambda) = chi(O_X) - chi(O_base) chi(O_fiber); the base is
  // rational, the fiber has genus g - delta.
  Rational lambda = gamma.pairing(BasisClass::lambda()).exact();
  Rational chi_fiber = 1 - spec.moduli_genus();
  Rational expected_lambda = inv.chi_holo - chi_fiber;
  report.items.push_back({"lambda = chi_holo - chi(O_base)*chi(O_fiber)",
                          to_fraction(lambda), to_fraction(expected_lambda),
                          lambda == expected_lambda});

  // (b) c2 = chi_top(P1) chi_top(fiber) + nodal degeneration count; the
  // delta_irr pairing counts the non-separating nodes and each doubled point
  // contributes two more from the blown-up intersections.
  Rational dirr = gamma.pairing(BasisClass::delta_irr()).exact();
  Rational chi_top_product = 2 * (2 - 2 * spec.moduli_genus());
  Rational expected_c2 = chi_top_product + dirr + 2 * spec.delta;
  report.items.push_back({"c2 = chi_top(base)*chi_top(fiber) + node count",
                          to_fraction(inv.c2), to_fraction(expected_c2),
                          inv.c2 == expected_c2});

  for (const auto& item : report.items) report.all_ok = report.all_ok && item.ok;
  if (!report.all_ok) {
    std::string broken;
    for (const auto& item : report.items) {
      if (!item.ok) broken += " [" + item.identity + ": " + item.lhs + " != " + item.rhs + "]";
    }
    fail(ErrorCode::ConsistencyFailure, "identity failed for (" + std::to_string(spec.g) + ", " +
                                            std::to_string(spec.delta) + ", " +
                                            std::to_string(spec.ell) + "):" + broken);
  }
  return report;
}

}  // namespace modcalc
