#include "modcalc/rigidity.hpp"

#include "modcalc/errors.hpp"

#include <algorithm>
#include <optional>

namespace modcalc {

namespace {

// ----- peel internals -------------------------------------------------

// Dense indexing of the basis classes touched by one peel run, so that the
// sweep loop works on flat vectors instead of ordered maps.
class BasisIndexer {
 public:
  std::size_t index(const BasisClass& b) {
    auto [it, inserted] = map_.try_emplace(b, keys_.size());
    if (inserted) keys_.push_back(b);
    return it->second;
  }
  const BasisClass& key(std::size_t i) const { return keys_[i]; }
  std::size_t size() const { return keys_.size(); }

 private:
  std::map<BasisClass, std::size_t> map_;
  std::vector<BasisClass> keys_;
};

using SparseVec = std::vector<std::pair<std::size_t, ParamValue>>;

// Exact Gauss-Jordan elimination on sparse rows.  Returns false when the
// system is singular.
bool solve_exact(std::vector<std::map<std::size_t, Rational>> rows, std::vector<Rational> rhs,
                 std::vector<Rational>& solution) {
  const std::size_t m = rows.size();
  std::vector<bool> used(m, false);
  std::vector<std::size_t> pivot_row(m, m);
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t best = m;
    std::size_t best_nnz = std::size_t(-1);
    for (std::size_t r = 0; r < m; ++r) {
      if (used[r]) continue;
      auto it = rows[r].find(c);
      if (it == rows[r].end() || it->second == 0) continue;
      if (rows[r].size() < best_nnz) {
        best = r;
        best_nnz = rows[r].size();
      }
    }
    if (best == m) return false;
    used[best] = true;
    pivot_row[c] = best;
    const Rational pivot = rows[best].at(c);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == best) continue;
      auto it = rows[r].find(c);
      if (it == rows[r].end() || it->second == 0) continue;
      const Rational factor = it->second / pivot;
      for (const auto& [cc, vv] : rows[best]) {
        Rational& cell = rows[r][cc];
        cell -= factor * vv;
        if (cell == 0) rows[r].erase(cc);
      }
      rhs[r] -= factor * rhs[best];
    }
  }
  solution.assign(m, Rational(0));
  for (std::size_t c = 0; c < m; ++c) {
    solution[c] = rhs[pivot_row[c]] / rows[pivot_row[c]].at(c);
  }
  return true;
}

}  // namespace

PeelingResult peel(const DivisorClass& input, const std::vector<CoveringCertificate>& certs,
                   int sweep_cap) {
  const ModuliSignature& sig = input.signature();
  const std::size_t n = certs.size();
  for (const CoveringCertificate& c : certs) {
    if (c.component.signature() != sig || c.curve.signature() != sig) {
      fail(ErrorCode::SignatureMismatch,
           "certificate '" + c.name + "' does not live on " + sig.str());
    }
  }
  {
    std::map<std::string, std::size_t> seen;
    for (std::size_t j = 0; j < n; ++j) {
      auto [it, inserted] = seen.try_emplace(serialize(certs[j].component), j);
      if (!inserted) {
        fail(ErrorCode::InvalidSpec, "certificates '" + certs[it->second].name + "' and '" +
                                         certs[j].name + "' share a component");
      }
    }
  }

  BasisIndexer indexer;
  auto index_map = [&](const std::map<BasisClass, ParamValue>& entries) {
    SparseVec out;
    out.reserve(entries.size());
    for (const auto& [b, v] : entries) out.emplace_back(indexer.index(b), v);
    return out;
  };
  std::vector<SparseVec> component(n), curve(n);
  for (std::size_t j = 0; j < n; ++j) {
    component[j] = index_map(certs[j].component.coefficients());
    curve[j] = index_map(certs[j].curve.pairings());
  }
  SparseVec input_sparse = index_map(input.coefficients());
  const std::size_t width = indexer.size();

  std::vector<ParamValue> base(width);
  for (const auto& [i, v] : input_sparse) base[i] = v;

  // Pairing matrix rows, built through an inverted index over the components.
  std::vector<std::vector<std::pair<std::size_t, ParamValue>>> by_basis(width);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& [i, v] : component[k]) by_basis[i].emplace_back(k, v);
  }
  std::vector<std::map<std::size_t, ParamValue>> matrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [i, v] : curve[j]) {
      for (const auto& [k, c] : by_basis[i]) {
        ParamValue& cell = matrix[j][k];
        cell += v * c;
        if (cell.is_zero()) matrix[j].erase(k);
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    auto diag = matrix[j].find(j);
    ParamValue diag_value = diag == matrix[j].end() ? ParamValue() : diag->second;
    if (!diag_value.certainly_negative()) {
      fail(ErrorCode::NonCoveringCertificate,
           "certificate '" + certs[j].name + "' has pair(curve, component) = " +
               diag_value.str() + ", not negative for all B >= 6");
    }
    for (const auto& [k, v] : matrix[j]) {
      if (k != j && !v.certainly_nonnegative()) {
        fail(ErrorCode::CrossTermNegative,
             "pair(curve of '" + certs[j].name + "', component of '" + certs[k].name + "') = " +
                 v.str() + ", not nonnegative for all B >= 6");
      }
    }
  }

  std::vector<ParamValue> remainder = base;
  std::vector<Rational> mult(n, Rational(0));
  std::vector<PeelingStep> trace;
  auto residual_of = [&](std::size_t j) {
    ParamValue r;
    for (const auto& [i, v] : curve[j]) {
      if (!remainder[i].is_zero()) r += v * remainder[i];
    }
    return r;
  };

  bool exact_convergence = false;
  int sweeps_used = 0;
  for (int sweep = 1; sweep <= sweep_cap; ++sweep) {
    bool changed = false;
    for (std::size_t j = 0; j < n; ++j) {
      ParamValue res = residual_of(j);
      if (res.certainly_nonnegative()) continue;
      if (!res.b_free()) {
        fail(ErrorCode::ParameterAmbiguous,
             "residual of '" + certs[j].name + "' is " + res.str() +
                 "; peeling multiplicities must be B-free");
      }
      const ParamValue& diag = matrix[j].at(j);
      if (!diag.b_free()) {
        fail(ErrorCode::ParameterAmbiguous,
             "diagonal pairing of '" + certs[j].name + "' is " + diag.str() +
                 "; cannot divide a B-free residual by it");
      }
      Rational inc = res.exact() / diag.exact();
      mult[j] += inc;
      for (const auto& [i, v] : component[j]) remainder[i] -= ParamValue(inc) * v;
      trace.push_back({sweep, j, inc, mult[j]});
      changed = true;
    }
    sweeps_used = sweep;
    if (!changed) {
      exact_convergence = true;
      break;
    }
  }

  bool active_solved = false;
  if (!exact_convergence && n > 0) {
    std::vector<std::size_t> active;
    for (std::size_t j = 0; j < n; ++j) {
      ParamValue res = residual_of(j);
      bool needs = !res.certainly_nonnegative();
      if (needs && !res.b_free()) {
        fail(ErrorCode::ParameterAmbiguous,
             "residual of '" + certs[j].name + "' is " + res.str() + " at the sweep cap");
      }
      if (mult[j] > 0 || needs) active.push_back(j);
    }
    std::map<std::size_t, std::size_t> position;
    for (std::size_t pos = 0; pos < active.size(); ++pos) position[active[pos]] = pos;
    const std::size_t m = active.size();
    std::vector<std::map<std::size_t, Rational>> rows(m);
    std::vector<Rational> rhs(m);
    for (std::size_t pos = 0; pos < m; ++pos) {
      const std::size_t j = active[pos];
      ParamValue b0;
      for (const auto& [i, v] : curve[j]) b0 += v * base[i];
      rhs[pos] = b0.exact();
      for (const auto& [k, v] : matrix[j]) {
        if (auto it = position.find(k); it != position.end()) {
          rows[pos][it->second] = v.exact();
        }
      }
    }
    std::vector<Rational> solution;
    if (!solve_exact(std::move(rows), std::move(rhs), solution)) {
      fail(ErrorCode::NoConvergence, "active-set system is singular");
    }
    for (std::size_t pos = 0; pos < m; ++pos) {
      const std::size_t j = active[pos];
      trace.push_back({0, j, solution[pos] - mult[j], solution[pos]});
      mult[j] = solution[pos];
    }
    remainder = base;
    for (std::size_t j = 0; j < n; ++j) {
      if (mult[j] == 0) continue;
      for (const auto& [i, v] : component[j]) remainder[i] -= ParamValue(mult[j]) * v;
    }
    active_solved = true;
  }

  // The solve above is untrusted; every claim is re-verified here.
  for (std::size_t j = 0; j < n; ++j) {
    if (mult[j] < 0) {
      fail(ErrorCode::NoConvergence,
           "negative multiplicity " + to_fraction(mult[j]) + " for '" + certs[j].name + "'");
    }
    ParamValue res = residual_of(j);
    if (!res.certainly_nonnegative()) {
      fail(ErrorCode::NoConvergence,
           "residual of '" + certs[j].name + "' is " + res.str() + " after the solve");
    }
    if (mult[j] > 0 && !res.is_zero()) {
      fail(ErrorCode::NoConvergence,
           "complementarity violated at '" + certs[j].name + "': residual " + res.str());
    }
  }

  DivisorBuilder remainder_builder(sig);
  for (std::size_t i = 0; i < width; ++i) {
    if (!remainder[i].is_zero()) remainder_builder.add_canonical(indexer.key(i), remainder[i]);
  }
  DivisorClass remainder_class = remainder_builder.take();

  std::vector<std::pair<ParamValue, DivisorClass>> reassembled{{ParamValue(1), remainder_class}};
  for (std::size_t j = 0; j < n; ++j) {
    if (mult[j] != 0) reassembled.emplace_back(ParamValue(mult[j]), certs[j].component);
  }
  if (combine(reassembled) != input) {
    fail(ErrorCode::NoConvergence, "peel exactness identity violated");
  }

  return PeelingResult{std::move(mult), std::move(remainder_class), std::move(trace),
                       true, sweeps_used, active_solved};
}

// ----- named curves ---------------------------------------------------

MapChain theta_chain(const LabelSet& t_set) {
  ModuliSignature std10 = standard_signature(10, 10);
  if (t_set.size() < 2 || !std10.markings().contains_all(t_set)) {
    fail(ErrorCode::InvalidSpec, "theta tail set must satisfy {labels} <= {1..10}, |T| >= 2");
  }
  const int t = static_cast<int>(t_set.size());
  const Label glue("r");

  MapChain chain;
  chain.push_back(MapDescriptor::transposition(std10.markings(), Label(1L), Label(10L)));
  for (long j = 2; j <= t; ++j) chain.push_back(MapDescriptor::forgetful(Label(j)));

  std::map<Label, Label> to_glue;
  to_glue.emplace(Label(1L), glue);
  for (long j = t + 1; j <= 10; ++j) to_glue.emplace(Label(j), Label(j));
  chain.push_back(MapDescriptor::relabeling(std::move(to_glue)));

  std::vector<Label> base_tail;
  for (long j = 1; j <= t; ++j) base_tail.emplace_back(j);
  LabelSet tail0(std::move(base_tail));
  chain.push_back(MapDescriptor::attach_rational_tail(tail0, glue));

  if (!(tail0 == t_set)) {
    // Order-preserving relabeling carrying the reference tail {1..t} onto T.
    std::map<Label, Label> final_map;
    LabelSet retained0 = std10.complement(tail0);
    LabelSet retained = std10.complement(t_set);
    for (std::size_t k = 0; k < tail0.size(); ++k) {
      final_map.emplace(tail0.items()[k], t_set.items()[k]);
    }
    for (std::size_t k = 0; k < retained0.size(); ++k) {
      final_map.emplace(retained0.items()[k], retained.items()[k]);
    }
    chain.push_back(MapDescriptor::relabeling(std::move(final_map)));
  }
  return chain;
}

CurveClass theta_curve(const LabelSet& t_set) {
  return pushforward_curve(gamma_curve_standard(PencilSpec{11, 1, 8}), theta_chain(t_set));
}

CurveClass xi_curve(int i) {
  if (i < 1 || i > 5) {
    fail(ErrorCode::InvalidSpec, "xi curve index must be in 1..5, got " + std::to_string(i));
  }
  PencilSpec spec{10 - i, 0, 1};
  MapChain chain;
  chain.push_back(MapDescriptor::relabeling(std::map<Label, Label>{{f_label(1), Label("x")}}));
  chain.push_back(MapDescriptor::attach_fixed_curve(i, Label("x")));
  return pushforward_curve(gamma_curve(spec), chain);
}

// ----- decomposition and pipelines -------------------------------------

namespace {

MapChain pi_chain_m1010() {
  MapChain chain;
  for (const Label& l : standard_signature(10, 10).markings()) {
    chain.push_back(MapDescriptor::forgetful(l));
  }
  return chain;
}

BasisClass unmarked_delta(const ModuliSignature& sig, int i) {
  return BasisClass::delta(canonicalize_index(i, {}, sig));
}

}  // namespace

Decomposition decomposition_m1010() {
  ModuliSignature sig_m = standard_signature(10, 10);
  DivisorClass k = canonical_class(sig_m);
  DivisorClass d10 = logan_class(10);
  DivisorClass pulled_k3 = pullback_chain(k3_locus_class(), pi_chain_m1010());
  DivisorClass residual = combine({{ParamValue(1), k},
                                   {ParamValue(-1), d10},
                                   {ParamValue(-2), pulled_k3}});
  Decomposition out{std::map<BoundaryIndex, ParamValue>{}, residual};
  for (const auto& [b, v] : residual.coefficients()) {
    if (!b.is_delta()) {
      fail(ErrorCode::DecompositionFailure,
           "non-boundary coefficient survives: " + basis_key(b) + " = " + v.str());
    }
    if (!v.certainly_positive()) {
      fail(ErrorCode::DecompositionFailure,
           "coefficient of " + basis_key(b) + " is " + v.str() + ", not positive for all B >= 6");
    }
    out.coefficients.emplace(b.delta_index(), v);
  }
  return out;
}

bool RigidityCertificate::verified() const {
  return std::all_of(stages.begin(), stages.end(),
                     [](const CertStage& s) { return s.verified; });
}

std::string RigidityCertificate::failing_stage() const {
  for (const CertStage& s : stages) {
    if (!s.verified) return s.name;
  }
  return {};
}

Json RigidityCertificate::to_json() const {
  Json j = Json::object();
  j["pipeline"] = pipeline;
  Json stage_list = Json::array();
  for (const CertStage& s : stages) {
    Json sj = Json::object();
    sj["name"] = s.name;
    sj["verified"] = s.verified;
    sj["data"] = s.data;
    stage_list.push_back(std::move(sj));
  }
  j["stages"] = std::move(stage_list);
  Json assumption_list = Json::array();
  for (const Assumption& a : assumptions) {
    Json aj = Json::object();
    aj["claim"] = a.claim;
    aj["source"] = a.source;
    assumption_list.push_back(std::move(aj));
  }
  j["assumptions"] = std::move(assumption_list);
  j["conclusion"] = conclusion;
  return j;
}

namespace {

[[noreturn]] void stage_fail(const std::string& stage, ErrorCode code, const std::string& what) {
  fail(code, "stage '" + stage + "': " + what);
}

// d_i = max over S of c_{i:S}, taken symbolically: within each i the
// coefficients must share one B-slope (zero for i < 5), so the max is the max
// of the constant parts.
std::map<int, ParamValue> boundary_maxima(const Decomposition& dec) {
  std::map<int, ParamValue> d;
  for (const auto& [idx, v] : dec.coefficients) {
    if (idx.genus_part == 0) continue;
    auto [it, inserted] = d.try_emplace(idx.genus_part, v);
    if (inserted) continue;
    if (it->second.slope() != v.slope()) {
      stage_fail("domination", ErrorCode::DecompositionFailure,
                 "mixed B-slopes among c_{" + std::to_string(idx.genus_part) + ":S}");
    }
    if (v.constant() > it->second.constant()) it->second = v;
  }
  return d;
}

Json pairing_entry(const ParamValue& v) { return param_to_json(v); }

}  // namespace

RigidityCertificate certify_kodaira_zero_m1010() {
  RigidityCertificate cert;
  cert.pipeline = "m10-10-kodaira-zero";
  cert.conclusion = "kappa_eq_zero_given_effectivity";

  ModuliSignature sig_m = standard_signature(10, 10);
  ModuliSignature sig_10(10, {});
  DivisorClass k = canonical_class(sig_m);
  DivisorClass d10 = logan_class(10);
  DivisorClass k3 = k3_locus_class();

  // Stage 1: boundary coefficients of K - D10 - 2 pi^* K3.
  Decomposition dec = decomposition_m1010();
  {
    CertStage stage;
    stage.name = "decomposition";
    Json coeffs = Json::object();
    for (const auto& [idx, v] : dec.coefficients) coeffs[idx.str()] = param_to_json(v);
    stage.data["input"] = divisor_to_json(k);
    stage.data["logan"] = divisor_to_json(d10);
    stage.data["k3_class"] = divisor_to_json(k3);
    stage.data["coefficients"] = std::move(coeffs);
    stage.data["nonboundary_part_vanishes"] = true;
    stage.data["all_coefficients_positive_for_B_ge_6"] = true;
    stage.verified = true;
    cert.stages.push_back(std::move(stage));
  }

  // Stage 2: peel K over the Theta_T certificates and Gamma(11,1,8).
  std::vector<CoveringCertificate> certs;
  std::vector<std::optional<BoundaryIndex>> cert_boundary;
  for (const auto& [idx, v] : dec.coefficients) {
    if (idx.genus_part != 0) continue;
    certs.push_back(CoveringCertificate{
        "theta:" + idx.side.str(),
        basis_divisor(sig_m, BasisClass::delta(idx)),
        theta_curve(idx.side),
        "Theta_T sweeps delta_{0:T}; consumed as a covering-family assumption"});
    cert_boundary.push_back(idx);
  }
  certs.push_back(CoveringCertificate{
      "gamma(11,1,8)", d10, gamma_curve_standard(PencilSpec{11, 1, 8}),
      "Gamma(11,1,8) sweeps the divisor of pointed curves moving in a pencil"});
  cert_boundary.push_back(std::nullopt);

  PeelingResult peeled = peel(k, certs);
  DivisorClass peeled_a = peeled.remainder;
  {
    const std::string name = "base-locus-peel";
    for (std::size_t j = 0; j < certs.size(); ++j) {
      const ParamValue expected = cert_boundary[j]
                                      ? dec.coefficients.at(*cert_boundary[j])
                                      : ParamValue(1);
      if (!(ParamValue(peeled.multiplicities[j]) == expected)) {
        stage_fail(name, ErrorCode::DecompositionFailure,
                   "multiplicity of '" + certs[j].name + "' is " +
                       to_fraction(peeled.multiplicities[j]) + ", expected " + expected.str());
      }
    }
    for (const auto& [b, v] : peeled_a.coefficients()) {
      if (b.is_delta() && b.delta_index().genus_part == 0) {
        stage_fail(name, ErrorCode::DecompositionFailure,
                   "remainder keeps " + basis_key(b) + " = " + v.str());
      }
      if (!v.b_free() && !v.certainly_positive()) {
        stage_fail(name, ErrorCode::ParameterAmbiguous,
                   "remainder coefficient " + basis_key(b) + " = " + v.str());
      }
    }
    CertStage stage;
    stage.name = name;
    Json cert_list = Json::array();
    for (std::size_t j = 0; j < certs.size(); ++j) {
      Json cj = Json::object();
      cj["name"] = certs[j].name;
      cj["component"] = divisor_to_json(certs[j].component);
      cj["curve"] = curve_to_json(certs[j].curve);
      cj["assumption"] = certs[j].assumption_note;
      cj["multiplicity"] = to_fraction(peeled.multiplicities[j]);
      cert_list.push_back(std::move(cj));
    }
    stage.data["certificates"] = std::move(cert_list);
    stage.data["remainder"] = divisor_to_json(peeled_a);
    stage.data["sweeps"] = peeled.sweeps_used;
    stage.data["active_set_solve"] = peeled.active_set_solved;
    Json trace = Json::array();
    for (const PeelingStep& step : peeled.trace) {
      Json tj = Json::object();
      tj["sweep"] = step.sweep;
      tj["certificate"] = certs[step.certificate].name;
      tj["increment"] = to_fraction(step.increment);
      tj["multiplicity"] = to_fraction(step.multiplicity_after);
      trace.push_back(std::move(tj));
    }
    stage.data["trace"] = std::move(trace);
    stage.data["multiplicities_match_decomposition"] = true;
    stage.verified = true;
    cert.stages.push_back(std::move(stage));
  }

  // Stage 3: A <= pi^* (2 K3 + sum d_i delta_i) coefficientwise.
  std::map<int, ParamValue> d = boundary_maxima(dec);
  std::vector<std::pair<ParamValue, DivisorClass>> b_terms{{ParamValue(2), k3}};
  for (const auto& [i, di] : d) {
    b_terms.emplace_back(di, basis_divisor(sig_10, unmarked_delta(sig_10, i)));
  }
  DivisorClass b_class = combine(b_terms);
  DivisorClass pulled_b = pullback_chain(b_class, pi_chain_m1010());
  {
    const std::string name = "domination";
    if (d.size() != 5) {
      stage_fail(name, ErrorCode::DecompositionFailure, "expected d_1..d_5");
    }
    auto check_key = [&](const BasisClass& b) {
      ParamValue gap = pulled_b.coefficient(b) - peeled_a.coefficient(b);
      if (!gap.certainly_nonnegative()) {
        stage_fail(name, ErrorCode::DecompositionFailure,
                   "A exceeds pi^*B at " + basis_key(b) + " by " + (-gap).str());
      }
    };
    for (const auto& [b, v] : peeled_a.coefficients()) check_key(b);
    for (const auto& [b, v] : pulled_b.coefficients()) check_key(b);
    CertStage stage;
    stage.name = name;
    Json dj = Json::object();
    for (const auto& [i, di] : d) dj["d" + std::to_string(i)] = param_to_json(di);
    stage.data["d"] = std::move(dj);
    stage.data["b_class"] = divisor_to_json(b_class);
    stage.data["pullback_b_class"] = divisor_to_json(pulled_b);
    stage.data["a_dominated"] = true;
    stage.verified = true;
    cert.stages.push_back(std::move(stage));
  }

  // Stage 4: negativity against the covering curves downstairs.
  {
    const std::string name = "m10-negativity";
    CertStage stage;
    stage.name = name;
    CurveClass gamma10 = gamma_curve(PencilSpec{10, 0, 0});
    ParamValue k3_pairing = pair(gamma10, k3);
    if (!(k3_pairing == ParamValue(-1))) {
      stage_fail(name, ErrorCode::ConsistencyFailure,
                 "pair(Gamma(10,0,0), K3 class) = " + k3_pairing.str() + ", expected -1");
    }
    ParamValue b_pairing = pair(gamma10, b_class);
    if (!(b_pairing == ParamValue(-2)) || !b_pairing.certainly_negative()) {
      stage_fail(name, ErrorCode::ConsistencyFailure,
                 "pair(Gamma(10,0,0), B) = " + b_pairing.str() + ", expected -2");
    }
    std::vector<std::pair<ParamValue, DivisorClass>> boundary_terms;
    for (const auto& [i, di] : d) {
      boundary_terms.emplace_back(di, basis_divisor(sig_10, unmarked_delta(sig_10, i)));
    }
    DivisorClass weighted_boundary = combine(boundary_terms);
    Json xi_list = Json::array();
    for (int i = 1; i <= 5; ++i) {
      CurveClass xi = xi_curve(i);
      ParamValue self = pair(xi, basis_divisor(sig_10, unmarked_delta(sig_10, i)));
      if (!(self == ParamValue(-1))) {
        stage_fail(name, ErrorCode::ConsistencyFailure,
                   "pair(xi_" + std::to_string(i) + ", delta_" + std::to_string(i) + ") = " +
                       self.str() + ", expected -1");
      }
      ParamValue weighted = pair(xi, weighted_boundary);
      if (!(weighted == -d.at(i)) || !weighted.certainly_negative()) {
        stage_fail(name, ErrorCode::ConsistencyFailure,
                   "pair(xi_" + std::to_string(i) + ", sum d_j delta_j) = " + weighted.str() +
                       ", expected -d_" + std::to_string(i));
      }
      Json xj = Json::object();
      xj["i"] = i;
      xj["curve"] = curve_to_json(xi);
      xj["delta_pairing"] = pairing_entry(self);
      xj["weighted_boundary_pairing"] = pairing_entry(weighted);
      xi_list.push_back(std::move(xj));
    }
    stage.data["gamma_10_0_0"] = curve_to_json(gamma10);
    stage.data["k3_pairing"] = pairing_entry(k3_pairing);
    stage.data["b_class_pairing"] = pairing_entry(b_pairing);
    stage.data["xi_curves"] = std::move(xi_list);
    stage.verified = true;
    cert.stages.push_back(std::move(stage));
  }

  // Stage 5: the geometric inputs consumed without proof.
  {
    CertStage stage;
    stage.name = "assumption-ledger";
    cert.assumptions = {
        {"The closure of the locus of genus-10 curves on K3 surfaces is an irreducible divisor "
         "of the recorded class, with B >= 6",
         "Eq. (3)"},
        {"Gamma(11,1,8) moves in a family covering the divisor where the ten marked points move "
         "in a pencil",
         "Lemma 4.1"},
        {"Theta_T moves in a family covering delta_{0:T} for every T with |T| >= 2",
         "Lemma 4.2"},
        {"Gamma(10,0,0) moves in a family covering the K3 locus", "Theorem 1"},
        {"xi_* Gamma(10-i,0,1) moves in a family covering delta_i, i = 1..5", "Theorem 1"},
        {"Boundary combinations sum d_i delta_i with d_i >= 0 are rigid", "Theorem 1"},
        {"Every intermediate class of the peeling iteration is effective", "Prop. 4.3"},
        {"Some positive multiple of the canonical class is effective (kappa >= 0)", "Eq. (4)"},
        {"Pencils of the stated type exist whenever h0 >= (g+1) - 3 delta - ell >= 2",
         "Prop. 2.1"},
    };
    Json list = Json::array();
    for (const Assumption& a : cert.assumptions) {
      Json aj = Json::object();
      aj["claim"] = a.claim;
      aj["source"] = a.source;
      list.push_back(std::move(aj));
    }
    stage.data["assumptions"] = std::move(list);
    stage.verified = true;
    cert.stages.push_back(std::move(stage));
  }

  return cert;
}

FaceCheckReport extremal_face_check() {
  PencilSpec spec{11, 1, 0};
  CurveClass gamma = gamma_curve(spec);
  MapChain chain{MapDescriptor::forgetful(e_label(1, 1)), MapDescriptor::forgetful(e_label(1, 2))};
  CurveClass b_curve = pushforward_curve(gamma, chain);
  ModuliSignature sig_10(10, {});

  ParamValue lambda_pairing = b_curve.pairing(BasisClass::lambda());
  if (!(lambda_pairing == ParamValue(22))) {
    fail(ErrorCode::FaceCheckFailure, "pair(B, lambda) = " + lambda_pairing.str() + ", expected 22");
  }
  ParamValue dirr_pairing = b_curve.pairing(BasisClass::delta_irr());
  if (!(dirr_pairing == ParamValue(154))) {
    fail(ErrorCode::FaceCheckFailure,
         "pair(B, delta_irr) = " + dirr_pairing.str() + ", expected 154");
  }

  FaceCheckReport report{b_curve, {}, Json::object()};
  Json pairings = Json::object();
  pairings["lambda"] = param_to_json(lambda_pairing);
  pairings["dirr"] = param_to_json(dirr_pairing);
  std::vector<std::pair<std::string, DivisorClass>> face;
  face.emplace_back("k3_locus", k3_locus_class());
  for (int i = 1; i <= 5; ++i) {
    face.emplace_back(unmarked_delta(sig_10, i).str(),
                      basis_divisor(sig_10, unmarked_delta(sig_10, i)));
  }
  for (const auto& [name, cls] : face) {
    ParamValue v = pair(b_curve, cls);
    if (!v.is_zero()) {
      fail(ErrorCode::FaceCheckFailure, "pair(B, " + name + ") = " + v.str() + ", expected 0");
    }
    report.annihilated.push_back(name);
    pairings[name] = param_to_json(v);
  }
  report.details["curve"] = curve_to_json(b_curve);
  report.details["pairings"] = std::move(pairings);
  report.details["annihilated"] = report.annihilated;
  return report;
}

RigidityCertificate extremal_face_certificate() {
  RigidityCertificate cert;
  cert.pipeline = "m10-extremal-face";
  cert.conclusion = "face_of_effective_cone";
  FaceCheckReport report = extremal_face_check();
  CertStage stage;
  stage.name = "nef-curve-annihilator";
  stage.data = report.details;
  stage.verified = true;
  cert.stages.push_back(std::move(stage));
  cert.assumptions = {
      {"The pushforward of Gamma(11,1,0) moves in a family covering the moduli space, hence is "
       "nef",
       "Prop. 6.1"},
      {"The K3-locus class and delta_1..delta_5 are classes of irreducible effective divisors",
       "Prop. 6.1"},
  };
  return cert;
}

SlopeBoundResult slope_bound(int g, int delta) {
  if (g < 3) {
    fail(ErrorCode::InvalidSpec, "slope bound requires g >= 3, got " + std::to_string(g));
  }
  PencilSpec spec{g + delta, delta, 0};
  validate_spec(spec);
  CurveClass gamma = gamma_curve(spec);
  MapChain chain;
  for (int i = 1; i <= delta; ++i) {
    chain.push_back(MapDescriptor::forgetful(e_label(i, 1)));
    chain.push_back(MapDescriptor::forgetful(e_label(i, 2)));
  }
  CurveClass curve = pushforward_curve(gamma, chain);
  ModuliSignature sig_g(g, {});

  Rational lambda_pairing = curve.pairing(BasisClass::lambda()).exact();
  if (lambda_pairing <= 0) {
    fail(ErrorCode::RatioMismatch, "lambda pairing " + to_fraction(lambda_pairing) + " <= 0");
  }
  Rational boundary_total = curve.pairing(BasisClass::delta_irr()).exact();
  for (int i = 1; 2 * i <= g; ++i) {
    ParamValue v = curve.pairing(unmarked_delta(sig_g, i));
    if (!v.is_zero()) {
      fail(ErrorCode::RatioMismatch,
           "pairing with delta_" + std::to_string(i) + " is " + v.str() + ", expected 0");
    }
    boundary_total += v.exact();
  }
  Rational ratio = boundary_total / lambda_pairing;
  Rational threshold = Rational(6) + Rational(12 - delta) / (g + 1);
  if (ratio != threshold) {
    fail(ErrorCode::RatioMismatch, "boundary/lambda ratio " + to_fraction(ratio) +
                                       " differs from threshold " + to_fraction(threshold));
  }
  return SlopeBoundResult{std::move(curve), std::move(ratio), std::move(threshold)};
}

RigidityCertificate negative_control() {
  RigidityCertificate cert;
  cert.pipeline = "negative-control";
  cert.conclusion = "verification_failed_by_design";
  CertStage stage;
  stage.name = "non-covering-peel";
  stage.verified = false;
  ModuliSignature sig_m = standard_signature(10, 10);
  CoveringCertificate bogus{
      "bogus:d:0:{1,2}",
      basis_divisor(sig_m, BasisClass::delta(canonicalize_index(
                               1, LabelSet({Label(1L), Label(2L)}), sig_m))),
      gamma_curve_standard(PencilSpec{11, 1, 8}),
      "control certificate whose curve does not pair negatively"};
  try {
    peel(canonical_class(sig_m), {bogus});
    stage.data["error"] = "peel unexpectedly accepted a non-covering certificate";
  } catch (const CalcError& e) {
    stage.data["error"] = e.what();
    stage.data["error_code"] = error_name(e.code());
  }
  cert.stages.push_back(std::move(stage));
  return cert;
}

std::vector<std::string> pipeline_names() {
  return {"m10-10-kodaira-zero", "m10-extremal-face", "negative-control"};
}

RigidityCertificate run_pipeline(const std::string& name) {
  if (name == "m10-10-kodaira-zero") return certify_kodaira_zero_m1010();
  if (name == "m10-extremal-face") return extremal_face_certificate();
  if (name == "negative-control") return negative_control();
  fail(ErrorCode::InvalidSpec, "unknown pipeline '" + name + "'");
}

}  // namespace modcalc
