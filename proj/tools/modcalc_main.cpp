#include "modcalc/json_io.hpp"
#include "modcalc/lefschetz.hpp"
#include "modcalc/rigidity.hpp"
#include "modcalc/standard_classes.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace modcalc;

// Verification failures exit 1; anything malformed on the way in exits 2.
int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConsistencyFailure:
    case ErrorCode::NoConvergence:
    case ErrorCode::DecompositionFailure:
    case ErrorCode::FaceCheckFailure:
    case ErrorCode::RatioMismatch:
      return 1;
    default:
      return 2;
  }
}

std::optional<Rational> pinned_b() {
  const char* env = std::getenv("MODCALC_B");
  if (env == nullptr || *env == '\0') return std::nullopt;
  Rational b = parse_fraction(env);
  if (b < 6) {
    fail(ErrorCode::InvalidSpec, "MODCALC_B must be >= 6, got " + std::string(env));
  }
  return b;
}

// Text rendering of a value, honoring the optional display pin for B.
std::string show(const ParamValue& v, const std::optional<Rational>& b) {
  if (v.b_free()) return to_fraction(v.constant());
  if (b) return to_fraction(v.at(*b)) + " (at B=" + to_fraction(*b) + ")";
  return v.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidSpec, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) fail(ErrorCode::InvalidSpec, "failed writing '" + path + "'");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

int cmd_invariants(int g, int delta, int ell, bool as_json) {
  PencilSpec spec{g, delta, ell};
  validate_spec(spec);
  CurveClass gamma = gamma_curve(spec);
  SurfaceInvariants inv = pencil_surface_invariants(spec);
  CrossCheckReport report = cross_check(spec);

  if (as_json) {
    Json j = Json::object();
    j["g"] = g;
    j["delta"] = delta;
    j["ell"] = ell;
    j["sig"] = signature_to_json(gamma.signature());
    Json pairings = Json::object();
    for (const auto& [b, v] : gamma.pairings()) pairings[basis_key(b)] = param_to_json(v);
    j["pairings"] = std::move(pairings);
    Json surface = Json::object();
    surface["c1_sq"] = to_fraction(inv.c1_sq);
    surface["c2"] = to_fraction(inv.c2);
    surface["chi_holo"] = to_fraction(inv.chi_holo);
    surface["base_points"] = inv.base_points;
    j["surface"] = std::move(surface);
    Json checks = Json::array();
    for (const CrossCheckItem& item : report.items) {
      Json cj = Json::object();
      cj["identity"] = item.identity;
      cj["lhs"] = item.lhs;
      cj["rhs"] = item.rhs;
      cj["ok"] = item.ok;
      checks.push_back(std::move(cj));
    }
    j["cross_check"] = std::move(checks);
    std::cout << j.dump() << "\n";
    return 0;
  }

  auto b = pinned_b();
  std::cout << "Gamma(" << g << "," << delta << "," << ell << ") on "
            << gamma.signature().str() << "\n";
  std::cout << "pairings:\n";
  for (const auto& [key, v] : gamma.pairings()) {
    std::cout << "  " << basis_key(key) << " = " << show(v, b) << "\n";
  }
  std::cout << "  (all other generators pair to 0)\n";
  std::cout << "surface invariants:\n";
  std::cout << "  c1^2 = " << to_fraction(inv.c1_sq) << ", c2 = " << to_fraction(inv.c2)
            << ", chi = " << to_fraction(inv.chi_holo) << ", base points = " << inv.base_points
            << "\n";
  std::cout << "cross-checks:\n";
  for (const CrossCheckItem& item : report.items) {
    std::cout << "  " << item.identity << ": " << item.lhs << " == " << item.rhs << "  "
              << (item.ok ? "ok" : "FAIL") << "\n";
  }
  return 0;
}

int cmd_pair(const std::string& curve_path, const std::string& divisor_path) {
  CurveClass curve = curve_from_json(read_json_file(curve_path));
  DivisorClass divisor = divisor_from_json(read_json_file(divisor_path));
  ParamValue value = pair(curve, divisor);
  std::cout << show(value, pinned_b()) << "\n";
  return 0;
}

int cmd_certify(const std::string& name, std::string output) {
  const auto names = pipeline_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string known;
    for (const std::string& p : names) known += " " + p;
    std::cerr << "unknown pipeline '" << name << "'; known:" << known << "\n";
    return 2;
  }
  if (output.empty()) output = name + ".cert.json";
  RigidityCertificate cert;
  try {
    cert = run_pipeline(name);
  } catch (const CalcError& e) {
    std::cerr << "certify " << name << ": " << e.what() << "\n";
    return 1;
  }
  write_text_file(output, cert.to_json().dump(2) + "\n");
  std::size_t ok = 0;
  for (const CertStage& s : cert.stages) ok += s.verified ? 1 : 0;
  std::cout << "certify " << name << ": stages " << ok << "/" << cert.stages.size()
            << " verified; certificate written to " << output << "\n";
  if (name == "m10-extremal-face" && cert.verified()) {
    const Json& annihilated = cert.stages.front().data.at("annihilated");
    std::cout << "annihilated classes (" << annihilated.size() << "):";
    for (const Json& a : annihilated) std::cout << " " << a.get<std::string>();
    std::cout << "\n";
  }
  if (!cert.verified()) {
    std::cout << "failing stage: " << cert.failing_stage() << "\n";
    return 1;
  }
  std::cout << "conclusion: " << cert.conclusion << "\n";
  return 0;
}

int cmd_slope_scan(int g_min, int g_max, int d_min, int d_max, bool as_json) {
  Json rows = Json::array();
  Json skipped = Json::array();
  std::vector<std::string> lines;
  for (int g = g_min; g <= g_max; ++g) {
    for (int d = d_min; d <= d_max; ++d) {
      PencilSpec spec{g + d, d, 0};
      if (g < 3 || !spec_valid(spec)) {
        Json sj = Json::object();
        sj["g"] = g;
        sj["delta"] = d;
        sj["reason"] = g < 3 ? "g >= 3 violated" : "no valid pencil";
        skipped.push_back(std::move(sj));
        lines.push_back("  g=" + std::to_string(g) + " delta=" + std::to_string(d) +
                        "  skipped (" + (g < 3 ? "g >= 3 violated" : "no valid pencil") + ")");
        continue;
      }
      SlopeBoundResult r = slope_bound(g, d);
      Rational lambda = r.curve.pairing(BasisClass::lambda()).exact();
      Rational boundary = r.curve.pairing(BasisClass::delta_irr()).exact();
      if (as_json) {
        Json rj = Json::object();
        rj["g"] = g;
        rj["delta"] = d;
        rj["threshold"] = to_fraction(r.threshold);
        rj["lambda"] = to_fraction(lambda);
        rj["boundary"] = to_fraction(boundary);
        rows.push_back(std::move(rj));
      } else {
        lines.push_back("  g=" + std::to_string(g) + " delta=" + std::to_string(d) +
                        "  threshold=" + to_fraction(r.threshold) + "  lambda=" +
                        to_fraction(lambda) + "  boundary=" + to_fraction(boundary));
      }
    }
  }
  if (as_json) {
    Json j = Json::object();
    j["rows"] = std::move(rows);
    j["skipped"] = std::move(skipped);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "slope thresholds 6 + (12 - delta)/(g + 1), verified against the pencil curves:\n";
    for (const std::string& line : lines) std::cout << line << "\n";
  }
  return 0;
}

int cmd_class(const std::string& name, std::optional<int> g, std::optional<int> n,
              const std::string& output) {
  std::optional<DivisorClass> cls;
  if (name == "canonical") {
    if (!g || !n) fail(ErrorCode::InvalidSpec, "class canonical requires --g and --n");
    cls = canonical_class(standard_signature(*g, *n));
  } else if (name == "logan") {
    if (!g) fail(ErrorCode::InvalidSpec, "class logan requires --g");
    cls = logan_class(*g);
  } else if (name == "k3") {
    cls = k3_locus_class();
  } else {
    fail(ErrorCode::InvalidSpec, "unknown class '" + name + "' (canonical|logan|k3)");
  }
  std::string text = serialize(*cls) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    write_text_file(output, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modcalc: exact divisor-class calculus on moduli of stable pointed curves"};
  app.require_subcommand(1);

  int g = 0, delta = 0, ell = 0;
  bool as_json = false;
  CLI::App* invariants = app.add_subcommand(
      "invariants", "pairing table and surface invariants of a pencil curve");
  invariants->add_option("--g", g, "K3 polarization genus")->required();
  invariants->add_option("--delta", delta, "number of doubled points")->required();
  invariants->add_option("--ell", ell, "number of simple points")->required();
  invariants->add_flag("--json", as_json, "machine-readable output");

  std::string curve_path, divisor_path;
  CLI::App* pair_cmd = app.add_subcommand("pair", "pair a curve file with a divisor file");
  pair_cmd->add_option("curve", curve_path, "curve JSON file")->required();
  pair_cmd->add_option("divisor", divisor_path, "divisor JSON file")->required();

  std::string pipeline, cert_output;
  CLI::App* certify = app.add_subcommand("certify", "run a verification pipeline");
  certify->add_option("pipeline", pipeline, "pipeline name")->required();
  certify->add_option("--output", cert_output, "certificate output path");

  int g_min = 3, g_max = 40, d_min = 0, d_max = 8;
  bool scan_json = false;
  CLI::App* scan = app.add_subcommand("slope-scan", "slope thresholds over a (g, delta) grid");
  scan->add_option("--g-min", g_min, "smallest genus");
  scan->add_option("--g-max", g_max, "largest genus");
  scan->add_option("--delta-min", d_min, "smallest delta");
  scan->add_option("--delta-max", d_max, "largest delta");
  scan->add_flag("--json", scan_json, "machine-readable output");

  std::string class_name, class_output;
  int class_g = 0, class_n = 0;
  CLI::App* class_cmd = app.add_subcommand("class", "emit a named standard class as JSON");
  class_cmd->add_option("--name", class_name, "canonical|logan|k3")->required();
  CLI::Option* opt_g = class_cmd->add_option("--g", class_g, "genus");
  CLI::Option* opt_n = class_cmd->add_option("--n", class_n, "number of markings");
  class_cmd->add_option("--output", class_output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (invariants->parsed()) return cmd_invariants(g, delta, ell, as_json);
    if (pair_cmd->parsed()) return cmd_pair(curve_path, divisor_path);
    if (certify->parsed()) return cmd_certify(pipeline, cert_output);
    if (scan->parsed()) return cmd_slope_scan(g_min, g_max, d_min, d_max, scan_json);
    if (class_cmd->parsed()) {
      std::optional<int> og, on;
      if (opt_g->count() > 0) og = class_g;
      if (opt_n->count() > 0) on = class_n;
      return cmd_class(class_name, og, on, class_output);
    }
  } catch (const CalcError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
