#include "modcalc/json_io.hpp"

#include "modcalc/errors.hpp"

namespace modcalc {

std::string basis_key(const BasisClass& b) { return b.str(); }

namespace {

LabelSet parse_label_braces(const std::string& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    fail(ErrorCode::ParseError, "malformed label set '" + text + "'");
  }
  std::vector<Label> labels;
  std::string body = text.substr(1, text.size() - 2);
  std::size_t start = 0;
  while (start < body.size()) {
    std::size_t comma = body.find(',', start);
    if (comma == std::string::npos) comma = body.size();
    if (comma == start) fail(ErrorCode::ParseError, "empty label in '" + text + "'");
    labels.emplace_back(body.substr(start, comma - start));
    start = comma + 1;
  }
  return LabelSet(std::move(labels));
}

}  // namespace

BasisClass parse_basis_key(const std::string& key, const ModuliSignature& sig) {
  if (key == "lambda") return BasisClass::lambda();
  if (key == "dirr") return BasisClass::delta_irr();
  if (key.rfind("psi:", 0) == 0) {
    BasisClass b = BasisClass::psi(Label(key.substr(4)));
    validate_basis_class(b, sig);
    return b;
  }
  if (key.rfind("d:", 0) == 0) {
    std::size_t second = key.find(':', 2);
    if (second == std::string::npos) fail(ErrorCode::ParseError, "malformed key '" + key + "'");
    int i = 0;
    try {
      i = std::stoi(key.substr(2, second - 2));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "malformed boundary genus in '" + key + "'");
    }
    LabelSet side = parse_label_braces(key.substr(second + 1));
    return BasisClass::delta(canonicalize_index(i, side, sig));
  }
  fail(ErrorCode::ParseError, "unknown coefficient key '" + key + "'");
}

Json param_to_json(const ParamValue& v) {
  if (v.b_free()) return Json(to_fraction(v.constant()));
  Json j = Json::object();
  j["const"] = to_fraction(v.constant());
  j["B"] = to_fraction(v.slope());
  return j;
}

ParamValue param_from_json(const Json& j) {
  if (j.is_string()) return ParamValue(parse_fraction(j.get<std::string>()));
  if (j.is_object()) {
    if (!j.contains("const") || !j.contains("B")) {
      fail(ErrorCode::ParseError, "parametric value needs 'const' and 'B'");
    }
    return ParamValue(parse_fraction(j.at("const").get<std::string>()),
                      parse_fraction(j.at("B").get<std::string>()));
  }
  fail(ErrorCode::ParseError, "expected \"p/q\" or {const, B} value");
}

Json label_to_json(const Label& l) {
  if (l.numeric() && l.text().size() <= 15 && (l.text() == "0" || l.text()[0] != '0')) {
    return Json(std::stoll(l.text()));
  }
  return Json(l.text());
}

Label label_from_json(const Json& j) {
  if (j.is_number_integer()) return Label(std::to_string(j.get<long long>()));
  if (j.is_string()) return Label(j.get<std::string>());
  fail(ErrorCode::ParseError, "marking label must be a string or integer");
}

Json signature_to_json(const ModuliSignature& sig) {
  Json j = Json::object();
  j["g"] = sig.genus();
  Json marks = Json::array();
  for (const Label& l : sig.markings()) marks.push_back(label_to_json(l));
  j["markings"] = std::move(marks);
  return j;
}

ModuliSignature signature_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("g") || !j.contains("markings")) {
    fail(ErrorCode::ParseError, "signature needs 'g' and 'markings'");
  }
  std::vector<Label> labels;
  for (const Json& m : j.at("markings")) labels.push_back(label_from_json(m));
  return ModuliSignature(j.at("g").get<int>(), LabelSet(std::move(labels)));
}

namespace {

Json sparse_to_json(const ModuliSignature& sig, const std::map<BasisClass, ParamValue>& entries,
                    bool curve) {
  Json j = Json::object();
  if (curve) j["curve"] = true;
  j["sig"] = signature_to_json(sig);
  Json coeffs = Json::object();
  for (const auto& [b, v] : entries) coeffs[basis_key(b)] = param_to_json(v);
  j["coeffs"] = std::move(coeffs);
  return j;
}

std::vector<std::pair<BasisClass, ParamValue>> sparse_from_json(const Json& j,
                                                                const ModuliSignature& sig) {
  if (!j.contains("coeffs") || !j.at("coeffs").is_object()) {
    fail(ErrorCode::ParseError, "missing 'coeffs' object");
  }
  std::vector<std::pair<BasisClass, ParamValue>> entries;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    entries.emplace_back(parse_basis_key(key, sig), param_from_json(value));
  }
  return entries;
}

}  // namespace

Json divisor_to_json(const DivisorClass& d) {
  return sparse_to_json(d.signature(), d.coefficients(), false);
}

DivisorClass divisor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sig")) fail(ErrorCode::ParseError, "divisor needs 'sig'");
  if (j.value("curve", false)) fail(ErrorCode::ParseError, "expected a divisor, got a curve");
  ModuliSignature sig = signature_from_json(j.at("sig"));
  return DivisorClass(sig, sparse_from_json(j, sig));
}

Json curve_to_json(const CurveClass& c) {
  return sparse_to_json(c.signature(), c.pairings(), true);
}

CurveClass curve_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sig")) fail(ErrorCode::ParseError, "curve needs 'sig'");
  if (!j.value("curve", false)) fail(ErrorCode::ParseError, "expected a curve ('curve': true)");
  ModuliSignature sig = signature_from_json(j.at("sig"));
  return curve_from_pairings(sig, sparse_from_json(j, sig));
}

Json chain_to_json(const MapChain& chain) {
  Json out = Json::array();
  for (const MapDescriptor& m : chain) {
    Json step = Json::object();
    switch (m.kind()) {
      case MapDescriptor::Kind::Forgetful:
        step["forget"] = label_to_json(m.forgotten());
        break;
      case MapDescriptor::Kind::Relabeling: {
        Json perm = Json::object();
        for (const auto& [from, to] : m.relabel_map()) perm[from.text()] = to.text();
        step["perm"] = std::move(perm);
        break;
      }
      case MapDescriptor::Kind::AttachRationalTail: {
        Json tail = Json::object();
        Json t = Json::array();
        for (const Label& l : m.tail_markings()) t.push_back(label_to_json(l));
        tail["T"] = std::move(t);
        tail["r"] = label_to_json(m.glue_point());
        step["tail"] = std::move(tail);
        break;
      }
      case MapDescriptor::Kind::AttachFixedCurve: {
        Json attach = Json::object();
        attach["i"] = m.attached_genus();
        attach["x"] = label_to_json(m.glue_point());
        step["attach"] = std::move(attach);
        break;
      }
    }
    out.push_back(std::move(step));
  }
  return out;
}

MapChain chain_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "map chain must be an array");
  MapChain chain;
  for (const Json& step : j) {
    if (!step.is_object() || step.size() != 1) {
      fail(ErrorCode::ParseError, "each chain step must be a one-key object");
    }
    if (step.contains("forget")) {
      chain.push_back(MapDescriptor::forgetful(label_from_json(step.at("forget"))));
    } else if (step.contains("perm")) {
      std::map<Label, Label> map;
      for (const auto& [from, to] : step.at("perm").items()) {
        map.emplace(Label(from), label_from_json(to));
      }
      chain.push_back(MapDescriptor::relabeling(std::move(map)));
    } else if (step.contains("tail")) {
      const Json& tail = step.at("tail");
      std::vector<Label> t;
      for (const Json& l : tail.at("T")) t.push_back(label_from_json(l));
      chain.push_back(
          MapDescriptor::attach_rational_tail(LabelSet(std::move(t)), label_from_json(tail.at("r"))));
    } else if (step.contains("attach")) {
      const Json& attach = step.at("attach");
      chain.push_back(MapDescriptor::attach_fixed_curve(attach.at("i").get<int>(),
                                                        label_from_json(attach.at("x"))));
    } else {
      fail(ErrorCode::ParseError, "unknown chain step " + step.dump());
    }
  }
  return chain;
}

std::string serialize(const DivisorClass& d) { return divisor_to_json(d).dump(); }

std::string serialize(const CurveClass& c) { return curve_to_json(c).dump(); }

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::ParseError, "malformed JSON");
  return j;
}

}  // namespace modcalc
