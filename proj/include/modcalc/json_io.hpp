#pragma once

#include "modcalc/curve.hpp"
#include "modcalc/divisor.hpp"
#include "modcalc/moduli_maps.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace modcalc {

using Json = nlohmann::ordered_json;

// Key syntax for coefficient maps: "lambda", "psi:<label>", "dirr",
// "d:<i>:{<labels>}" with the canonical boundary representative.
std::string basis_key(const BasisClass& b);
BasisClass parse_basis_key(const std::string& key, const ModuliSignature& sig);

// Rationals render as "p/q" strings; a ParamValue with nonzero slope uses the
// object form {"const": "p/q", "B": "p/q"}.
Json param_to_json(const ParamValue& v);
ParamValue param_from_json(const Json& j);

// All-digit labels serialize as JSON numbers, everything else as strings.
Json label_to_json(const Label& l);
Label label_from_json(const Json& j);

Json signature_to_json(const ModuliSignature& sig);
ModuliSignature signature_from_json(const Json& j);

Json divisor_to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const Json& j);

// Same shape as a divisor with the top-level marker "curve": true.
Json curve_to_json(const CurveClass& c);
CurveClass curve_from_json(const Json& j);

// [{"forget": 2}, {"perm": {"1": "10", ...}}, {"tail": {"T": [1,2], "r": "r"}},
//  {"attach": {"i": 3, "x": "x"}}]
Json chain_to_json(const MapChain& chain);
MapChain chain_from_json(const Json& j);

// Canonical single-line text used for files and round-trip checks.
std::string serialize(const DivisorClass& d);
std::string serialize(const CurveClass& c);

// Parses either shape; throws ParseError on malformed input.
Json parse_json_text(const std::string& text);

}  // namespace modcalc
