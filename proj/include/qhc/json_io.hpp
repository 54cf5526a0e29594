#pragma once

#include <string>

#include <json.hpp>

#include "qhc/classical.hpp"
#include "qhc/factorize.hpp"
#include "qhc/indexmap.hpp"
#include "qhc/matrix.hpp"
#include "qhc/quantum.hpp"
#include "qhc/sampler.hpp"

namespace qhc {

// Reports preserve key insertion order so identical runs emit identical bytes.
using Json = nlohmann::ordered_json;

// Serializes with floats at 17 significant digits (lossless for binary64)
// and complex numbers as [re, im] pairs.
std::string dump_json(const Json& j, int indent = 2);

// Parses a file; ParseError carries the parser's position diagnostics.
Json load_json_file(const std::string& path);
Json parse_json(const std::string& text);

ProbabilityState state_from_json(const Json& j);
Json state_to_json(const ProbabilityState& state);

ClassicalObservable observable_from_json(const Json& j);
Json observable_to_json(const ClassicalObservable& obs);

// Square complex matrices: {"dim": N, "entries": [[[re,im], ...], ...]}.
ComplexMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const ComplexMatrix& m);

// {"factors": [n1,...], "convention": "row-major" | "col-major"
//  | {"table": [[j,k,...], ...]}}.
IndexMap map_from_json(const Json& j);
Json map_to_json(const IndexMap& map);

Json report_to_json(const InequalityReport& r);
Json report_to_json(const QuantumSubadditivityReport& r);
Json report_to_json(const QuantumSsaReport& r);
Json report_to_json(const SampleReport& r);
Json report_to_json(const ClassicalFactorization& r);
Json report_to_json(const QuantumFactorization& r);

// Lightweight schema check for the report records this library emits.
// Recognized kinds: "inequality", "quantum-subadditivity", "quantum-ssa",
// "sample", "classical-factorization", "quantum-factorization", "verdict".
bool matches_report_schema(const Json& j, const std::string& kind);

}  // namespace qhc
