#pragma once

// JSON forms of presentations and reports. Keys are emitted in sorted order,
// so equal inputs give byte-identical documents.

#include <json.hpp>

#include "qpl/dg.hpp"
#include "qpl/hilbert.hpp"
#include "qpl/oracle.hpp"
#include "qpl/quaddual.hpp"

namespace qpl {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "0.1.0";

/// Small integers become JSON numbers, larger ones decimal strings.
json integer_json(const Integer& x);
json series_json(const SeriesCoeffs& a);

json to_json(const OrderSpec& spec);
OrderSpec order_from_json(const json& j);

/// [{"coeff": "p/q", "word": ["q[1,2|3]", ...]}, ...] in word order.
json poly_json(const FreePoly& p, const Alphabet& a);
FreePoly poly_from_json(const json& j, const Alphabet& a);

json to_json(const Presentation& p);
/// Inverse of to_json; throws ParseError on malformed input.
Presentation presentation_from_json(const json& j);

json to_json(const GroebnerReport& r, const Alphabet& a);
json to_json(const ConsistencyReport& r);
json to_json(const DualMatchReport& r);
json to_json(const RecursionReport& r);
json to_json(const DifferentialReport& r);
json to_json(const ChainComplexDims& r);
json to_json(const NumericReport& r);

}  // namespace qpl
