#pragma once

#include <string>

#include <json.hpp>

#include "pickdisc/embedding.hpp"
#include "pickdisc/series.hpp"

namespace pickdisc {

using Json = nlohmann::json;

// {"dimension": d, "coordinates": [{"num": [[re, im], ...], "den": [[re, im], ...]}, ...]},
// coefficients lowest degree first.
Json embedding_to_json(const EmbeddingMap& f);
EmbeddingMap embedding_from_json(const Json& j);

// {"mode": "exact" | "float", "c": [...], "generator": "..."}; exact entries
// are [num, den] integer pairs.
Json coefficients_to_json(const CoefficientSequence& c);
CoefficientSequence coefficients_from_json(const Json& j);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

// Stable serialization: keys sorted, floating values with 17 significant
// digits, so identical reports are byte-identical.
std::string dump_deterministic(const Json& j, int indent = 2);

}  // namespace pickdisc
