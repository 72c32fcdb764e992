#pragma once

// JSON encodings shared by the cache, the CLI and the reports.

#include "json.hpp"

#include "hecke/endomorphism.hpp"
#include "hecke/quiver.hpp"
#include "hecke/standard_paths.hpp"
#include "hecke/verify.hpp"
#include "hecke/zero_hecke.hpp"

namespace hecke {

using Json = nlohmann::json;

/// Coefficients lowest degree first; machine-size values as numbers, others as strings.
Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

/// {terms:[{word, poly}]}, word as 1-based letters.
Json hecke_to_json(const HeckeElement& h);
/// {source, target, terms:[{word, poly}]}
Json hom_to_json(const HomElement& h);
Json zb_to_json(const ZBElement& z);
Json factorization_to_json(const CoxeterSystem& sys, const Factorization& f);

/// Vertex list, 1-based subsets.
Json path_to_json(const Path& p);
Json path_element_to_json(const PathElement& p);
Json trace_to_json(const std::vector<TraceStep>& trace);
Json spanning_to_json(const SpanningReport& r, const std::vector<std::string>& notes = {});
Json family_to_json(const FamilyReport& f);

}  // namespace hecke
