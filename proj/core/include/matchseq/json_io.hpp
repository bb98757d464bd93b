#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "matchseq/decompositions.hpp"
#include "matchseq/hypergraph.hpp"
#include "matchseq/oracle.hpp"
#include "matchseq/ordering.hpp"
#include "matchseq/theorem.hpp"

namespace matchseq {

using json = nlohmann::json;

/// { "parts": [n1,...], "edges": [ { "id": 0, "vertices": [[part, idx], ...] }, ... ] }
json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

/// { "labels": [edge id at position 0, ...] }
json ordering_to_json(const Ordering& l);
Ordering ordering_from_json(const json& j);

/// Ordering plus { "s": ..., "r": ..., "cyclic": ... }.
json certified_to_json(const CertifiedOrdering& c);
CertifiedOrdering certified_from_json(const json& j);

/// { "ms": value or "unknown", "witness": ordering or null, "nodes": ... }
json value_result_to_json(const ValueResult& v, const Ordering* witness = nullptr);

/// { "dims": [di, dj], "matchings": [[edge ids of cell (0,0)], ...] } row-major.
json family_to_json(const MatchingFamily& fam);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace matchseq
