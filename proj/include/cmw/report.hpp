#pragma once

// JSON views of library results. Keys keep a fixed order and vertices are
// written as labels in document order, so equal inputs give equal bytes.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cmw/cm_oracle.hpp"
#include "cmw/covers.hpp"
#include "cmw/crossvalidate.hpp"
#include "cmw/monomial.hpp"
#include "cmw/weight_conditions.hpp"

namespace cmw {

using Json = nlohmann::ordered_json;

/// FNV-1a 64-bit, as 16 hex digits.
std::string input_digest(std::string_view text);

Json certificate_json(const WeightedGraph& g, const CMCertificate& cert);
/// {"support": [...], "level": {label: level}}
Json cover_json(const WeightedGraph& g, const WeightedCover& c);
/// One {variable: exponent} map per generator, variables sorted by name.
Json ideal_json(const MonomialIdeal& ideal);
Json oracle_json(const OracleResult& r, Characteristic characteristic, OracleRoute route);
/// Graph document as a JSON value (same content as serialize_graph).
Json graph_json(const WeightedGraph& g);
Json cross_json(const CrossOptions& options, const CrossResult& r);

/// {"command", "input_digest", "seed"?, "results", "timing"?}
struct RunReport {
    std::string command;
    std::string input_digest;
    std::optional<std::uint64_t> seed;
    Json results;
    std::optional<double> seconds;

    Json to_json() const;
};

}  // namespace cmw
