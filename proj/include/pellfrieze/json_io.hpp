#pragma once

#include "pellfrieze/analysis.hpp"
#include "pellfrieze/frieze.hpp"
#include "pellfrieze/geometry.hpp"

#include <json.hpp>

namespace pellfrieze {

/// {"n": 10, "arcs": [[1,9],[2,8],...]} with arcs as sorted pairs.
nlohmann::json dissection_to_json(const Dissection& d);

/// Parses the same format; throws ParseError on malformed documents and
/// InvalidDissection on crossing/duplicate/boundary arcs.
Dissection dissection_from_json(const nlohmann::json& j);

/// {"n": 5, "weights": {"0,2": "√2", ...}} over all pairs i < j.
nlohmann::json frieze_to_json(const FriezeTable& t);

nlohmann::json scan_report_to_json(const analysis::ScanReport& r);
nlohmann::json lemma56_report_to_json(const analysis::Lemma56Report& r);

}  // namespace pellfrieze
