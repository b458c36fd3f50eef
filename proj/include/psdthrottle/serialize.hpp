#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "psdthrottle/closed_forms.hpp"
#include "psdthrottle/cops.hpp"
#include "psdthrottle/psd.hpp"
#include "psdthrottle/throttling.hpp"

namespace psdthrottle {

/// Infinity becomes null.
nlohmann::json to_json(const ExtendedInt& v);
nlohmann::json to_json(VertexSet s, bool one_indexed = false);

/// {parameter, value, witness, pt, k_searched}.
nlohmann::json to_json(const ThrottlingWitness& w, bool one_indexed = false);
nlohmann::json to_json(const PropagationTrace& trace, bool one_indexed = false);
nlohmann::json to_json(const FamilyRecord& r);
nlohmann::json to_json(const BoundEntry& e);
nlohmann::json to_json(const BoundReport& r);

/// Header row, then one row per entry.
std::string bound_report_tsv(const BoundReport& r, bool header = true);

}  // namespace psdthrottle
