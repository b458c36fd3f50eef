#include "psdthrottle/serialize.hpp"

#include <sstream>

namespace psdthrottle {

using nlohmann::json;

namespace {

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const ExtendedInt& v) { return v.is_infinite() ? json(nullptr) : json(v.value()); }

json to_json(VertexSet s, bool one_indexed) {
  json out = json::array();
  for (Vertex v : s) out.push_back(v + (one_indexed ? 1 : 0));
  return out;
}

json to_json(const ThrottlingWitness& w, bool one_indexed) {
  return {
      {"parameter", std::string(to_string(w.parameter))},
      {"value", to_json(w.value)},
      {"witness", to_json(w.witness, one_indexed)},
      {"pt", to_json(w.witness_pt)},
      {"k_searched", json::array({w.k_min, w.k_max})},
  };
}

json to_json(const PropagationTrace& trace, bool one_indexed) {
  const int shift = one_indexed ? 1 : 0;
  json rounds = json::array();
  for (int i = 0; i < trace.rounds_run(); ++i) {
    json forces = json::array();
    for (const Force& f : trace.forces) {
      if (f.round == i + 1) forces.push_back(json::array({f.forcer + shift, f.forced + shift}));
    }
    rounds.push_back({{"round", i + 1}, {"forced", to_json(trace.rounds[i], one_indexed)}, {"forces", forces}});
  }
  return {
      {"initial", to_json(trace.initial, one_indexed)},
      {"rounds", rounds},
      {"status", trace.status == PropagationStatus::forced_all ? "forced_all" : "stalled"},
      {"pt", to_json(trace.propagation_time())},
  };
}

json to_json(const FamilyRecord& r) {
  return {
      {"family", std::string(to_string(r.row))},
      {"params", r.params},
      {"z_plus", optional_int(r.z_plus)},
      {"pt_plus", optional_int(r.pt_plus)},
      {"th_times", optional_int(r.th_times)},
      {"th_star", optional_int(r.th_star)},
  };
}

json to_json(const BoundEntry& e) {
  json out = {
      {"bound", e.name},
      {"relation", std::string(to_string(e.relation))},
      {"applicable", e.applicable},
      {"note", e.note},
  };
  if (e.applicable) {
    out["lhs"] = e.lhs;
    out["rhs"] = e.rhs;
    out["holds"] = e.holds;
  } else {
    out["lhs"] = nullptr;
    out["rhs"] = nullptr;
    out["holds"] = nullptr;
  }
  return out;
}

json to_json(const BoundReport& r) {
  json entries = json::array();
  for (const BoundEntry& e : r.entries) entries.push_back(to_json(e));
  return {{"graph", r.graph_id}, {"ok", r.ok()}, {"entries", entries}};
}

std::string bound_report_tsv(const BoundReport& r, bool header) {
  std::ostringstream out;
  if (header) out << "graph\tbound\tlhs\trelation\trhs\tholds\tapplicable\tnote\n";
  for (const BoundEntry& e : r.entries) {
    out << r.graph_id << '\t' << e.name << '\t';
    if (e.applicable) {
      out << e.lhs << '\t' << to_string(e.relation) << '\t' << e.rhs << '\t' << (e.holds ? "true" : "false");
    } else {
      out << "-\t" << to_string(e.relation) << "\t-\t-";
    }
    out << '\t' << (e.applicable ? "true" : "false") << '\t' << e.note << '\n';
  }
  return out.str();
}

}  // namespace psdthrottle
