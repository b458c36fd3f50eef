#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "psdthrottle/closed_forms.hpp"
#include "psdthrottle/cops.hpp"
#include "psdthrottle/error.hpp"
#include "psdthrottle/generators.hpp"
#include "psdthrottle/graph_io.hpp"
#include "psdthrottle/psd.hpp"
#include "psdthrottle/serialize.hpp"
#include "psdthrottle/throttling.hpp"

namespace psdthrottle::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, tsv };

struct Common {
  std::string graph6;
  std::string edge_list;
  std::vector<std::string> family;
  std::string format = "text";
  int workers = 1;
  int limit = 24;
  std::uint64_t seed = 0;
  std::vector<CLI::Option*> seed_options;
  bool one_indexed = false;
  bool progress = false;

  Format fmt() const {
    if (format == "json") return Format::json;
    if (format == "tsv") return Format::tsv;
    return Format::text;
  }
  std::optional<std::uint64_t> seed_value() const {
    for (const CLI::Option* o : seed_options) {
      if (o->count() > 0) return seed;
    }
    return std::nullopt;
  }
};

struct NamedGraph {
  std::string id;
  Graph graph;
};

int parse_int(const std::string& text) {
  int value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw UsageError("expected an integer, got '" + text + "'");
  return value;
}

std::vector<int> parse_ints(std::vector<std::string>::const_iterator first, std::vector<std::string>::const_iterator last) {
  std::vector<int> out;
  for (auto it = first; it != last; ++it) out.push_back(parse_int(*it));
  return out;
}

// "a..b" or "a".
std::vector<int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {parse_int(text)};
  const int lo = parse_int(text.substr(0, dots));
  const int hi = parse_int(text.substr(dots + 2));
  if (hi < lo) throw UsageError("empty range '" + text + "'");
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

bool is_generator_family(const std::string& name) {
  try {
    parse_family(name);
    return true;
  } catch (const ParameterError&) {
    return false;
  }
}

Graph family_from_args(const std::string& name, std::span<const int> params, std::optional<std::uint64_t> seed) {
  if (is_generator_family(name)) {
    const Family family = parse_family(name);
    if (family == Family::random_tree && !seed) throw UsageError("random_tree needs --seed");
    return generate(family, params, seed);
  }
  return family_graph(parse_table_row(name), params);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

std::vector<NamedGraph> load_inputs(const Common& c, std::istream& in) {
  const int sources = !c.graph6.empty() + !c.edge_list.empty() + !c.family.empty();
  if (sources > 1) throw UsageError("give exactly one of --graph6, --edge-list, --family");
  if (!c.graph6.empty()) return {{c.graph6, decode_graph6(c.graph6)}};
  if (!c.edge_list.empty()) {
    std::ifstream file(c.edge_list);
    if (!file) throw UsageError("cannot open edge list '" + c.edge_list + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    return {{c.edge_list, parse_edge_list(buffer.str())}};
  }
  if (!c.family.empty()) {
    const std::vector<int> params = parse_ints(c.family.begin() + 1, c.family.end());
    return {{join(c.family), family_from_args(c.family[0], params, c.seed_value())}};
  }
  std::vector<NamedGraph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back({line, decode_graph6(line)});
  }
  if (out.empty()) throw UsageError("no graph given (use --graph6, --edge-list, --family or graph6 on stdin)");
  return out;
}

VertexSet parse_set(const std::string& text, const Graph& g, bool one_indexed) {
  VertexSet s;
  std::string item;
  std::stringstream stream(text);
  while (std::getline(stream, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](char ch) { return ch == ' ' || ch == '{' || ch == '}'; }),
               item.end());
    if (item.empty()) continue;
    const int v = parse_int(item) - (one_indexed ? 1 : 0);
    if (v < 0 || v >= g.order()) throw UsageError("vertex " + item + " out of range");
    s.insert(v);
  }
  return s;
}

SearchOptions search_options(const Common& c, std::ostream& err) {
  if (c.workers < 1) throw UsageError("--workers must be positive");
  if (c.limit < 1) throw UsageError("--limit must be positive");
  SearchOptions options;
  options.workers = c.workers;
  options.max_vertices = c.limit;
  if (c.progress) options.progress = [&err](const std::string& message) { err << message << '\n'; };
  return options;
}

std::string witness_text(const ThrottlingWitness& w, bool one_indexed) {
  std::ostringstream out;
  out << to_string(w.parameter) << " = " << w.value << "  witness " << w.witness.to_string(one_indexed) << "  pt "
      << w.witness_pt << "  k " << w.k_min << ".." << w.k_max;
  return out.str();
}

void add_common(CLI::App* sub, Common& c, bool with_input = true) {
  if (with_input) {
    sub->add_option("--graph6", c.graph6, "Graph in graph6 format");
    sub->add_option("--edge-list", c.edge_list, "File with 'n m' then one 'u v' per line");
    sub->add_option("--family", c.family, "Family name followed by its integer parameters")->expected(1, -1);
  }
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "tsv"}));
  sub->add_option("--workers", c.workers, "Search threads");
  sub->add_option("--limit", c.limit, "Largest graph order the exhaustive searches accept");
  c.seed_options.push_back(sub->add_option("--seed", c.seed, "Seed for random families"));
  sub->add_flag("--one-indexed", c.one_indexed, "Print (and read) vertices counting from 1");
  sub->add_flag("--progress", c.progress, "Progress messages on stderr");
}

int cmd_compute(const Common& c, const std::vector<std::string>& params, std::optional<int> k, std::istream& in,
                std::ostream& out, std::ostream& err) {
  const SearchOptions options = search_options(c, err);
  std::vector<Parameter> wanted;
  for (const auto& p : params) wanted.push_back(parse_parameter(p));
  if (wanted.empty()) wanted = {Parameter::z_plus, Parameter::th_sum, Parameter::th_times, Parameter::th_star};
  for (Parameter p : wanted) {
    if (p == Parameter::pt_k && !k) throw UsageError("--param pt_k needs --k");
  }
  if (c.fmt() == Format::tsv) out << "graph\tparameter\tvalue\twitness\tpt\tk_min\tk_max\n";
  for (const NamedGraph& ng : load_inputs(c, in)) {
    json results = json::array();
    if (c.fmt() == Format::text) out << ng.id << " (n=" << ng.graph.order() << ", m=" << ng.graph.size() << ")\n";
    for (Parameter p : wanted) {
      std::optional<ThrottlingWitness> w;
      std::string undefined;
      try {
        switch (p) {
          case Parameter::z_plus: w = z_plus(ng.graph, options); break;
          case Parameter::pt_k: w = pt_k(ng.graph, *k, options); break;
          case Parameter::th_sum: w = th_sum(ng.graph, options); break;
          case Parameter::th_times: w = th_times(ng.graph, options); break;
          case Parameter::th_star: w = th_star(ng.graph, options); break;
        }
      } catch (const UndefinedParameterError& e) {
        undefined = e.what();
      }
      switch (c.fmt()) {
        case Format::text:
          if (w) out << "  " << witness_text(*w, c.one_indexed) << '\n';
          else out << "  " << to_string(p) << " undefined: " << undefined << '\n';
          break;
        case Format::json:
          if (w) results.push_back(to_json(*w, c.one_indexed));
          else results.push_back({{"parameter", std::string(to_string(p))}, {"value", nullptr}, {"undefined", undefined}});
          break;
        case Format::tsv:
          out << ng.id << '\t' << to_string(p) << '\t';
          if (w) {
            out << w->value << '\t' << w->witness.to_string(c.one_indexed) << '\t' << w->witness_pt << '\t' << w->k_min
                << '\t' << w->k_max << '\n';
          } else {
            out << "undefined\t-\t-\t-\t-\n";
          }
          break;
      }
    }
    if (c.fmt() == Format::json) {
      out << json{{"graph", ng.id}, {"n", ng.graph.order()}, {"m", ng.graph.size()}, {"results", results}}.dump()
          << '\n';
    }
  }
  return kOk;
}

void print_report(const BoundReport& report, Format fmt, bool& header, std::ostream& out) {
  switch (fmt) {
    case Format::json: out << to_json(report).dump() << '\n'; break;
    case Format::tsv:
      out << bound_report_tsv(report, header);
      header = false;
      break;
    case Format::text: {
      int applicable = 0;
      for (const auto& e : report.entries) applicable += e.applicable;
      out << report.graph_id << ": " << applicable << " applicable, " << report.violations().size() << " violated\n";
      for (const auto& e : report.entries) {
        if (!e.applicable) {
          out << "  [--]   " << e.name << ": not applicable (" << e.note << ")\n";
          continue;
        }
        out << "  " << (e.holds ? "[ok]  " : "[FAIL]") << " " << e.name << ": " << e.lhs << ' ' << to_string(e.relation)
            << ' ' << e.rhs;
        if (!e.note.empty()) out << "  (" << e.note << ')';
        out << '\n';
      }
      break;
    }
  }
}

int cmd_verify(const Common& c, bool with_operations, const std::string& product_with, std::istream& in,
               std::ostream& out, std::ostream& err) {
  BoundOptions options;
  options.search = search_options(c, err);
  std::optional<Graph> other;
  if (!product_with.empty()) other = decode_graph6(product_with);
  bool violated = false;
  bool header = true;
  for (const NamedGraph& ng : load_inputs(c, in)) {
    if (ng.graph.order() > c.limit) throw SizeError("graph order " + std::to_string(ng.graph.order()) + " exceeds --limit");
    BoundReport report = bound_report(ng.graph, summarize(ng.graph, options.search), options, ng.id);
    if (with_operations) {
      for (const Edge& e : ng.graph.edges()) {
        const std::string tag = "[" + std::to_string(e.u) + "-" + std::to_string(e.v) + "]";
        for (BoundEntry entry : operation_bound_checks(ng.graph, e, options).entries) {
          entry.name += tag;
          report.entries.push_back(std::move(entry));
        }
      }
    }
    if (other) {
      for (BoundEntry entry : product_bound_checks(ng.graph, *other, options).entries) {
        entry.name += "[x " + product_with + "]";
        report.entries.push_back(std::move(entry));
      }
    }
    violated = violated || !report.ok();
    print_report(report, c.fmt(), header, out);
  }
  return violated ? kViolation : kOk;
}

std::string optional_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "?"; }

int cmd_table(const Common& c, std::istream&, std::ostream& out, std::ostream& err) {
  if (c.family.empty()) throw UsageError("table needs --family NAME RANGE...");
  const TableRow row = parse_table_row(c.family[0]);
  std::vector<std::vector<int>> ranges;
  for (auto it = c.family.begin() + 1; it != c.family.end(); ++it) ranges.push_back(parse_range(*it));
  if (ranges.empty()) throw UsageError("table needs at least one parameter range");
  const SearchOptions options = search_options(c, err);

  bool all_match = true;
  if (c.fmt() == Format::tsv) {
    out << "family\tparams\tz_formula\tpt_formula\tthx_formula\tths_formula\tz_search\tpt_search\tthx_search\tths_search\tmatch\n";
  } else if (c.fmt() == Format::text) {
    out << "family params | formula: Z pt thx th* | search: Z pt thx th* | match\n";
  }
  std::vector<std::size_t> index(ranges.size(), 0);
  for (;;) {
    std::vector<int> params;
    for (std::size_t i = 0; i < ranges.size(); ++i) params.push_back(ranges[i][index[i]]);
    const FamilyRecord formula = family_values(row, params);
    const Graph g = family_graph(row, params);
    const ThrottlingSummary s = summarize(g, options);
    const std::optional<int> searched[4] = {
        s.z_plus.value.value(),
        s.pt_plus.value.value(),
        s.th_times.value.value(),
        s.th_star ? std::optional<int>(s.th_star->value.value()) : std::nullopt,
    };
    const std::optional<int> expected[4] = {formula.z_plus, formula.pt_plus, formula.th_times, formula.th_star};
    const char* names[4] = {"z_plus", "pt_plus", "th_times", "th_star"};
    std::vector<std::string> mismatches;
    for (int i = 0; i < 4; ++i) {
      if (expected[i] && expected[i] != searched[i]) mismatches.push_back(names[i]);
    }
    all_match = all_match && mismatches.empty();
    std::string param_text;
    for (int p : params) param_text += (param_text.empty() ? "" : ",") + std::to_string(p);
    switch (c.fmt()) {
      case Format::text:
        out << to_string(formula.row) << ' ' << param_text << " | ";
        for (const auto& v : expected) out << optional_text(v) << ' ';
        out << "| ";
        for (const auto& v : searched) out << optional_text(v) << ' ';
        out << "| " << (mismatches.empty() ? "yes" : "NO");
        for (const auto& m : mismatches) out << ' ' << m;
        out << '\n';
        break;
      case Format::tsv:
        out << to_string(formula.row) << '\t' << param_text;
        for (const auto& v : expected) out << '\t' << optional_text(v);
        for (const auto& v : searched) out << '\t' << optional_text(v);
        out << '\t' << (mismatches.empty() ? "true" : "false") << '\n';
        break;
      case Format::json: {
        json search = {{"z_plus", s.z_plus.value.value()},
                       {"pt_plus", s.pt_plus.value.value()},
                       {"th_times", s.th_times.value.value()},
                       {"th_star", searched[3] ? json(*searched[3]) : json(nullptr)}};
        out << json{{"formula", to_json(formula)}, {"search", search}, {"match", mismatches.empty()}, {"mismatches", mismatches}}
                   .dump()
            << '\n';
        break;
      }
    }
    std::size_t i = 0;
    while (i < ranges.size() && ++index[i] == ranges[i].size()) index[i++] = 0;
    if (i == ranges.size()) break;
  }
  return all_match ? kOk : kViolation;
}

int cmd_trace(const Common& c, const std::string& set_text, std::istream& in, std::ostream& out) {
  if (set_text.empty()) throw UsageError("trace needs --set");
  for (const NamedGraph& ng : load_inputs(c, in)) {
    const VertexSet s = parse_set(set_text, ng.graph, c.one_indexed);
    const PropagationTrace trace = propagate(ng.graph, s);
    if (c.fmt() == Format::json) {
      json j = to_json(trace, c.one_indexed);
      j["graph"] = ng.id;
      out << j.dump() << '\n';
    } else {
      out << format_trace(trace, c.one_indexed);
    }
  }
  return kOk;
}

int cmd_cops(const Common& c, const std::string& set_text, std::optional<int> k, std::uint64_t max_states,
             bool strategy, std::istream& in, std::ostream& out) {
  CopOptions options;
  options.max_states = max_states;
  for (const NamedGraph& ng : load_inputs(c, in)) {
    const Graph& g = ng.graph;
    json j = {{"graph", ng.id}};
    std::ostringstream text;
    text << ng.id << '\n';
    if (!set_text.empty()) {
      const VertexSet s = parse_set(set_text, g, c.one_indexed);
      if (s.empty()) throw UsageError("--set must name at least one vertex");
      const ExtendedInt t = capture_time(g, s, options);
      j["placement"] = to_json(s, c.one_indexed);
      j["capture_time"] = to_json(t);
      text << "  capt(S=" << s.to_string(c.one_indexed) << ") = " << t << '\n';
      if (strategy && s != g.vertices()) {
        const std::vector<Vertex> cops = s.to_vector();
        text << CopGame::solve(g, static_cast<int>(cops.size()), options).strategy_dump(cops);
      }
    } else if (k) {
      const CaptureWitness w = capt_k(g, *k, options);
      j["k"] = *k;
      j["capt_k"] = to_json(w.value);
      j["placement"] = to_json(w.placement, c.one_indexed);
      text << "  capt_" << *k << " = " << w.value << "  placement " << w.placement.to_string(c.one_indexed) << '\n';
    } else {
      const CopThrottling t = th_times_cops(g, options);
      j["cop_number"] = t.cop_number;
      j["th_times"] = t.th_times;
      j["th_times_witness"] = to_json(t.th_times_witness, c.one_indexed);
      j["th_times_capture"] = t.th_times_capture;
      j["th_star"] = t.th_star ? json(*t.th_star) : json(nullptr);
      j["th_star_witness"] = t.th_star ? to_json(t.th_star_witness, c.one_indexed) : json(nullptr);
      text << "  cop number " << t.cop_number << '\n'
           << "  th_c^x = " << t.th_times << "  witness " << t.th_times_witness.to_string(c.one_indexed) << "  capt "
           << t.th_times_capture << '\n'
           << "  th_c^* = " << (t.th_star ? std::to_string(*t.th_star) : std::string("undefined"));
      if (t.th_star) text << "  witness " << t.th_star_witness.to_string(c.one_indexed);
      text << '\n';
    }
    if (c.fmt() == Format::json) out << j.dump() << '\n';
    else out << text.str();
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact PSD zero forcing, product throttling and cops-and-robbers computations", "psdthrottle"};
  app.require_subcommand(1);
  Common common;

  std::vector<std::string> params;
  int k = 0;
  CLI::App* compute = app.add_subcommand("compute", "Z_+, pt_+(G,k), th_+, th_+^x, th_+^* with witnesses");
  add_common(compute, common);
  compute->add_option("--param", params, "z_plus, pt_k, th_sum, th_times, th_star (repeatable; default all but pt_k)");
  CLI::Option* k_option = compute->add_option("--k", k, "Set size for pt_k");

  bool with_operations = false;
  std::string product_with;
  CLI::App* verify = app.add_subcommand("verify", "Evaluate the bound suite; exit 1 on any violated bound");
  add_common(verify, common);
  verify->add_flag("--with-operations", with_operations, "Also check subdivision and deletion of every edge");
  verify->add_option("--product-with", product_with, "graph6 of a second factor for the product checks");

  CLI::App* table = app.add_subcommand("table", "Family formulas next to searched values");
  add_common(table, common);
  table->footer("Example: table --family path 2..12   (rows: complete cycle complete_bipartite tree path hypercube "
                "complete_multipartite cycle_complement path_complement; tree takes n and seed ranges)");

  std::string set_text;
  CLI::App* trace = app.add_subcommand("trace", "Round-by-round propagation from a set");
  add_common(trace, common);
  trace->add_option("--set", set_text, "Comma separated initial vertices")->required();

  int cops_k = 0;
  std::uint64_t max_states = CopOptions{}.max_states;
  bool strategy = false;
  CLI::App* cops = app.add_subcommand("cops", "Capture time, capt_k, cop number and cop product throttling");
  add_common(cops, common);
  cops->add_option("--set", set_text, "Cop placement; prints capt(G;S)");
  CLI::Option* cops_k_option = cops->add_option("--k", cops_k, "Number of cops; prints capt_k(G)");
  cops->add_option("--max-states", max_states, "Game table budget");
  cops->add_flag("--strategy", strategy, "With --set, dump the cops' replies");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (compute->parsed()) {
      return cmd_compute(common, params, k_option->count() ? std::optional<int>(k) : std::nullopt, in, out, err);
    }
    if (verify->parsed()) return cmd_verify(common, with_operations, product_with, in, out, err);
    if (table->parsed()) return cmd_table(common, in, out, err);
    if (trace->parsed()) return cmd_trace(common, set_text, in, out);
    if (cops->parsed()) {
      return cmd_cops(common, set_text, cops_k_option->count() ? std::optional<int>(cops_k) : std::nullopt, max_states,
                      strategy, in, out);
    }
  } catch (const SizeError& e) {
    err << "size limit: " << e.what() << '\n';
    return kSize;
  } catch (const ParseError& e) {
    err << "parse error at byte " << e.offset() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace psdthrottle::cli
