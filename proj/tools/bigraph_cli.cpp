// Command-line front end: construct, analyze, count, bounds, decompose,
// normalize, verify, search.
//
// Exit codes: 0 = success, 1 = malformed input / infeasible request /
// internal disagreement, 2 = a verification sweep found bound violations.
//
// All JSON output is deterministic: keys sorted, big integers rendered as
// decimal strings, no timestamps.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bigraph/bounds.hpp"
#include "bigraph/constructions.hpp"
#include "bigraph/counting.hpp"
#include "bigraph/graph.hpp"
#include "bigraph/normalize.hpp"
#include "bigraph/search.hpp"
#include "bigraph/structure.hpp"

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json graph_json(const bg::Bigraph& g) { return json::parse(bg::to_json(g)); }

// Accepts the plain graph JSON, any JSON object wrapping it under "graph"
// (as emitted by `construct`), or the terse text format.
bg::Bigraph load_graph(const std::string& path) {
  const std::string text = slurp(path);
  size_t p = text.find_first_not_of(" \t\r\n");
  if (p == std::string::npos)
    throw std::invalid_argument("input graph is empty");
  if (text[p] == '{') {
    const json j = json::parse(text);
    if (j.contains("graph")) return bg::from_json(j["graph"].dump());
    return bg::from_json(text);
  }
  return bg::from_text(text);
}

void emit(const json& j, const std::string& out_path) {
  const std::string doc = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << doc;
  }
}

std::map<std::string, long long> parse_params(const std::string& text) {
  std::map<std::string, long long> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("malformed parameter '" + item +
                                  "', expected name=value");
    const std::string name = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(value, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parameter '" + name +
                                  "' has a non-integer value '" + value + "'");
    }
    if (used != value.size())
      throw std::invalid_argument("parameter '" + name +
                                  "' has a non-integer value '" + value + "'");
    out[name] = v;
  }
  return out;
}

// --- verb implementations -------------------------------------------------

int run_construct(const std::string& family, const std::string& params_text,
                  const std::string& out_path) {
  const bg::Construction k = bg::generate(family, parse_params(params_text));
  json j;
  j["family"] = k.family;
  json params = json::object();
  for (const auto& [name, value] : k.params) params[name] = value;
  j["params"] = params;
  j["graph"] = graph_json(k.g);
  j["predicted_phi"] = bg::to_string(k.predicted_phi);
  emit(j, out_path);
  return 0;
}

int run_count(const std::string& input, const std::string& out_path) {
  const bg::Bigraph g = load_graph(input);
  const bg::MatchCount perm = bg::count_max_matchings(g);
  bool agreement = false;
  if (g.nx <= 7 && g.ny <= 7) {
    const bg::MatchCount oracle = bg::count_max_matchings_oracle(g);
    if (oracle.size != perm.size || oracle.count != perm.count) {
      std::cerr << "engine disagreement: permanent engine says alpha="
                << perm.size << " phi=" << bg::to_string(perm.count)
                << ", reference engine says alpha=" << oracle.size
                << " phi=" << bg::to_string(oracle.count) << "\n";
      return 1;
    }
    agreement = true;
  }
  json j;
  j["alpha"] = perm.size;
  j["phi"] = bg::to_string(perm.count);
  j["engine"] = "permanent";
  j["agreement"] = agreement;
  emit(j, out_path);
  return 0;
}

int run_analyze(const std::string& input, const std::string& out_path) {
  const bg::Bigraph g = load_graph(input);
  const bg::StructureReport r = bg::analyze(g);
  json j;
  j["params"] = {{"n", r.p.n},     {"ny", r.p.ny},        {"t", r.p.t},
                 {"m", r.p.m},     {"b", r.p.b},          {"k", r.p.k},
                 {"delta_y", r.p.deltaY}, {"r", r.p.r},   {"r_y", r.p.rY}};
  j["alpha"] = r.alpha;
  j["phi"] = r.phi_computed ? json(bg::to_string(r.phi)) : json(nullptr);
  j["hall"] = r.hall;
  j["hall_violator"] = r.hall_violator;
  j["deficiency"] = r.deficiency;
  j["x_surplus"] = r.x_surplus;
  j["leafless"] = r.leafless;
  j["connected"] = r.connected;
  j["elementary"] = r.elementary ? json(*r.elementary) : json(nullptr);
  j["pendant_4cycle"] = r.pendant_4cycle;
  json tight;
  tight["computed"] = r.tight_computed;
  tight["any"] = r.tight.any;
  tight["minimal"] = r.tight.minimal;
  tight["maximal"] = r.tight.maximal;
  tight["count"] = r.tight.all.size();
  j["tight_sets"] = tight;
  json slim;
  slim["computed"] = r.slim_computed;
  slim["sets"] = r.slim;
  j["slim_sets"] = slim;
  emit(j, out_path);
  return 0;
}

int run_bounds(const std::string& input, const std::string& out_path) {
  const bg::Bigraph g = load_graph(input);
  const bg::MatchCount mc = bg::count_max_matchings(g);
  const bg::Rat phi_r(mc.count);
  json entries = json::array();
  std::ostringstream md;
  md << "| bound | applicable | value | equality | unmet hypotheses |\n";
  md << "|---|---|---|---|---|\n";
  for (const bg::BoundEntry& e : bg::applicable_bounds(g)) {
    json row;
    row["id"] = e.id;
    row["applicable"] = e.applicable;
    row["bound"] = e.applicable ? json(bg::to_string(e.bound)) : json(nullptr);
    row["equality"] = e.applicable && phi_r == e.bound;
    row["failures"] = e.failures;
    row["note"] = e.note;
    entries.push_back(row);
    std::string misses;
    for (size_t i = 0; i < e.failures.size(); ++i)
      misses += (i ? "; " : "") + e.failures[i];
    md << "| " << e.id << " | " << (e.applicable ? "yes" : "no") << " | "
       << (e.applicable ? bg::to_string(e.bound) : std::string("-")) << " | "
       << (e.applicable && phi_r == e.bound ? "yes" : "-") << " | " << misses
       << " |\n";
  }
  json j;
  j["alpha"] = mc.size;
  j["phi"] = bg::to_string(mc.count);
  j["entries"] = entries;
  if (out_path.empty()) {
    emit(j, "");
    std::cerr << md.str();
  } else {
    emit(j, out_path);
    std::cout << md.str();
  }
  return 0;
}

int run_decompose(const std::string& input, const std::string& out_path) {
  const bg::Bigraph g = load_graph(input);
  const bg::EarDecomposition d = bg::odd_ear_decomposition(g);
  const bool valid = bg::validate_ear_decomposition(g, d);
  json j;
  j["base"] = {d.base.first, d.base.second};
  j["ears"] = d.ears;
  j["items"] = d.ears.size() + 1;
  j["valid"] = valid;
  // Ear paths encode x_i as i and y_j as nx + j.
  j["vertex_encoding"] = {{"x", "0..nx-1"}, {"y", "nx..nx+ny-1"}};
  emit(j, out_path);
  if (!valid) {
    std::cerr << "internal error: decomposition failed validation\n";
    return 1;
  }
  return 0;
}

int run_normalize(const std::string& input, const std::string& out_path) {
  const bg::Bigraph g = load_graph(input);
  const bg::NormalizeResult r = bg::normalize_shift_reduce(g);
  json steps = json::array();
  for (const bg::ShiftStep& s : r.steps) {
    json st;
    st["x"] = s.x;
    st["from_y"] = s.from_y;
    st["to_y"] = s.to_y;
    st["copies"] = s.copies;
    steps.push_back(st);
  }
  json j;
  j["k"] = r.k;
  j["r"] = r.r;
  j["normalized"] = graph_json(r.g);
  j["steps"] = steps;
  j["phi_before"] = bg::to_string(bg::count_max_matchings(g).count);
  j["phi_after"] = bg::to_string(bg::count_max_matchings(r.g).count);
  emit(j, out_path);
  return 0;
}

struct ClassFlags {
  bg::ClassConstraint c;
  bool no_dedup = false;

  void attach(CLI::App* sc, bool with_dedup) {
    sc->add_option("--nx-min", c.nx_min, "smallest |X| (default 1)");
    sc->add_option("--nx-max", c.nx_max, "largest |X|")->required();
    sc->add_option("--ny-min", c.ny_min, "smallest |Y| (default 1)");
    sc->add_option("--ny-max", c.ny_max, "largest |Y|")->required();
    sc->add_option("--mult-max", c.max_mult, "multiplicity cap")->required();
    sc->add_flag("--hall", c.need_hall, "require Hall's condition");
    sc->add_flag("--x-surplus", c.need_x_surplus, "require X-surplus");
    sc->add_flag("--leafless", c.need_leafless,
                 "require two distinct neighbors at every vertex");
    sc->add_flag("--elementary", c.need_elementary,
                 "require connected with every edge in a perfect matching");
    sc->add_option("--min-deg-x", c.min_deg_x, "X-degree floor");
    sc->add_option("--min-deg-y", c.min_deg_y, "Y-degree floor");
    sc->add_option("--max-deg-y", c.max_deg_y, "Y-degree cap (0 = none)");
    sc->add_option("--min-distinct-x", c.min_distinct_x,
                   "distinct-neighbor floor on X");
    sc->add_option("--min-distinct-y", c.min_distinct_y,
                   "distinct-neighbor floor on Y");
    sc->add_option("--jobs", c.jobs, "parallel workers (default 1)");
    sc->add_option("--budget", c.budget,
                   "max raw matrices the ranges may span");
    if (with_dedup)
      sc->add_flag("--no-dedup", no_dedup,
                   "sweep every matrix instead of one per iso class");
  }
};

json constraint_json(const bg::ClassConstraint& c) {
  json j;
  j["nx_min"] = c.nx_min;
  j["nx_max"] = c.nx_max;
  j["ny_min"] = c.ny_min;
  j["ny_max"] = c.ny_max;
  j["mult_max"] = c.max_mult;
  j["hall"] = c.need_hall;
  j["x_surplus"] = c.need_x_surplus;
  j["leafless"] = c.need_leafless;
  j["elementary"] = c.need_elementary;
  j["min_deg_x"] = c.min_deg_x;
  j["min_deg_y"] = c.min_deg_y;
  j["max_deg_y"] = c.max_deg_y;
  j["min_distinct_x"] = c.min_distinct_x;
  j["min_distinct_y"] = c.min_distinct_y;
  j["dedup"] = c.dedup;
  return j;
}

// JSON report to --out (or stdout), Markdown table to stdout (or stderr when
// stdout already carries the JSON).
void emit_with_markdown(const json& j, const std::string& md,
                        const std::string& out_path) {
  if (out_path.empty()) {
    emit(j, "");
    std::cerr << md;
  } else {
    emit(j, out_path);
    std::cout << md;
  }
}

int run_verify(const std::string& theorem, ClassFlags& f,
               const std::string& out_path) {
  f.c.dedup = !f.no_dedup;
  const bg::VerifyReport r = bg::verify_theorem(theorem, f.c);
  json j;
  j["theorem_id"] = r.theorem_id;
  j["constraint"] = constraint_json(f.c);
  j["instances_checked"] = r.instances_checked;
  j["hypothesis_matched"] = r.hypothesis_matched;
  j["violations_total"] = r.violations_total;
  json viols = json::array();
  for (const bg::Violation& v : r.violations) {
    json row;
    row["graph"] = graph_json(v.g);
    row["phi"] = bg::to_string(v.phi);
    row["bound"] = bg::to_string(v.bound);
    viols.push_back(row);
  }
  j["violations"] = viols;
  json extremal = json::array();
  for (const bg::Bigraph& g : r.extremal) extremal.push_back(graph_json(g));
  j["extremal"] = extremal;
  j["min_phi"] = r.min_phi_valid ? json(bg::to_string(r.min_phi)) : json(nullptr);

  std::ostringstream md;
  md << "| theorem | instances | matched | violations | extremal classes | "
        "min phi |\n|---|---|---|---|---|---|\n";
  md << "| " << r.theorem_id << " | " << r.instances_checked << " | "
     << r.hypothesis_matched << " | " << r.violations_total << " | "
     << r.extremal.size() << " | "
     << (r.min_phi_valid ? bg::to_string(r.min_phi) : std::string("-"))
     << " |\n";
  md << (r.violations_total == 0
             ? "\nNo violations found.\n"
             : "\nVIOLATIONS FOUND - see the JSON report.\n");
  emit_with_markdown(j, md.str(), out_path);
  return r.violations_total == 0 ? 0 : 2;
}

int run_search(ClassFlags& f, const std::string& out_path) {
  const bg::MinPhiReport r = bg::find_min_phi(f.c);
  json j;
  j["constraint"] = constraint_json(f.c);
  j["found"] = r.found;
  j["min_phi"] = r.found ? json(bg::to_string(r.min_phi)) : json(nullptr);
  j["instances_checked"] = r.instances_checked;
  json wit = json::array();
  for (const bg::Bigraph& g : r.witnesses) wit.push_back(graph_json(g));
  j["witnesses"] = wit;

  std::ostringstream md;
  md << "| instances | min phi | witnesses |\n|---|---|---|\n";
  md << "| " << r.instances_checked << " | "
     << (r.found ? bg::to_string(r.min_phi) : std::string("-")) << " | "
     << r.witnesses.size() << " |\n";
  emit_with_markdown(j, md.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact matching-count toolkit for bipartite multigraphs"};
  app.require_subcommand(1);

  std::string family, params_text, input, out_path, theorem;

  CLI::App* construct =
      app.add_subcommand("construct", "generate a named graph family member");
  construct->add_option("--family", family, "family name")->required();
  construct->add_option("--params", params_text,
                        "comma-separated name=value parameters");
  construct->add_option("--out", out_path, "write JSON here instead of stdout");

  auto add_io = [&](const char* name, const char* help) {
    CLI::App* sc = app.add_subcommand(name, help);
    sc->add_option("--input", input, "graph file (JSON or terse text, - for stdin)")
        ->required();
    sc->add_option("--out", out_path, "write JSON here instead of stdout");
    return sc;
  };
  CLI::App* analyze = add_io("analyze", "structural classification report");
  CLI::App* count = add_io("count", "maximum matching size and exact count");
  CLI::App* bounds =
      add_io("bounds", "evaluate every applicable lower-bound formula");
  CLI::App* decompose =
      add_io("decompose", "odd ear decomposition of an elementary graph");
  CLI::App* normalize = add_io(
      "normalize", "degree-profile normalization with a replayable step log");

  ClassFlags vf, sf;
  CLI::App* verify = app.add_subcommand(
      "verify", "sweep a graph class and check one bound on every member");
  verify->add_option("--theorem", theorem, "bound identifier")->required();
  vf.attach(verify, /*with_dedup=*/true);
  verify->add_option("--out", out_path, "write the JSON report here");

  CLI::App* search = app.add_subcommand(
      "search", "exact minimum matching count over a graph class");
  sf.attach(search, /*with_dedup=*/false);
  search->add_option("--out", out_path, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*construct) return run_construct(family, params_text, out_path);
    if (*analyze) return run_analyze(input, out_path);
    if (*count) return run_count(input, out_path);
    if (*bounds) return run_bounds(input, out_path);
    if (*decompose) return run_decompose(input, out_path);
    if (*normalize) return run_normalize(input, out_path);
    if (*verify) return run_verify(theorem, vf, out_path);
    if (*search) return run_search(sf, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "error: no verb selected\n";
  return 1;
}
