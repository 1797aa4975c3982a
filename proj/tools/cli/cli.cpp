#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "pfg/bijections.hpp"
#include "pfg/check.hpp"
#include "pfg/enumerate.hpp"
#include "pfg/io.hpp"

namespace pfg::cli {

namespace {

using json = nlohmann::json;

// Thrown for bad input that is not a CLI11 parse error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Big integers stay numbers while they fit, strings after that.
json big(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

json set_json(VertexSet s) { return s.to_vector(); }

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.from, e.to});
  return out;
}

json outcome_json(const ParkingOutcome& o) {
  return {{"assignment", o.assignment}, {"walks", o.walks}};
}

int default_workers() {
  if (const char* env = std::getenv("PFG_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w > 0) return w;
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

struct GraphInput {
  std::string graph;
  std::string tree;
  std::string mapping;
  std::string inverse_mapping;
  std::string orientation = "sink";

  void add_to(CLI::App* app) {
    auto* g = app->add_option("--graph", graph, "edge-list file");
    auto* t = app->add_option("--tree", tree, "tree file 'root; parent-array'");
    auto* m = app->add_option("--mapping", mapping, "mapping file, read as edges i -> f(i)");
    auto* i = app->add_option("--inverse-mapping", inverse_mapping, "mapping file, read as edges f(i) -> i");
    app->add_option("--orientation", orientation, "tree orientation")
        ->check(CLI::IsMember({"sink", "source"}));
    g->excludes(t, m, i);
    t->excludes(m, i);
    m->excludes(i);
  }

  Orientation tree_orientation() const { return parse_orientation(orientation); }

  std::optional<RootedTree> as_tree() const {
    if (tree.empty()) return std::nullopt;
    auto in = open_file(tree);
    return read_tree(in, tree_orientation());
  }

  Digraph load() const {
    if (!graph.empty()) return read_edge_list_file(graph);
    if (auto t = as_tree()) return t->as_digraph();
    if (!mapping.empty()) {
      auto in = open_file(mapping);
      return read_mapping(in).mapping_digraph();
    }
    if (!inverse_mapping.empty()) {
      auto in = open_file(inverse_mapping);
      return read_mapping(in).inverse_digraph();
    }
    throw UsageError("one of --graph, --tree, --mapping, --inverse-mapping is required");
  }
};

struct Common {
  bool pretty = false;
  bool deterministic = false;
  bool allow_large = false;
  int workers = default_workers();
  std::string format = "json";

  SweepLimits limits() const {
    if (!allow_large) return {};
    return {kMaxVertices, kMaxVertices};
  }
};

void emit(std::ostream& out, const json& j, const Common& c) {
  out << (c.pretty ? j.dump(2) : j.dump()) << '\n';
}

// Rows of flat objects; CSV uses the keys of the first row as header.
void emit_table(std::ostream& out, const json& rows, const Common& c) {
  if (c.format == "json") {
    emit(out, rows, c);
    return;
  }
  if (rows.empty()) return;
  std::vector<std::string> keys;
  for (const auto& [k, _] : rows.front().items()) keys.push_back(k);
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const json& v = row.at(keys[i]);
      out << (i ? "," : "") << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    out << '\n';
  }
}

std::optional<IntRange> optional_range(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_range(text);
}

void require_sequence_in_range(const Digraph& d, const PreferenceSequence& s) {
  try {
    check_preferences(d, s);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

int cmd_check(const GraphInput& g, const std::string& seq, const std::string& dist, bool seq_given,
              const Common& c, std::ostream& out) {
  const Digraph d = g.load();
  if (!seq_given && dist.empty()) throw UsageError("check needs --seq or --dist");
  if (!dist.empty()) {
    const ParkingDistribution f = parse_distribution(dist, d.order());
    const bool ok = is_parking_distribution(d, f);
    emit(out, {{"n", d.order()}, {"counts", f.counts()}, {"total", f.total()}, {"parking_distribution", ok}},
         c);
    return ok ? kOk : kFalse;
  }
  const PreferenceSequence s = parse_sequence(seq);
  require_sequence_in_range(d, s);
  json j{{"n", d.order()}, {"m", s.size()}, {"sequence", s}};
  const auto schedule = parking_schedule(d, s);
  j["parking_function"] = schedule.has_value();
  j["schedule"] = schedule ? outcome_json(*schedule) : json(nullptr);
  if (const auto w = hall_witness(d, s)) {
    j["violator"] = {{"subset", set_json(w->subset)}, {"reach", set_json(w->reach)}, {"demand", w->demand}};
  } else {
    j["violator"] = nullptr;
  }
  j["prime"] = schedule && is_prime(d, s);
  emit(out, j, c);
  return schedule ? kOk : kFalse;
}

int cmd_simulate(const GraphInput& g, const std::string& seq, const Common& c, std::ostream& out) {
  const Digraph d = g.load();
  if (!is_deterministic(d)) throw UsageError("simulate needs every out-degree to be at most 1");
  const PreferenceSequence s = parse_sequence(seq);
  require_sequence_in_range(d, s);
  const auto run = simulate_deterministic(d, s);
  json j{{"n", d.order()}, {"sequence", s}, {"parks", run.has_value()}};
  j["outcome"] = run ? outcome_json(run->outcome) : json(nullptr);
  j["highlighted"] = run ? edges_json(run->highlighted) : json(nullptr);
  emit(out, j, c);
  return run ? kOk : kFalse;
}

int cmd_count(const GraphInput& g, const std::string& m_text, const Common& c, std::ostream& out) {
  const Digraph d = g.load();
  const IntRange ms = optional_range(m_text).value_or(IntRange{0, d.order()});
  const auto start = std::chrono::steady_clock::now();
  json rows = json::array();
  for (int m = ms.lo; m <= ms.hi; ++m) {
    rows.push_back({{"n", d.order()}, {"m", m}, {"count", big(count_pf(d, m, c.limits()))}});
  }
  json j{{"n", d.order()}, {"counts", rows}};
  if (!c.deterministic) {
    j["millis"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  if (c.format == "csv") {
    emit_table(out, rows, c);
  } else {
    emit(out, j, c);
  }
  return kOk;
}

int cmd_sum(const std::string& family, const std::string& n_text, const std::string& m_text,
            const Common& c, std::ostream& out) {
  const Family f = parse_family(family);
  const IntRange ns = parse_range(n_text);
  const auto m_range = optional_range(m_text);
  json rows = json::array();
  for (int n = std::max(1, ns.lo); n <= ns.hi; ++n) {
    const IntRange ms = m_range.value_or(IntRange{0, n});
    for (const CountResult& r : family_sums(f, n, c.workers, c.limits())) {
      if (!ms.contains(r.m)) continue;
      json row{{"family", std::string(to_string(f))}, {"n", r.n}, {"m", r.m},
               {"count", big(r.value)}, {"instances", r.instances}};
      if (!c.deterministic) row["millis"] = r.millis;
      rows.push_back(row);
    }
  }
  emit_table(out, rows, c);
  return kOk;
}

int cmd_verify(const std::string& identity, const std::string& n_text, const std::string& m_text,
               const Common& c, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const IdentityReport rep =
      verify_identity(identity, parse_range(n_text), optional_range(m_text), c.workers, c.limits());
  json rows = json::array();
  for (const IdentityRow& r : rep.rows) {
    rows.push_back({{"n", r.n}, {"m", r.m}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass},
                    {"detail", r.detail}});
  }
  if (c.format == "csv") {
    emit_table(out, rows, c);
  } else {
    json j{{"identity", rep.identity}, {"all_pass", rep.all_pass()}, {"rows", rows}};
    if (!c.deterministic) {
      j["millis"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    emit(out, j, c);
  }
  return rep.all_pass() ? kOk : kFalse;
}

int cmd_scan(const std::string& n_text, const std::string& m_text, const Common& c, std::ostream& out) {
  json rows = json::array();
  for (const ScanRow& r : open_question_scan(parse_range(n_text), optional_range(m_text), c.workers, c.limits())) {
    rows.push_back({{"tree", r.tree}, {"n", r.n}, {"m", r.m}, {"sink_count", r.sink_count},
                    {"source_count", r.source_count}, {"sign", r.sign}, {"is_path", r.is_path},
                    {"is_star", r.is_star}});
  }
  emit_table(out, rows, c);
  return kOk;
}

RootedTree load_tree(const std::string& path, Orientation o) {
  if (path.empty()) throw UsageError("--tree is required");
  auto in = open_file(path);
  return read_tree(in, o);
}

MappingFn load_mapping(const std::string& path) {
  if (path.empty()) throw UsageError("--mapping is required");
  auto in = open_file(path);
  return read_mapping(in);
}

json tau_json(const TauResult& r) {
  return {{"permutation", cycle_notation(r.permutation)},
          {"one_line", r.permutation},
          {"sequence", r.sequence},
          {"tree", format_tree(r.tree)},
          {"orientation", std::string(to_string(r.tree.orientation()))},
          {"paths", r.paths}};
}

int cmd_bijection(const std::string& which, const std::string& tree_path, const std::string& mapping_path,
                  const std::string& seq, Vertex mark, const Common& c, std::ostream& out) {
  const PreferenceSequence s = parse_sequence(seq);
  if (which == "tau" || which == "tau-inv") {
    const bool forward = which == "tau";
    const RootedTree t = load_tree(tree_path, forward ? Orientation::sink : Orientation::source);
    require_sequence_in_range(t.as_digraph(), s);
    emit(out, tau_json(forward ? tau(t, s) : tau_inverse(t, s)), c);
    return kOk;
  }
  if (which == "psi") {
    const RootedTree t = load_tree(tree_path, Orientation::source);
    require_sequence_in_range(t.as_digraph(), s);
    if (mark < 1 || mark > t.order()) throw UsageError("--mark must lie in [1, n]");
    const PsiResult r = psi_nm({t, s, mark});
    std::vector<Edge> rewired;
    for (Vertex b : r.rewired) rewired.push_back({r.mapping(b), b});
    emit(out,
         {{"mapping", r.mapping.image()},
          {"sequence", r.sequence},
          {"full_on_path", r.full_on_path},
          {"rewired", r.rewired},
          {"rewired_edges", edges_json(rewired)},
          {"mark", mark}},
         c);
    return kOk;
  }
  const MappingFn f = load_mapping(mapping_path);
  require_sequence_in_range(f.inverse_digraph(), s);
  const MarkedTree x = psi_nm_inverse(f, s);
  emit(out, {{"tree", format_tree(x.tree)}, {"sequence", x.sequence}, {"mark", x.mark}}, c);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parking functions on digraphs"};
  app.name("pfg");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--pretty", common.pretty, "indent JSON output");
    sub->add_flag("--deterministic", common.deterministic, "omit timings so output is byte-stable");
    sub->add_flag("--allow-large", common.allow_large, "lift the size caps on exhaustive work");
    sub->add_option("--workers", common.workers, "worker threads (default: PFG_WORKERS or core count)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", common.format, "table format")->check(CLI::IsMember({"json", "csv"}));
  };

  GraphInput graph;
  std::string seq;
  std::string dist;
  std::string m_text;
  std::string n_text;
  std::string family;
  std::string identity;
  std::string tree_path;
  std::string mapping_path;
  std::string which;
  Vertex mark = 0;

  auto* check = app.add_subcommand("check", "decide whether a sequence or distribution parks");
  graph.add_to(check);
  auto* seq_opt = check->add_option("--seq", seq, "preferences, e.g. 1,1,3");
  check->add_option("--dist", dist, "demand counts, e.g. 1:2,3:1")->excludes(seq_opt);
  add_common(check);

  auto* simulate = app.add_subcommand("simulate", "run the process on an out-degree <= 1 graph");
  graph.add_to(simulate);
  simulate->add_option("--seq", seq, "preferences")->required();
  add_common(simulate);

  auto* count = app.add_subcommand("count", "P(D, m) for one graph");
  graph.add_to(count);
  count->add_option("--m", m_text, "m or a..b (default 0..n)");
  add_common(count);

  auto* sum = app.add_subcommand("sum", "family sums of P(G, m)");
  sum->add_option("--family", family, "sink-trees | source-trees | mappings | inverse-mappings")->required();
  sum->add_option("--n", n_text, "n or a..b")->required();
  sum->add_option("--m", m_text, "m or a..b (default 0..n)");
  add_common(sum);

  auto* verify = app.add_subcommand("verify", "check a named identity over a range");
  verify->add_option("--identity", identity, "identity name")
      ->required()
      ->check(CLI::IsMember(identity_names()));
  verify->add_option("--n", n_text, "n or a..b")->required();
  verify->add_option("--m", m_text, "m or a..b (default 0..n)");
  add_common(verify);

  auto* bijection = app.add_subcommand("bijection", "apply tau, psi or their inverses");
  bijection->add_option("which", which, "tau | tau-inv | psi | psi-inv")
      ->required()
      ->check(CLI::IsMember({"tau", "tau-inv", "psi", "psi-inv"}));
  bijection->add_option("--tree", tree_path, "tree file");
  bijection->add_option("--mapping", mapping_path, "mapping file");
  bijection->add_option("--seq", seq, "preferences")->required();
  bijection->add_option("--mark", mark, "marked vertex for psi");
  add_common(bijection);

  auto* scan = app.add_subcommand("scan", "P(T, m) against P(T~, m) for every rooted tree");
  scan->add_option("--n", n_text, "n or a..b")->required();
  scan->add_option("--m", m_text, "m or a..b (default 0..n)");
  add_common(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(graph, seq, dist, seq_opt->count() > 0, common, out);
    if (simulate->parsed()) return cmd_simulate(graph, seq, common, out);
    if (count->parsed()) return cmd_count(graph, m_text, common, out);
    if (sum->parsed()) return cmd_sum(family, n_text, m_text, common, out);
    if (verify->parsed()) return cmd_verify(identity, n_text, m_text, common, out);
    if (bijection->parsed()) return cmd_bijection(which, tree_path, mapping_path, seq, mark, common, out);
    if (scan->parsed()) return cmd_scan(n_text, m_text, common, out);
  } catch (const NotParkingFunction& e) {
    err << "pfg: " << e.what() << '\n';
    return kFalse;
  } catch (const NotInImage& e) {
    err << "pfg: " << e.what() << '\n';
    return kFalse;
  } catch (const CapExceeded& e) {
    err << "pfg: " << e.what() << " (use --allow-large)\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "pfg: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pfg::cli
