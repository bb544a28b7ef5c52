#include "mnt/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "mnt/bounds.hpp"
#include "mnt/classify.hpp"
#include "mnt/constructions.hpp"
#include "mnt/graph.hpp"
#include "mnt/laws.hpp"
#include "mnt/parallel.hpp"
#include "mnt/search.hpp"

namespace mnt::cli {

namespace {

using Json = nlohmann::ordered_json;

// Bad input or flags detected after CLI11 parsing; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

const char* boolean(bool b) { return b ? "true" : "false"; }

std::string edge_text(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string edge_list(const std::vector<Edge>& edges) {
  if (edges.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < edges.size(); ++i) s += (i ? "," : "") + edge_text(edges[i]);
  return s;
}

std::string int_list(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Json edge_json(Edge e) { return Json::array({e.u, e.v}); }

// ---- graph input ----------------------------------------------------------

struct InputOptions {
  std::vector<std::string> files;
  std::vector<std::string> inline_graphs;
  bool use_stdin = false;
};

void add_input_options(CLI::App* cmd, InputOptions& o) {
  cmd->add_option("--in", o.files, "graph6 file, one graph per line")->check(CLI::ExistingFile);
  cmd->add_option("--graph", o.inline_graphs, "graph6 string");
  cmd->add_flag("--stdin", o.use_stdin, "read graph6 lines from standard input");
}

struct Loaded {
  Graph graph;
  std::string origin;  // file:line
};

void read_stream(std::istream& in, const std::string& name, std::vector<Loaded>& out) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string origin = name + ":" + std::to_string(number);
    try {
      out.push_back({from_graph6(line), origin});
    } catch (const Graph6Error& e) {
      throw UsageError(origin + ": " + e.what());
    }
  }
  if (in.bad()) throw UsageError(name + ": read error");
}

std::vector<Loaded> load(const InputOptions& o, Streams io) {
  std::vector<Loaded> out;
  for (std::size_t i = 0; i < o.inline_graphs.size(); ++i) {
    const std::string origin = "--graph[" + std::to_string(i) + "]";
    try {
      out.push_back({from_graph6(o.inline_graphs[i]), origin});
    } catch (const Graph6Error& e) {
      throw UsageError(origin + ": " + e.what());
    }
  }
  for (const std::string& path : o.files) {
    std::ifstream file(path);
    if (!file) throw UsageError(path + ": cannot open");
    read_stream(file, path, out);
  }
  if (o.use_stdin) read_stream(io.in, "<stdin>", out);
  if (o.files.empty() && o.inline_graphs.empty() && !o.use_stdin) {
    throw UsageError("no input: give --in FILE, --graph G6 or --stdin");
  }
  return out;
}

template <typename Result, typename Fn>
std::vector<Result> map_graphs(const std::vector<Loaded>& graphs, int jobs, Fn fn) {
  std::vector<Result> results(graphs.size());
  for_each_slice(graphs.size(), jobs, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t i = begin; i < end; ++i) results[i] = fn(graphs[i].graph);
  });
  return results;
}

// ---- classify -------------------------------------------------------------

struct ClassifyOptions {
  InputOptions input;
  std::string format = "table";
  std::string assertion;
  int jobs = 1;
};

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return Json(w->order);
}

Json optional_edge_json(const std::optional<Edge>& e) { return e ? edge_json(*e) : Json(nullptr); }

bool holds(const ClassificationReport& r, const std::string& property) {
  if (property == "mnt") return r.mnt.value_or(false);
  if (property == "mnh") return r.mnh.value_or(false);
  if (property == "traceable") return r.traceable;
  return r.hamiltonian;
}

int run_classify(const ClassifyOptions& o, Streams io) {
  const auto graphs = load(o.input, io);
  const auto reports = map_graphs<ClassificationReport>(graphs, o.jobs, [](const Graph& g) { return classify(g); });

  if (o.format == "json") {
    Json all = Json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i].graph;
      const auto& r = reports[i];
      all.push_back({{"graph6", to_graph6(g)},
                     {"n", g.order()},
                     {"e", g.size()},
                     {"traceable", r.traceable},
                     {"hamiltonian", r.hamiltonian},
                     {"mnt", *r.mnt},
                     {"mnh", *r.mnh},
                     {"mnt_failing_edge", optional_edge_json(r.mnt_failing_edge)},
                     {"mnh_failing_edge", optional_edge_json(r.mnh_failing_edge)},
                     {"path_witness", witness_json(r.path_witness)},
                     {"cycle_witness", witness_json(r.cycle_witness)}});
    }
    io.out << all.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i].graph;
      const auto& r = reports[i];
      io.out << to_graph6(g) << " n=" << g.order() << " e=" << g.size() << " traceable=" << boolean(r.traceable)
             << " hamiltonian=" << boolean(r.hamiltonian) << " mnt=" << boolean(*r.mnt)
             << " mnh=" << boolean(*r.mnh) << '\n';
    }
  }

  if (o.assertion.empty()) return kExitOk;
  int status = kExitOk;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!holds(reports[i], o.assertion)) {
      io.err << graphs[i].origin << ": assertion failed: graph is not " << o.assertion << '\n';
      status = kExitAssertFailed;
    }
  }
  return status;
}

// ---- construct ------------------------------------------------------------

struct ConstructOptions {
  std::string format = "graph6";
  int k = 0;
  int l = 0;
  int r = 0;
  std::vector<int> sizes;
  std::string base = "petersen";
  std::vector<int> edge;
  int h2 = 1;
};

Graph resolve_base(const std::string& text, std::string& name) {
  try {
    Graph g = named(text);
    name = text;
    return g;
  } catch (const std::invalid_argument&) {
  }
  try {
    name = text;
    return from_graph6(text);
  } catch (const Graph6Error& e) {
    throw UsageError("--base: not a built-in name or graph6 string: " + std::string(e.what()));
  }
}

int run_construct(const std::string& family, const ConstructOptions& o, Streams io) {
  ConstructionSpec spec;
  if (family == "disjoint-cliques") {
    spec = {Family::disjoint_cliques, o.k, {o.l}, std::nullopt};
  } else if (family == "zelinka1") {
    spec = {Family::zelinka1, o.r, o.sizes, std::nullopt};
  } else if (family == "zelinka2") {
    spec = {Family::zelinka2, o.r, o.sizes, std::nullopt};
  } else {
    if (o.edge.size() != 2) throw UsageError("--edge expects two vertices, e.g. --edge 0,1");
    std::string name;
    Graph base = resolve_base(o.base, name);
    spec = {Family::dkw, 0, {}, DkwBase{name, std::move(base), o.edge[0], o.edge[1], o.h2}};
  }
  const Graph g = build(spec);
  if (o.format == "json") {
    Json j = {{"family", to_string(spec.family)},
              {"spec", spec.describe()},
              {"n", g.order()},
              {"e", g.size()},
              {"predicted_size", predicted_size(spec)},
              {"graph6", to_graph6(g)}};
    io.out << j.dump(2) << '\n';
  } else {
    io.out << to_graph6(g) << '\n';
  }
  return kExitOk;
}

// ---- dkw-eligible ---------------------------------------------------------

struct EligibleOptions {
  InputOptions input;
  std::string format = "table";
  int jobs = 1;
};

struct EligibleResult {
  bool cubic = false;
  bool mnh = false;
  std::vector<Edge> edges;
};

int run_dkw_eligible(const EligibleOptions& o, Streams io) {
  const auto graphs = load(o.input, io);
  const auto results = map_graphs<EligibleResult>(graphs, o.jobs, [](const Graph& g) {
    EligibleResult r;
    r.cubic = is_regular(g, 3);
    r.mnh = r.cubic && is_mnh(g).mnh.value_or(false);
    r.edges = dkw_eligible(g);
    return r;
  });
  if (o.format == "json") {
    Json all = Json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      Json edges = Json::array();
      for (Edge e : results[i].edges) edges.push_back(edge_json(e));
      all.push_back({{"graph6", to_graph6(graphs[i].graph)},
                     {"cubic", results[i].cubic},
                     {"mnh", results[i].mnh},
                     {"eligible", std::move(edges)}});
    }
    io.out << all.dump(2) << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& r = results[i];
    io.out << to_graph6(graphs[i].graph) << " cubic=" << boolean(r.cubic) << " mnh=" << boolean(r.mnh)
           << " eligible=" << r.edges.size() << " edges=" << edge_list(r.edges) << '\n';
  }
  return kExitOk;
}

// ---- lemmas ---------------------------------------------------------------

struct LemmaOptions {
  InputOptions input;
  std::string format = "table";
  bool exhaustive = false;
  std::optional<int> max_len;
  std::optional<int> max_t;
  int jobs = 1;
};

int run_lemmas(const LemmaOptions& o, Streams io) {
  const auto graphs = load(o.input, io);
  const LawOptions options{o.exhaustive, o.max_len, o.max_t};
  const auto reports =
      map_graphs<LawReport>(graphs, o.jobs, [&](const Graph& g) { return check_all_laws(g, options); });
  if (o.format == "json") {
    Json all = Json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto& r = reports[i];
      Json violations = Json::array();
      for (const auto& v : r.violations) {
        violations.push_back({{"law", v.law}, {"evidence", v.evidence}, {"detail", v.detail}});
      }
      all.push_back({{"graph6", to_graph6(graphs[i].graph)},
                     {"label", r.label},
                     {"certified_mnt", r.certified_mnt},
                     {"certified_mnh", r.certified_mnh},
                     {"max_len", r.max_len},
                     {"max_t", r.max_t},
                     {"skipped", r.skipped},
                     {"violations", std::move(violations)}});
    }
    io.out << all.dump(2) << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& r = reports[i];
    const Graph& g = graphs[i].graph;
    io.out << to_graph6(g) << " n=" << g.order() << " e=" << g.size() << " label=\"" << r.label << "\""
           << " max_len=" << r.max_len << " max_t=" << r.max_t << " violations=" << r.violations.size() << '\n';
    for (const auto& law : r.skipped) io.out << "  skipped " << law << '\n';
    for (const auto& v : r.violations) {
      io.out << "  violation " << v.law << " evidence=" << int_list(v.evidence) << " " << v.detail << '\n';
    }
  }
  return kExitOk;
}

// ---- bounds ---------------------------------------------------------------

struct BoundsOptions {
  std::string range = "2..13";
  std::string format = "table";
};

std::pair<int, int> parse_range(const std::string& text) {
  int a = 0;
  int b = 0;
  std::size_t used = 0;
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      a = b = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument("");
    } else {
      const std::string left = text.substr(0, dots);
      const std::string right = text.substr(dots + 2);
      a = std::stoi(left, &used);
      if (used != left.size()) throw std::invalid_argument("");
      b = std::stoi(right, &used);
      if (used != right.size()) throw std::invalid_argument("");
    }
  } catch (const std::exception&) {
    throw UsageError("--range: expected A..B or N, got '" + text + "'");
  }
  if (a < 2 || b < a) throw UsageError("--range: need 2 <= A <= B, got '" + text + "'");
  return {a, b};
}

int run_bounds(const BoundsOptions& o, Streams io) {
  const auto [a, b] = parse_range(o.range);
  std::vector<BoundStatus> rows;
  for (int n = a; n <= b; ++n) rows.push_back(g_status(n));

  auto source = [](const BoundStatus& s) -> std::string {
    if (!s.upper) return "none";
    return s.externally_sourced ? "literature" : "local";
  };

  if (o.format == "json") {
    Json all = Json::array();
    for (const auto& s : rows) {
      Json j = {{"n", s.n},
                {"lower", s.lower},
                {"upper", s.upper ? Json(*s.upper) : Json(nullptr)},
                {"status", to_string(s.status)},
                {"upper_source", source(s)},
                {"provenance", s.provenance}};
      if (s.construction) {
        j["construction"] = {{"spec", s.construction->spec.describe()},
                             {"edges", s.construction->edges},
                             {"verified_mnt", s.construction->verified_mnt},
                             {"graph6", to_graph6(s.construction->witness)}};
      } else {
        j["construction"] = nullptr;
      }
      all.push_back(std::move(j));
    }
    io.out << all.dump(2) << '\n';
    return kExitOk;
  }

  std::ostringstream table;
  table.imbue(std::locale::classic());
  table << std::right << std::setw(4) << "n" << std::setw(7) << "lower" << std::setw(7) << "upper" << "  "
        << std::left << std::setw(7) << "status" << std::setw(12) << "source" << std::right << std::setw(7)
        << "local" << "  " << "construction" << '\n';
  for (const auto& s : rows) {
    table << std::right << std::setw(4) << s.n << std::setw(7) << s.lower << std::setw(7)
          << (s.upper ? std::to_string(*s.upper) : "-") << "  " << std::left << std::setw(7) << to_string(s.status)
          << std::setw(12) << source(s) << std::right << std::setw(7)
          << (s.construction ? std::to_string(s.construction->edges) : "-") << "  "
          << (s.construction ? s.construction->spec.describe() : "-") << '\n';
  }
  io.out << table.str();
  return kExitOk;
}

// ---- search ---------------------------------------------------------------

struct SearchOptions {
  std::string target;
  int n = 0;
  int jobs = 1;
  std::optional<std::int64_t> max_classes;
  std::optional<std::string> checkpoint;
  std::optional<std::string> resume;
  std::optional<std::string> out_dir;
  std::string format = "table";
  bool timing = false;
};

std::optional<std::int64_t> budget_from_env() {
  const char* raw = std::getenv("MNT_MAX_CLASSES");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(raw, &used);
    if (used != std::string(raw).size() || v < 0) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw UsageError("MNT_MAX_CLASSES: expected a non-negative integer, got '" + std::string(raw) + "'");
  }
}

Json outcome_json(const SearchOutcome& r, bool timing) {
  Json witnesses = Json::array();
  for (const Graph& g : r.witnesses) witnesses.push_back(to_graph6(g));
  Json stats = {{"classes_enumerated", r.stats.classes_enumerated},
                {"connected_classes_tested", r.stats.connected_classes_tested},
                {"decider_calls", r.stats.decider_calls}};
  if (timing) stats["wall_seconds"] = r.stats.wall_seconds;
  return {{"target", to_string(r.target)},
          {"n", r.n},
          {"exact", r.exact},
          {"lower", r.lower},
          {"upper", r.upper ? Json(*r.upper) : Json(nullptr)},
          {"witnesses", std::move(witnesses)},
          {"stats", std::move(stats)}};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError(path.string() + ": cannot open for writing");
  f << text;
  if (!f) throw UsageError(path.string() + ": write failed");
}

int run_search(const SearchOptions& o, Streams io) {
  SearchLimits limits;
  limits.jobs = o.jobs;
  limits.max_classes = o.max_classes ? o.max_classes : budget_from_env();
  limits.checkpoint_path = o.checkpoint;
  limits.resume_path = o.resume;

  const SearchOutcome r = o.target == "mnt" ? min_mnt_size(o.n, limits) : min_mnh_size(o.n, limits);

  if (o.out_dir) {
    const std::filesystem::path dir(*o.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw UsageError(dir.string() + ": " + ec.message());
    const std::string stem = o.target + "-n" + std::to_string(o.n);
    if (r.exact) {
      std::string lines;
      for (const Graph& g : r.witnesses) lines += to_graph6(g) + "\n";
      write_file(dir / (stem + "-m" + std::to_string(r.lower) + ".g6"), lines);
    }
    write_file(dir / (stem + "-stats.json"), outcome_json(r, o.timing).dump(2) + "\n");
  }

  if (o.format == "json") {
    io.out << outcome_json(r, o.timing).dump(2) << '\n';
  } else if (o.format == "graph6") {
    for (const Graph& g : r.witnesses) io.out << to_graph6(g) << '\n';
  } else {
    io.out << "target=" << o.target << " n=" << o.n << " exact=" << boolean(r.exact);
    if (r.exact) {
      io.out << " result=" << r.lower;
    } else {
      io.out << " lower=" << r.lower << " upper=" << (r.upper ? std::to_string(*r.upper) : "none");
    }
    io.out << " witnesses=" << r.witnesses.size() << " classes=" << r.stats.classes_enumerated
           << " connected_tested=" << r.stats.connected_classes_tested
           << " decider_calls=" << r.stats.decider_calls << '\n';
    for (const Graph& g : r.witnesses) io.out << to_graph6(g) << '\n';
  }
  if (o.timing) io.err << "wall_seconds=" << r.stats.wall_seconds << '\n';
  return kExitOk;
}

// ---- named ----------------------------------------------------------------

struct NamedOptions {
  std::vector<std::string> names;
  bool list = false;
};

int run_named(const NamedOptions& o, Streams io) {
  if (o.list) {
    for (const auto& name : named_catalog()) io.out << name << '\n';
    return kExitOk;
  }
  if (o.names.empty()) throw UsageError("named: give one or more names, or --list");
  std::vector<Graph> graphs;
  for (const auto& name : o.names) graphs.push_back(named(name));
  for (const Graph& g : graphs) io.out << to_graph6(g) << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Maximal nontraceable and maximal nonhamiltonian graphs", "mntool"};
  app.require_subcommand(1);

  const auto format_check = CLI::IsMember({"table", "json"});

  ClassifyOptions classify_opts;
  auto* classify_cmd = app.add_subcommand("classify", "traceability, hamiltonicity and maximality");
  add_input_options(classify_cmd, classify_opts.input);
  classify_cmd->add_option("--format", classify_opts.format)->check(format_check);
  classify_cmd->add_option("--assert", classify_opts.assertion, "exit 1 unless every graph has the property")
      ->check(CLI::IsMember({"mnt", "mnh", "traceable", "hamiltonian"}));
  classify_cmd->add_option("--jobs", classify_opts.jobs)->check(CLI::PositiveNumber);

  ConstructOptions construct_opts;
  auto* construct_cmd = app.add_subcommand("construct", "emit a construction as graph6");
  construct_cmd->require_subcommand(1);
  construct_cmd->add_option("--format", construct_opts.format)->check(CLI::IsMember({"graph6", "json"}));
  construct_cmd->fallthrough();
  auto* cliques_cmd = construct_cmd->add_subcommand("disjoint-cliques", "K_k and K_l side by side");
  cliques_cmd->add_option("--k", construct_opts.k)->required();
  cliques_cmd->add_option("--l", construct_opts.l)->required();
  auto* z1_cmd = construct_cmd->add_subcommand("zelinka1", "K_r with two appendages on one vertex");
  z1_cmd->add_option("--r", construct_opts.r)->required();
  z1_cmd->add_option("--sizes", construct_opts.sizes, "appendage orders, e.g. 2,1")->delimiter(',')->required();
  auto* z2_cmd = construct_cmd->add_subcommand("zelinka2", "K_r with appendages on three vertices");
  z2_cmd->add_option("--r", construct_opts.r)->required();
  z2_cmd->add_option("--sizes", construct_opts.sizes, "appendage orders, e.g. 2,2,1")->delimiter(',')->required();
  auto* dkw_cmd = construct_cmd->add_subcommand("dkw", "appendages on an eligible edge of a cubic MNH graph");
  dkw_cmd->add_option("--base", construct_opts.base, "built-in name or graph6")->capture_default_str();
  dkw_cmd->add_option("--edge", construct_opts.edge, "attachment edge, e.g. 0,1")->delimiter(',')->required();
  dkw_cmd->add_option("--h2", construct_opts.h2, "order of the second appendage")
      ->check(CLI::IsMember({1, 2}))
      ->required();

  EligibleOptions eligible_opts;
  auto* eligible_cmd = app.add_subcommand("dkw-eligible", "edges of a cubic MNH graph usable by dkw");
  add_input_options(eligible_cmd, eligible_opts.input);
  eligible_cmd->add_option("--format", eligible_opts.format)->check(format_check);
  eligible_cmd->add_option("--jobs", eligible_opts.jobs)->check(CLI::PositiveNumber);

  LemmaOptions lemma_opts;
  auto* lemma_cmd = app.add_subcommand("lemmas", "check structural laws of MNT graphs");
  add_input_options(lemma_cmd, lemma_opts.input);
  lemma_cmd->add_option("--format", lemma_opts.format)->check(format_check);
  lemma_cmd->add_flag("--exhaustive", lemma_opts.exhaustive, "no path/cutset caps (n <= 10)");
  lemma_cmd->add_option("--max-len", lemma_opts.max_len)->check(CLI::NonNegativeNumber);
  lemma_cmd->add_option("--max-t", lemma_opts.max_t)->check(CLI::NonNegativeNumber);
  lemma_cmd->add_option("--jobs", lemma_opts.jobs)->check(CLI::PositiveNumber);

  BoundsOptions bounds_opts;
  auto* bounds_cmd = app.add_subcommand("bounds", "lower and upper bounds for g(n)");
  bounds_cmd->add_option("--range", bounds_opts.range, "A..B or N")->capture_default_str();
  bounds_cmd->add_option("--format", bounds_opts.format)->check(format_check);

  SearchOptions search_opts;
  auto* search_cmd = app.add_subcommand("search", "exhaustive minimum-size search");
  search_cmd->add_option("target", search_opts.target)->required()->check(CLI::IsMember({"mnt", "mnh"}));
  search_cmd->add_option("--n", search_opts.n)->required();
  search_cmd->add_option("--jobs", search_opts.jobs)->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-classes", search_opts.max_classes, "budget (also MNT_MAX_CLASSES)")
      ->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--checkpoint", search_opts.checkpoint, "write state after every level");
  search_cmd->add_option("--resume", search_opts.resume, "continue from a checkpoint")->check(CLI::ExistingFile);
  search_cmd->add_option("--out-dir", search_opts.out_dir, "write witnesses and stats here");
  search_cmd->add_option("--format", search_opts.format)->check(CLI::IsMember({"table", "json", "graph6"}));
  search_cmd->add_flag("--timing", search_opts.timing, "report wall time");

  NamedOptions named_opts;
  auto* named_cmd = app.add_subcommand("named", "emit built-in graphs as graph6");
  named_cmd->add_option("names", named_opts.names);
  named_cmd->add_flag("--list", named_opts.list, "list the catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(classify_opts, io);
    if (construct_cmd->parsed()) {
      for (auto* sub : construct_cmd->get_subcommands()) {
        if (sub->parsed()) return run_construct(sub->get_name(), construct_opts, io);
      }
    }
    if (eligible_cmd->parsed()) return run_dkw_eligible(eligible_opts, io);
    if (lemma_cmd->parsed()) return run_lemmas(lemma_opts, io);
    if (bounds_cmd->parsed()) return run_bounds(bounds_opts, io);
    if (search_cmd->parsed()) return run_search(search_opts, io);
    if (named_cmd->parsed()) return run_named(named_opts, io);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace mnt::cli
