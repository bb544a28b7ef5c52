#include "mnt/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace mnt {

std::string to_string(Edge e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxN) {
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " outside 1.." + std::to_string(kMaxN));
  }
}

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " outside 0.." + std::to_string(n - 1));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    check_vertex(n, e.u);
    check_vertex(n, e.v);
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (g.has_edge(e.u, e.v)) throw std::invalid_argument("duplicate edge " + to_string(e));
    g.adj_[e.u] |= Mask{1} << e.v;
    g.adj_[e.v] |= Mask{1} << e.u;
    ++g.edge_count_;
  }
  return g;
}

Graph Graph::from_rows(int n, std::span<const Mask> rows) {
  Graph g(n);
  if (static_cast<int>(rows.size()) < n) throw std::invalid_argument("too few rows");
  const Mask all = VertexSet::all(n).bits();
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    const Mask r = rows[v];
    if ((r & ~all) != 0) throw std::invalid_argument("row " + std::to_string(v) + " has out-of-range bits");
    if ((r >> v) & 1U) throw std::invalid_argument("loop at vertex " + std::to_string(v));
    g.adj_[v] = r;
    degree_sum += std::popcount(r);
  }
  for (int v = 0; v < n; ++v) {
    for (int w : VertexSet(g.adj_[v])) {
      if (!g.has_edge(w, v)) throw std::invalid_argument("rows are not symmetric");
    }
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v : VertexSet(adj_[u] & ~((Mask{2} << u) - 1))) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw std::invalid_argument("cannot add loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) throw std::invalid_argument("edge " + to_string({u, v}) + " already present");
  Graph g = *this;
  g.adj_[u] |= Mask{1} << v;
  g.adj_[v] |= Mask{1} << u;
  ++g.edge_count_;
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v || !has_edge(u, v)) throw std::invalid_argument("edge " + to_string({u, v}) + " not present");
  Graph g = *this;
  g.adj_[u] &= ~(Mask{1} << v);
  g.adj_[v] &= ~(Mask{1} << u);
  --g.edge_count_;
  return g;
}

bool Graph::operator==(const Graph& o) const {
  return n_ == o.n_ && std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
}

Graph add_edge(const Graph& g, int u, int v) { return g.with_edge(u, v); }

std::vector<Edge> non_edges(const Graph& g) {
  std::vector<Edge> out;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    const Mask later = VertexSet::all(n).bits() & ~((Mask{2} << u) - 1);
    for (int v : VertexSet(later & ~g.row(u))) out.emplace_back(u, v);
  }
  return out;
}

InducedSubgraph induced(const Graph& g, VertexSet u) {
  if (u.empty()) throw std::invalid_argument("induced subgraph of an empty vertex set");
  if (!u.is_subset_of(g.vertices())) throw std::invalid_argument("vertex set exceeds graph order");
  std::vector<int> original = u.to_vector();
  std::array<int, kMaxN> position{};
  for (std::size_t i = 0; i < original.size(); ++i) position[original[i]] = static_cast<int>(i);
  std::array<Mask, kMaxN> rows{};
  for (std::size_t i = 0; i < original.size(); ++i) {
    for (int w : g.neighbors(original[i]) & u) rows[i] |= Mask{1} << position[w];
  }
  const int k = static_cast<int>(original.size());
  return {Graph::from_rows(k, std::span<const Mask>(rows.data(), k)), std::move(original)};
}

VertexSet reachable_within(const Graph& g, VertexSet alive, int start) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next &= alive;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet alive) {
  std::vector<VertexSet> out;
  VertexSet rest = alive;
  while (!rest.empty()) {
    VertexSet c = reachable_within(g, alive, rest.first());
    out.push_back(c);
    rest -= c;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertices()); }

bool is_connected(const Graph& g) {
  return reachable_within(g, g.vertices(), 0) == g.vertices();
}

bool is_regular(const Graph& g, int degree) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != degree) return false;
  }
  return true;
}

bool induces_clique(const Graph& g, VertexSet u) {
  for (int v : u) {
    if (!(u - VertexSet::single(v)).is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

namespace {

// Hopcroft-Tarjan lowpoint search restricted to `alive`.
struct BlockSearch {
  BlockSearch(const Graph& graph, VertexSet region) : g(graph), alive(region) {}

  const Graph& g;
  VertexSet alive;
  std::array<int, kMaxN> disc{};
  std::array<int, kMaxN> low{};
  int clock = 0;
  std::vector<Edge> edge_stack;
  std::vector<VertexSet> blocks;
  VertexSet cuts;

  void run(int root) {
    disc.fill(-1);
    visit(root, -1);
  }

  void pop_block(Edge until) {
    VertexSet b;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      b.insert(e.u);
      b.insert(e.v);
      if (e == until) break;
    }
    blocks.push_back(b);
  }

  void visit(int v, int parent) {
    disc[v] = low[v] = clock++;
    int children = 0;
    for (int w : g.neighbors(v) & alive) {
      if (disc[w] < 0) {
        ++children;
        edge_stack.emplace_back(v, w);
        visit(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent >= 0 || children > 1) cuts.insert(v);
          pop_block(Edge(v, w));
        }
      } else if (w != parent && disc[w] < disc[v]) {
        edge_stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
    // Root cut-vertex status is decided after all children are known.
    if (parent < 0 && children <= 1) cuts.erase(v);
  }
};

}  // namespace

VertexSet cut_vertices_within(const Graph& g, VertexSet alive) {
  VertexSet cuts;
  VertexSet rest = alive;
  while (!rest.empty()) {
    BlockSearch s{g, alive};
    const int root = rest.first();
    s.run(root);
    cuts |= s.cuts;
    rest -= reachable_within(g, alive, root);
  }
  return cuts;
}

BlockDecomposition blocks_within(const Graph& g, VertexSet alive) {
  if (alive.size() == 1) return {{alive}, {}};
  BlockSearch s{g, alive};
  s.run(alive.first());
  return {std::move(s.blocks), s.cuts};
}

BlockDecomposition blocks_and_cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("block decomposition requires a connected graph");
  if (g.order() == 1) return {{VertexSet::single(0)}, {}};
  BlockSearch s{g, g.vertices()};
  s.run(0);
  std::sort(s.blocks.begin(), s.blocks.end(), [](VertexSet a, VertexSet b) {
    return std::pair(a.first(), a.bits()) < std::pair(b.first(), b.bits());
  });
  return {std::move(s.blocks), s.cuts};
}

Graph from_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  std::size_t offset = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.starts_with(kHeader)) offset = kHeader.size();
  if (line.size() <= offset) throw Graph6Error(offset, "missing order byte");

  const unsigned char lead = static_cast<unsigned char>(line[offset]);
  if (lead == '~') throw Graph6Error(offset, "multi-byte order (n > 62) exceeds MAXN=" + std::to_string(kMaxN));
  if (lead < 63 || lead > 126) throw Graph6Error(offset, "order byte " + std::to_string(lead) + " outside 63..126");
  const int n = lead - 63;
  if (n == 0) throw Graph6Error(offset, "order 0 is not a valid graph here");
  if (n > kMaxN) throw Graph6Error(offset, "order " + std::to_string(n) + " exceeds MAXN=" + std::to_string(kMaxN));

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  const std::string_view payload = line.substr(offset + 1);
  if (payload.size() != expected) {
    throw Graph6Error(offset + 1 + std::min(payload.size(), expected),
                      "payload has " + std::to_string(payload.size()) + " bytes, expected " +
                          std::to_string(expected) + " for n=" + std::to_string(n));
  }
  std::array<Mask, kMaxN> rows{};
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t pos = k / 6;
      const unsigned char c = static_cast<unsigned char>(payload[pos]);
      if (c < 63 || c > 126) {
        throw Graph6Error(offset + 1 + pos, "byte " + std::to_string(c) + " outside 63..126");
      }
      if (((c - 63) >> (5 - k % 6)) & 1) {
        rows[i] |= Mask{1} << j;
        rows[j] |= Mask{1} << i;
      }
    }
  }
  for (std::size_t pos = bits / 6; pos < expected; ++pos) {
    const unsigned char c = static_cast<unsigned char>(payload[pos]);
    if (c < 63 || c > 126) throw Graph6Error(offset + 1 + pos, "byte " + std::to_string(c) + " outside 63..126");
    const int used = static_cast<int>(bits - pos * 6);  // bits of this byte that carry data
    const int pad_mask = (1 << (6 - used)) - 1;
    if (((c - 63) & pad_mask) != 0) throw Graph6Error(offset + 1 + pos, "non-zero padding bits");
  }
  return Graph::from_rows(n, std::span<const Mask>(rows.data(), n));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

namespace {

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
    e.emplace_back(i, i + 5);
  }
  return Graph::from_edges(10, e);
}

int parse_order(std::string_view name, std::string_view digits) {
  int n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw std::invalid_argument("bad order in named graph '" + std::string(name) + "'");
  }
  return n;
}

}  // namespace

Graph named(std::string_view name) {
  if (name == "petersen") return petersen();
  if (name == "paw") return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});

  const auto underscore = name.rfind('_');
  if (underscore == std::string_view::npos) {
    throw std::invalid_argument("unknown named graph '" + std::string(name) + "'");
  }
  const std::string_view family = name.substr(0, underscore);
  const int n = parse_order(name, name.substr(underscore + 1));
  std::vector<Edge> e;
  if (family == "path") {
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
  }
  if (family == "cycle") {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
  }
  if (family == "complete") {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
  }
  if (family == "empty") return Graph(n);
  if (family == "star") {
    for (int i = 1; i <= n; ++i) e.emplace_back(0, i);
    return Graph::from_edges(n + 1, e);
  }
  throw std::invalid_argument("unknown named graph '" + std::string(name) + "'");
}

std::vector<std::string> named_catalog() {
  return {"petersen", "paw", "path_N", "cycle_N", "complete_N", "empty_N", "star_N"};
}

}  // namespace mnt
