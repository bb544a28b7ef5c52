#ifndef MNT_GRAPH_HPP
#define MNT_GRAPH_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mnt {

/// Largest supported order. One 32-bit word per neighbourhood.
inline constexpr int kMaxN = 32;

using Mask = std::uint32_t;

/// A subset of {0, ..., n-1} stored as a bit vector.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}

  static constexpr VertexSet all(int n) {
    return VertexSet(n >= kMaxN ? ~Mask{0} : (Mask{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(Mask{1} << v); }
  static VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  constexpr Mask bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  /// Smallest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= Mask{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(Mask{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr auto operator<=>(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(Mask rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

 private:
  Mask bits_ = 0;
};

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr auto operator<=>(const Edge&) const = default;
};

std::string to_string(Edge e);

/// Thrown for graph6 decoding failures; `position` is the 0-based byte
/// offset in the input line where the problem was detected.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(std::size_t position, const std::string& what)
      : std::runtime_error("graph6: byte " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Simple undirected graph on vertices 0..n-1 with 1 <= n <= kMaxN.
///
/// Graphs are immutable values: every operation that would change the edge
/// set returns a new graph.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws std::invalid_argument on loops, duplicates or out-of-range ends.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Builds from neighbourhood rows; rows must be symmetric and loop-free.
  static Graph from_rows(int n, std::span<const Mask> rows);

  int order() const { return n_; }
  int size() const { return edge_count_; }
  VertexSet vertices() const { return VertexSet::all(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  Mask row(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }

  std::vector<Edge> edges() const;
  bool is_complete() const { return edge_count_ == n_ * (n_ - 1) / 2; }

  /// G + uv. Throws std::invalid_argument if u == v or uv is already an edge.
  Graph with_edge(int u, int v) const;
  /// G - uv. Throws std::invalid_argument if uv is not an edge.
  Graph without_edge(int u, int v) const;

  bool operator==(const Graph& o) const;

 private:
  int n_;
  int edge_count_ = 0;
  std::array<Mask, kMaxN> adj_{};
};

Graph add_edge(const Graph& g, int u, int v);

/// All non-adjacent distinct pairs, lexicographic.
std::vector<Edge> non_edges(const Graph& g);

/// Induced subgraph together with the map from new to original labels.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;  // original[new_label] = old label
};

/// The subgraph induced by `u`; vertices keep their relative order.
InducedSubgraph induced(const Graph& g, VertexSet u);

/// Connected components of g, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Components of the subgraph induced by `alive`, ordered by smallest member.
std::vector<VertexSet> components_within(const Graph& g, VertexSet alive);

/// Vertices reachable from `start` inside `alive` (start included).
VertexSet reachable_within(const Graph& g, VertexSet alive, int start);

bool is_connected(const Graph& g);
bool is_regular(const Graph& g, int degree);

struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // ordered by smallest member, then bits
  VertexSet cut_vertices;
};

/// Biconnected components (bridges count as blocks) and articulation points
/// of a connected graph. Throws std::invalid_argument on disconnected input.
BlockDecomposition blocks_and_cut_vertices(const Graph& g);

/// Articulation points of the subgraph induced by `alive`.
VertexSet cut_vertices_within(const Graph& g, VertexSet alive);

/// Block decomposition of the subgraph induced by a non-empty `alive` set
/// that induces a connected subgraph (not checked).
BlockDecomposition blocks_within(const Graph& g, VertexSet alive);

/// Whether the subgraph induced by `u` is complete.
bool induces_clique(const Graph& g, VertexSet u);

Graph from_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// Built-in graphs. Labelings:
///   petersen      outer cycle 0..4, inner pentagram 5..9 (i+5 ~ (i+2)%5+5),
///                 spokes i ~ i+5
///   paw           triangle 0,1,2 with pendant 3 on vertex 0
///   path_N        0-1-...-(N-1)
///   cycle_N       path_N plus (N-1)-0
///   complete_N    K_N
///   empty_N       N isolated vertices
///   star_N        K_{1,N}, centre 0
/// Throws std::invalid_argument for unknown names or bad orders.
Graph named(std::string_view name);

std::vector<std::string> named_catalog();

}  // namespace mnt

#endif  // MNT_GRAPH_HPP
