#include "mnt/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mnt/classify.hpp"

namespace mnt {

std::string to_string(Family f) {
  switch (f) {
    case Family::disjoint_cliques: return "disjoint_cliques";
    case Family::zelinka1: return "zelinka1";
    case Family::zelinka2: return "zelinka2";
    case Family::dkw: return "dkw";
  }
  return "?";
}

int ConstructionSpec::appendage_total() const {
  return std::accumulate(appendage_sizes.begin(), appendage_sizes.end(), 0);
}

std::string ConstructionSpec::describe() const {
  auto list = [](const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  };
  switch (family) {
    case Family::disjoint_cliques:
      return "disjoint_cliques(" + std::to_string(clique_order) + "," +
             std::to_string(appendage_sizes.at(0)) + ")";
    case Family::zelinka1:
    case Family::zelinka2:
      return to_string(family) + "(" + std::to_string(clique_order) + "," + list(appendage_sizes) + ")";
    case Family::dkw:
      return "dkw(" + base->name + ",{" + std::to_string(base->y1) + "," + std::to_string(base->y2) +
             "}," + std::to_string(base->h2_size) + ")";
  }
  return "?";
}

namespace {

int choose2(int r) { return r * (r - 1) / 2; }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void add_clique(std::vector<Edge>& edges, int first, int count) {
  for (int i = first; i < first + count; ++i)
    for (int j = i + 1; j < first + count; ++j) edges.emplace_back(i, j);
}

// Appends a K1 or K2 after vertex `next`, fully joined to `anchor`.
// Returns the next free vertex.
int add_appendage(std::vector<Edge>& edges, int next, int size, int anchor) {
  for (int i = 0; i < size; ++i) edges.emplace_back(anchor, next + i);
  if (size == 2) edges.emplace_back(next, next + 1);
  return next + size;
}

Graph clique_with_appendages(int r, std::span<const int> sizes, bool shared_anchor) {
  require(r >= 3, "clique order must be at least 3");
  int total = 0;
  for (int a : sizes) {
    require(a == 1 || a == 2, "appendage sizes must be 1 or 2");
    total += a;
  }
  require(r + total <= kMaxN, "construction order exceeds MAXN");
  std::vector<Edge> edges;
  add_clique(edges, 0, r);
  int next = r;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    next = add_appendage(edges, next, sizes[i], shared_anchor ? 0 : static_cast<int>(i));
  }
  return Graph::from_edges(r + total, edges);
}

}  // namespace

Graph disjoint_cliques(int k, int l) {
  require(k >= 1 && l >= 1, "clique orders must be positive");
  require(k + l <= kMaxN, "construction order exceeds MAXN");
  std::vector<Edge> edges;
  add_clique(edges, 0, k);
  add_clique(edges, k, l);
  return Graph::from_edges(k + l, edges);
}

Graph zelinka_type1(int r, std::span<const int> sizes) {
  require(sizes.size() == 2, "zelinka type 1 takes two appendage sizes");
  return clique_with_appendages(r, sizes, true);
}

Graph zelinka_type2(int r, std::span<const int> sizes) {
  require(sizes.size() == 3, "zelinka type 2 takes three appendage sizes");
  return clique_with_appendages(r, sizes, false);
}

Graph dkw_construct_unchecked(const Graph& base, int y1, int y2, int h2_size) {
  const int n = base.order();
  require(y1 >= 0 && y1 < n && y2 >= 0 && y2 < n && base.has_edge(y1, y2), "y1y2 must be an edge of the base");
  require(h2_size == 1 || h2_size == 2, "h2_size must be 1 or 2");
  require(n + 1 + h2_size <= kMaxN, "construction order exceeds MAXN");
  std::vector<Edge> edges = base.edges();
  int next = add_appendage(edges, n, 1, y1);
  add_appendage(edges, next, h2_size, y2);
  return Graph::from_edges(n + 1 + h2_size, edges);
}

Graph dkw_construct(const Graph& base, int y1, int y2, int h2_size) {
  require(y1 >= 0 && y1 < base.order() && y2 >= 0 && y2 < base.order() && base.has_edge(y1, y2),
          "y1y2 must be an edge of the base");
  const auto eligible = dkw_eligible(base);
  require(std::find(eligible.begin(), eligible.end(), Edge(y1, y2)) != eligible.end(),
          "edge " + to_string(Edge(y1, y2)) + " is not DKW-eligible in the base graph");
  return dkw_construct_unchecked(base, y1, y2, h2_size);
}

Graph build(const ConstructionSpec& spec) {
  switch (spec.family) {
    case Family::disjoint_cliques:
      require(spec.appendage_sizes.size() == 1, "disjoint_cliques takes one second clique order");
      return disjoint_cliques(spec.clique_order, spec.appendage_sizes[0]);
    case Family::zelinka1: return zelinka_type1(spec.clique_order, spec.appendage_sizes);
    case Family::zelinka2: return zelinka_type2(spec.clique_order, spec.appendage_sizes);
    case Family::dkw:
      require(spec.base.has_value(), "dkw construction needs a base graph");
      return dkw_construct(spec.base->graph, spec.base->y1, spec.base->y2, spec.base->h2_size);
  }
  throw std::invalid_argument("unknown family");
}

int predicted_size(const ConstructionSpec& spec) {
  const int s = spec.appendage_total();
  switch (spec.family) {
    case Family::disjoint_cliques: return choose2(spec.clique_order) + choose2(spec.appendage_sizes.at(0));
    case Family::zelinka1: return choose2(spec.clique_order) + 2 * s - 2;
    case Family::zelinka2: return choose2(spec.clique_order) + 2 * s - 3;
    case Family::dkw: return spec.base->graph.size() + (spec.base->h2_size == 1 ? 2 : 4);
  }
  return -1;
}

namespace {

std::vector<ConstructionSpec> clique_family(Family family, int appendages, int max_order) {
  std::vector<ConstructionSpec> out;
  const int combos = 1 << appendages;
  for (int r = 3; r + appendages <= max_order; ++r) {
    for (int mask = 0; mask < combos; ++mask) {
      std::vector<int> sizes;
      for (int i = 0; i < appendages; ++i) sizes.push_back((mask >> (appendages - 1 - i)) & 1 ? 2 : 1);
      const int s = std::accumulate(sizes.begin(), sizes.end(), 0);
      if (r + s > max_order || r + s > kMaxN) continue;
      out.push_back({family, r, std::move(sizes), std::nullopt});
    }
  }
  return out;
}

}  // namespace

std::vector<ConstructionSpec> zelinka1_family(int max_order) { return clique_family(Family::zelinka1, 2, max_order); }
std::vector<ConstructionSpec> zelinka2_family(int max_order) { return clique_family(Family::zelinka2, 3, max_order); }

std::vector<ConstructionSpec> disjoint_cliques_family(int max_order) {
  std::vector<ConstructionSpec> out;
  for (int k = 1; k < max_order && k < kMaxN; ++k) {
    for (int l = 1; k + l <= max_order && k + l <= kMaxN; ++l) {
      out.push_back({Family::disjoint_cliques, k, {l}, std::nullopt});
    }
  }
  return out;
}

}  // namespace mnt
