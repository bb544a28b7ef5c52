#ifndef MNT_CANONICAL_HPP
#define MNT_CANONICAL_HPP

#include <span>
#include <vector>

#include "mnt/graph.hpp"

namespace mnt {

/// `label[v]` is the position of v in the canonical ordering; `graph` is g
/// relabeled accordingly. Isomorphic inputs yield identical `graph`s.
struct CanonicalLabeling {
  Graph graph{1};
  std::vector<int> label;
};

/// Exact canonical labeling by individualization-refinement: equitable
/// partition refinement, branching on the first non-singleton cell, every
/// leaf explored except subtrees related by a twin transposition (u, v with
/// N(u)-v = N(v)-u). The canonical graph is the leaf whose adjacency rows are
/// lexicographically least.
CanonicalLabeling canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// g with vertex v renamed to label[v]; label must be a permutation.
Graph relabel(const Graph& g, std::span<const int> label);

/// Strict weak order on graphs: by order, then adjacency rows.
struct GraphLess {
  bool operator()(const Graph& a, const Graph& b) const;
};

}  // namespace mnt

#endif  // MNT_CANONICAL_HPP
