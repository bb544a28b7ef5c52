#ifndef MNT_CLASSIFY_HPP
#define MNT_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "mnt/graph.hpp"
#include "mnt/hamilton.hpp"

namespace mnt {

/// Outcome of maximality classification. `mnt` / `mnh` are empty when the
/// corresponding property was not evaluated (is_mnt leaves `mnh` empty and
/// vice versa; classify fills both).
///
/// A failing edge is the lexicographically first non-edge whose addition
/// leaves the graph nontraceable (resp. nonhamiltonian); it is present exactly
/// when the graph is nontraceable (resp. nonhamiltonian), has non-edges, and
/// is not maximal.
struct ClassificationReport {
  bool traceable = false;
  bool hamiltonian = false;
  std::optional<bool> mnt;
  std::optional<bool> mnh;
  std::optional<Edge> mnt_failing_edge;
  std::optional<Edge> mnh_failing_edge;
  std::optional<Witness> path_witness;
  std::optional<Witness> cycle_witness;
};

/// Maximal nontraceable: nontraceable, and G+e traceable for every non-edge e.
/// K_n is traceable, so never MNT.
ClassificationReport is_mnt(const Graph& g);

/// Maximal nonhamiltonian: nonhamiltonian, and G+e hamiltonian for every
/// non-edge e.
ClassificationReport is_mnh(const Graph& g);

ClassificationReport classify(const Graph& g);

/// Exhaustive variants: every non-edge whose addition keeps the graph
/// nontraceable / nonhamiltonian. Empty when the graph is traceable /
/// hamiltonian.
std::vector<Edge> mnt_failures(const Graph& g);
std::vector<Edge> mnh_failures(const Graph& g);

/// Edges y1y2 of a cubic MNH graph such that y1, y2 have no common neighbour
/// and G+e has a Hamiltonian cycle through y1y2 for every non-edge e.
/// Empty whenever g is not cubic or not MNH.
std::vector<Edge> dkw_eligible(const Graph& g);

/// Same conditions for a single edge, skipping the cubic/MNH gate.
bool dkw_edge_conditions_hold(const Graph& g, Edge y);

}  // namespace mnt

#endif  // MNT_CLASSIFY_HPP
