#ifndef MNT_HAMILTON_HPP
#define MNT_HAMILTON_HPP

#include <optional>
#include <vector>

#include "mnt/graph.hpp"

namespace mnt {

enum class WitnessKind { path, cycle };

/// A Hamiltonian path or cycle as a vertex sequence covering every vertex once.
struct Witness {
  WitnessKind kind = WitnessKind::path;
  std::vector<int> order;

  bool operator==(const Witness&) const = default;
};

struct Decision {
  bool yes = false;
  std::optional<Witness> witness;  // present iff yes

  explicit operator bool() const { return yes; }
};

/// Exact engines. `automatic` picks subset DP up to kDpMaxOrder vertices and
/// backtracking above. Both engines return identical answers and identical
/// witnesses (the lexicographically least vertex sequence).
enum class Engine { automatic, subset_dp, backtracking };

inline constexpr int kDpMaxOrder = 20;

/// Hamiltonian path; K1 counts as traceable.
Decision is_traceable(const Graph& g, Engine engine = Engine::automatic);

/// Hamiltonian cycle; needs n >= 3, so K1 and K2 are nonhamiltonian. Cycle
/// witnesses start at vertex 0.
Decision is_hamiltonian(const Graph& g, Engine engine = Engine::automatic);

/// Whether some Hamiltonian cycle of g uses the edge uv.
/// Throws std::invalid_argument if uv is not an edge.
bool has_ham_cycle_through_edge(const Graph& g, int u, int v, Engine engine = Engine::automatic);

/// Whether g has a Hamiltonian path with endpoints u and v (u != v).
bool has_ham_path_between(const Graph& g, int u, int v, Engine engine = Engine::automatic);

/// Independent validator: distinct, exhaustive, consecutive vertices adjacent,
/// and for cycles n >= 3 and the closing edge present.
bool is_valid_witness(const Graph& g, const Witness& w);

/// Brute-force oracles: enumerate vertex permutations in lexicographic order,
/// skipping every permutation that extends an already non-adjacent prefix.
inline constexpr int kNaiveMaxOrder = 12;
/// Throws std::invalid_argument when n > kNaiveMaxOrder.
bool naive_traceable(const Graph& g);
bool naive_hamiltonian(const Graph& g);

}  // namespace mnt

#endif  // MNT_HAMILTON_HPP
