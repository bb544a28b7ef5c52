#ifndef MNT_LAWS_HPP
#define MNT_LAWS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mnt/graph.hpp"

namespace mnt {

/// One failed structural claim. `evidence` is re-checkable against the graph
/// (a path, a cutset, a block, or a vertex tuple depending on `law`).
struct Violation {
  std::string law;
  std::vector<int> evidence;
  std::string detail;
};

// Law identifiers.
inline constexpr const char* kPathNeighborLaw = "path_neighbor";
inline constexpr const char* kCutsetComponentLaw = "cutset_component_count";
inline constexpr const char* kCutsetCompleteLaw = "cutset_parts_complete";
inline constexpr const char* kBlockCutVertexLaw = "block_cut_vertex_count";
inline constexpr const char* kBlockStructureLaw = "three_cut_block_structure_as_interpreted";
inline constexpr const char* kDegree2AdjacentLaw = "degree2_neighbors_adjacent";
inline constexpr const char* kDegree2NeighborDegreeLaw = "degree2_neighbor_degrees";
inline constexpr const char* kSharedOneNeighborLaw = "degree2_pair_one_common_neighbor";
inline constexpr const char* kSharedTwoNeighborsLaw = "degree2_pair_two_common_neighbors";
inline constexpr const char* kSharedTripleLaw = "degree2_triple_complete_rest";
inline constexpr const char* kDegree2SizeLaw = "size_with_degree2_vertices";
inline constexpr const char* kMntMinimumSizeLaw = "mnt_minimum_size";
inline constexpr const char* kMnhMinimumSizeLaw = "mnh_minimum_size";

/// Every simple path Q with 3 <= |V(Q)| <= max_len whose vertex set does not
/// induce a clique must have an internal vertex with a neighbour off Q.
/// Each undirected path is examined once (first vertex < last vertex).
std::vector<Violation> check_path_neighbor_law(const Graph& g, int max_len);

/// For every cutset T with |T| <= max_t: G - T has k <= |T| + 2 components,
/// and when k = |T| + 2 every <T ∪ A_i> is complete.
/// Throws std::invalid_argument on disconnected input.
std::vector<Violation> check_cutset_law(const Graph& g, int max_t);

/// Every block has at most three cut-vertices; if one has exactly three, G
/// consists of exactly four blocks, all complete.
/// Throws std::invalid_argument on disconnected input.
std::vector<Violation> check_block_law(const Graph& g);

/// Degree-2 structure of connected MNT graphs:
///  - the two neighbours of a degree-2 vertex are adjacent; one has degree
///    >= 4, the other degree 2 or >= 4;
///  - non-adjacent degree-2 vertices with exactly one common neighbour x
///    force d(x) >= 5;
///  - with the same two neighbours x1, x2: N(x1)-x2 = N(x2)-x1 and
///    d(x1) = d(x2) >= 5;
///  - three degree-2 vertices with the same two neighbours (n >= 6) leave a
///    complete graph when removed, and e(G) = (n^2 - 7n + 24) / 2.
/// Disconnected graphs are outside the statements and yield no violations.
std::vector<Violation> check_degree2_laws(const Graph& g);

struct AssumedStatus {
  bool mnt = false;
  bool mnh = false;
};

/// Size inequalities: 2e >= 3n + m for connected MNT graphs of order >= 7
/// without degree-1 vertices or adjacent degree-2 vertices (m = number of
/// degree-2 vertices); e >= lower_bound_g(n) for MNT graphs; 2e >= 3n for MNH
/// graphs of order >= 6. Status is computed with the classifier unless
/// `assumed` is given.
std::vector<Violation> check_size_theorems(const Graph& g, std::optional<AssumedStatus> assumed = std::nullopt);

struct LawOptions {
  /// Removes the path-length and cutset-size caps (only honoured for n <= 10).
  bool exhaustive = false;
  std::optional<int> max_len;
  std::optional<int> max_t;
};

/// Default caps: max_len = min(n, 6), max_t = min(n - 2, 4).
int default_max_len(int n);
int default_max_t(int n);

struct LawReport {
  bool certified_mnt = false;
  bool certified_mnh = false;
  /// "consistency check" when the graph is certified MNT, else "negative control".
  std::string label;
  int max_len = 0;
  int max_t = 0;
  std::vector<std::string> skipped;  // laws not applicable (e.g. disconnected)
  std::vector<Violation> violations;
};

LawReport check_all_laws(const Graph& g, const LawOptions& options = {});

}  // namespace mnt

#endif  // MNT_LAWS_HPP
