#ifndef MNT_SEARCH_HPP
#define MNT_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mnt/graph.hpp"

namespace mnt {

/// Largest order accepted by the exhaustive generator.
inline constexpr int kMaxEnumerationOrder = 10;

/// One representative (in canonical form) per isomorphism class of graphs
/// with m + 1 edges, generated from the classes with m edges by canonical
/// augmentation. `level` must hold canonical forms of one edge count. Output
/// is sorted with GraphLess; `jobs` worker threads split the parents.
std::vector<Graph> next_level(const std::vector<Graph>& level, int jobs = 1);

/// Canonical representatives of all graphs with n vertices and m edges
/// (connected ones only if requested), sorted with GraphLess.
/// Throws std::invalid_argument unless 1 <= n <= kMaxEnumerationOrder and
/// 0 <= m <= n(n-1)/2.
std::vector<Graph> enumerate_classes(int n, int m, bool connected_only, int jobs = 1);

enum class Target { mnt, mnh };

std::string to_string(Target t);

struct SearchLimits {
  std::optional<std::int64_t> max_classes;  // soft budget on classes enumerated
  int jobs = 1;
  std::optional<std::string> checkpoint_path;  // written after every level
  std::optional<std::string> resume_path;
};

struct SearchStats {
  std::int64_t classes_enumerated = 0;
  std::int64_t connected_classes_tested = 0;
  std::int64_t decider_calls = 0;  // classifier invocations
  double wall_seconds = 0.0;
};

/// Either the exact minimum size (lower == upper, exact = true) or, when the
/// budget ran out, a bracket: no qualifying graph has fewer than `lower`
/// edges, and one exists with `upper` edges when `upper` is set (for MNT the
/// smaller of the two-clique minimum and best_known_upper_g).
struct SearchOutcome {
  int n = 0;
  Target target = Target::mnt;
  bool exact = false;
  int lower = 0;
  std::optional<int> upper;
  std::vector<Graph> witnesses;  // canonical forms, sorted; size == lower when exact
  SearchStats stats;
};

/// Minimum size of an MNT graph of order n, 2 <= n <= kMaxEnumerationOrder.
/// Connected classes are classified level by level in m; disconnected MNT
/// graphs are exactly K_k ∪ K_{n-k} and enter in closed form.
SearchOutcome min_mnt_size(int n, const SearchLimits& limits = {});

/// Minimum size of an MNH graph of order n, 4 <= n <= 9. Disconnected graphs
/// of order >= 3 are never MNH (an added bridge cannot lie on a cycle).
SearchOutcome min_mnh_size(int n, const SearchLimits& limits = {});

/// Least C(k,2) + C(n-k,2) over 1 <= k < n, and the graphs attaining it.
int two_clique_minimum(int n);
std::vector<Graph> two_clique_minimizers(int n);

}  // namespace mnt

#endif  // MNT_SEARCH_HPP
