#ifndef MNT_BOUNDS_HPP
#define MNT_BOUNDS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mnt/constructions.hpp"
#include "mnt/graph.hpp"

namespace mnt {

/// Orders below 54 for which an MNT graph of size ceil((3n-2)/2) is known from
/// attaching appendages to cubic MNH graphs found in the literature.
inline constexpr std::array<int, 16> kCubicBaseOrders = {22, 23, 30, 31, 38, 39, 40, 41,
                                                         42, 43, 46, 47, 48, 49, 50, 51};
/// From this order on, the same size is known for every n.
inline constexpr int kCubicBaseThreshold = 54;

/// ceil((3n - 2) / 2).
constexpr int three_halves_bound(int n) { return (3 * n - 1) / 2; }

/// Lower bound for g(n), the least size of an MNT graph of order n:
/// exact values 0,1,2,4,6,8,10,12 for n = 2..9 and ceil((3n-2)/2) from 10 on.
/// Throws std::invalid_argument for n < 2.
int lower_bound_g(int n);

struct UpperBound {
  int edges = 0;
  ConstructionSpec spec;
  Graph witness{1};
  bool verified_mnt = false;  // witness re-checked with is_mnt
};

/// Least size over every construction this library can build at order n
/// (disjoint cliques, both Zelinka types, DKW over the built-in Petersen
/// graph). Only witnesses that pass is_mnt are reported. Results are cached.
/// Empty for n > kMaxN.
std::optional<UpperBound> best_known_upper_g(int n);

enum class Status { known, open };

std::string to_string(Status s);

struct BoundStatus {
  int n = 0;
  int lower = 0;
  std::optional<int> upper;
  Status status = Status::open;
  bool externally_sourced = false;  // upper rests on cubic MNH bases from the literature
  std::vector<std::string> provenance;
  std::optional<UpperBound> construction;  // locally generated witness, if any
};

/// Per-order status of g(n). Throws std::invalid_argument for n < 2.
BoundStatus g_status(int n);

}  // namespace mnt

#endif  // MNT_BOUNDS_HPP
