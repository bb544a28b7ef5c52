#ifndef MNT_CONSTRUCTIONS_HPP
#define MNT_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mnt/graph.hpp"

namespace mnt {

enum class Family { disjoint_cliques, zelinka1, zelinka2, dkw };

std::string to_string(Family f);

/// Base graph and attachment edge for the DKW family. The K1 appendage joins
/// y.u, the K1-or-K2 appendage joins y.v.
struct DkwBase {
  std::string name;  // label used in provenance; "petersen" for the built-in
  Graph graph;
  int y1 = 0;
  int y2 = 1;
  int h2_size = 1;
};

/// Parameters identifying one construction instance.
///   disjoint_cliques: clique_order = k, appendage_sizes = {l}
///   zelinka1:         clique_order = r, appendage_sizes = {a, b}
///   zelinka2:         clique_order = r, appendage_sizes = {a, b, c}
///   dkw:              base set
struct ConstructionSpec {
  Family family = Family::disjoint_cliques;
  int clique_order = 0;
  std::vector<int> appendage_sizes;
  std::optional<DkwBase> base;

  int appendage_total() const;
  std::string describe() const;
};

/// K_k ∪ K_l on vertices 0..k-1 and k..k+l-1.
Graph disjoint_cliques(int k, int l);

/// K_r (vertices 0..r-1) with appendages H1, H2 (K1 or K2) fully joined to
/// clique vertex 0. Appendage vertices follow the clique, H1 first.
Graph zelinka_type1(int r, std::span<const int> sizes);

/// K_r with appendage H_i (K1 or K2) fully joined to clique vertex i - 1.
Graph zelinka_type2(int r, std::span<const int> sizes);

/// Joins a new K1 to y1 and a new K1 (h2_size = 1) or K2 (h2_size = 2) to y2.
/// New vertices are appended after the base's. Throws std::invalid_argument
/// unless y1y2 is DKW-eligible in `base`.
Graph dkw_construct(const Graph& base, int y1, int y2, int h2_size);

/// As dkw_construct without the eligibility check.
Graph dkw_construct_unchecked(const Graph& base, int y1, int y2, int h2_size);

Graph build(const ConstructionSpec& spec);

/// Edge count predicted by the closed-form size formulas.
int predicted_size(const ConstructionSpec& spec);

/// Every valid zelinka1 / zelinka2 / disjoint_cliques parameter set with
/// output order <= max_order (ordered appendage tuples, r >= 3).
std::vector<ConstructionSpec> zelinka1_family(int max_order);
std::vector<ConstructionSpec> zelinka2_family(int max_order);
std::vector<ConstructionSpec> disjoint_cliques_family(int max_order);

}  // namespace mnt

#endif  // MNT_CONSTRUCTIONS_HPP
