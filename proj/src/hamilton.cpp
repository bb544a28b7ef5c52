#include "mnt/hamilton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mnt {

namespace {

Mask bit(int v) { return Mask{1} << v; }

// Question shared by every decider: is there a path that starts in
// `starts`, visits every vertex of `universe` exactly once and ends in `ends`?
struct PathQuery {
  Mask universe;
  Mask starts;
  Mask ends;
};

// ---------------------------------------------------------------------------
// Subset DP. reach[S] = vertices v of S such that some path covering exactly S
// starts at v and ends in `ends`.

class SubsetDp {
 public:
  SubsetDp(const Graph& g, Mask universe, Mask ends) : g_(g), reach_(std::size_t{1} << g.order(), 0) {
    Mask s = 0;
    do {
      s = (s - universe) & universe;
      if (s == 0) break;
      if (std::has_single_bit(s)) {
        reach_[s] = s & ends;
        continue;
      }
      Mask r = 0;
      for (int v : VertexSet(s)) {
        if (reach_[s ^ bit(v)] & g.row(v)) r |= bit(v);
      }
      reach_[s] = r;
    } while (true);
  }

  Mask starts_covering(Mask s) const { return reach_[s]; }

  // Lexicographically least path covering `s` whose first vertex lies in
  // `first_choices`.
  std::vector<int> least_path(Mask s, Mask first_choices) const {
    std::vector<int> out;
    Mask options = first_choices & reach_[s];
    while (s != 0) {
      const int v = std::countr_zero(options);
      out.push_back(v);
      s ^= bit(v);
      if (s != 0) options = g_.row(v) & reach_[s];
    }
    return out;
  }

 private:
  const Graph& g_;
  std::vector<Mask> reach_;
};

std::optional<std::vector<int>> solve_dp(const Graph& g, const PathQuery& q) {
  if (g.order() > kDpMaxOrder) {
    throw std::invalid_argument("subset DP limited to n <= " + std::to_string(kDpMaxOrder));
  }
  SubsetDp dp(g, q.universe, q.ends);
  if ((dp.starts_covering(q.universe) & q.starts) == 0) return std::nullopt;
  return dp.least_path(q.universe, q.starts);
}

// ---------------------------------------------------------------------------
// Backtracking with connectivity, dead-end and articulation pruning. Children
// are explored in ascending vertex order, so the first complete path found is
// the lexicographically least one.

class Backtracker {
 public:
  Backtracker(const Graph& g, Mask ends) : g_(g), ends_(ends) {}

  std::optional<std::vector<int>> solve(Mask universe, Mask starts) {
    for (int s : VertexSet(starts & universe)) {
      seq_.assign(1, s);
      if (extend(s, universe ^ bit(s))) return seq_;
    }
    return std::nullopt;
  }

 private:
  bool extend(int cur, Mask unvisited) {
    if (unvisited == 0) return (ends_ & bit(cur)) != 0;
    if (!feasible(cur, unvisited)) return false;
    for (int w : VertexSet(g_.row(cur) & unvisited)) {
      seq_.push_back(w);
      if (extend(w, unvisited ^ bit(w))) return true;
      seq_.pop_back();
    }
    return false;
  }

  // Necessary conditions for a path cur, x1, ..., xk covering `unvisited`
  // with xk in ends_.
  bool feasible(int cur, Mask unvisited) const {
    if ((unvisited & ends_) == 0) return false;
    if ((g_.row(cur) & unvisited) == 0) return false;
    const VertexSet rest(unvisited);
    if (reachable_within(g_, rest, rest.first()) != rest) return false;

    const Mask region = unvisited | bit(cur);
    Mask dead = 0;
    for (int w : rest) {
      if (std::popcount(g_.row(w) & region) <= 1) dead |= bit(w);
    }
    if (std::popcount(dead) > 1) return false;
    if (dead != 0 && (dead & ends_) == 0) return false;

    if (rest.size() < 3) return true;
    // The remaining path is a Hamiltonian path of <rest>, so its block-cut
    // tree must be a path running from a neighbour of cur to an end vertex.
    const auto [blocks, cuts] = blocks_within(g_, rest);
    if (blocks.size() == 1) return true;
    Mask end_a = 0;
    Mask end_b = 0;
    for (VertexSet b : blocks) {
      const int c = (b & cuts).size();
      if (c > 2) return false;
      if (c == 1) {
        const Mask inner = (b - cuts).bits();
        if (end_a == 0) {
          end_a = inner;
        } else if (end_b == 0) {
          end_b = inner;
        } else {
          return false;
        }
      }
    }
    const Mask near = g_.row(cur);
    const bool a_then_b = (near & end_a) && (ends_ & end_b);
    const bool b_then_a = (near & end_b) && (ends_ & end_a);
    if (!a_then_b && !b_then_a) return false;
    return true;
  }

  const Graph& g_;
  Mask ends_;
  std::vector<int> seq_;
};

std::optional<std::vector<int>> solve(const Graph& g, const PathQuery& q, Engine engine) {
  if (engine == Engine::automatic) {
    engine = g.order() <= kDpMaxOrder ? Engine::subset_dp : Engine::backtracking;
  }
  if (engine == Engine::subset_dp) return solve_dp(g, q);
  return Backtracker(g, q.ends).solve(q.universe, q.starts);
}

}  // namespace

Decision is_traceable(const Graph& g, Engine engine) {
  const int n = g.order();
  if (n == 1) return {true, Witness{WitnessKind::path, {0}}};
  if (!is_connected(g)) return {};
  int leaves = 0;
  for (int v = 0; v < n; ++v) leaves += g.degree(v) == 1;
  if (leaves > 2) return {};

  const Mask all = g.vertices().bits();
  auto path = solve(g, {all, all, all}, engine);
  if (!path) return {};
  return {true, Witness{WitnessKind::path, std::move(*path)}};
}

Decision is_hamiltonian(const Graph& g, Engine engine) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return {};
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return {};
  }
  const Mask all = g.vertices().bits();
  auto path = solve(g, {all, bit(0), g.row(0)}, engine);
  if (!path) return {};
  return {true, Witness{WitnessKind::cycle, std::move(*path)}};
}

bool has_ham_path_between(const Graph& g, int u, int v, Engine engine) {
  const int n = g.order();
  if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
    throw std::invalid_argument("path endpoints must be two distinct vertices");
  }
  if (!is_connected(g)) return false;
  const Mask all = g.vertices().bits();
  return solve(g, {all, bit(u), bit(v)}, engine).has_value();
}

bool has_ham_cycle_through_edge(const Graph& g, int u, int v, Engine engine) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v || !g.has_edge(u, v)) {
    throw std::invalid_argument("forced edge " + to_string(Edge(u, v)) + " is not an edge");
  }
  if (g.order() < 3) return false;
  // A Hamiltonian u-v path on n >= 3 vertices avoids uv, so closing it with
  // uv gives the cycle.
  return has_ham_path_between(g, u, v, engine);
}

bool is_valid_witness(const Graph& g, const Witness& w) {
  const int n = g.order();
  if (static_cast<int>(w.order.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : w.order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (!g.has_edge(w.order[i], w.order[i + 1])) return false;
  }
  if (w.kind == WitnessKind::cycle) {
    return n >= 3 && g.has_edge(w.order.back(), w.order.front());
  }
  return true;
}

namespace {

void check_naive_order(const Graph& g) {
  if (g.order() > kNaiveMaxOrder) {
    throw std::invalid_argument("naive oracle limited to n <= " + std::to_string(kNaiveMaxOrder));
  }
}

// Walks permutations of perm[first..] in lexicographic order. For each one,
// `broken` returns the first index whose placement is invalid (or size() if
// none); all permutations sharing that prefix are skipped in one step.
template <typename Broken, typename Accept>
bool scan_permutations(std::vector<int>& perm, std::size_t first, Broken broken, Accept accept) {
  while (true) {
    const std::size_t i = broken(perm);
    if (i == perm.size()) {
      if (accept(perm)) return true;
    } else {
      std::sort(perm.begin() + static_cast<std::ptrdiff_t>(i) + 1, perm.end(), std::greater<>());
    }
    if (!std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(first), perm.end())) {
      return false;
    }
  }
}

}  // namespace

bool naive_traceable(const Graph& g) {
  check_naive_order(g);
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  auto broken = [&](const std::vector<int>& p) {
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (!g.has_edge(p[i - 1], p[i])) return i;
    }
    return p.size();
  };
  return scan_permutations(perm, 0, broken, [](const std::vector<int>&) { return true; });
}

bool naive_hamiltonian(const Graph& g) {
  check_naive_order(g);
  if (g.order() < 3) return false;
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  auto broken = [&](const std::vector<int>& p) {
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (!g.has_edge(p[i - 1], p[i])) return i;
    }
    return p.size();
  };
  auto closes = [&](const std::vector<int>& p) { return g.has_edge(p.back(), p.front()); };
  return scan_permutations(perm, 1, broken, closes);
}

}  // namespace mnt
