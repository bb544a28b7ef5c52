// Brute-force reference implementations used only by the tests. They share no
// code with the library beyond the Graph accessors used to read edges.
#ifndef MNT_TESTS_ORACLES_HPP
#define MNT_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mnt/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const mnt::Graph& g) {
  const int n = g.order();
  Matrix a(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

inline int edge_count(const Matrix& a) {
  int e = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) e += a[i][j];
  return e;
}

// Plain scan over every permutation; fine up to n = 8.
inline bool has_spanning(const Matrix& a, bool cycle) {
  const int n = static_cast<int>(a.size());
  if (cycle && n < 3) return false;
  if (n <= 1) return true;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (cycle && p[0] != 0) break;  // cycles are rotation-invariant
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) ok = a[p[i]][p[i + 1]];
    if (ok && cycle) ok = a[p[n - 1]][p[0]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool traceable(const Matrix& a) { return has_spanning(a, false); }
inline bool hamiltonian(const Matrix& a) { return has_spanning(a, true); }

// Maximality straight from the definition.
inline bool maximal(const Matrix& a, bool cycle) {
  if (has_spanning(a, cycle)) return false;
  Matrix b = a;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (a[i][j]) continue;
      b[i][j] = b[j][i] = true;
      const bool gains = has_spanning(b, cycle);
      b[i][j] = b[j][i] = false;
      if (!gains) return false;
    }
  return true;
}

inline bool mnt(const Matrix& a) { return maximal(a, false); }
inline bool mnh(const Matrix& a) { return maximal(a, true); }

// Upper-triangle pairs (i < j) in row order, bit k set iff pair k is an edge.
inline std::vector<std::pair<int, int>> pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

inline std::uint64_t code(const mnt::Graph& g) {
  const auto ps = pairs(g.order());
  std::uint64_t c = 0;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (g.has_edge(ps[k].first, ps[k].second)) c |= std::uint64_t{1} << k;
  }
  return c;
}

inline mnt::Graph decode(int n, std::uint64_t c) {
  const auto ps = pairs(n);
  std::vector<mnt::Edge> edges;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if ((c >> k) & 1U) edges.emplace_back(ps[k].first, ps[k].second);
  }
  return mnt::Graph::from_edges(n, edges);
}

// Smallest code over all relabelings: a canonical key for n <= 8.
inline std::uint64_t brute_canonical_code(const mnt::Graph& g) {
  const int n = g.order();
  const auto ps = pairs(n);
  const Matrix a = matrix(g);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t c = 0;
    for (std::size_t k = 0; k < ps.size(); ++k) {
      if (a[p[ps[k].first]][p[ps[k].second]]) c |= std::uint64_t{1} << k;
    }
    best = std::min(best, c);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Canonical keys of every isomorphism class with n vertices and m edges,
// from all labeled graphs (n <= 7). Codes are visited in increasing order and
// each new one marks its whole orbit, so the first code of an orbit is its
// minimum, i.e. brute_canonical_code of the class.
inline std::set<std::uint64_t> all_class_codes(int n, int m) {
  const auto ps = pairs(n);
  const std::uint64_t limit = std::uint64_t{1} << ps.size();
  std::vector<bool> seen(limit, false);
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (std::size_t k = 0; k < ps.size(); ++k) index[ps[k].first][ps[k].second] = index[ps[k].second][ps[k].first] = k;
  std::set<std::uint64_t> out;
  for (std::uint64_t c = 0; c < limit; ++c) {
    if (std::popcount(c) != m || seen[c]) continue;
    out.insert(c);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      std::uint64_t image = 0;
      for (std::size_t k = 0; k < ps.size(); ++k) {
        if ((c >> k) & 1U) image |= std::uint64_t{1} << index[p[ps[k].first]][p[ps[k].second]];
      }
      seen[image] = true;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return out;
}

// Total isomorphism classes of graphs on n vertices (A000088).
inline long class_total(int n) {
  static const long table[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168};
  return table[n];
}

// Independent graph6 encoder: row-major upper triangle taken column by
// column, six bits per byte, offset 63.
inline std::string graph6(const mnt::Graph& g) {
  const int n = g.order();
  std::string s(1, static_cast<char>(n + 63));
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = (v << 1) | bits[k + b];
    s.push_back(static_cast<char>(v + 63));
  }
  return s;
}

inline mnt::Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<mnt::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  return mnt::Graph::from_edges(n, edges);
}

inline mnt::Graph random_relabel(const mnt::Graph& g, std::mt19937& rng) {
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<mnt::Edge> edges;
  for (const auto& e : g.edges()) edges.emplace_back(p[e.u], p[e.v]);
  return mnt::Graph::from_edges(n, edges);
}

}  // namespace oracle

#endif  // MNT_TESTS_ORACLES_HPP
