#include "mnt/laws.hpp"

#include <algorithm>
#include <stdexcept>

#include "mnt/bounds.hpp"
#include "mnt/classify.hpp"

namespace mnt {

namespace {

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

void require_connected(const Graph& g, const char* who) {
  if (!is_connected(g)) throw std::invalid_argument(std::string(who) + " requires a connected graph");
}

class PathWalker {
 public:
  PathWalker(const Graph& g, int max_len, std::vector<Violation>& out) : g_(g), max_len_(max_len), out_(out) {}

  void run() {
    for (int s = 0; s < g_.order(); ++s) {
      path_.assign(1, s);
      grow(VertexSet::single(s));
    }
  }

 private:
  void grow(VertexSet on_path) {
    if (path_.size() >= 3 && path_.front() < path_.back()) inspect(on_path);
    if (static_cast<int>(path_.size()) == max_len_) return;
    for (int w : g_.neighbors(path_.back()) - on_path) {
      path_.push_back(w);
      grow(on_path | VertexSet::single(w));
      path_.pop_back();
    }
  }

  void inspect(VertexSet on_path) {
    if (induces_clique(g_, on_path)) return;
    for (std::size_t i = 1; i + 1 < path_.size(); ++i) {
      if (!(g_.neighbors(path_[i]) - on_path).empty()) return;
    }
    out_.push_back({kPathNeighborLaw, path_,
                    "path " + join(path_) + " induces a non-complete graph but no internal vertex has a "
                    "neighbour off the path"});
  }

  const Graph& g_;
  int max_len_;
  std::vector<Violation>& out_;
  std::vector<int> path_;
};

// Calls f(T) for every subset of {0..n-1} with 1 <= |T| <= max_size.
template <typename F>
void for_each_small_subset(int n, int max_size, F f) {
  auto rec = [&](auto&& self, int from, VertexSet t) -> void {
    if (!t.empty()) f(t);
    if (t.size() == max_size) return;
    for (int v = from; v < n; ++v) self(self, v + 1, t | VertexSet::single(v));
  };
  rec(rec, 0, VertexSet());
}

}  // namespace

int default_max_len(int n) { return std::min(n, 6); }
int default_max_t(int n) { return std::max(0, std::min(n - 2, 4)); }

std::vector<Violation> check_path_neighbor_law(const Graph& g, int max_len) {
  std::vector<Violation> out;
  PathWalker(g, std::min(max_len, g.order()), out).run();
  return out;
}

std::vector<Violation> check_cutset_law(const Graph& g, int max_t) {
  require_connected(g, "cutset law");
  std::vector<Violation> out;
  const int n = g.order();
  for_each_small_subset(n, std::min(max_t, n), [&](VertexSet t) {
    const auto parts = components_within(g, g.vertices() - t);
    const int k = static_cast<int>(parts.size());
    const int limit = t.size() + 2;
    if (k < 2) return;
    if (k > limit) {
      out.push_back({kCutsetComponentLaw, t.to_vector(),
                     "cutset {" + join(t.to_vector(), ",") + "} leaves " + std::to_string(k) +
                         " components, more than |T|+2 = " + std::to_string(limit)});
      return;
    }
    if (k == limit) {
      for (VertexSet a : parts) {
        if (!induces_clique(g, t | a)) {
          out.push_back({kCutsetCompleteLaw, (t | a).to_vector(),
                         "cutset {" + join(t.to_vector(), ",") + "} has |T|+2 components but T with "
                         "component {" + join(a.to_vector(), ",") + "} is not complete"});
        }
      }
    }
  });
  return out;
}

std::vector<Violation> check_block_law(const Graph& g) {
  require_connected(g, "block law");
  std::vector<Violation> out;
  const auto [blocks, cuts] = blocks_and_cut_vertices(g);
  for (VertexSet b : blocks) {
    const int c = (b & cuts).size();
    if (c > 3) {
      out.push_back({kBlockCutVertexLaw, b.to_vector(),
                     "block {" + join(b.to_vector(), ",") + "} contains " + std::to_string(c) + " cut-vertices"});
    } else if (c == 3) {
      const bool four = blocks.size() == 4;
      const bool all_complete =
          std::all_of(blocks.begin(), blocks.end(), [&](VertexSet x) { return induces_clique(g, x); });
      if (!four || !all_complete) {
        out.push_back({kBlockStructureLaw, b.to_vector(),
                       "block {" + join(b.to_vector(), ",") + "} has three cut-vertices but the graph has " +
                           std::to_string(blocks.size()) + " blocks" +
                           (all_complete ? "" : ", not all complete")});
      }
    }
  }
  return out;
}

std::vector<Violation> check_degree2_laws(const Graph& g) {
  std::vector<Violation> out;
  if (!is_connected(g)) return out;
  const int n = g.order();
  std::vector<int> deg2;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 2) deg2.push_back(v);
  }

  for (int v : deg2) {
    const int x1 = g.neighbors(v).first();
    const int x2 = (g.neighbors(v) - VertexSet::single(x1)).first();
    if (!g.has_edge(x1, x2)) {
      out.push_back({kDegree2AdjacentLaw, {v, x1, x2},
                     "neighbours " + std::to_string(x1) + "," + std::to_string(x2) + " of degree-2 vertex " +
                         std::to_string(v) + " are not adjacent"});
    }
    const int lo = std::min(g.degree(x1), g.degree(x2));
    const int hi = std::max(g.degree(x1), g.degree(x2));
    if (hi < 4 || (lo != 2 && lo < 4)) {
      out.push_back({kDegree2NeighborDegreeLaw, {v, x1, x2},
                     "degree-2 vertex " + std::to_string(v) + " has neighbour degrees " + std::to_string(lo) +
                         "," + std::to_string(hi)});
    }
  }

  for (std::size_t i = 0; i < deg2.size(); ++i) {
    for (std::size_t j = i + 1; j < deg2.size(); ++j) {
      const int v1 = deg2[i];
      const int v2 = deg2[j];
      if (g.has_edge(v1, v2)) continue;
      const VertexSet common = g.neighbors(v1) & g.neighbors(v2);
      if (common.size() == 1) {
        const int x = common.first();
        if (g.degree(x) < 5) {
          out.push_back({kSharedOneNeighborLaw, {v1, v2, x},
                         "degree-2 vertices " + std::to_string(v1) + "," + std::to_string(v2) +
                             " share only neighbour " + std::to_string(x) + " of degree " +
                             std::to_string(g.degree(x))});
        }
      } else if (common.size() == 2) {
        const int x1 = common.first();
        const int x2 = (common - VertexSet::single(x1)).first();
        const bool same = (g.neighbors(x1) - VertexSet::single(x2)) == (g.neighbors(x2) - VertexSet::single(x1));
        if (!same || g.degree(x1) != g.degree(x2) || g.degree(x1) < 5) {
          out.push_back({kSharedTwoNeighborsLaw, {v1, v2, x1, x2},
                         "degree-2 vertices " + std::to_string(v1) + "," + std::to_string(v2) +
                             " share neighbours " + std::to_string(x1) + "," + std::to_string(x2) +
                             (same ? "" : " with different outer neighbourhoods") + "; degrees " +
                             std::to_string(g.degree(x1)) + "," + std::to_string(g.degree(x2))});
        }
      }
    }
  }

  if (n >= 6) {
    const int expected_size = (n * n - 7 * n + 24) / 2;
    for (std::size_t a = 0; a < deg2.size(); ++a)
      for (std::size_t b = a + 1; b < deg2.size(); ++b)
        for (std::size_t c = b + 1; c < deg2.size(); ++c) {
          const VertexSet nb = g.neighbors(deg2[a]);
          if (g.neighbors(deg2[b]) != nb || g.neighbors(deg2[c]) != nb) continue;
          const VertexSet triple = VertexSet::of({deg2[a], deg2[b], deg2[c]});
          const bool complete = induces_clique(g, g.vertices() - triple);
          if (!complete || g.size() != expected_size) {
            out.push_back({kSharedTripleLaw, triple.to_vector(),
                           "degree-2 vertices " + join(triple.to_vector(), ",") + " share neighbours; rest " +
                               (complete ? "complete" : "not complete") + ", e=" + std::to_string(g.size()) +
                               " expected " + std::to_string(expected_size)});
          }
        }
  }
  return out;
}

std::vector<Violation> check_size_theorems(const Graph& g, std::optional<AssumedStatus> assumed) {
  AssumedStatus status;
  if (assumed) {
    status = *assumed;
  } else {
    status.mnt = is_mnt(g).mnt.value_or(false);
    status.mnh = is_mnh(g).mnh.value_or(false);
  }
  std::vector<Violation> out;
  const int n = g.order();
  const int e = g.size();

  if (status.mnt && n >= 2 && e < lower_bound_g(n)) {
    out.push_back({kMntMinimumSizeLaw, {n, e},
                   "MNT graph of order " + std::to_string(n) + " has " + std::to_string(e) +
                       " edges, below the lower bound " + std::to_string(lower_bound_g(n))});
  }

  if (status.mnt && n >= 7 && is_connected(g)) {
    bool eligible = true;
    int m = 0;
    for (int v = 0; v < n && eligible; ++v) {
      if (g.degree(v) == 1) eligible = false;
      if (g.degree(v) != 2) continue;
      ++m;
      for (int w : g.neighbors(v)) {
        if (g.degree(w) == 2) eligible = false;
      }
    }
    if (eligible && 2 * e < 3 * n + m) {
      out.push_back({kDegree2SizeLaw, {n, e, m},
                     "2e = " + std::to_string(2 * e) + " < 3n + m = " + std::to_string(3 * n + m)});
    }
  }

  if (status.mnh && n >= 6 && 2 * e < 3 * n) {
    out.push_back({kMnhMinimumSizeLaw, {n, e},
                   "MNH graph of order " + std::to_string(n) + " has 2e = " + std::to_string(2 * e) +
                       " < 3n = " + std::to_string(3 * n)});
  }
  return out;
}

LawReport check_all_laws(const Graph& g, const LawOptions& options) {
  LawReport report;
  const int n = g.order();
  report.certified_mnt = is_mnt(g).mnt.value_or(false);
  report.certified_mnh = is_mnh(g).mnh.value_or(false);
  report.label = report.certified_mnt ? "consistency check" : "negative control";

  const bool exhaustive = options.exhaustive && n <= 10;
  report.max_len = exhaustive ? n : options.max_len.value_or(default_max_len(n));
  report.max_t = exhaustive ? std::max(0, n - 2) : options.max_t.value_or(default_max_t(n));

  auto append = [&](std::vector<Violation> v) {
    report.violations.insert(report.violations.end(), std::make_move_iterator(v.begin()),
                             std::make_move_iterator(v.end()));
  };
  append(check_path_neighbor_law(g, report.max_len));
  if (is_connected(g)) {
    append(check_cutset_law(g, report.max_t));
    append(check_block_law(g));
    append(check_degree2_laws(g));
  } else {
    report.skipped = {"cutset", "block", "degree2"};
  }
  append(check_size_theorems(g, AssumedStatus{report.certified_mnt, report.certified_mnh}));
  return report;
}

}  // namespace mnt
