#include "mnt/canonical.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace mnt {

namespace {

using Rows = std::array<Mask, kMaxN>;

struct Partition {
  std::array<Mask, kMaxN> cells{};
  int count = 0;
};

// Splits cells until every cell is equitable with respect to every other.
// New fragments are ordered by neighbour count, which keeps the result
// independent of vertex names.
void refine(const Graph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int w = 0; w < p.count && !changed; ++w) {
      const Mask splitter = p.cells[w];
      for (int x = 0; x < p.count; ++x) {
        const Mask cell = p.cells[x];
        if (std::has_single_bit(cell)) continue;
        std::array<Mask, kMaxN + 1> by_count{};
        int lo = kMaxN;
        int hi = 0;
        for (int v : VertexSet(cell)) {
          const int c = std::popcount(g.row(v) & splitter);
          by_count[c] |= Mask{1} << v;
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo == hi) continue;
        std::array<Mask, kMaxN> fragments{};
        int k = 0;
        for (int c = lo; c <= hi; ++c) {
          if (by_count[c]) fragments[k++] = by_count[c];
        }
        std::copy_backward(p.cells.begin() + x + 1, p.cells.begin() + p.count, p.cells.begin() + p.count + k - 1);
        std::copy(fragments.begin(), fragments.begin() + k, p.cells.begin() + x);
        p.count += k - 1;
        changed = true;
        break;
      }
    }
  }
}

bool twins(const Graph& g, int u, int v) {
  const Mask bu = Mask{1} << u;
  const Mask bv = Mask{1} << v;
  return (g.row(u) & ~bv) == (g.row(v) & ~bu);
}

bool rows_less(const Rows& a, const Rows& b, int n) {
  return std::lexicographical_compare(a.begin(), a.begin() + n, b.begin(), b.begin() + n);
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Partition p;
    p.cells[0] = g_.vertices().bits();
    p.count = 1;
    descend(p);
    return {Graph::from_rows(n_, std::span<const Mask>(best_rows_.data(), n_)),
            std::vector<int>(best_label_.begin(), best_label_.begin() + n_)};
  }

 private:
  void descend(Partition p) {
    refine(g_, p);
    int target = -1;
    for (int i = 0; i < p.count; ++i) {
      if (!std::has_single_bit(p.cells[i])) {
        target = i;
        break;
      }
    }
    if (target < 0) {
      leaf(p);
      return;
    }
    const Mask cell = p.cells[target];
    Mask explored = 0;
    for (int v : VertexSet(cell)) {
      bool redundant = false;
      for (int u : VertexSet(explored)) {
        if (twins(g_, u, v)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      explored |= Mask{1} << v;

      Partition child;
      child.count = p.count + 1;
      std::copy(p.cells.begin(), p.cells.begin() + target, child.cells.begin());
      child.cells[target] = Mask{1} << v;
      child.cells[target + 1] = cell & ~(Mask{1} << v);
      std::copy(p.cells.begin() + target + 1, p.cells.begin() + p.count, child.cells.begin() + target + 2);
      descend(child);
    }
  }

  void leaf(const Partition& p) {
    std::array<int, kMaxN> label{};
    for (int i = 0; i < p.count; ++i) label[std::countr_zero(p.cells[i])] = i;
    Rows rows{};
    for (int v = 0; v < n_; ++v) {
      Mask r = 0;
      for (int w : g_.neighbors(v)) r |= Mask{1} << label[w];
      rows[label[v]] = r;
    }
    if (!have_best_ || rows_less(rows, best_rows_, n_)) {
      have_best_ = true;
      best_rows_ = rows;
      best_label_ = label;
    }
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  Rows best_rows_{};
  std::array<int, kMaxN> best_label_{};
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

Graph canonical_form(const Graph& g) { return canonical_labeling(g).graph; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

Graph relabel(const Graph& g, std::span<const int> label) {
  const int n = g.order();
  if (static_cast<int>(label.size()) != n) throw std::invalid_argument("label size differs from graph order");
  Mask seen = 0;
  for (int l : label) {
    if (l < 0 || l >= n || ((seen >> l) & 1U)) throw std::invalid_argument("label is not a permutation");
    seen |= Mask{1} << l;
  }
  Rows rows{};
  for (int v = 0; v < n; ++v) {
    Mask r = 0;
    for (int w : g.neighbors(v)) r |= Mask{1} << label[w];
    rows[label[v]] = r;
  }
  return Graph::from_rows(n, std::span<const Mask>(rows.data(), n));
}

bool GraphLess::operator()(const Graph& a, const Graph& b) const {
  if (a.order() != b.order()) return a.order() < b.order();
  for (int v = 0; v < a.order(); ++v) {
    if (a.row(v) != b.row(v)) return a.row(v) < b.row(v);
  }
  return false;
}

}  // namespace mnt
