#include "mnt/bounds.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "mnt/classify.hpp"

namespace mnt {

namespace {

constexpr std::array<int, 8> kSmallG = {0, 1, 2, 4, 6, 8, 10, 12};  // n = 2..9

void require_order(int n) {
  if (n < 2) throw std::invalid_argument("g(n) is defined for n >= 2, got " + std::to_string(n));
}

bool in_cubic_base_orders(int n) {
  return std::find(kCubicBaseOrders.begin(), kCubicBaseOrders.end(), n) != kCubicBaseOrders.end();
}

// Candidate constructions at order n, in preference order for ties.
std::vector<ConstructionSpec> candidates(int n) {
  std::vector<ConstructionSpec> out;
  if (n == 12 || n == 13) {
    out.push_back({Family::dkw, 0, {}, DkwBase{"petersen", named("petersen"), 0, 1, n - 11}});
  }
  for (int a = 2; a >= 1; --a)
    for (int b = a; b >= 1; --b)
      for (int c = b; c >= 1; --c) {
        const int r = n - a - b - c;
        if (r >= 3) out.push_back({Family::zelinka2, r, {a, b, c}, std::nullopt});
      }
  for (int a = 2; a >= 1; --a)
    for (int b = a; b >= 1; --b) {
      const int r = n - a - b;
      if (r >= 3) out.push_back({Family::zelinka1, r, {a, b}, std::nullopt});
    }
  for (int k = n / 2; k >= 1; --k) out.push_back({Family::disjoint_cliques, k, {n - k}, std::nullopt});
  return out;
}

std::optional<UpperBound> compute_upper(int n) {
  std::optional<UpperBound> best;
  for (const ConstructionSpec& spec : candidates(n)) {
    const int predicted = predicted_size(spec);
    if (best && predicted >= best->edges) continue;
    Graph g = build(spec);
    if (g.size() != predicted || !is_mnt(g).mnt.value_or(false)) continue;
    best = UpperBound{g.size(), spec, std::move(g), true};
  }
  return best;
}

}  // namespace

int lower_bound_g(int n) {
  require_order(n);
  if (n <= 9) return kSmallG[n - 2];
  return three_halves_bound(n);
}

std::optional<UpperBound> best_known_upper_g(int n) {
  require_order(n);
  if (n > kMaxN) return std::nullopt;
  static std::mutex mutex;
  static std::map<int, std::optional<UpperBound>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto result = compute_upper(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(result)).first->second;
}

std::string to_string(Status s) { return s == Status::known ? "known" : "open"; }

BoundStatus g_status(int n) {
  require_order(n);
  BoundStatus st;
  st.n = n;
  st.lower = lower_bound_g(n);
  st.construction = best_known_upper_g(n);
  if (st.construction) {
    st.upper = st.construction->edges;
    st.provenance.push_back("upper: " + st.construction->spec.describe() + ", verified MNT");
  }

  if (n <= 9) {
    st.provenance.insert(st.provenance.begin(), "lower: small-order table (reproduced by `search mnt`)");
  } else {
    st.provenance.insert(st.provenance.begin(), "lower: ceil((3n-2)/2) for n >= 10");
  }

  const bool external = n >= kCubicBaseThreshold || in_cubic_base_orders(n);
  if (external && (!st.upper || *st.upper > st.lower)) {
    st.upper = st.lower;
    st.externally_sourced = true;
    st.provenance.push_back("upper: appendages on cubic MNH bases from the literature (not generated locally)");
  }
  st.status = (st.upper && *st.upper == st.lower) ? Status::known : Status::open;
  return st;
}

}  // namespace mnt
