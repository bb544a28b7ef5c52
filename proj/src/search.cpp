#include "mnt/search.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "mnt/bounds.hpp"
#include "mnt/canonical.hpp"
#include "mnt/classify.hpp"
#include "mnt/constructions.hpp"
#include "mnt/parallel.hpp"

namespace mnt {

namespace {

// Children of one canonical parent: G + e is kept iff deleting the canonical
// deletion edge of G + e gives back the parent's class. Isomorphic children
// of the same parent are merged here; across parents no duplicates occur.
std::vector<Graph> children_of(const Graph& parent) {
  std::vector<Graph> kids;
  for (const Edge& e : non_edges(parent)) {
    const CanonicalLabeling child = canonical_labeling(parent.with_edge(e.u, e.v));
    const Edge last = child.graph.edges().back();
    const Edge mapped(child.label[e.u], child.label[e.v]);
    if (mapped == last || canonical_form(child.graph.without_edge(last.u, last.v)) == parent) {
      kids.push_back(child.graph);
    }
  }
  std::sort(kids.begin(), kids.end(), GraphLess{});
  kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
  return kids;
}

void check_enumeration_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("exhaustive enumeration supports 1 <= n <= " +
                                std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n));
  }
}

int choose2(int k) { return k * (k - 1) / 2; }

}  // namespace

std::vector<Graph> next_level(const std::vector<Graph>& level, int jobs) {
  std::vector<std::vector<Graph>> parts(slice_count(level.size(), jobs));
  for_each_slice(level.size(), jobs, [&](std::size_t begin, std::size_t end, std::size_t slot) {
    for (std::size_t i = begin; i < end; ++i) {
      auto kids = children_of(level[i]);
      parts[slot].insert(parts[slot].end(), kids.begin(), kids.end());
    }
  });
  std::vector<Graph> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(), GraphLess{});
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::logic_error("canonical augmentation produced a duplicate class");
  }
  return out;
}

std::vector<Graph> enumerate_classes(int n, int m, bool connected_only, int jobs) {
  check_enumeration_order(n);
  if (m < 0 || m > choose2(n)) throw std::invalid_argument("edge count outside 0..n(n-1)/2");
  std::vector<Graph> level{Graph(n)};
  for (int k = 0; k < m; ++k) level = next_level(level, jobs);
  if (connected_only) std::erase_if(level, [](const Graph& g) { return !is_connected(g); });
  return level;
}

std::string to_string(Target t) { return t == Target::mnt ? "mnt" : "mnh"; }

int two_clique_minimum(int n) {
  if (n < 2) throw std::invalid_argument("two cliques need n >= 2");
  int best = choose2(n - 1);
  for (int k = 1; k < n; ++k) best = std::min(best, choose2(k) + choose2(n - k));
  return best;
}

std::vector<Graph> two_clique_minimizers(int n) {
  const int best = two_clique_minimum(n);
  std::vector<Graph> out;
  for (int k = 1; k <= n / 2; ++k) {
    if (choose2(k) + choose2(n - k) == best) out.push_back(canonical_form(disjoint_cliques(k, n - k)));
  }
  return out;
}

namespace {

using Json = nlohmann::json;

Json stats_to_json(const SearchStats& s) {
  return {{"classes_enumerated", s.classes_enumerated},
          {"connected_classes_tested", s.connected_classes_tested},
          {"decider_calls", s.decider_calls}};
}

void write_checkpoint(const std::string& path, int n, Target target, int m, const std::vector<Graph>& level,
                      const SearchStats& stats) {
  Json j;
  j["format"] = "mnt-search-checkpoint";
  j["version"] = 1;
  j["n"] = n;
  j["target"] = to_string(target);
  j["m"] = m;
  j["stats"] = stats_to_json(stats);
  Json lines = Json::array();
  for (const Graph& g : level) lines.push_back(to_graph6(g));
  j["level"] = std::move(lines);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    out << j.dump() << '\n';
  }
  std::rename(tmp.c_str(), path.c_str());
}

struct Resumed {
  int m;
  std::vector<Graph> level;
  SearchStats stats;
};

Resumed read_checkpoint(const std::string& path, int n, Target target) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw std::runtime_error(path + ": malformed checkpoint: " + e.what());
  }
  if (j.value("format", "") != "mnt-search-checkpoint") throw std::runtime_error(path + ": not a search checkpoint");
  if (j.at("n").get<int>() != n || j.at("target").get<std::string>() != to_string(target)) {
    throw std::runtime_error(path + ": checkpoint is for a different search");
  }
  Resumed r;
  r.m = j.at("m").get<int>();
  for (const auto& line : j.at("level")) {
    Graph g = from_graph6(line.get<std::string>());
    if (g.order() != n || g.size() != r.m || !(canonical_form(g) == g)) {
      throw std::runtime_error(path + ": checkpoint level entry is not a canonical graph with m edges");
    }
    r.level.push_back(g);
  }
  const Json& s = j.at("stats");
  r.stats.classes_enumerated = s.at("classes_enumerated").get<std::int64_t>();
  r.stats.connected_classes_tested = s.at("connected_classes_tested").get<std::int64_t>();
  r.stats.decider_calls = s.at("decider_calls").get<std::int64_t>();
  return r;
}

SearchOutcome min_size(int n, Target target, const SearchLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  SearchOutcome out;
  out.n = n;
  out.target = target;

  // Disconnected MNT graphs are two cliques; disconnected MNH graphs do not
  // exist for n >= 3.
  const std::optional<int> closed_form =
      target == Target::mnt ? std::optional<int>(two_clique_minimum(n)) : std::nullopt;
  std::optional<int> bracket_upper = closed_form;
  if (target == Target::mnt) {
    if (auto known = best_known_upper_g(n)) bracket_upper = std::min(*bracket_upper, known->edges);
  }

  int m = 0;
  std::vector<Graph> level{Graph(n)};
  if (limits.resume_path) {
    Resumed r = read_checkpoint(*limits.resume_path, n, target);
    m = r.m;
    level = std::move(r.level);
    out.stats = r.stats;
  }

  auto finish = [&]() {
    out.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  };

  for (; m <= choose2(n); ++m) {
    if (limits.max_classes && out.stats.classes_enumerated + static_cast<std::int64_t>(level.size()) >
                                  *limits.max_classes) {
      out.exact = false;
      out.lower = m;
      out.upper = bracket_upper;
      return finish();
    }
    out.stats.classes_enumerated += static_cast<std::int64_t>(level.size());

    std::vector<Graph> found;
    if (closed_form && m == *closed_form) found = two_clique_minimizers(n);

    std::vector<std::vector<Graph>> parts(slice_count(level.size(), limits.jobs));
    std::vector<std::int64_t> tested(parts.size(), 0);
    for_each_slice(level.size(), limits.jobs, [&](std::size_t begin, std::size_t end, std::size_t slot) {
      for (std::size_t i = begin; i < end; ++i) {
        const Graph& g = level[i];
        if (!is_connected(g)) continue;
        ++tested[slot];
        const auto report = target == Target::mnt ? is_mnt(g) : is_mnh(g);
        if ((target == Target::mnt ? report.mnt : report.mnh).value_or(false)) parts[slot].push_back(g);
      }
    });
    for (std::size_t s = 0; s < parts.size(); ++s) {
      out.stats.connected_classes_tested += tested[s];
      out.stats.decider_calls += tested[s];
      found.insert(found.end(), parts[s].begin(), parts[s].end());
    }

    if (!found.empty()) {
      std::sort(found.begin(), found.end(), GraphLess{});
      out.exact = true;
      out.lower = m;
      out.upper = m;
      out.witnesses = std::move(found);
      return finish();
    }
    if (m == choose2(n)) break;
    level = next_level(level, limits.jobs);
    if (limits.checkpoint_path) write_checkpoint(*limits.checkpoint_path, n, target, m + 1, level, out.stats);
  }
  throw std::logic_error("no " + to_string(target) + " graph of order " + std::to_string(n) + " found");
}

}  // namespace

SearchOutcome min_mnt_size(int n, const SearchLimits& limits) {
  if (n < 2 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("MNT search supports 2 <= n <= " + std::to_string(kMaxEnumerationOrder));
  }
  return min_size(n, Target::mnt, limits);
}

SearchOutcome min_mnh_size(int n, const SearchLimits& limits) {
  if (n < 4 || n > 9) throw std::invalid_argument("MNH search supports 4 <= n <= 9");
  return min_size(n, Target::mnh, limits);
}

}  // namespace mnt
