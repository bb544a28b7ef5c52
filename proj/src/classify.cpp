#include "mnt/classify.hpp"

namespace mnt {

namespace {

template <typename Decide>
std::optional<Edge> first_failure(const Graph& g, Decide decide) {
  for (const Edge& e : non_edges(g)) {
    if (!decide(g.with_edge(e.u, e.v))) return e;
  }
  return std::nullopt;
}

template <typename Decide>
std::vector<Edge> all_failures(const Graph& g, Decide decide) {
  std::vector<Edge> out;
  for (const Edge& e : non_edges(g)) {
    if (!decide(g.with_edge(e.u, e.v))) out.push_back(e);
  }
  return out;
}

bool traceable(const Graph& g) { return is_traceable(g).yes; }
bool hamiltonian(const Graph& g) { return is_hamiltonian(g).yes; }

}  // namespace

ClassificationReport is_mnt(const Graph& g) {
  ClassificationReport r;
  Decision path = is_traceable(g);
  r.traceable = path.yes;
  r.path_witness = std::move(path.witness);
  if (r.traceable) {
    Decision cycle = is_hamiltonian(g);
    r.hamiltonian = cycle.yes;
    r.cycle_witness = std::move(cycle.witness);
    r.mnt = false;
    return r;
  }
  if (components(g).size() >= 3) {
    // One extra edge leaves at least two components.
    r.mnt = false;
    r.mnt_failing_edge = non_edges(g).front();
    return r;
  }
  r.mnt_failing_edge = first_failure(g, traceable);
  r.mnt = !r.mnt_failing_edge.has_value();
  return r;
}

ClassificationReport is_mnh(const Graph& g) {
  ClassificationReport r;
  Decision cycle = is_hamiltonian(g);
  r.hamiltonian = cycle.yes;
  r.cycle_witness = std::move(cycle.witness);
  if (r.hamiltonian) {
    r.traceable = true;
    r.path_witness = Witness{WitnessKind::path, r.cycle_witness->order};
    r.mnh = false;
    return r;
  }
  Decision path = is_traceable(g);
  r.traceable = path.yes;
  r.path_witness = std::move(path.witness);
  r.mnh_failing_edge = first_failure(g, hamiltonian);
  r.mnh = !r.mnh_failing_edge.has_value();
  return r;
}

ClassificationReport classify(const Graph& g) {
  ClassificationReport r = is_mnt(g);
  ClassificationReport h = is_mnh(g);
  r.hamiltonian = h.hamiltonian;
  r.cycle_witness = std::move(h.cycle_witness);
  r.mnh = h.mnh;
  r.mnh_failing_edge = h.mnh_failing_edge;
  return r;
}

std::vector<Edge> mnt_failures(const Graph& g) {
  if (traceable(g)) return {};
  return all_failures(g, traceable);
}

std::vector<Edge> mnh_failures(const Graph& g) {
  if (hamiltonian(g)) return {};
  return all_failures(g, hamiltonian);
}

bool dkw_edge_conditions_hold(const Graph& g, Edge y) {
  if (!g.has_edge(y.u, y.v)) return false;
  if (!(g.neighbors(y.u) & g.neighbors(y.v)).empty()) return false;
  for (const Edge& e : non_edges(g)) {
    if (!has_ham_cycle_through_edge(g.with_edge(e.u, e.v), y.u, y.v)) return false;
  }
  return true;
}

std::vector<Edge> dkw_eligible(const Graph& g) {
  if (!is_regular(g, 3)) return {};
  if (!is_mnh(g).mnh.value_or(false)) return {};
  std::vector<Edge> out;
  for (const Edge& y : g.edges()) {
    if (dkw_edge_conditions_hold(g, y)) out.push_back(y);
  }
  return out;
}

}  // namespace mnt
