// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mnt/bounds.hpp"
#include "mnt/canonical.hpp"
#include "mnt/classify.hpp"
#include "mnt/constructions.hpp"
#include "mnt/hamilton.hpp"
#include "mnt/laws.hpp"
#include "mnt/search.hpp"

using namespace mnt;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail.str("");
      detail << what;
    }
  }
};

// Witnesses shared between criteria 1 and 5.
std::vector<Graph> g_small_witnesses;

void small_g(Check& c) {
  const int expected[] = {0, 1, 2, 4, 6, 8, 10, 12};
  std::ostringstream got;
  for (int n = 2; n <= 9; ++n) {
    const auto start = Clock::now();
    const auto r = min_mnt_size(n);
    const double t = seconds_since(start);
    got << (n > 2 ? "," : "") << r.lower;
    c.require(r.exact && r.lower == expected[n - 2],
              "n=" + std::to_string(n) + " gave " + std::to_string(r.lower));
    c.require(t < (n <= 8 ? 60.0 : 1800.0), "n=" + std::to_string(n) + " exceeded its time target");
    for (const Graph& w : r.witnesses) {
      c.require(w.size() == r.lower && is_mnt(w).mnt.value_or(false), "witness " + to_graph6(w) + " fails");
      g_small_witnesses.push_back(w);
    }
  }
  if (c.ok) c.detail << "g(2..9) = " << got.str() << ", " << g_small_witnesses.size() << " witnesses";
}

void petersen_eligibility(Check& c) {
  const auto start = Clock::now();
  const auto edges = dkw_eligible(named("petersen"));
  const double t = seconds_since(start);
  c.require(edges.size() == 15, std::to_string(edges.size()) + " eligible edges");
  c.require(t < 1.0, "took " + std::to_string(t) + " s");
  if (c.ok) c.detail << "15/15 edges eligible in " << t << " s";
}

std::vector<Graph> g_construction_outputs;

void dkw_outputs(Check& c) {
  const Graph pet = named("petersen");
  for (int h2 = 1; h2 <= 2; ++h2) {
    const Graph g = dkw_construct(pet, 0, 1, h2);
    const int n = 11 + h2;
    const int e = h2 == 1 ? 17 : 19;
    c.require(g.order() == n && g.size() == e,
              "h2=" + std::to_string(h2) + " gave n=" + std::to_string(g.order()) + " e=" + std::to_string(g.size()));
    c.require(g.size() == three_halves_bound(n), "size differs from ceil((3n-2)/2)");
    c.require(is_mnt(g).mnt.value_or(false), "output not MNT");
    g_construction_outputs.push_back(g);
  }
  if (c.ok) c.detail << "(12,17) and (13,19), both MNT";
}

void construction_formulas(Check& c) {
  int count = 0;
  for (const auto& spec : zelinka2_family(13)) {
    const Graph g = build(spec);
    const int r = spec.clique_order;
    const int s = spec.appendage_total();
    c.require(g.size() == r * (r - 1) / 2 + 2 * s - 3, spec.describe() + " size mismatch");
    c.require(is_mnt(g).mnt.value_or(false), spec.describe() + " not MNT");
    g_construction_outputs.push_back(g);
    ++count;
  }
  for (const auto& spec : zelinka1_family(13)) {
    const Graph g = build(spec);
    const int r = spec.clique_order;
    const int s = spec.appendage_total();
    c.require(g.size() == r * (r - 1) / 2 + 2 * s - 2, spec.describe() + " size mismatch");
    c.require(is_mnt(g).mnt.value_or(false), spec.describe() + " not MNT");
    g_construction_outputs.push_back(g);
    ++count;
  }
  if (c.ok) c.detail << count << " parameter sets";
}

void lemma_suite(Check& c) {
  int graphs = 0;
  auto consistent = [&](const Graph& g) {
    const auto report = check_all_laws(g, {g.order() <= 9, {}, {}});
    ++graphs;
    if (!report.violations.empty()) {
      c.require(false, to_graph6(g) + ": " + report.violations.front().law + " " + report.violations.front().detail);
    }
  };
  for (const Graph& g : g_small_witnesses) consistent(g);
  for (const Graph& g : g_construction_outputs) consistent(g);

  const Graph k4_pendants =
      Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  struct Control {
    const char* name;
    std::function<std::size_t()> violations;
  };
  const Control controls[] = {
      {"path", [] { return check_path_neighbor_law(named("cycle_6"), 6).size(); }},
      {"cutset", [] { return check_cutset_law(named("star_4"), 4).size(); }},
      {"block", [&] { return check_block_law(k4_pendants).size(); }},
      {"degree2", [] { return check_degree2_laws(named("cycle_6")).size(); }},
      {"size", [] { return check_size_theorems(Graph(5), AssumedStatus{true, false}).size(); }},
  };
  std::ostringstream flagged;
  for (const auto& ctl : controls) {
    const std::size_t v = ctl.violations();
    c.require(v >= 1, std::string(ctl.name) + " checker missed its negative control");
    flagged << " " << ctl.name << "=" << v;
  }
  if (c.ok) c.detail << graphs << " MNT graphs clean; negative controls flagged:" << flagged.str();
}

void oracle_equivalence(Check& c) {
  long compared = 0;
  auto compare = [&](const Graph& g) {
    const bool path = naive_traceable(g);
    const bool cycle = naive_hamiltonian(g);
    for (Engine e : {Engine::automatic, Engine::subset_dp, Engine::backtracking}) {
      c.require(is_traceable(g, e).yes == path, "path disagreement on " + to_graph6(g));
      c.require(is_hamiltonian(g, e).yes == cycle, "cycle disagreement on " + to_graph6(g));
    }
    ++compared;
  };
  for (int n = 1; n <= 7; ++n)
    for (int m = 0; m <= n * (n - 1) / 2; ++m)
      for (const Graph& g : enumerate_classes(n, m, false)) compare(g);
  std::mt19937 rng(20240601);
  const double densities[] = {0.15, 0.25, 0.35, 0.5, 0.7};
  for (int n = 8; n <= 12; ++n) {
    for (int i = 0; i < 1000; ++i) {
      std::bernoulli_distribution coin(densities[i % 5]);
      std::vector<Edge> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (coin(rng)) edges.emplace_back(u, v);
        }
      compare(Graph::from_edges(n, edges));
    }
  }
  if (c.ok) c.detail << compared << " graphs, 0 disagreements";
}

void mnh_desk_checks(Check& c) {
  const int expected[] = {4, 6, 9};
  for (int n = 4; n <= 6; ++n) {
    const auto r = min_mnh_size(n);
    c.require(r.exact && r.lower == expected[n - 4], "f(" + std::to_string(n) + ") = " + std::to_string(r.lower));
  }
  const Graph pet = named("petersen");
  c.require(is_mnh(pet).mnh.value_or(false), "Petersen not MNH");
  c.require(2 * pet.size() == 3 * pet.order(), "Petersen size is not 3n/2");
  c.require(check_size_theorems(pet).empty(), "size check flags Petersen");
  if (c.ok) c.detail << "f(4,5,6) = 4,6,9; Petersen e = 15 = 3n/2";
}

void bounds_table(Check& c) {
  for (int n = 2; n <= 13; ++n) {
    const auto ub = best_known_upper_g(n);
    const int lo = lower_bound_g(n);
    c.require(ub.has_value(), "no upper bound at n=" + std::to_string(n));
    if (!ub) continue;
    c.require(lo <= ub->edges, "lower > upper at n=" + std::to_string(n));
    const bool equal_expected = n <= 9 || n == 12 || n == 13;
    c.require((lo == ub->edges) == equal_expected, "equality pattern broken at n=" + std::to_string(n));
    c.require(ub->witness.size() == ub->edges && is_mnt(ub->witness).mnt.value_or(false),
              "upper witness not verified at n=" + std::to_string(n));
  }
  const int listed_lower[] = {14, 17};  // as listed for n = 10, 11
  for (int n = 10; n <= 11; ++n) {
    const auto st = g_status(n);
    c.require(st.status == Status::open, "n=" + std::to_string(n) + " not open");
    c.require(st.construction.has_value(), "n=" + std::to_string(n) + " upper has no construction");
    c.require(st.lower == listed_lower[n - 10],
              "n=" + std::to_string(n) + " bracket lower is " + std::to_string(st.lower) + " = ceil((3n-2)/2), " +
                  "criterion lists " + std::to_string(listed_lower[n - 10]));
  }
  if (c.ok) c.detail << "n = 2..13 consistent";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    void (*run)(Check&);
  };
  const Criterion criteria[] = {
      {1, "small-g reproduction", small_g},
      {2, "Petersen eligibility", petersen_eligibility},
      {3, "DKW outputs", dkw_outputs},
      {4, "construction formulas", construction_formulas},
      {5, "lemma suite", lemma_suite},
      {6, "oracle equivalence", oracle_equivalence},
      {7, "MNH desk checks", mnh_desk_checks},
      {8, "bounds table integrity", bounds_table},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = Clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    failed += !c.ok;
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", c.ok ? "PASS" : "FAIL", cr.id, cr.name, c.detail.str().c_str(),
                seconds_since(start));
    std::fflush(stdout);
  }
  return failed;
}
