// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "reeb/assignment.hpp"
#include "reeb/error.hpp"
#include "reeb/genoracle.hpp"
#include "reeb/json_io.hpp"
#include "reeb/morse.hpp"
#include "reeb/surface.hpp"

using namespace reeb;

namespace {

constexpr double kWorkedLimitMs = 1.0;
constexpr int kWorkedRepeats = 10;  // every repeat must beat the limit
constexpr std::size_t kCorpusSize = 1200;
constexpr std::uint32_t kCorpusMaxSaddles = 50;
constexpr double kCorpusLimitS = 10.0;
constexpr int kScanSeeds = 3;
constexpr std::size_t kRandomWitnesses = 100;
constexpr double kMeshLimitS = 5.0;
constexpr std::size_t kMeshMaxTriangles = 10'000;
constexpr std::uint64_t kWitnessSeed = 20240601;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& why) {
    if (!condition && pass) {
      pass = false;
      detail = why;
    }
  }
};

int failures = 0;

void report(int number, const std::string& title, const Verdict& v, const std::string& summary) {
  std::printf("%s criterion %d: %s (%s)\n", v.pass ? "PASS" : "FAIL", number, title.c_str(),
              v.pass ? summary.c_str() : v.detail.c_str());
  std::fflush(stdout);
  if (!v.pass) ++failures;
}

// Runs `body`, turning an escaped exception into a failure.
void guarded(Verdict& v, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    v.require(false, std::string(to_string(e.code())) + ": " + e.what());
  } catch (const std::exception& e) {
    v.require(false, e.what());
  }
}

std::map<std::string, std::uint32_t> by_id(const EssentialSubgraph& g, const PartialAssignment& p) {
  std::map<std::string, std::uint32_t> out;
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (p.assigned(e)) out[g.graph().edges()[e].id] = p.values()[e];
  }
  return out;
}

std::vector<ReebGraph> corpus() {
  std::vector<ReebGraph> graphs;
  graphs.reserve(kCorpusSize);
  for (std::uint64_t seed = 0; seed < kCorpusSize; ++seed) {
    graphs.push_back(random_reeb({.seed = seed,
                                  .saddle_count = static_cast<std::uint32_t>(seed % (kCorpusMaxSaddles + 1)),
                                  .parallel_edge_bias = static_cast<double>(seed % 5) / 4.0,
                                  .inessential_bias = static_cast<double>(seed % 7) / 6.0}));
  }
  return graphs;
}

void worked_instances() {
  Verdict v;
  double worst_ms = 0.0;
  struct Case {
    std::string name;
    ReebGraph graph;
    std::map<std::string, std::uint32_t> expected;
    std::uint32_t bound;
  };
  const std::vector<Case> cases{
      {"single edge", fixtures::single_edge(), {{"e0", 1}}, 2},
      {"Y", fixtures::y_graph(), {{"e0", 1}, {"e1", 2}, {"e2", 2}}, 3},
      {"theta", fixtures::theta_graph(), {{"e_a", 1}, {"e_b", 1}, {"e_c", 2}, {"e_d", 2}, {"e_e", 2}}, 2},
  };
  guarded(v, [&] {
    for (const auto& c : cases) {
      // The expected values are confirmed against the reference sweep first.
      const auto reference = essential_subgraph(c.graph);
      v.require(by_id(reference, naive_assign(reference)) == c.expected,
                c.name + ": reference sweep disagrees with the expected values");
      for (int r = 0; r < kWorkedRepeats; ++r) {
        const auto start = Clock::now();
        const auto g = essential_subgraph(c.graph);
        const auto p = assign_all(g, true);
        const auto bound = distance_bound(g, p);
        const double ms = seconds_since(start) * 1e3;
        worst_ms = std::max(worst_ms, ms);
        v.require(by_id(g, p) == c.expected, c.name + ": assignment differs");
        v.require(bound.bound == c.bound, c.name + ": bound " + std::to_string(bound.bound));
        v.require(ms < kWorkedLimitMs, c.name + ": took " + std::to_string(ms) + " ms");
      }
    }
  });
  report(1, "worked instances", v, "3/3 exact, slowest run " + std::to_string(worst_ms) + " ms");
}

void sweep_invariants(const std::vector<ReebGraph>& graphs, double generation_s) {
  Verdict v;
  std::size_t steps = 0;
  const auto start = Clock::now();
  for (std::size_t i = 0; i < graphs.size() && v.pass; ++i) {
    guarded(v, [&] {
      const auto g = essential_subgraph(graphs[i]);
      const auto p = assign_all(g, true);
      const std::string tag = "graph " + std::to_string(i);

      std::vector<int> times(p.size(), 0);
      for (const auto& entry : p.trace()) {
        for (auto e : entry.edges) ++times[e];
      }
      for (int t : times) v.require(t == 1, tag + ": an edge was assigned " + std::to_string(t) + " times");

      for (auto m : g.boundary_minus()) {
        for (auto e : g.graph().incident(m)) {
          v.require(p.values()[e] == 1, tag + ": boundary_minus edge not 1");
        }
      }

      // Replay the sweep and classify every frontier on the way.
      auto q = step1_saturate(g, step0(g));
      while (auto target = next_vertex(g, q)) {
        const auto kind = classify_frontier(g, q, *target).kind;
        v.require(kind == FrontierClass::Kind::AllEqual || kind == FrontierClass::Kind::Consecutive,
                  tag + ": unclassified frontier");
        q = step1_saturate(g, step2(g, std::move(q)));
        ++steps;
      }
      v.require(std::equal(q.values().begin(), q.values().end(), p.values().begin()),
                tag + ": replay differs");
    });
  }
  const double total = generation_s + seconds_since(start);
  v.require(total < kCorpusLimitS, "took " + std::to_string(total) + " s");
  report(2, "sweep invariants on random graphs", v,
         std::to_string(graphs.size()) + " graphs, " + std::to_string(steps) +
             " frontier classifications, " + std::to_string(total) + " s");
}

void oracle_equivalence(const std::vector<ReebGraph>& graphs) {
  Verdict v;
  std::size_t compared = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    guarded(v, [&] {
      const auto g = essential_subgraph(graphs[i]);
      const auto fast = assign_all(g, true);
      for (int s = 0; s < kScanSeeds; ++s) {
        const auto slow = naive_assign(g, i * kScanSeeds + s);
        ++compared;
        v.require(std::equal(fast.values().begin(), fast.values().end(), slow.values().begin()),
                  "graph " + std::to_string(i) + " scan seed " + std::to_string(s) + " mismatches");
      }
    });
  }
  report(3, "reference sweep equivalence", v,
         std::to_string(compared) + " comparisons, 0 mismatches");
}

void lipschitz(const std::vector<ReebGraph>& graphs) {
  Verdict v;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    guarded(v, [&] {
      const auto g = essential_subgraph(graphs[i]);
      const auto p = assign_all(g);
      for (std::size_t x = 0; x < g.graph().vertex_count(); ++x) {
        const auto incident = g.graph().incident(x);
        for (std::size_t a = 0; a < incident.size(); ++a) {
          for (std::size_t b = a + 1; b < incident.size(); ++b) {
            const auto va = p.values()[incident[a]];
            const auto vb = p.values()[incident[b]];
            ++pairs;
            v.require((va > vb ? va - vb : vb - va) <= 1,
                      "graph " + std::to_string(i) + " vertex " + g.graph().vertices()[x].id);
          }
        }
      }
    });
  }
  report(4, "adjacent edges differ by at most one", v,
         std::to_string(pairs) + " adjacent pairs, 0 violations");
}

void rejections() {
  Verdict v;
  const std::vector<std::pair<ReebGraph, std::string_view>> cases{
      {fixtures::parity_violation(), rule::kSaddleParity},
      {fixtures::coverage_violation(), rule::kLevelCoverage},
      {fixtures::center_violation(), rule::kCenterRule},
      {fixtures::genericity_violation(), rule::kGenericity},
  };
  int exact = 0;
  for (const auto& [graph, rule_id] : cases) {
    const auto r = validate(graph);
    bool only = !r.ok();
    for (const auto& violation : r.violations) only = only && violation.rule == rule_id;
    exact += only;
    v.require(only, std::string(rule_id) + " fixture not rejected by that rule alone");
  }
  report(5, "validator rejections", v, std::to_string(exact) + "/4 exact");
}

void mesh_pipeline() {
  Verdict v;
  std::string summary;
  std::mt19937_64 rng(kWitnessSeed);
  std::size_t agreed = 0;
  std::size_t sampled = 0;
  guarded(v, [&] {
    const std::vector<fixtures::MeshFixture> meshes{fixtures::sphere(), fixtures::torus(),
                                                    fixtures::stacked_tori(2),
                                                    fixtures::stacked_tori(3)};
    double slowest = 0.0;
    for (const auto& m : meshes) {
      v.require(m.surface.triangle_count() <= kMeshMaxTriangles, m.name + " is too large");
      const auto start = Clock::now();
      const ScalarField f(m.surface, m.field);
      const auto g = label_reeb(m.surface, f, build_reeb(m.surface, f));
      const double s = seconds_since(start);
      slowest = std::max(slowest, s);
      v.require(s < kMeshLimitS, m.name + " took " + std::to_string(s) + " s");

      int centers = 0, saddles = 0;
      for (const auto& x : g.vertices()) {
        centers += x.kind == VertexKind::Center;
        saddles += x.kind == VertexKind::Saddle;
      }
      v.require(centers - saddles == fixtures::euler_characteristic(m.surface),
                m.name + ": critical point count disagrees with Euler characteristic");
      v.require(validate(g).ok(), m.name + ": labeled graph fails validation");

      if (m.genus == 0) {
        v.require(g.vertex_count() == 2 && g.edge_count() == 1, "sphere graph is not a path");
        for (const auto& e : g.edges()) v.require(e.label == EdgeLabel::Inessential, "sphere edge essential");
      }
      if (m.genus == 1) {
        v.require(g.edge_count() == 4, "torus graph does not have 4 edges");
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
          const bool side = g.vertices()[g.lower_of(e)].kind == VertexKind::Saddle &&
                            g.vertices()[g.upper_of(e)].kind == VertexKind::Saddle;
          v.require(g.edges()[e].label == (side ? EdgeLabel::Essential : EdgeLabel::Inessential),
                    "torus edge " + g.edges()[e].id + " mislabeled");
        }
      }
      if (m.genus >= 1) {
        // Witness loops at random gaps, judged by both the cut and the
        // subcomplex test.
        const std::size_t quota = kRandomWitnesses / 3 + (m.genus == 1 ? kRandomWitnesses % 3 : 0);
        std::uniform_int_distribution<std::size_t> slot_of(0, f.size() - 2);
        for (std::size_t k = 0; k < quota; ++k) {
          const auto loops = edge_cycles_at(m.surface, f, slot_of(rng));
          const auto& loop = loops[std::uniform_int_distribution<std::size_t>(0, loops.size() - 1)(rng)].second;
          ++sampled;
          const bool disk = classify_essential(m.surface, f, loop) == EdgeLabel::Inessential;
          agreed += disk == fixtures::bounds_disk(m.surface, loop);
        }
      }
    }
    v.require(sampled == kRandomWitnesses, "sampled " + std::to_string(sampled) + " loops");
    v.require(agreed == sampled, std::to_string(sampled - agreed) + " loops disagree with the subcomplex test");
    summary = std::to_string(meshes.size()) + " fixtures, " + std::to_string(agreed) + "/" +
              std::to_string(sampled) + " loops agree, slowest " + std::to_string(slowest) + " s";
  });
  report(6, "mesh pipeline", v, summary);
}

void determinism(const std::vector<ReebGraph>& graphs) {
  Verdict v;
  std::size_t round_trips = 0;
  guarded(v, [&] {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const GenParams params{.seed = seed, .saddle_count = static_cast<std::uint32_t>(seed)};
      v.require(to_json(random_reeb(params)).dump() == to_json(random_reeb(params)).dump(),
                "seed " + std::to_string(seed) + " is not reproducible");
    }
    for (const auto& g : graphs) {
      const auto text = to_json(g).dump();
      const auto back = parse_graph(text);
      v.require(back == g && to_json(back).dump() == text, "graph JSON does not round-trip");
      ++round_trips;
    }
    for (const auto& m : {fixtures::torus(), fixtures::stacked_tori(2)}) {
      std::stringstream off, values;
      write_off(off, m.surface);
      write_scalars(values, m.field);
      const auto run = [&] {
        std::istringstream off_in(off.str()), values_in(values.str());
        const auto s = read_off(off_in);
        const ScalarField f(s, read_scalars(values_in));
        return to_json(label_reeb(s, f, build_reeb(s, f))).dump();
      };
      const auto first = run();
      v.require(first == run(), m.name + ": mesh pipeline output changes between runs");
      v.require(to_json(parse_graph(first)).dump() == first, m.name + ": witness JSON does not round-trip");
      ++round_trips;
    }
  });
  report(7, "determinism and JSON round-trip", v,
         "50 seeds reproduced, " + std::to_string(round_trips) + " graphs round-tripped");
}

}  // namespace

int main() {
  worked_instances();
  const auto start = Clock::now();
  std::vector<ReebGraph> graphs;
  try {
    graphs = corpus();
  } catch (const std::exception& e) {
    std::printf("corpus generation failed: %s\n", e.what());
    return 1;
  }
  const double generation_s = seconds_since(start);
  sweep_invariants(graphs, generation_s);
  oracle_equivalence(graphs);
  lipschitz(graphs);
  rejections();
  mesh_pipeline();
  determinism(graphs);
  return failures == 0 ? 0 : 1;
}
