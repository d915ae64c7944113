#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "support.hpp"

using namespace morsegraph;
using testsupport::fixture_graph;
using testsupport::make_diagram;
using testsupport::random_connected_graph;

TEST_CASE("extension from a star center halves toward the bound") {
  Graph star = Graph::build({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}});
  auto values = extend_from_vertex(star, 0, Rational(0), Rational(1));
  CHECK(values.at(Simplex::vertex(0)) == Rational(0));
  CHECK(values.at(Simplex::vertex(1)) == Rational(1, 2));
  CHECK(values.at(Simplex::vertex(2)) == Rational(3, 4));
  CHECK(values.at(Simplex::vertex(3)) == Rational(7, 8));
  CHECK(values.at(Simplex::edge(0, 1)) == Rational(1, 2));
  CHECK(values.at(Simplex::edge(0, 2)) == Rational(3, 4));
  CHECK(values.at(Simplex::edge(0, 3)) == Rational(7, 8));
}

TEST_CASE("extension rejects bad arguments") {
  Graph star = Graph::build({0, 1, 2}, {{0, 1}, {0, 2}});
  CHECK_THROWS_AS(extend_from_vertex(star, 5, Rational(0), Rational(1)),
                  RealizationError);
  CHECK_THROWS_AS(extend_from_vertex(star, 0, Rational(1), Rational(1)),
                  RealizationError);
  CHECK_THROWS_AS(extend_from_vertex(star, 0, Rational(2), Rational(1)),
                  RealizationError);
  CHECK_THROWS_AS(extend_from_vertex(star, 0, Rational(-1), Rational(1)),
                  RealizationError);
  Graph cyclic = fixture_graph("cycle3_graph.json");
  CHECK_THROWS_AS(extend_from_vertex(cyclic, 0, Rational(0), Rational(1)),
                  RealizationError);
}

TEST_CASE("extension over a whole tree yields one critical simplex") {
  std::mt19937_64 rng(1618);
  for (int trial = 0; trial < 30; ++trial) {
    Graph tree = random_connected_graph(rng, 0);
    VertexId v = tree.vertices()[trial % tree.vertex_count()];
    Rational n0 = trial % 2 == 0 ? Rational(1)
                                 : Rational(static_cast<long long>(
                                       tree.simplex_count()));
    auto values = extend_from_vertex(tree, v, Rational(0), n0);
    MorseFunction f = MorseFunction::validate(tree, values);
    auto criticals = f.criticals();
    REQUIRE(criticals.size() == 1);
    CHECK(criticals[0] ==
          std::pair<Simplex, long long>{Simplex::vertex(v), 0});
    for (const auto& [simplex, value] : values) CHECK(value < n0);
  }
}

TEST_CASE("bridge search picks the smallest crossing edge") {
  Graph star = Graph::build({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}});
  std::vector<Edge> removed = {Edge(0, 3), Edge(0, 1), Edge(0, 2)};
  CHECK(find_bridge(star, removed, {0}) == Edge(0, 1));
  CHECK(find_bridge(star, {Edge(0, 3), Edge(0, 2)}, {0}) == Edge(0, 2));
  CHECK(find_bridge(star, {Edge(0, 2)}, {2}) == Edge(0, 2));

  Graph path = Graph::build({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}});
  // No endpoint of (2,3) is labeled, and both ends of (0,1) are.
  CHECK_THROWS_AS(find_bridge(path, {Edge(2, 3)}, {0, 1}), RealizationError);
  CHECK_THROWS_AS(find_bridge(path, {Edge(0, 1)}, {0, 1}), RealizationError);
  CHECK_THROWS_AS(find_bridge(path, {Edge(0, 2)}, {0}), RealizationError);
}

TEST_CASE("canonical realization of one pair on a short path") {
  Graph path = Graph::build({0, 1, 2}, {{0, 1}, {1, 2}});
  MorseFunction f = realize(path, make_diagram({{1, 2}}));
  std::map<Simplex, Rational> expect = {
      {Simplex::vertex(0), Rational(0)},  {Simplex::vertex(1), Rational(1)},
      {Simplex::vertex(2), Rational(3, 2)},
      {Simplex::edge(0, 1), Rational(2)},
      {Simplex::edge(1, 2), Rational(3, 2)}};
  CHECK(f.values() == expect);
  CHECK(diagram_equal(compute_diagram_fast(f), make_diagram({{1, 2}})));
}

TEST_CASE("realization is byte-deterministic") {
  Graph tree = fixture_graph("tree_main.json");
  PersistenceDiagram d = make_diagram({{2, 9}, {4, 6}, {11, 17}});
  MorseFunction a = realize(tree, d);
  MorseFunction b = realize(tree, d);
  CHECK(a.values() == b.values());
}

TEST_CASE("every consistent diagram is realized on every small tree") {
  struct Shape {
    const char* name;
    std::vector<VertexId> verts;
    std::vector<std::pair<VertexId, VertexId>> edges;
  };
  std::vector<Shape> shapes = {
      {"point", {0}, {}},
      {"edge", {0, 1}, {{0, 1}}},
      {"path3", {0, 1, 2}, {{0, 1}, {1, 2}}},
      {"path4", {0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}}},
      {"star3", {0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}}},
      {"path5", {0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}},
      {"star4", {0, 1, 2, 3, 4}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}},
      {"chair", {0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}},
  };
  for (const Shape& shape : shapes) {
    CAPTURE(shape.name);
    Graph tree = Graph::build(shape.verts, shape.edges);
    long long n = static_cast<long long>(tree.simplex_count());
    for (int k = 0; k <= static_cast<int>(tree.edge_count()); ++k) {
      size_t seen = 0;
      for_each_consistent_diagram(n, k, [&](const PersistenceDiagram& target) {
        ++seen;
        MorseFunction f = realize(tree, target);
        CHECK(diagram_equal(compute_diagram_fast(f), target));
        CHECK(diagram_equal(compute_diagram_oracle(f), target));
      });
      // The consistent diagrams are exactly the realizable ones, and their
      // count matches the closed-form tree bound.
      CHECK(BigInt(static_cast<long>(seen)) == upper_bound_tree(n, k));
    }
  }
}

TEST_CASE("plans record the surgery") {
  Graph tree = fixture_graph("tree_main.json");
  PersistenceDiagram d = make_diagram({{3, 6}, {5, 10}, {9, 11}});
  RealizationResult result = realize_with_plan(tree, d);

  const RealizationPlan& plan = result.plan;
  REQUIRE(plan.removed_edges.size() == 3);
  REQUIRE(plan.stages.size() == 4);
  CHECK(plan.stages[0].birth == 0);
  CHECK(plan.stages[0].death == -1);
  CHECK_FALSE(plan.stages[0].has_bridge);

  std::set<Edge> removed(plan.removed_edges.begin(),
                         plan.removed_edges.end());
  REQUIRE(removed.size() == 3);
  std::set<Edge> bridges;
  std::set<VertexId> covered;
  long long last_birth = -1;
  for (const RealizationStage& stage : plan.stages) {
    CHECK(stage.birth > last_birth);
    last_birth = stage.birth;
    for (VertexId v : stage.tree) {
      CHECK_FALSE(covered.count(v));
      covered.insert(v);
    }
    if (stage.has_bridge) {
      CHECK(removed.count(stage.bridge));
      CHECK_FALSE(bridges.count(stage.bridge));
      bridges.insert(stage.bridge);
      bool base_in_tree = std::find(stage.tree.begin(), stage.tree.end(),
                                    stage.base_vertex) != stage.tree.end();
      CHECK(base_in_tree);
    }
  }
  CHECK(covered.size() == tree.vertex_count());
  CHECK(bridges.size() == removed.size());
  CHECK(diagram_equal(compute_diagram_fast(result.function), d));
}

TEST_CASE("randomized realization is seed-reproducible and still correct") {
  Graph tree = fixture_graph("tree_main.json");
  PersistenceDiagram d = make_diagram({{1, 4}, {7, 13}});
  RealizeOptions opt;
  opt.randomize_seed = 20240815;
  MorseFunction a = realize(tree, d, opt);
  MorseFunction b = realize(tree, d, opt);
  CHECK(a.values() == b.values());

  for (uint64_t seed : {1ull, 7ull, 99ull, 123456789ull}) {
    RealizeOptions o;
    o.randomize_seed = seed;
    RealizationResult r = realize_with_plan(tree, d, o);
    CHECK(diagram_equal(compute_diagram_fast(r.function), d));
    CHECK(diagram_equal(compute_diagram_oracle(r.function), d));
    CHECK(r.plan.removed_edges.size() == 2);
  }
}

TEST_CASE("realization rejects bad input") {
  Graph cyclic = fixture_graph("cycle3_graph.json");
  CHECK_THROWS_AS(realize(cyclic, make_diagram({})), RealizationError);

  Graph path = Graph::build({0, 1, 2}, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(realize(path, make_diagram({{2, 1}})),
                  InconsistentDiagramError);
  CHECK_THROWS_AS(realize(path, make_diagram({{1, 2}}, {0}, {3})),
                  InconsistentDiagramError);
  CHECK_THROWS_AS(realize(path, make_diagram({{1, 2}}, {0, 3})),
                  InconsistentDiagramError);
  // Values live in 1..n-1 = 1..4 and may not repeat.
  CHECK_THROWS_AS(realize(path, make_diagram({{1, 5}})),
                  InconsistentDiagramError);
  CHECK_THROWS_AS(realize(path, make_diagram({{0, 2}})),
                  InconsistentDiagramError);
  CHECK_THROWS_AS(realize(path, make_diagram({{1, 2}, {2, 4}})),
                  InconsistentDiagramError);
}
