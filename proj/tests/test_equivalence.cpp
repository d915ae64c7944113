#include <doctest.h>

#include <random>
#include <vector>

#include "support.hpp"

using namespace morsegraph;
using testsupport::fixture_function;
using testsupport::random_connected_graph;
using testsupport::random_function;

namespace {

struct Verdicts {
  bool persistence, forman, homological, graph;
};

Verdicts verdicts(const char* graph_file, const char* f1_file,
                  const char* f2_file) {
  MorseFunction f1 = fixture_function(graph_file, f1_file);
  MorseFunction f2 = fixture_function(graph_file, f2_file);
  return {persistence_equivalent(f1, f2), forman_equivalent(f1, f2),
          homologically_equivalent(f1, f2), graph_equivalent(f1, f2)};
}

}  // namespace

TEST_CASE("persistence-equal pair that differs as a gradient field") {
  Verdicts v = verdicts("pair_ab_tree.json", "pair_a_f1.json",
                        "pair_a_f2.json");
  CHECK(v.persistence);
  CHECK_FALSE(v.forman);
  CHECK(v.homological);
  CHECK(v.graph);
}

TEST_CASE("gradient-equal pair that differs in persistence") {
  Verdicts v = verdicts("pair_ab_tree.json", "pair_b_f1.json",
                        "pair_b_f2.json");
  CHECK_FALSE(v.persistence);
  CHECK(v.forman);
  CHECK(v.homological);
  CHECK_FALSE(v.graph);
}

TEST_CASE("homologically equal pair, equal in no finer sense") {
  Verdicts v = verdicts("pair_c_path.json", "pair_c_f1.json",
                        "pair_c_f2.json");
  CHECK_FALSE(v.persistence);
  CHECK_FALSE(v.forman);
  CHECK(v.homological);
  CHECK_FALSE(v.graph);
}

TEST_CASE("level-isomorphic pair that differs in persistence") {
  Verdicts v = verdicts("pair_de_star.json", "pair_d_f1.json",
                        "pair_d_f2.json");
  CHECK_FALSE(v.persistence);
  CHECK(v.forman);
  CHECK(v.homological);
  CHECK(v.graph);
}

TEST_CASE("persistence-equal pair that is not level-isomorphic") {
  Verdicts v = verdicts("pair_de_star.json", "pair_e_f1.json",
                        "pair_e_f2.json");
  CHECK(v.persistence);
  CHECK(v.forman);
  CHECK(v.homological);
  CHECK_FALSE(v.graph);
}

TEST_CASE("relations need a common graph") {
  MorseFunction a = fixture_function("pair_c_path.json", "pair_c_f1.json");
  MorseFunction b = fixture_function("pair_de_star.json", "pair_d_f1.json");
  CHECK_THROWS_AS(persistence_equivalent(a, b), InputError);
  CHECK_THROWS_AS(forman_equivalent(a, b), InputError);
  CHECK_THROWS_AS(homologically_equivalent(a, b), InputError);
  CHECK_THROWS_AS(graph_equivalent(a, b), InputError);
}

TEST_CASE("each relation is an equivalence on a random pool") {
  std::mt19937_64 rng(99001122);
  Graph g = random_connected_graph(rng, 1);
  std::vector<MorseFunction> pool;
  for (int i = 0; i < 8; ++i) pool.push_back(random_function(rng, g));

  using Relation = bool (*)(const MorseFunction&, const MorseFunction&);
  std::vector<Relation> relations = {persistence_equivalent, forman_equivalent,
                                     homologically_equivalent,
                                     graph_equivalent};
  for (Relation rel : relations) {
    for (size_t i = 0; i < pool.size(); ++i) {
      CHECK(rel(pool[i], pool[i]));
      for (size_t j = 0; j < pool.size(); ++j)
        CHECK(rel(pool[i], pool[j]) == rel(pool[j], pool[i]));
    }
    for (size_t i = 0; i < pool.size(); ++i)
      for (size_t j = 0; j < pool.size(); ++j)
        for (size_t k = 0; k < pool.size(); ++k)
          if (rel(pool[i], pool[j]) && rel(pool[j], pool[k]))
            CHECK(rel(pool[i], pool[k]));
  }
}

TEST_CASE("coarsening implications on random pairs") {
  std::mt19937_64 rng(5566);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_connected_graph(rng, trial % 3);
    MorseFunction a = random_function(rng, g);
    MorseFunction b = random_function(rng, g);
    if (persistence_equivalent(a, b)) CHECK(homologically_equivalent(a, b));
    if (graph_equivalent(a, b)) CHECK(homologically_equivalent(a, b));
  }
}
