#include <doctest.h>

#include <algorithm>
#include <random>

#include "chdig/families.hpp"
#include "chdig/reachability.hpp"
#include "chdig/symmetry.hpp"

using namespace chdig;

TEST_CASE("reachability classes") {
  // C_3: no two edges share a head or a tail
  ReachabilityPartition c3 = reachability_classes(families::directed_cycle(3));
  CHECK(c3.classes.size() == 3);
  CHECK_FALSE(c3.universal);

  // y(3): one class per part pair
  ReachabilityPartition y3 = reachability_classes(families::y(3));
  CHECK(y3.classes.size() == 3);
  for (const auto& cls : y3.classes) CHECK(cls.size() == 6);

  // C_3[K_2]: three classes of four edges
  Digraph c3k2 = lex_product(families::directed_cycle(3), families::empty(2));
  ReachabilityPartition p = reachability_classes(c3k2);
  CHECK(p.classes.size() == 3);
  for (const auto& cls : p.classes) CHECK(cls.size() == 4);

  CHECK_THROWS_WITH_AS(reachability_classes(families::empty(3)),
                       doctest::Contains("NoEdges"), Error);
}

TEST_CASE("class partition is independent of labeling") {
  std::mt19937 rng(7);
  for (const Digraph& d : {families::y(3), families::cp(3), families::directed_cycle(6)}) {
    auto base = reachability_classes(d);
    Permutation perm = identity_perm(d.vertex_count());
    std::shuffle(perm.begin(), perm.end(), rng);
    Digraph r = relabel(d, perm);
    auto relab = reachability_classes(r);
    // compare as multisets of edge sets mapped back through the relabeling
    auto class_sets = [](const Digraph& g, const ReachabilityPartition& p) {
      std::vector<std::vector<Edge>> sets;
      for (const auto& cls : p.classes) {
        std::vector<Edge> edges;
        for (int i : cls) edges.push_back(g.edges()[i]);
        std::sort(edges.begin(), edges.end());
        sets.push_back(edges);
      }
      std::sort(sets.begin(), sets.end());
      return sets;
    };
    auto mapped = class_sets(d, base);
    for (auto& cls : mapped)
      for (auto& [u, v] : cls) {
        u = perm[u];
        v = perm[v];
      }
    for (auto& cls : mapped) std::sort(cls.begin(), cls.end());
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == class_sets(r, relab));
  }
}

TEST_CASE("reachability digraph extraction") {
  // C_3: each class is a single edge
  Digraph c3 = families::directed_cycle(3);
  CHECK(reachability_digraph(c3, {0, 1}) == Digraph(2, {{0, 1}}));

  // y(3): the class of an edge from V_1 to V_2 is cp(3)
  Digraph y3 = families::y(3);
  Edge e = y3.edges()[0];
  Digraph delta = reachability_digraph(y3, e);
  CHECK(isomorphic(delta, families::cp(3)));

  // C_3[K_2]: complete bipartite K_{2,2}
  Digraph c3k2 = lex_product(families::directed_cycle(3), families::empty(2));
  Digraph d22 = reachability_digraph(c3k2, c3k2.edges()[0]);
  CHECK(d22.vertex_count() == 4);
  CHECK(d22.edge_count() == 4);

  CHECK_THROWS_WITH_AS(reachability_digraph(c3, {1, 0}),
                       doctest::Contains("UnknownEdge"), Error);
}

TEST_CASE("delta shapes") {
  // y(k) -> MatchingComplement(k)
  for (int k = 3; k <= 5; ++k) {
    DeltaReport r = delta_shape(families::y(k));
    CHECK(r.shape == DeltaShape{DeltaKind::matching_complement, k, 0});
  }

  // directed_cycle(8): every class is a single edge K_{1,1}
  DeltaReport c8 = delta_shape(families::directed_cycle(8));
  CHECK(c8.shape == DeltaShape{DeltaKind::complete_bipartite, 1, 1});
  for (const auto& s : c8.class_shapes)
    CHECK(s == DeltaShape{DeltaKind::complete_bipartite, 1, 1});

  // t2_ball(3): the largest class is a path fragment of the (2,2) tree
  DeltaReport ball = delta_shape(families::t2_ball(3).digraph);
  CHECK(ball.shape == DeltaShape{DeltaKind::tree_fragment, 2, 2});

  // C_m[K_n] -> K_{n,n}
  for (int m = 3; m <= 6; ++m)
    for (int n = 1; n <= 3; ++n) {
      Digraph d = lex_product(families::directed_cycle(m), families::empty(n));
      DeltaReport r = delta_shape(d);
      CHECK(r.partition.classes.size() == static_cast<std::size_t>(m));
      CHECK(r.shape == DeltaShape{DeltaKind::complete_bipartite, n, n});
    }

  // transitive triangle: one class, not bipartite-oriented
  DeltaReport tt = delta_shape(Digraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(tt.partition.universal);
  CHECK(tt.shape.kind == DeltaKind::universal);

  CHECK(to_string(DeltaShape{DeltaKind::even_cycle, 10, 0}) == "EvenCycle(10)");
}

TEST_CASE("1-arc transitivity") {
  CHECK(is_1_arc_transitive(families::directed_cycle(5)));
  CHECK(is_1_arc_transitive(families::y(3)));
  CHECK(is_1_arc_transitive(families::cp(4)));
  CHECK_FALSE(is_1_arc_transitive(Digraph(3, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK_THROWS_AS(is_1_arc_transitive(families::empty(2)), Error);
}

TEST_CASE("all reachability digraphs of a 1-arc-transitive digraph are isomorphic") {
  for (const Digraph& d :
       {families::y(4), lex_product(families::directed_cycle(5), families::empty(2)),
        families::directed_cycle(7)}) {
    REQUIRE(is_1_arc_transitive(d));
    ReachabilityPartition p = reachability_classes(d);
    Digraph first = reachability_digraph(d, d.edges()[p.classes[0][0]]);
    for (const auto& cls : p.classes) {
      Digraph delta = reachability_digraph(d, d.edges()[cls[0]]);
      CHECK(isomorphic(first, delta));
    }
  }
}
