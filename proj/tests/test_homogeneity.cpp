#include <doctest.h>

#include "chdig/families.hpp"
#include "chdig/homogeneity.hpp"
#include "chdig/symmetry.hpp"

using namespace chdig;

namespace {

// A false verdict must carry a genuine non-extending partial isomorphism.
void check_witness_sound(const Digraph& d, const HomogeneityVerdict& v) {
  REQUIRE(v.witness.has_value());
  // extend_partial validates the partial-iso property itself; it must accept
  // the witness and fail to extend it.
  CHECK_FALSE(extend_partial(d, *v.witness).has_value());
  CHECK(v.witness_domain.vertex_count() == static_cast<int>(v.witness->pairs.size()));
}

}  // namespace

TEST_CASE("homogeneous verdicts on named digraphs") {
  CHECK(is_homogeneous(families::directed_cycle(4)).holds);
  CHECK(is_homogeneous(families::empty(5)).holds);
  CHECK(is_homogeneous(families::directed_cycle(3)).holds);
  CHECK(is_homogeneous(lex_product(families::directed_cycle(3), families::empty(2))).holds);
  CHECK(is_homogeneous(lex_product(families::empty(2), families::directed_cycle(3))).holds);

  HomogeneityVerdict c5 = is_homogeneous(families::directed_cycle(5));
  CHECK_FALSE(c5.holds);
  check_witness_sound(families::directed_cycle(5), c5);

  CHECK_FALSE(is_homogeneous(families::directed_cycle(6)).holds);
  CHECK_FALSE(is_homogeneous(Digraph(2, {{0, 1}})).holds);
}

TEST_CASE("c-homogeneous verdicts on named digraphs") {
  CHECK(is_c_homogeneous(families::directed_cycle(5)).holds);
  CHECK(is_c_homogeneous(families::directed_cycle(6)).holds);
  CHECK(is_c_homogeneous(families::y(3)).holds);
  CHECK(is_c_homogeneous(families::y(4)).holds);

  HomogeneityVerdict path = is_c_homogeneous(Digraph(3, {{0, 1}, {1, 2}}));
  CHECK_FALSE(path.holds);
  check_witness_sound(Digraph(3, {{0, 1}, {1, 2}}), path);

  // homogeneity implies C-homogeneity
  for (const Digraph& d : {families::directed_cycle(4), families::empty(4)})
    if (is_homogeneous(d).holds) CHECK(is_c_homogeneous(d).holds);
}

TEST_CASE("c-homogeneity implies vertex transitivity on connected digraphs") {
  for (const Digraph& d :
       {families::directed_cycle(5), families::y(3),
        lex_product(families::directed_cycle(4), families::empty(2))}) {
    if (is_c_homogeneous(d).holds) CHECK(vertex_transitive(d));
  }
}

TEST_CASE("bipartite variant") {
  // underlying graph of cp(4): complement of a perfect matching
  std::vector<int> cp_sides(8);
  for (int v = 0; v < 8; ++v) cp_sides[v] = v < 4 ? 0 : 1;
  CHECK(is_c_homogeneous_bipartite(families::cp(4), cp_sides).holds);
  CHECK(is_c_homogeneous_bipartite(families::cp(3), {0, 0, 0, 1, 1, 1}).holds);

  // even cycles C_{2m}, m >= 2 (any orientation; the checker works on the
  // underlying graph)
  for (int m = 2; m <= 4; ++m) {
    Digraph c = families::directed_cycle(2 * m);
    std::vector<int> side(2 * m);
    for (int v = 0; v < 2 * m; ++v) side[v] = v % 2;
    CHECK(is_c_homogeneous_bipartite(c, side).holds);
  }

  // complete bipartite digraph
  {
    std::vector<Edge> edges;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) edges.push_back({i, 2 + j});
    CHECK(is_c_homogeneous_bipartite(Digraph(5, edges), {0, 0, 1, 1, 1}).holds);
  }

  // path on 4 vertices: endpoints versus interior
  Digraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  HomogeneityVerdict v = is_c_homogeneous_bipartite(p4, {0, 1, 0, 1});
  CHECK_FALSE(v.holds);

  CHECK_THROWS_WITH_AS(is_c_homogeneous_bipartite(p4, {0, 0, 1, 1}),
                       doctest::Contains("NotBipartite"), Error);
  CHECK_THROWS_AS(is_c_homogeneous_bipartite(p4, {0, 1}), Error);
}

TEST_CASE("oracle equivalence on an assortment of small digraphs") {
  std::vector<Digraph> pool = {
      families::empty(1),
      families::empty(2),
      families::empty(4),
      Digraph(2, {{0, 1}}),
      families::directed_cycle(3),
      families::directed_cycle(4),
      families::directed_cycle(5),
      Digraph(3, {{0, 1}, {1, 2}}),
      Digraph(3, {{0, 1}, {1, 2}, {0, 2}}),
      Digraph(4, {{0, 1}, {2, 3}}),
      Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}),
      Digraph(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}}),
      families::cp(2),
  };
  for (const Digraph& d : pool) {
    CHECK(is_homogeneous(d).holds == brute_force_oracle(d, false).holds);
    CHECK(is_c_homogeneous(d).holds == brute_force_oracle(d, true).holds);
  }
  CHECK_THROWS_WITH_AS(brute_force_oracle(families::y(3), false),
                       doctest::Contains("TooLarge"), Error);
}

TEST_CASE("oracle basics") {
  CHECK(brute_force_oracle(families::empty(2), false).holds);
  CHECK(brute_force_oracle(families::directed_cycle(3), true).holds);
  HomogeneityVerdict v = brute_force_oracle(families::directed_cycle(5), false);
  CHECK_FALSE(v.holds);
  check_witness_sound(families::directed_cycle(5), v);
}

TEST_CASE("depth-capped verdicts are marked qualified") {
  HomogeneityVerdict v = is_c_homogeneous(families::y(3), 2);
  CHECK(v.holds);
  CHECK_FALSE(v.complete);
  CHECK(v.levels_checked == 2);

  HomogeneityVerdict full = is_c_homogeneous(families::y(3));
  CHECK(full.complete);
}
