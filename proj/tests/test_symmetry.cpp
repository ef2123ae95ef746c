#include <doctest.h>

#include <algorithm>
#include <random>

#include "chdig/families.hpp"
#include "chdig/symmetry.hpp"

using namespace chdig;

namespace {

// Order of Aut(d) by scanning all n! permutations; independent of the engine.
std::uint64_t brute_force_order(const Digraph& d) {
  const int n = d.vertex_count();
  Permutation p = identity_perm(n);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        if (d.code(u, v) != d.code(p[u], p[v])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace

TEST_CASE("automorphism group orders of named digraphs") {
  for (int m = 3; m <= 7; ++m)
    CHECK(automorphism_group(families::directed_cycle(m)).order == static_cast<std::uint64_t>(m));
  CHECK(automorphism_group(families::empty(4)).order == 24);
  CHECK(automorphism_group(families::empty(5)).order == 120);

  Digraph c3k2 = lex_product(families::directed_cycle(3), families::empty(2));
  CHECK(automorphism_group(c3k2).order == 24);
  CHECK(brute_force_order(c3k2) == 24);
}

TEST_CASE("generators are automorphisms and orbits are sane") {
  for (const Digraph& d :
       {families::directed_cycle(4), families::cp(3), families::y(3),
        Digraph(4, {{0, 1}, {1, 2}, {2, 3}})}) {
    AutomorphismGroup g = automorphism_group(d);
    for (const auto& gen : g.generators) {
      CHECK(is_automorphism(d, gen));
      CHECK(g.contains(d, gen));
    }
    CHECK(g.vertex_orbit.size() == static_cast<std::size_t>(d.vertex_count()));
  }
  // directed path: no nontrivial symmetry
  CHECK(automorphism_group(Digraph(3, {{0, 1}, {1, 2}})).order == 1);
}

TEST_CASE("group order is a relabeling invariant") {
  std::mt19937 rng(12345);
  for (const Digraph& d : {families::cp(3), families::y(3), families::directed_cycle(6)}) {
    std::uint64_t base = automorphism_group(d).order;
    Permutation p = identity_perm(d.vertex_count());
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(p.begin(), p.end(), rng);
      CHECK(automorphism_group(relabel(d, p)).order == base);
    }
  }
}

TEST_CASE("engine order matches brute force on all digraphs with <= 4 vertices") {
  // exhaustive over labeled digraphs on 4 vertices: 3^6 = 729
  const std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {0, 3},
                                                  {1, 2}, {1, 3}, {2, 3}};
  for (int code = 0; code < 729; ++code) {
    int rest = code;
    std::vector<Edge> edges;
    for (const auto& [u, v] : pairs) {
      int c = rest % 3;
      rest /= 3;
      if (c == 1) edges.push_back({u, v});
      if (c == 2) edges.push_back({v, u});
    }
    Digraph d(4, std::move(edges));
    CHECK(automorphism_group(d).order == brute_force_order(d));
  }
}

TEST_CASE("extend_partial") {
  Digraph c4 = families::directed_cycle(4);
  auto rot = extend_partial(c4, PartialMap{{{0, 2}}});
  REQUIRE(rot.has_value());
  CHECK((*rot)[0] == 2);
  CHECK(is_automorphism(c4, *rot));

  // single edge: endpoints have different degree patterns
  Digraph edge(2, {{0, 1}});
  CHECK_FALSE(extend_partial(edge, PartialMap{{{0, 1}}}).has_value());

  // C_5: no rotation fixes 0 and moves 2 to 3
  Digraph c5 = families::directed_cycle(5);
  CHECK_FALSE(extend_partial(c5, PartialMap{{{0, 0}, {2, 3}}}).has_value());

  // empty map yields the identity
  CHECK(extend_partial(c5, PartialMap{}) == identity_perm(5));

  // its values must extend the prescription and preserve edges exactly
  auto alpha = extend_partial(c5, PartialMap{{{0, 3}}});
  REQUIRE(alpha.has_value());
  CHECK((*alpha)[0] == 3);
  CHECK(is_automorphism(c5, *alpha));

  // rejects maps that do not preserve the induced structure
  CHECK_THROWS_WITH_AS(extend_partial(c5, PartialMap{{{0, 0}, {1, 2}}}),
                       doctest::Contains("NotPartialIso"), Error);
  CHECK_THROWS_AS(extend_partial(c5, PartialMap{{{0, 1}, {2, 1}}}), Error);
}

TEST_CASE("same_orbit") {
  CHECK(same_orbit(families::directed_cycle(6), {0}, {3}));
  CHECK_FALSE(same_orbit(Digraph(2, {{0, 1}}), {0}, {1}));

  // C_3[K_2] is vertex-transitive
  Digraph c3k2 = lex_product(families::directed_cycle(3), families::empty(2));
  for (int v = 1; v < 6; ++v) CHECK(same_orbit(c3k2, {0}, {v}));

  // differing patterns are just a different orbit, not an error
  Digraph c5 = families::directed_cycle(5);
  CHECK_FALSE(same_orbit(c5, {0, 1}, {0, 2}));

  CHECK_THROWS_AS(same_orbit(c5, {0, 0}, {1, 2}), Error);
}

TEST_CASE("vertex transitivity") {
  CHECK(vertex_transitive(families::y(4)));
  CHECK(vertex_transitive(families::empty(5)));
  CHECK(vertex_transitive(families::directed_cycle(7)));
  CHECK_FALSE(vertex_transitive(Digraph(3, {{0, 1}, {1, 2}})));
  CHECK_FALSE(vertex_transitive(families::cp(3)));
}

TEST_CASE("canonical forms classify isomorphism") {
  Digraph c5 = families::directed_cycle(5);
  std::mt19937 rng(99);
  Permutation p = identity_perm(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(canonical_form(relabel(c5, p)) == canonical_form(c5));
  }
  CHECK(canonical_form(c5) != canonical_form(Digraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})));
  CHECK(isomorphic(families::cp(3), relabel(families::cp(3), {3, 1, 4, 0, 2, 5})));
  CHECK_FALSE(isomorphic(families::directed_cycle(3), Digraph(3, {{0, 1}, {1, 2}, {0, 2}})));

  // canonicalize is idempotent and preserves the isomorphism class
  Digraph y3 = families::y(3);
  Digraph canon = canonicalize(y3);
  CHECK(canonicalize(canon) == canon);
  CHECK(isomorphic(canon, y3));
}
