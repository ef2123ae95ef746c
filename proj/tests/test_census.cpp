#include <doctest.h>

#include <set>

#include "chdig/census.hpp"
#include "chdig/homogeneity.hpp"
#include "chdig/quotients.hpp"
#include "chdig/symmetry.hpp"

using namespace chdig;

TEST_CASE("digraph generation counts match the literature") {
  auto all = generate_digraphs(5, false);
  CHECK(all[1].size() == 1);
  CHECK(all[2].size() == 2);
  CHECK(all[3].size() == 7);
  CHECK(all[4].size() == 42);
  CHECK(all[5].size() == 582);

  auto connected = generate_digraphs(5, true);
  CHECK(connected[1].size() == 1);
  CHECK(connected[2].size() == 1);
  CHECK(connected[3].size() == 5);
  CHECK(connected[4].size() == 34);
  CHECK(connected[5].size() == 535);
}

TEST_CASE("generation is canonical and duplicate-free") {
  auto levels = generate_digraphs(4, false);
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> forms;
    for (const Digraph& d : levels[n]) {
      CHECK(d == canonicalize(d));
      CHECK(forms.insert(canonical_form(d)).second);
    }
  }
}

TEST_CASE("labeled enumeration oracle for n = 4 connected counts") {
  // Direct labeled enumeration + canonical dedup, independent of the
  // augmentation path.
  const std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {0, 3},
                                                  {1, 2}, {1, 3}, {2, 3}};
  std::set<std::string> forms_all, forms_connected;
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
    forms_all.insert(canonical_form(d));
    if (is_connected(d)) forms_connected.insert(canonical_form(d));
  }
  CHECK(forms_all.size() == 42);
  CHECK(forms_connected.size() == 34);
}

TEST_CASE("enumerate_c_homogeneous") {
  auto n4 = enumerate_c_homogeneous(4);
  REQUIRE(n4.size() == 3);
  std::set<std::string> forms;
  for (const Digraph& d : n4) forms.insert(canonical_form(d));
  CHECK(forms.count(canonical_form(families::empty(1))));
  CHECK(forms.count(canonical_form(families::directed_cycle(3))));
  CHECK(forms.count(canonical_form(families::directed_cycle(4))));

  CHECK(enumerate_c_homogeneous(1).size() == 1);
  CHECK_THROWS_WITH_AS(enumerate_c_homogeneous(7), doctest::Contains("TooLarge"), Error);
}

TEST_CASE("recognize catalog members") {
  CHECK(recognize(families::empty(1)) == CatalogEntry(catalog::Trivial{}));
  CHECK(recognize(families::directed_cycle(3)) == CatalogEntry(catalog::Cycle{3, 1}));
  CHECK(recognize(families::directed_cycle(8)) == CatalogEntry(catalog::Cycle{8, 1}));
  CHECK(recognize(lex_product(families::directed_cycle(3), families::empty(2))) ==
        CatalogEntry(catalog::Cycle{3, 2}));
  CHECK(recognize(families::y(4)) == CatalogEntry(catalog::Y{4}));
  CHECK(recognize(families::h()) == CatalogEntry(catalog::HComposite{1}));
  CHECK(recognize(lex_product(families::h(), families::empty(2))) ==
        CatalogEntry(catalog::HComposite{2}));
  CHECK(recognize(Digraph(2, {{0, 1}})) == CatalogEntry(catalog::Unknown{}));
  CHECK_THROWS_WITH_AS(recognize(families::empty(3)), doctest::Contains("NotConnected"),
                       Error);
}

TEST_CASE("recognize round-trips over the catalog grid") {
  for (int m = 3; m <= 8; ++m)
    for (int n = 1; m * n <= 60 && n <= 3; ++n)
      CHECK(recognize(build_catalog(catalog::Cycle{m, n})) ==
            CatalogEntry(catalog::Cycle{m, n}));
  for (int k = 3; k <= 6; ++k)
    CHECK(recognize(build_catalog(catalog::Y{k})) == CatalogEntry(catalog::Y{k}));
  for (int n = 1; n <= 3; ++n)
    CHECK(recognize(build_catalog(catalog::HComposite{n})) ==
          CatalogEntry(catalog::HComposite{n}));

  // For quotient specs the recognizer may legitimately land on an earlier
  // family when the digraphs coincide (the torus is Y(3)); the round trip is
  // up to isomorphism of the built digraphs.
  for (const auto& r : search_quotients(9)) {
    CatalogEntry e = recognize(r.report.digraph);
    CHECK_FALSE(std::holds_alternative<catalog::Unknown>(e));
    CHECK(isomorphic(build_catalog(e), r.report.digraph));
  }
}

TEST_CASE("census at tiny sizes") {
  CensusReport r3 = census(3);
  CHECK(r3.unexplained.empty());
  CHECK(r3.missing.empty());
  REQUIRE(r3.found.size() == 2);
  CHECK(r3.found[0].second == CatalogEntry(catalog::Trivial{}));
  CHECK(r3.found[1].second == CatalogEntry(catalog::Cycle{3, 1}));

  CensusReport r5 = census(5);
  CHECK(r5.unexplained.empty());
  CHECK(r5.missing.empty());
  CHECK(r5.counts["Cycle"] == 3);  // C_3, C_4, C_5
  CHECK(r5.counts["Trivial"] == 1);
}
