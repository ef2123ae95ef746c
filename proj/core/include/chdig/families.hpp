#ifndef CHDIG_FAMILIES_HPP
#define CHDIG_FAMILIES_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chdig/digraph.hpp"
#include "chdig/quotient_spec.hpp"

namespace chdig {

namespace families {

/// Edgeless digraph on n vertices.
Digraph empty(int n);

/// Vertices 0..m-1 with edges i -> i+1 (mod m). m >= 3; a 2-cycle would
/// violate antisymmetry.
Digraph directed_cycle(int m);

/// Directed complement of a perfect matching: sides A = 0..k-1, B = k..2k-1,
/// edges a_i -> b_j for all i != j. k >= 2. Note cp(2) is disconnected.
Digraph cp(int k);

/// Tripartite digraph on parts V_i = {(i-1)k .. ik-1}, i = 1,2,3, with edges
/// (i,j) -> (i+1,j') exactly when j != j'. The removed matching sits at equal
/// indices, so the tripartite complement is k disjoint directed triangles
/// (verified at construction). k >= 3.
Digraph y(int k);

/// Syllable word in the free product of two order-3 cyclic groups:
/// alternating (generator, exponent) pairs, generator 0/1, exponent 1/2.
using T2Word = std::vector<std::pair<int, int>>;

struct T2Ball {
  Digraph digraph;
  /// Vertices at undirected distance <= r-1 from the identity.
  std::vector<int> interior;
  /// Normal-form word of each ball vertex; vertex 0 is the identity.
  std::vector<T2Word> words;
  std::vector<int> distance;
};

/// Radius-r ball (underlying undirected distance) around the identity of the
/// Cayley digraph of <x,y | x^3 = y^3 = 1> with edges g -> gx, g -> gy, built
/// by breadth-first normal-form expansion. r >= 1.
T2Ball t2_ball(int r);

/// The unique connected homogeneous digraph in which every out- and
/// in-neighborhood induces a directed triangle: 8 vertices, 24 edges,
/// 3-in/3-out regular, one non-neighbor per vertex. The edge list is frozen
/// here; search_h regenerates it from scratch (see that function).
Digraph h();

/// Bounded search recovering h(): enumerates, up to isomorphism, every
/// connected digraph with at most max_n vertices that is 3-in/3-out regular
/// with every out- and in-neighborhood inducing a directed triangle, then
/// keeps the homogeneous ones. Throws Error(search_exhausted) when nothing is
/// found within the bound (that would signal an implementation bug).
std::vector<Digraph> search_h(int max_n = 12);

}  // namespace families

namespace catalog {
struct Trivial {
  bool operator==(const Trivial&) const { return true; }
};
struct Cycle {
  int m, n;
  bool operator==(const Cycle& o) const { return m == o.m && n == o.n; }
};
struct HComposite {
  int n;
  bool operator==(const HComposite& o) const { return n == o.n; }
};
struct Y {
  int k;
  bool operator==(const Y& o) const { return k == o.k; }
};
struct T2Quotient {
  QuotientSpec spec;
  bool operator==(const T2Quotient& o) const { return spec == o.spec; }
};
struct Unknown {
  bool operator==(const Unknown&) const { return true; }
};
}  // namespace catalog

/// Tagged family identifier: the vocabulary of the finite catalog.
using CatalogEntry =
    std::variant<catalog::Trivial, catalog::Cycle, catalog::HComposite,
                 catalog::Y, catalog::T2Quotient, catalog::Unknown>;

std::string to_string(const CatalogEntry& e);

/// Construct the digraph a catalog entry names. Unknown is not constructible.
Digraph build_catalog(const CatalogEntry& e);

}  // namespace chdig

#endif
