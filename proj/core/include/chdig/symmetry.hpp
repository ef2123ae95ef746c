#ifndef CHDIG_SYMMETRY_HPP
#define CHDIG_SYMMETRY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chdig/digraph.hpp"

namespace chdig {

using Permutation = std::vector<int>;

Permutation identity_perm(int n);
Permutation compose(const Permutation& first, const Permutation& then);
Permutation inverse(const Permutation& p);
bool is_automorphism(const Digraph& d, const Permutation& p);

/// An injective partial vertex map, kept as (source, image) pairs.
struct PartialMap {
  std::vector<std::pair<int, int>> pairs;
};

struct AutomorphismGroup {
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
  /// orbit id per vertex under the full group; ids are dense, smallest
  /// vertex first.
  std::vector<int> vertex_orbit;
  int orbit_count = 0;

  /// The group holds every automorphism of its digraph, so membership is a
  /// direct structural test.
  bool contains(const Digraph& d, const Permutation& p) const {
    return is_automorphism(d, p);
  }
};

/// Generic edge-code structure the search engine works on. codes[u*n+v] is an
/// arbitrary small label of the ordered pair; an isomorphism must preserve
/// all codes. Digraphs use 0/1/2 (none, u->v, v->u); underlying graphs use
/// symmetric 0/1.
struct CodeMatrix {
  int n = 0;
  std::vector<std::uint8_t> codes;

  std::uint8_t at(int u, int v) const {
    return codes[static_cast<std::size_t>(u) * n + v];
  }

  static CodeMatrix directed(const Digraph& d);
  static CodeMatrix underlying(const Digraph& d);
};

/// Backtracking search, seeded by vertex colors, for a bijection that
/// preserves codes and colors. Colors are nonnegative ints; the map must send
/// color c vertices onto color c vertices. Deterministic: branches on the
/// smallest cell, smallest vertex first.
std::optional<Permutation> find_color_isomorphism(const CodeMatrix& ma,
                                                  const std::vector<int>& cols_a,
                                                  const CodeMatrix& mb,
                                                  const std::vector<int>& cols_b);

/// Generating set plus order via orbits along the chain of pointwise
/// stabilizers of 0, 0..1, 0..2, ... Throws Error(order_overflow) if the
/// order exceeds 64 bits.
AutomorphismGroup automorphism_group(const Digraph& d);

/// Full automorphism extending phi, or nullopt. phi must be injective and an
/// isomorphism between the induced subdigraphs on its domain and codomain
/// (Error(not_partial_iso) otherwise). The empty map yields the identity.
std::optional<Permutation> extend_partial(const Digraph& d, const PartialMap& phi);

/// True iff some automorphism maps t1 onto t2 entrywise. Tuples whose induced
/// labeled structures differ are simply not in the same orbit (false).
bool same_orbit(const Digraph& d, const std::vector<int>& t1,
                const std::vector<int>& t2);

bool vertex_transitive(const Digraph& d);

/// Canonical labeling: vertex -> canonical position. Two digraphs have equal
/// canonical_form iff they are isomorphic. The colored variant makes the form
/// invariant only under color-preserving isomorphisms.
Permutation canonical_labeling(const CodeMatrix& m, const std::vector<int>& colors);
std::string canonical_form(const Digraph& d);
std::string canonical_form_colored(const CodeMatrix& m, const std::vector<int>& colors);

/// d relabeled into its canonical form.
Digraph canonicalize(const Digraph& d);

std::optional<Permutation> find_digraph_isomorphism(const Digraph& a, const Digraph& b);
bool isomorphic(const Digraph& a, const Digraph& b);

}  // namespace chdig

#endif
