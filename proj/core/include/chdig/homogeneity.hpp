#ifndef CHDIG_HOMOGENEITY_HPP
#define CHDIG_HOMOGENEITY_HPP

#include <optional>
#include <string>

#include "chdig/digraph.hpp"
#include "chdig/symmetry.hpp"

namespace chdig {

/// Outcome of a homogeneity check. When holds is false the witness is a
/// genuine isomorphism between induced subdigraphs (connected ones for the
/// C-variants) that extends to no automorphism; witness_domain/_codomain are
/// the two induced subdigraphs it maps between.
struct HomogeneityVerdict {
  bool holds = true;
  std::optional<PartialMap> witness;
  Digraph witness_domain;
  Digraph witness_codomain;
  /// Largest subdigraph size examined.
  int levels_checked = 0;
  /// False when a depth cap stopped the scan early; the verdict is then only
  /// "holds up to size levels_checked", never a full verdict.
  bool complete = true;
};

/// Every isomorphism between induced subdigraphs extends to an automorphism.
/// Disconnected digraphs are fine. max_level caps the subdigraph size
/// examined (-1 = full depth).
HomogeneityVerdict is_homogeneous(const Digraph& d, int max_level = -1);

/// The same extension property restricted to connected induced subdigraphs.
HomogeneityVerdict is_c_homogeneous(const Digraph& d, int max_level = -1);

/// Bipartite variant on the underlying undirected graph: maps and extending
/// automorphisms must preserve the declared 2-coloring `side` (entries 0/1).
/// Throws Error(not_bipartite) if some edge fails to cross sides.
HomogeneityVerdict is_c_homogeneous_bipartite(const Digraph& g,
                                              const std::vector<int>& side,
                                              int max_level = -1);

/// Independent oracle: enumerates every pair of induced subdigraphs and every
/// isomorphism between them directly, then scans all n! permutations for an
/// extension. No orbit pruning, no shared search machinery.
/// Throws Error(too_large) above the bound.
HomogeneityVerdict brute_force_oracle(const Digraph& d, bool connected_only,
                                      int bound = 6);

}  // namespace chdig

#endif
