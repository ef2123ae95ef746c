#ifndef CHDIG_QUOTIENTS_HPP
#define CHDIG_QUOTIENTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "chdig/digraph.hpp"
#include "chdig/homogeneity.hpp"
#include "chdig/quotient_spec.hpp"
#include "chdig/reachability.hpp"
#include "chdig/symmetry.hpp"

namespace chdig {

/// Throws Error(fixed_point / wrong_order / not_transitive /
/// vertex_out_of_range) when the spec invariants fail.
void validate_quotient_spec(const QuotientSpec& spec);

/// Vertices 0..k-1 with edges p -> p^A and p -> p^B (collapsed when the two
/// images coincide). Throws Error(quotient_symmetric) when some pair would
/// carry edges both ways, plus the validation errors above.
Digraph build_quotient(const QuotientSpec& spec);

/// A permutation conjugating A to B and B to A simultaneously, or nullopt.
/// nullopt means the spec certifies only invariance under the transitive
/// point action, not under the generator swap.
std::optional<Permutation> check_swap_invariance(const QuotientSpec& spec);

struct QuotientReport {
  QuotientSpec spec;
  bool valid = false;
  std::string error;  // set when invalid
  Digraph digraph;
  bool connected = false;
  bool has_triangle = false;
  HomogeneityVerdict c_homogeneous;
  DeltaShape delta;
  std::vector<DeltaShape> delta_per_class;
  int class_count = 0;
  std::optional<Permutation> swap_witness;
  /// Always set for valid specs: a finite quotient collapses each class of
  /// the infinite cover to one point, so every class is infinite and the
  /// quotient digraph has at most one end.
  std::string note;

  bool verified() const { return valid && connected && c_homogeneous.holds; }
};

/// Build + full battery; invalid specs yield a structured error report
/// instead of throwing.
QuotientReport verify_quotient(const QuotientSpec& spec);

/// Maps each radius-r ball vertex (a word in the two generators) to the point
/// its word reaches from 0, then checks the map is a digraph homomorphism
/// whose restriction to each interior vertex's in/out-neighborhood covers the
/// image vertex's in/out-neighborhood exactly. For collapse-free specs this
/// makes the neighborhood maps bijections.
bool covering_check(const QuotientSpec& spec, int radius);

struct QuotientSearchResult {
  QuotientSpec spec;
  QuotientReport report;
};

/// Enumerates transitive fixed-point-free order-3 permutation pairs for every
/// k <= k_max (k divisible by 3) via first-appearance coset tables, verifies
/// each, keeps those passing full verification, and deduplicates by digraph
/// isomorphism. Sorted by (k, canonical form).
std::vector<QuotientSearchResult> search_quotients(int k_max);

}  // namespace chdig

#endif
