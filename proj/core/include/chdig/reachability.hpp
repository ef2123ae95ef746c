#ifndef CHDIG_REACHABILITY_HPP
#define CHDIG_REACHABILITY_HPP

#include <string>
#include <vector>

#include "chdig/digraph.hpp"

namespace chdig {

/// Partition of the edge set into alternating-walk reachability classes.
/// Two edges are adjacent when they leave a common tail or enter a common
/// head; classes are the components of that adjacency.
struct ReachabilityPartition {
  /// Edge indices into d.edges(), grouped per class; classes ordered by
  /// smallest member, members ascending.
  std::vector<std::vector<int>> classes;
  /// Exactly one class (on a digraph with at least one edge).
  bool universal = false;
};

enum class DeltaKind {
  universal,
  complete_bipartite,
  matching_complement,
  even_cycle,
  tree_fragment,
  other,
};

/// Shape verdict of one reachability digraph. Parameters:
/// CompleteBipartite(m,n) sides; MatchingComplement(k) side size;
/// EvenCycle(len) total cycle length; TreeFragment(k,l) interior side degrees.
struct DeltaShape {
  DeltaKind kind = DeltaKind::other;
  int p1 = 0;
  int p2 = 0;

  bool operator==(const DeltaShape& o) const {
    return kind == o.kind && p1 == o.p1 && p2 == o.p2;
  }
};

std::string to_string(const DeltaShape& s);

struct DeltaReport {
  ReachabilityPartition partition;
  std::vector<DeltaShape> class_shapes;
  /// Shape of the largest class (ties: first); Universal when a single class
  /// covers every edge without being bipartite-oriented. Per-class verdicts
  /// above are authoritative when classes are not isomorphic.
  DeltaShape shape;
};

/// Throws Error(no_edges) on edgeless digraphs.
ReachabilityPartition reachability_classes(const Digraph& d);

/// The digraph whose edge set is exactly the reachability class of e and
/// whose vertices are the endpoints of those edges (edge-set semantics:
/// chords of the class are not added). Relabeled 0..k-1 by ascending
/// original vertex index. Throws Error(unknown_edge) when e is not an edge.
Digraph reachability_digraph(const Digraph& d, Edge e);

/// Classify every class; recognition order is fixed: complete bipartite,
/// then matching complement, then cycle, then tree, else Other.
DeltaReport delta_shape(const Digraph& d);

/// True iff all edges lie in one automorphism orbit (as ordered pairs).
bool is_1_arc_transitive(const Digraph& d);

/// Bipartite reachability property of an extracted class digraph: one side
/// has empty in-neighborhood, the other empty out-neighborhood (no vertex
/// both receives and sends within the class).
bool is_bipartite_oriented(const Digraph& delta);

}  // namespace chdig

#endif
