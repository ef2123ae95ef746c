#ifndef CHDIG_CENSUS_HPP
#define CHDIG_CENSUS_HPP

#include <map>
#include <string>
#include <vector>

#include "chdig/digraph.hpp"
#include "chdig/families.hpp"

namespace chdig {

/// All digraphs with exactly 1..n_max vertices up to isomorphism, as
/// canonical representatives ([n] holds the n-vertex ones; [0] is empty).
/// Generation extends each (n-1)-vertex representative by one vertex with
/// every direction-coded adjacency pattern and deduplicates canonically.
/// Counts grow steeply: n=6 means 21480 digraphs (20848 connected).
std::vector<std::vector<Digraph>> generate_digraphs(int n_max, bool connected_only);

/// Canonical forms of all connected C-homogeneous digraphs with <= n_max
/// vertices: exhaustive generation, vertex-transitivity and regularity
/// prefilters, then the full checker. n_max above the ceiling throws
/// Error(too_large); the ceiling guards the 3^(n choose 2)-flavored growth
/// (n=7 is possible but slow; see the census CLI flag).
std::vector<Digraph> enumerate_c_homogeneous(int n_max, int ceiling = 6);

/// Catalog recognition. Attempts in order: Trivial; twin-fiber collapse to a
/// directed cycle (Cycle) or to h() (HComposite); tripartite matching
/// structure (Y); triangle-pair reconstruction of a quotient spec
/// (T2Quotient); otherwise Unknown. Throws Error(not_connected).
CatalogEntry recognize(const Digraph& d);

struct CensusReport {
  int n_max = 0;
  /// Canonical survivor plus its recognized entry.
  std::vector<std::pair<Digraph, CatalogEntry>> found;
  /// C-homogeneous but unrecognized: must be empty for an acceptance run.
  std::vector<Digraph> unexplained;
  std::map<std::string, int> counts;
  /// Catalog members with <= n_max vertices missing from the survivors
  /// (converse check); must be empty.
  std::vector<CatalogEntry> missing;
  /// Wall-clock seconds; informational only, never serialized into reports.
  double elapsed_seconds = 0.0;
};

CensusReport census(int n_max, int ceiling = 6);

}  // namespace chdig

#endif
