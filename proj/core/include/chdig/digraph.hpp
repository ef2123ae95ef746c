#ifndef CHDIG_DIGRAPH_HPP
#define CHDIG_DIGRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "chdig/errors.hpp"

namespace chdig {

using Edge = std::pair<int, int>;

/// A finite digraph: vertices 0..n-1 with an irreflexive, antisymmetric edge
/// relation. No loops, no 2-cycles. Immutable after construction, so values
/// can be shared freely across threads.
class Digraph {
 public:
  Digraph() = default;

  /// Validates and normalizes: duplicate pairs are collapsed, edges sorted.
  /// Throws Error(loop_edge / symmetric_pair / vertex_out_of_range).
  Digraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<int>& out_neighbors(int v) const;
  const std::vector<int>& in_neighbors(int v) const;
  int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
  int in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }

  bool has_edge(int u, int v) const;
  bool adjacent(int u, int v) const { return has_edge(u, v) || has_edge(v, u); }

  /// Direction code of an ordered vertex pair: 0 = non-adjacent,
  /// 1 = u->v, 2 = v->u. code(u,u) == 0.
  std::uint8_t code(int u, int v) const { return matrix_[static_cast<std::size_t>(u) * n_ + v]; }

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

  void check_vertex(int v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<std::uint8_t> matrix_;
};

/// A partition of the vertex set 0..n-1 into disjoint non-empty blocks.
class VertexPartition {
 public:
  /// Validates disjointness, coverage of 0..n-1, no empty block.
  /// Blocks are sorted internally; block order follows smallest member.
  VertexPartition(int n, std::vector<std::vector<int>> blocks);

  int vertex_count() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_of(int v) const { return block_of_[v]; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

struct Neighborhood {
  std::vector<int> out;
  std::vector<int> in;
  int out_degree;
  int in_degree;
};

Digraph make_digraph(int n, std::vector<Edge> edges);
Neighborhood neighbors(const Digraph& d, int x);

/// Induced subdigraph on S, relabeled 0..|S|-1 by ascending original index.
Digraph induced(const Digraph& d, std::vector<int> s);

/// Lexicographic product D[E]: vertex (x,y) becomes x*|E|+y (row-major).
Digraph lex_product(const Digraph& d, const Digraph& e);

/// Complement inside the arc set V1xV2 u V2xV3 u V3xV1. The input partition
/// must have exactly three blocks, each independent in d, and every edge of d
/// must run from block i to block i+1 (mod 3).
Digraph tripartite_complement(const Digraph& d, const VertexPartition& parts);

/// One vertex per block; edge X->Y iff some member edge runs X to Y.
/// Rejects partitions that would produce a loop or a symmetric pair.
Digraph quotient_by_partition(const Digraph& d, const VertexPartition& p);

/// Weak components of the underlying undirected graph, as a partition.
VertexPartition connectivity(const Digraph& d);

bool is_connected(const Digraph& d);

/// True iff the three vertices of some edge pair close a directed triangle.
bool has_directed_triangle(const Digraph& d);

/// Number of directed triangles containing the edge (u,v).
int triangles_on_edge(const Digraph& d, int u, int v);

/// Number of directed triangles through vertex v.
int triangles_on_vertex(const Digraph& d, int v);

/// Relabel by a permutation: vertex v becomes perm[v].
Digraph relabel(const Digraph& d, const std::vector<int>& perm);

}  // namespace chdig

#endif
