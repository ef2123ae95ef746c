#include "chdig/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace chdig {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::loop_edge: return "LoopEdge";
    case Errc::symmetric_pair: return "SymmetricPair";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::bad_partition: return "BadPartition";
    case Errc::not_tripartite_oriented: return "NotTripartiteOriented";
    case Errc::quotient_loop: return "QuotientLoop";
    case Errc::quotient_symmetric: return "QuotientSymmetric";
    case Errc::too_short: return "TooShort";
    case Errc::too_small: return "TooSmall";
    case Errc::too_large: return "TooLarge";
    case Errc::no_edges: return "NoEdges";
    case Errc::unknown_edge: return "UnknownEdge";
    case Errc::not_partial_iso: return "NotPartialIso";
    case Errc::not_bipartite: return "NotBipartite";
    case Errc::not_connected: return "NotConnected";
    case Errc::fixed_point: return "FixedPoint";
    case Errc::wrong_order: return "WrongOrder";
    case Errc::not_transitive: return "NotTransitive";
    case Errc::search_exhausted: return "SearchExhausted";
    case Errc::order_overflow: return "OrderOverflow";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

Digraph::Digraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw Error(Errc::vertex_out_of_range, "negative vertex count");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
  out_.assign(n, {});
  in_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(Errc::vertex_out_of_range,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") with n=" + std::to_string(n));
    if (u == v)
      throw Error(Errc::loop_edge, "loop at vertex " + std::to_string(u));
  }
  for (const auto& [u, v] : edges) {
    if (matrix_[static_cast<std::size_t>(v) * n + u] == 1)
      throw Error(Errc::symmetric_pair,
                  "both (" + std::to_string(v) + "," + std::to_string(u) +
                      ") and its reverse supplied");
    matrix_[static_cast<std::size_t>(u) * n + v] = 1;
    matrix_[static_cast<std::size_t>(v) * n + u] = 2;
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& a : out_) std::sort(a.begin(), a.end());
  for (auto& a : in_) std::sort(a.begin(), a.end());
  edges_ = std::move(edges);
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw Error(Errc::vertex_out_of_range, "vertex " + std::to_string(v) +
                                               " with n=" + std::to_string(n_));
}

const std::vector<int>& Digraph::out_neighbors(int v) const {
  check_vertex(v);
  return out_[v];
}

const std::vector<int>& Digraph::in_neighbors(int v) const {
  check_vertex(v);
  return in_[v];
}

bool Digraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return code(u, v) == 1;
}

VertexPartition::VertexPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n) {
  block_of_.assign(n, -1);
  for (auto& b : blocks) {
    if (b.empty()) throw Error(Errc::bad_partition, "empty block");
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  std::sort(blocks.begin(), blocks.end());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int v : blocks[i]) {
      if (v < 0 || v >= n)
        throw Error(Errc::vertex_out_of_range,
                    "partition member " + std::to_string(v));
      if (block_of_[v] != -1)
        throw Error(Errc::bad_partition,
                    "vertex " + std::to_string(v) + " in two blocks");
      block_of_[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v)
    if (block_of_[v] == -1)
      throw Error(Errc::bad_partition,
                  "vertex " + std::to_string(v) + " not covered");
  blocks_ = std::move(blocks);
}

Digraph make_digraph(int n, std::vector<Edge> edges) {
  return Digraph(n, std::move(edges));
}

Neighborhood neighbors(const Digraph& d, int x) {
  d.check_vertex(x);
  return Neighborhood{d.out_neighbors(x), d.in_neighbors(x), d.out_degree(x),
                      d.in_degree(x)};
}

Digraph induced(const Digraph& d, std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<int> index(d.vertex_count(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    d.check_vertex(s[i]);
    index[s[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : d.edges())
    if (index[u] != -1 && index[v] != -1) edges.push_back({index[u], index[v]});
  return Digraph(static_cast<int>(s.size()), std::move(edges));
}

Digraph lex_product(const Digraph& d, const Digraph& e) {
  const int nd = d.vertex_count(), ne = e.vertex_count();
  std::vector<Edge> edges;
  for (const auto& [x, xp] : d.edges())
    for (int y = 0; y < ne; ++y)
      for (int yp = 0; yp < ne; ++yp) edges.push_back({x * ne + y, xp * ne + yp});
  for (int x = 0; x < nd; ++x)
    for (const auto& [y, yp] : e.edges()) edges.push_back({x * ne + y, x * ne + yp});
  return Digraph(nd * ne, std::move(edges));
}

Digraph tripartite_complement(const Digraph& d, const VertexPartition& parts) {
  if (parts.vertex_count() != d.vertex_count())
    throw Error(Errc::bad_partition, "partition size mismatch");
  if (parts.block_count() != 3)
    throw Error(Errc::not_tripartite_oriented,
                "need exactly 3 blocks, got " + std::to_string(parts.block_count()));
  for (const auto& [u, v] : d.edges()) {
    int bu = parts.block_of(u), bv = parts.block_of(v);
    if (bv != (bu + 1) % 3)
      throw Error(Errc::not_tripartite_oriented,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") does not follow the cyclic block pattern");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < 3; ++i)
    for (int u : parts.blocks()[i])
      for (int v : parts.blocks()[(i + 1) % 3])
        if (!d.has_edge(u, v)) edges.push_back({u, v});
  return Digraph(d.vertex_count(), std::move(edges));
}

Digraph quotient_by_partition(const Digraph& d, const VertexPartition& p) {
  if (p.vertex_count() != d.vertex_count())
    throw Error(Errc::bad_partition, "partition size mismatch");
  const int k = p.block_count();
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(k) * k, 0);
  std::vector<Edge> edges;
  for (const auto& [u, v] : d.edges()) {
    int bu = p.block_of(u), bv = p.block_of(v);
    if (bu == bv)
      throw Error(Errc::quotient_loop,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") inside one block");
    if (seen[static_cast<std::size_t>(bv) * k + bu])
      throw Error(Errc::quotient_symmetric,
                  "blocks " + std::to_string(bu) + " and " + std::to_string(bv) +
                      " carry edges both ways");
    if (!seen[static_cast<std::size_t>(bu) * k + bv]) {
      seen[static_cast<std::size_t>(bu) * k + bv] = 1;
      edges.push_back({bu, bv});
    }
  }
  return Digraph(k, std::move(edges));
}

namespace {
int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}
}  // namespace

VertexPartition connectivity(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [u, v] : d.edges()) {
    int ru = uf_find(parent, u), rv = uf_find(parent, v);
    if (ru != rv) parent[ru] = rv;
  }
  std::vector<std::vector<int>> comps(n);
  for (int v = 0; v < n; ++v) comps[uf_find(parent, v)].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& c : comps)
    if (!c.empty()) blocks.push_back(std::move(c));
  return VertexPartition(n, std::move(blocks));
}

bool is_connected(const Digraph& d) {
  return connectivity(d).block_count() <= 1;
}

bool has_directed_triangle(const Digraph& d) {
  for (const auto& [u, v] : d.edges())
    for (int w : d.out_neighbors(v))
      if (d.has_edge(w, u)) return true;
  return false;
}

int triangles_on_edge(const Digraph& d, int u, int v) {
  if (!d.has_edge(u, v))
    throw Error(Errc::unknown_edge,
                "(" + std::to_string(u) + "," + std::to_string(v) + ")");
  int count = 0;
  for (int w : d.out_neighbors(v))
    if (d.has_edge(w, u)) ++count;
  return count;
}

int triangles_on_vertex(const Digraph& d, int v) {
  d.check_vertex(v);
  int count = 0;
  for (int x : d.out_neighbors(v))
    count += triangles_on_edge(d, v, x);
  return count;
}

Digraph relabel(const Digraph& d, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  edges.reserve(d.edges().size());
  for (const auto& [u, v] : d.edges()) edges.push_back({perm[u], perm[v]});
  return Digraph(d.vertex_count(), std::move(edges));
}

}  // namespace chdig
