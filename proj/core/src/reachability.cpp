#include "chdig/reachability.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "chdig/symmetry.hpp"

namespace chdig {

namespace {

int uf_find(std::vector<int>& p, int x) {
  while (p[x] != x) {
    p[x] = p[p[x]];
    x = p[x];
  }
  return x;
}

void uf_union(std::vector<int>& p, int a, int b) {
  a = uf_find(p, a);
  b = uf_find(p, b);
  if (a != b) p[a] = b;
}

}  // namespace

ReachabilityPartition reachability_classes(const Digraph& d) {
  const auto& edges = d.edges();
  if (edges.empty()) throw Error(Errc::no_edges, "reachability needs an edge");
  const int m = static_cast<int>(edges.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);

  // Head groups and tail groups each form cliques of the edge-adjacency
  // structure, so chaining unions inside each group is enough.
  std::vector<int> first_with_tail(d.vertex_count(), -1);
  std::vector<int> first_with_head(d.vertex_count(), -1);
  for (int i = 0; i < m; ++i) {
    int tail = edges[i].first, head = edges[i].second;
    if (first_with_tail[tail] == -1)
      first_with_tail[tail] = i;
    else
      uf_union(parent, first_with_tail[tail], i);
    if (first_with_head[head] == -1)
      first_with_head[head] = i;
    else
      uf_union(parent, first_with_head[head], i);
  }

  std::map<int, std::vector<int>> grouped;
  for (int i = 0; i < m; ++i) grouped[uf_find(parent, i)].push_back(i);
  ReachabilityPartition part;
  std::vector<std::pair<int, std::vector<int>>> ordered;
  for (auto& [root, members] : grouped) {
    std::sort(members.begin(), members.end());
    ordered.push_back({members[0], members});
  }
  std::sort(ordered.begin(), ordered.end());
  for (auto& [key, members] : ordered) part.classes.push_back(std::move(members));
  part.universal = part.classes.size() == 1;
  return part;
}

namespace {

Digraph class_digraph(const Digraph& d, const std::vector<int>& cls) {
  std::set<int> verts;
  for (int i : cls) {
    verts.insert(d.edges()[i].first);
    verts.insert(d.edges()[i].second);
  }
  std::map<int, int> index;
  int next = 0;
  for (int v : verts) index[v] = next++;
  std::vector<Edge> edges;
  for (int i : cls)
    edges.push_back({index[d.edges()[i].first], index[d.edges()[i].second]});
  return Digraph(next, std::move(edges));
}

DeltaShape classify_class(const Digraph& delta, bool covers_all_edges) {
  const int nv = delta.vertex_count();
  bool bipartite_oriented = true;
  for (int v = 0; v < nv; ++v)
    if (delta.out_degree(v) > 0 && delta.in_degree(v) > 0) {
      bipartite_oriented = false;
      break;
    }
  if (!bipartite_oriented)
    return DeltaShape{covers_all_edges ? DeltaKind::universal : DeltaKind::other, 0, 0};

  std::vector<int> tails, heads;
  for (int v = 0; v < nv; ++v)
    (delta.out_degree(v) > 0 ? tails : heads).push_back(v);
  const int m = static_cast<int>(tails.size());
  const int n = static_cast<int>(heads.size());
  const int ec = delta.edge_count();

  if (ec == m * n) return DeltaShape{DeltaKind::complete_bipartite, m, n};

  if (m == n && m >= 2) {
    bool regular = true;
    for (int x : tails)
      if (delta.out_degree(x) != m - 1) regular = false;
    for (int y : heads)
      if (delta.in_degree(y) != m - 1) regular = false;
    if (regular) return DeltaShape{DeltaKind::matching_complement, m, 0};
  }

  auto degree = [&](int v) { return delta.out_degree(v) + delta.in_degree(v); };

  if (ec == nv) {
    bool all_two = true;
    for (int v = 0; v < nv; ++v)
      if (degree(v) != 2) all_two = false;
    if (all_two) return DeltaShape{DeltaKind::even_cycle, nv, 0};
  }

  if (ec == nv - 1) {
    // Connected by construction, so this is a tree; demand biregular
    // interior (non-leaf) degrees per side.
    int k = -1, l = -1;
    bool ok = true;
    for (int x : tails) {
      if (degree(x) == 1) continue;
      if (k == -1)
        k = degree(x);
      else if (k != degree(x))
        ok = false;
    }
    for (int y : heads) {
      if (degree(y) == 1) continue;
      if (l == -1)
        l = degree(y);
      else if (l != degree(y))
        ok = false;
    }
    if (k == -1) k = 1;
    if (l == -1) l = 1;
    if (ok) return DeltaShape{DeltaKind::tree_fragment, k, l};
  }

  return DeltaShape{DeltaKind::other, 0, 0};
}

}  // namespace

Digraph reachability_digraph(const Digraph& d, Edge e) {
  if (!d.has_edge(e.first, e.second))
    throw Error(Errc::unknown_edge, "(" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ")");
  ReachabilityPartition part = reachability_classes(d);
  int index = static_cast<int>(
      std::lower_bound(d.edges().begin(), d.edges().end(), e) - d.edges().begin());
  for (const auto& cls : part.classes)
    if (std::binary_search(cls.begin(), cls.end(), index))
      return class_digraph(d, cls);
  throw std::logic_error("edge missing from every reachability class");
}

DeltaReport delta_shape(const Digraph& d) {
  DeltaReport report;
  report.partition = reachability_classes(d);
  const bool single = report.partition.classes.size() == 1;
  std::size_t largest = 0;
  for (std::size_t i = 0; i < report.partition.classes.size(); ++i) {
    const auto& cls = report.partition.classes[i];
    report.class_shapes.push_back(classify_class(class_digraph(d, cls), single));
    if (cls.size() > report.partition.classes[largest].size()) largest = i;
  }
  report.shape = report.class_shapes[largest];
  return report;
}

bool is_1_arc_transitive(const Digraph& d) {
  const auto& edges = d.edges();
  if (edges.empty()) throw Error(Errc::no_edges, "needs at least one edge");
  const std::vector<int> first = {edges[0].first, edges[0].second};
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (!same_orbit(d, first, {edges[i].first, edges[i].second})) return false;
  return true;
}

bool is_bipartite_oriented(const Digraph& delta) {
  for (int v = 0; v < delta.vertex_count(); ++v)
    if (delta.out_degree(v) > 0 && delta.in_degree(v) > 0) return false;
  return true;
}

std::string to_string(const DeltaShape& s) {
  switch (s.kind) {
    case DeltaKind::universal: return "Universal";
    case DeltaKind::complete_bipartite:
      return "CompleteBipartite(" + std::to_string(s.p1) + "," +
             std::to_string(s.p2) + ")";
    case DeltaKind::matching_complement:
      return "MatchingComplement(" + std::to_string(s.p1) + ")";
    case DeltaKind::even_cycle: return "EvenCycle(" + std::to_string(s.p1) + ")";
    case DeltaKind::tree_fragment:
      return "TreeFragment(" + std::to_string(s.p1) + "," + std::to_string(s.p2) +
             ")";
    case DeltaKind::other: return "Other";
  }
  return "Other";
}

}  // namespace chdig
