#include "chdig/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "chdig/homogeneity.hpp"
#include "chdig/quotients.hpp"
#include "chdig/symmetry.hpp"

namespace chdig {
namespace families {

Digraph empty(int n) { return Digraph(n, {}); }

Digraph directed_cycle(int m) {
  if (m < 3)
    throw Error(Errc::too_short, "directed cycles need length >= 3, got " +
                                     std::to_string(m));
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) edges.push_back({i, (i + 1) % m});
  return Digraph(m, std::move(edges));
}

Digraph cp(int k) {
  if (k < 2) throw Error(Errc::too_small, "cp needs k >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) edges.push_back({i, k + j});
  return Digraph(2 * k, std::move(edges));
}

Digraph y(int k) {
  if (k < 3) throw Error(Errc::too_small, "y needs k >= 3");
  std::vector<Edge> edges;
  for (int part = 0; part < 3; ++part)
    for (int j = 0; j < k; ++j)
      for (int jp = 0; jp < k; ++jp)
        if (j != jp) edges.push_back({part * k + j, ((part + 1) % 3) * k + jp});
  Digraph d(3 * k, std::move(edges));

  // The tripartite complement must be k disjoint directed triangles.
  std::vector<std::vector<int>> parts(3);
  for (int part = 0; part < 3; ++part)
    for (int j = 0; j < k; ++j) parts[part].push_back(part * k + j);
  Digraph comp = tripartite_complement(d, VertexPartition(3 * k, parts));
  if (comp.edge_count() != 3 * k)
    throw std::logic_error("y(k): tripartite complement has wrong size");
  for (int v = 0; v < comp.vertex_count(); ++v)
    if (comp.out_degree(v) != 1 || comp.in_degree(v) != 1 ||
        triangles_on_vertex(comp, v) != 1)
      throw std::logic_error("y(k): tripartite complement is not a triangle union");
  return d;
}

namespace {

T2Word word_mul(T2Word w, int gen) {
  if (!w.empty() && w.back().first == gen) {
    w.back().second = (w.back().second + 1) % 3;
    if (w.back().second == 0) w.pop_back();
  } else {
    w.push_back({gen, 1});
  }
  return w;
}

}  // namespace

T2Ball t2_ball(int r) {
  if (r < 1) throw Error(Errc::too_small, "ball radius must be >= 1");
  std::map<T2Word, int> index;
  std::vector<T2Word> words;
  std::vector<int> dist;
  auto intern = [&](const T2Word& w) {
    auto it = index.find(w);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(words.size());
    index.emplace(w, id);
    words.push_back(w);
    dist.push_back(-1);
    return id;
  };
  int root = intern({});
  dist[root] = 0;
  std::vector<int> frontier = {root};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier) {
      if (dist[v] == r) continue;
      const T2Word w = words[v];
      // Undirected neighbors: right factors x, x^2, y, y^2.
      for (int gen = 0; gen < 2; ++gen) {
        for (const T2Word& nb :
             {word_mul(w, gen), word_mul(word_mul(w, gen), gen)}) {
          int u = intern(nb);
          if (dist[u] == -1) {
            dist[u] = dist[v] + 1;
            next.push_back(u);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < words.size(); ++v)
    for (int gen = 0; gen < 2; ++gen) {
      auto it = index.find(word_mul(words[v], gen));
      if (it != index.end()) edges.push_back({static_cast<int>(v), it->second});
    }
  T2Ball ball;
  ball.digraph = Digraph(static_cast<int>(words.size()), std::move(edges));
  ball.words = std::move(words);
  for (std::size_t v = 0; v < ball.words.size(); ++v)
    if (dist[v] <= r - 1) ball.interior.push_back(static_cast<int>(v));
  ball.distance = std::move(dist);
  return ball;
}

Digraph h() {
  // Vertex 0 with out-triangle {1,2,3} and in-triangle {4,5,6}; vertex 7 is
  // 0's unique non-neighbor. Non-neighbor pairs: (0,7), (1,5), (2,6), (3,4).
  static const std::vector<Edge> kEdges = {
      {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {1, 7}, {2, 3}, {2, 5},
      {2, 7}, {3, 1}, {3, 6}, {3, 7}, {4, 0}, {4, 2}, {4, 5}, {5, 0},
      {5, 3}, {5, 6}, {6, 0}, {6, 1}, {6, 4}, {7, 4}, {7, 5}, {7, 6}};
  return Digraph(8, kEdges);
}

namespace {

// Backtracking enumerator for the h() regeneration search at a fixed vertex
// count. The first vertex's neighborhoods are pinned to a canonical shape
// (every isomorphism class admits such a labeling): out-triangle 1->2->3->1,
// in-triangle 4->5->6->4, all other vertices non-adjacent to 0.
struct HSearch {
  int n;
  std::vector<std::int8_t> code;  // 0 none, 1 u->v, 2 v->u, -1 undecided
  std::vector<int> out_deg, in_deg, undecided;
  std::vector<Edge> pair_order;
  std::vector<std::string>& found;  // canonical forms
  std::vector<Digraph>& results;

  HSearch(int n, std::vector<std::string>& found, std::vector<Digraph>& results)
      : n(n), found(found), results(results) {
    code.assign(static_cast<std::size_t>(n) * n, -1);
    out_deg.assign(n, 0);
    in_deg.assign(n, 0);
    undecided.assign(n, 0);
    for (int v = 0; v < n; ++v) code[v * n + v] = 0;
  }

  std::int8_t at(int u, int v) const { return code[u * n + v]; }

  void set(int u, int v, std::int8_t c) {
    code[u * n + v] = c;
    code[v * n + u] = c == 0 ? 0 : (c == 1 ? 2 : 1);
    if (c == 1) {
      ++out_deg[u];
      ++in_deg[v];
    } else if (c == 2) {
      ++out_deg[v];
      ++in_deg[u];
    }
  }

  void unset(int u, int v) {
    std::int8_t c = code[u * n + v];
    if (c == 1) {
      --out_deg[u];
      --in_deg[v];
    } else if (c == 2) {
      --out_deg[v];
      --in_deg[u];
    }
    code[u * n + v] = -1;
    code[v * n + u] = -1;
  }

  bool degrees_feasible(int v) const {
    if (out_deg[v] > 3 || in_deg[v] > 3) return false;
    int free_pairs = undecided[v];
    return out_deg[v] + free_pairs >= 3 && in_deg[v] + free_pairs >= 3 &&
           (3 - out_deg[v]) + (3 - in_deg[v]) <= free_pairs;
  }

  // Known members of N+(x) must stay embeddable into a directed triangle:
  // within the set each vertex has at most one successor and one predecessor,
  // and a complete set of 3 must carry exactly 3 internal edges.
  bool neighborhood_ok(int x, bool outward) const {
    int members[3], count = 0;
    for (int v = 0; v < n && count <= 3; ++v) {
      if (v == x) continue;
      std::int8_t c = at(x, v);
      if ((outward && c == 1) || (!outward && c == 2)) {
        if (count == 3) return false;
        members[count++] = v;
      }
    }
    if (count > 3) return false;
    int internal_edges = 0, decided_pairs = 0;
    for (int i = 0; i < count; ++i) {
      int within_out = 0, within_in = 0;
      for (int j = 0; j < count; ++j) {
        if (i == j) continue;
        std::int8_t c = at(members[i], members[j]);
        if (c == -1) continue;
        if (i < j) ++decided_pairs;
        if (c == 1) {
          ++within_out;
          ++internal_edges;
        } else if (c == 2) {
          ++within_in;
        }
      }
      if (within_out > 1 || within_in > 1) return false;
    }
    if (count == 3 && decided_pairs == 3 && internal_edges != 3) return false;
    return true;
  }

  bool consistent(int u, int v) {
    if (!degrees_feasible(u) || !degrees_feasible(v)) return false;
    // Only neighborhoods that contain both endpoints can have changed,
    // plus the endpoints' own rows.
    for (int x = 0; x < n; ++x) {
      bool u_out = at(x, u) == 1, v_out = at(x, v) == 1;
      bool u_in = at(x, u) == 2, v_in = at(x, v) == 2;
      if ((u_out && v_out) && !neighborhood_ok(x, true)) return false;
      if ((u_in && v_in) && !neighborhood_ok(x, false)) return false;
    }
    return neighborhood_ok(u, true) && neighborhood_ok(u, false) &&
           neighborhood_ok(v, true) && neighborhood_ok(v, false);
  }

  void record() {
    for (int v = 0; v < n; ++v)
      if (out_deg[v] != 3 || in_deg[v] != 3) return;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (at(u, v) == 1) edges.push_back({u, v});
    Digraph d(n, std::move(edges));
    if (!is_connected(d)) return;
    for (int v = 0; v < n; ++v) {
      for (const Digraph& nb :
           {induced(d, d.out_neighbors(v)), induced(d, d.in_neighbors(v))}) {
        if (nb.vertex_count() != 3 || nb.edge_count() != 3) return;
        for (int x = 0; x < 3; ++x)
          if (nb.out_degree(x) != 1) return;
      }
    }
    std::string form = canonical_form(d);
    if (std::find(found.begin(), found.end(), form) == found.end()) {
      found.push_back(form);
      results.push_back(canonicalize(d));
    }
  }

  void rec(std::size_t idx) {
    if (idx == pair_order.size()) {
      record();
      return;
    }
    auto [u, v] = pair_order[idx];
    --undecided[u];
    --undecided[v];
    for (std::int8_t c : {std::int8_t{0}, std::int8_t{1}, std::int8_t{2}}) {
      set(u, v, c);
      if (consistent(u, v)) rec(idx + 1);
      unset(u, v);
    }
    ++undecided[u];
    ++undecided[v];
  }

  void run() {
    // Canonical prefix around vertex 0.
    for (int w = 1; w < n; ++w) set(0, w, w <= 3 ? 1 : (w <= 6 ? 2 : 0));
    set(1, 2, 1);
    set(2, 3, 1);
    set(1, 3, 2);  // 3 -> 1
    set(4, 5, 1);
    set(5, 6, 1);
    set(4, 6, 2);  // 6 -> 4
    for (int u = 1; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (at(u, v) == -1) {
          pair_order.push_back({u, v});
          ++undecided[u];
          ++undecided[v];
        }
    rec(0);
  }
};

}  // namespace

std::vector<Digraph> search_h(int max_n) {
  std::vector<std::string> found;
  std::vector<Digraph> candidates;
  // Disjoint 3-element out- and in-neighborhoods need at least 7 vertices.
  for (int n = 7; n <= max_n; ++n) {
    HSearch s(n, found, candidates);
    s.run();
  }
  std::vector<Digraph> homogeneous;
  for (const Digraph& d : candidates)
    if (is_homogeneous(d).holds) homogeneous.push_back(d);
  if (homogeneous.empty())
    throw Error(Errc::search_exhausted,
                "no homogeneous triangle-neighborhood digraph with <= " +
                    std::to_string(max_n) + " vertices");
  return homogeneous;
}

}  // namespace families

std::string to_string(const CatalogEntry& e) {
  struct Visitor {
    std::string operator()(const catalog::Trivial&) const { return "Trivial"; }
    std::string operator()(const catalog::Cycle& c) const {
      return "Cycle(" + std::to_string(c.m) + "," + std::to_string(c.n) + ")";
    }
    std::string operator()(const catalog::HComposite& h) const {
      return "HComposite(" + std::to_string(h.n) + ")";
    }
    std::string operator()(const catalog::Y& y) const {
      return "Y(" + std::to_string(y.k) + ")";
    }
    std::string operator()(const catalog::T2Quotient& q) const {
      std::string s = "T2Quotient(k=" + std::to_string(q.spec.k) + ",a=[";
      for (std::size_t i = 0; i < q.spec.a.size(); ++i)
        s += (i ? "," : "") + std::to_string(q.spec.a[i]);
      s += "],b=[";
      for (std::size_t i = 0; i < q.spec.b.size(); ++i)
        s += (i ? "," : "") + std::to_string(q.spec.b[i]);
      return s + "])";
    }
    std::string operator()(const catalog::Unknown&) const { return "Unknown"; }
  };
  return std::visit(Visitor{}, e);
}

Digraph build_catalog(const CatalogEntry& e) {
  struct Visitor {
    Digraph operator()(const catalog::Trivial&) const { return families::empty(1); }
    Digraph operator()(const catalog::Cycle& c) const {
      if (c.n < 1) throw Error(Errc::too_small, "Cycle needs n >= 1");
      return lex_product(families::directed_cycle(c.m), families::empty(c.n));
    }
    Digraph operator()(const catalog::HComposite& h) const {
      if (h.n < 1) throw Error(Errc::too_small, "HComposite needs n >= 1");
      return lex_product(families::h(), families::empty(h.n));
    }
    Digraph operator()(const catalog::Y& y) const { return families::y(y.k); }
    Digraph operator()(const catalog::T2Quotient& q) const {
      return build_quotient(q.spec);
    }
    Digraph operator()(const catalog::Unknown&) const {
      throw Error(Errc::parse_error, "cannot build an Unknown catalog entry");
    }
  };
  return std::visit(Visitor{}, e);
}

}  // namespace chdig
