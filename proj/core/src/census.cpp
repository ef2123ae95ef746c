#include "chdig/census.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>

#include "chdig/homogeneity.hpp"
#include "chdig/quotients.hpp"
#include "chdig/reachability.hpp"
#include "chdig/symmetry.hpp"

namespace chdig {

std::vector<std::vector<Digraph>> generate_digraphs(int n_max, bool connected_only) {
  if (n_max < 1) throw Error(Errc::too_small, "n_max must be >= 1");
  std::vector<std::vector<Digraph>> levels(n_max + 1);
  levels[1].push_back(families::empty(1));
  for (int n = 2; n <= n_max; ++n) {
    std::unordered_set<std::string> seen;
    for (const Digraph& parent : levels[n - 1]) {
      std::vector<Edge> base = parent.edges();
      long long patterns = 1;
      for (int i = 0; i < n - 1; ++i) patterns *= 3;
      for (long long pat = 0; pat < patterns; ++pat) {
        if (connected_only && pat == 0) continue;
        std::vector<Edge> edges = base;
        long long rest = pat;
        for (int v = 0; v < n - 1; ++v) {
          int c = static_cast<int>(rest % 3);
          rest /= 3;
          if (c == 1) edges.push_back({v, n - 1});
          if (c == 2) edges.push_back({n - 1, v});
        }
        Digraph child(n, std::move(edges));
        Digraph canon = canonicalize(child);
        if (seen.insert(canonical_form(canon)).second)
          levels[n].push_back(std::move(canon));
      }
    }
    std::sort(levels[n].begin(), levels[n].end(),
              [](const Digraph& a, const Digraph& b) { return a.edges() < b.edges(); });
  }
  return levels;
}

std::vector<Digraph> enumerate_c_homogeneous(int n_max, int ceiling) {
  if (n_max < 1) throw Error(Errc::too_small, "n_max must be >= 1");
  if (n_max > ceiling)
    throw Error(Errc::too_large, "n_max " + std::to_string(n_max) +
                                     " above ceiling " + std::to_string(ceiling));
  auto levels = generate_digraphs(n_max, true);
  std::vector<Digraph> survivors;
  for (int n = 1; n <= n_max; ++n) {
    for (const Digraph& d : levels[n]) {
      bool regular = true;
      for (int v = 1; v < n && regular; ++v)
        if (d.out_degree(v) != d.out_degree(0) || d.in_degree(v) != d.in_degree(0))
          regular = false;
      if (!regular) continue;
      if (!vertex_transitive(d)) continue;
      if (!is_c_homogeneous(d).holds) continue;
      survivors.push_back(d);
    }
  }
  return survivors;
}

namespace {

// Twin fibers: identical out-neighborhood, identical in-neighborhood (which
// forces non-adjacency). Returns blocks keyed deterministically.
std::vector<std::vector<int>> twin_fibers(const Digraph& d) {
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>> groups;
  for (int v = 0; v < d.vertex_count(); ++v)
    groups[{d.out_neighbors(v), d.in_neighbors(v)}].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& [key, block] : groups) blocks.push_back(std::move(block));
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

bool is_directed_cycle(const Digraph& d) {
  if (d.vertex_count() < 3 || !is_connected(d)) return false;
  for (int v = 0; v < d.vertex_count(); ++v)
    if (d.out_degree(v) != 1 || d.in_degree(v) != 1) return false;
  return true;
}

const std::string& h_form() {
  static const std::string form = canonical_form(families::h());
  return form;
}

std::optional<CatalogEntry> recognize_composite(const Digraph& d) {
  auto blocks = twin_fibers(d);
  const std::size_t s = blocks[0].size();
  for (const auto& b : blocks)
    if (b.size() != s) return std::nullopt;
  Digraph q = quotient_by_partition(d, VertexPartition(d.vertex_count(), blocks));
  // Twin fibers always lift quotient edges to full bipartite blocks, so
  // d == q[empty(s)] holds whenever the quotient matches a base family.
  if (is_directed_cycle(q))
    return CatalogEntry(catalog::Cycle{q.vertex_count(), static_cast<int>(s)});
  if (q.vertex_count() == 8 && canonical_form(q) == h_form())
    return CatalogEntry(catalog::HComposite{static_cast<int>(s)});
  return std::nullopt;
}

std::optional<CatalogEntry> recognize_y(const Digraph& d) {
  const int n = d.vertex_count();
  if (n % 3 != 0 || n < 9 || d.edge_count() == 0) return std::nullopt;
  const int k = n / 3;
  ReachabilityPartition part = reachability_classes(d);
  if (part.classes.size() != 3) return std::nullopt;

  auto side_sets = [&](const std::vector<int>& cls) {
    std::set<int> tails, heads;
    for (int i : cls) {
      tails.insert(d.edges()[i].first);
      heads.insert(d.edges()[i].second);
    }
    return std::make_pair(tails, heads);
  };
  auto [v1, v2] = side_sets(part.classes[0]);
  if (static_cast<int>(v1.size()) != k || static_cast<int>(v2.size()) != k)
    return std::nullopt;
  std::set<int> v3;
  for (int v = 0; v < n; ++v)
    if (!v1.count(v) && !v2.count(v)) v3.insert(v);
  if (static_cast<int>(v3.size()) != k) return std::nullopt;

  auto part_of = [&](int v) { return v1.count(v) ? 0 : (v2.count(v) ? 1 : 2); };
  for (const auto& [u, v] : d.edges())
    if (part_of(v) != (part_of(u) + 1) % 3) return std::nullopt;

  // The removed matching: each vertex has exactly one non-neighbor in the
  // next part.
  std::vector<int> match(n, -1);
  const std::vector<const std::set<int>*> parts = {&v1, &v2, &v3};
  for (int p = 0; p < 3; ++p) {
    for (int u : *parts[p]) {
      int missing = -1;
      for (int v : *parts[(p + 1) % 3]) {
        if (!d.has_edge(u, v)) {
          if (missing != -1) return std::nullopt;
          missing = v;
        }
      }
      if (missing == -1) return std::nullopt;
      match[u] = missing;
    }
  }
  for (int u : v1)
    if (match[match[match[u]]] != u) return std::nullopt;

  std::vector<int> relab(n, -1);
  int j = 0;
  for (int u : v1) {
    relab[u] = j;
    relab[match[u]] = k + j;
    relab[match[match[u]]] = 2 * k + j;
    ++j;
  }
  if (relabel(d, relab) == families::y(k)) return CatalogEntry(catalog::Y{k});
  return std::nullopt;
}

std::optional<CatalogEntry> recognize_t2_quotient(const Digraph& d) {
  const int n = d.vertex_count();
  for (int v = 0; v < n; ++v)
    if (d.out_degree(v) != 2 || d.in_degree(v) != 2) return std::nullopt;

  // Directed triangles (recorded once, least vertex first in cyclic order),
  // and the two passing through each vertex.
  std::vector<std::array<int, 3>> triangles;
  for (const auto& [u, v] : d.edges())
    for (int w : d.out_neighbors(v))
      if (u < v && u < w && d.has_edge(w, u)) triangles.push_back({u, v, w});
  std::vector<std::vector<int>> at_vertex(n);
  for (std::size_t t = 0; t < triangles.size(); ++t)
    for (int v : triangles[t]) at_vertex[v].push_back(static_cast<int>(t));
  for (int v = 0; v < n; ++v)
    if (at_vertex[v].size() != 2) return std::nullopt;

  // Proper 2-coloring of the triangle-sharing graph assigns each vertex one
  // triangle per generator.
  std::vector<int> color(triangles.size(), -1);
  for (std::size_t start = 0; start < triangles.size(); ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::vector<int> stack = {static_cast<int>(start)};
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int v : triangles[t]) {
        for (int other : at_vertex[v]) {
          if (other == t) continue;
          if (color[other] == -1) {
            color[other] = 1 - color[t];
            stack.push_back(other);
          } else if (color[other] == color[t]) {
            return std::nullopt;
          }
        }
      }
    }
  }

  // p's unique out-neighbor inside a directed triangle through p.
  auto successor_on = [&](int t, int p) {
    for (int x : triangles[t])
      if (x != p && d.has_edge(p, x)) return x;
    return -1;
  };

  QuotientSpec spec;
  spec.k = n;
  spec.a.assign(n, -1);
  spec.b.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    for (int t : at_vertex[v]) {
      int succ = successor_on(t, v);
      if (succ == -1) return std::nullopt;
      (color[t] == 0 ? spec.a : spec.b)[v] = succ;
    }
  }
  try {
    validate_quotient_spec(spec);
    if (build_quotient(spec) == d) return CatalogEntry(catalog::T2Quotient{spec});
  } catch (const Error&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

CatalogEntry recognize(const Digraph& d) {
  if (!is_connected(d)) throw Error(Errc::not_connected, "recognize needs a connected digraph");
  if (d.vertex_count() == 1) return CatalogEntry(catalog::Trivial{});
  if (auto composite = recognize_composite(d)) return *composite;
  if (auto yk = recognize_y(d)) return *yk;
  if (auto t2 = recognize_t2_quotient(d)) return *t2;
  return CatalogEntry(catalog::Unknown{});
}

namespace {

std::string family_tag(const CatalogEntry& e) {
  struct Visitor {
    std::string operator()(const catalog::Trivial&) const { return "Trivial"; }
    std::string operator()(const catalog::Cycle&) const { return "Cycle"; }
    std::string operator()(const catalog::HComposite&) const { return "HComposite"; }
    std::string operator()(const catalog::Y&) const { return "Y"; }
    std::string operator()(const catalog::T2Quotient&) const { return "T2Quotient"; }
    std::string operator()(const catalog::Unknown&) const { return "Unknown"; }
  };
  return std::visit(Visitor{}, e);
}

}  // namespace

CensusReport census(int n_max, int ceiling) {
  auto start = std::chrono::steady_clock::now();
  CensusReport report;
  report.n_max = n_max;
  std::set<std::string> survivor_forms;
  for (const Digraph& d : enumerate_c_homogeneous(n_max, ceiling)) {
    // Soundness: survivors re-pass the checker, and the oracle at small n.
    if (!is_c_homogeneous(d).holds)
      throw std::logic_error("census survivor failed re-verification");
    if (d.vertex_count() <= 5 && !brute_force_oracle(d, true).holds)
      throw std::logic_error("census survivor contradicts the oracle");
    survivor_forms.insert(canonical_form(d));
    CatalogEntry entry = recognize(d);
    ++report.counts[family_tag(entry)];
    if (std::holds_alternative<catalog::Unknown>(entry))
      report.unexplained.push_back(d);
    else
      report.found.push_back({d, entry});
  }

  // Converse: every catalog member small enough must be a survivor.
  std::vector<CatalogEntry> expected;
  expected.push_back(catalog::Trivial{});
  for (int m = 3; m <= n_max; ++m)
    for (int nn = 1; m * nn <= n_max; ++nn)
      expected.push_back(catalog::Cycle{m, nn});
  for (int k = 3; 3 * k <= n_max; ++k) expected.push_back(catalog::Y{k});
  for (int nn = 1; 8 * nn <= n_max; ++nn)
    expected.push_back(catalog::HComposite{nn});
  for (const CatalogEntry& e : expected)
    if (!survivor_forms.count(canonical_form(build_catalog(e))))
      report.missing.push_back(e);

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace chdig
