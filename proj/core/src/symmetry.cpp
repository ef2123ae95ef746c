#include "chdig/symmetry.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace chdig {

Permutation identity_perm(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Permutation compose(const Permutation& first, const Permutation& then) {
  Permutation r(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) r[i] = then[first[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool is_automorphism(const Digraph& d, const Permutation& p) {
  const int n = d.vertex_count();
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (d.code(u, v) != d.code(p[u], p[v])) return false;
  return true;
}

CodeMatrix CodeMatrix::directed(const Digraph& d) {
  CodeMatrix m;
  m.n = d.vertex_count();
  m.codes.assign(static_cast<std::size_t>(m.n) * m.n, 0);
  for (int u = 0; u < m.n; ++u)
    for (int v = 0; v < m.n; ++v)
      m.codes[static_cast<std::size_t>(u) * m.n + v] = d.code(u, v);
  return m;
}

CodeMatrix CodeMatrix::underlying(const Digraph& d) {
  CodeMatrix m;
  m.n = d.vertex_count();
  m.codes.assign(static_cast<std::size_t>(m.n) * m.n, 0);
  for (int u = 0; u < m.n; ++u)
    for (int v = 0; v < m.n; ++v)
      m.codes[static_cast<std::size_t>(u) * m.n + v] = d.code(u, v) ? 1 : 0;
  return m;
}

namespace {

using Signature = std::vector<int>;

Signature vertex_signature(const CodeMatrix& m, const std::vector<int>& cols, int v,
                           int color_span) {
  Signature sig;
  sig.push_back(cols[v]);
  std::vector<int> entries;
  for (int u = 0; u < m.n; ++u) {
    std::uint8_t c = m.at(v, u);
    if (c != 0) entries.push_back(c * color_span + cols[u]);
  }
  std::sort(entries.begin(), entries.end());
  sig.insert(sig.end(), entries.begin(), entries.end());
  return sig;
}

int color_count(const std::vector<int>& cols) {
  int mx = -1;
  for (int c : cols) mx = std::max(mx, c);
  return mx + 1;
}

/// Refine both colorings in lockstep with a shared signature -> id table.
/// Returns false when the color histograms diverge (no isomorphism).
bool joint_refine(const CodeMatrix& ma, std::vector<int>& cols_a,
                  const CodeMatrix& mb, std::vector<int>& cols_b) {
  while (true) {
    int span = std::max(color_count(cols_a), color_count(cols_b)) + 1;
    std::map<Signature, int> ids;
    std::vector<Signature> sa(ma.n), sb(mb.n);
    for (int v = 0; v < ma.n; ++v) {
      sa[v] = vertex_signature(ma, cols_a, v, span);
      ids.emplace(sa[v], 0);
    }
    for (int v = 0; v < mb.n; ++v) {
      sb[v] = vertex_signature(mb, cols_b, v, span);
      ids.emplace(sb[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> hist_a(next, 0), hist_b(next, 0);
    std::vector<int> new_a(ma.n), new_b(mb.n);
    for (int v = 0; v < ma.n; ++v) {
      new_a[v] = ids[sa[v]];
      ++hist_a[new_a[v]];
    }
    for (int v = 0; v < mb.n; ++v) {
      new_b[v] = ids[sb[v]];
      ++hist_b[new_b[v]];
    }
    if (hist_a != hist_b) return false;
    bool stable = color_count(new_a) == color_count(cols_a);
    cols_a.swap(new_a);
    cols_b.swap(new_b);
    if (stable) return true;
  }
}

/// One-sided refinement with canonically assigned ids (sorted signature order).
void refine_single(const CodeMatrix& m, std::vector<int>& cols) {
  while (true) {
    int span = color_count(cols) + 1;
    std::map<Signature, int> ids;
    std::vector<Signature> sigs(m.n);
    for (int v = 0; v < m.n; ++v) {
      sigs[v] = vertex_signature(m, cols, v, span);
      ids.emplace(sigs[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> fresh(m.n);
    for (int v = 0; v < m.n; ++v) fresh[v] = ids[sigs[v]];
    bool stable = color_count(fresh) == color_count(cols);
    cols.swap(fresh);
    if (stable) return;
  }
}

bool search_iso(const CodeMatrix& ma, std::vector<int> cols_a,
                const CodeMatrix& mb, std::vector<int> cols_b,
                Permutation& out) {
  if (!joint_refine(ma, cols_a, mb, cols_b)) return false;
  const int n = ma.n;

  // Locate the smallest non-singleton cell (by size, then color id).
  int colors = color_count(cols_a);
  std::vector<int> size_of(colors, 0);
  for (int c : cols_a) ++size_of[c];
  int pick = -1;
  for (int c = 0; c < colors; ++c)
    if (size_of[c] >= 2 && (pick == -1 || size_of[c] < size_of[pick])) pick = c;

  if (pick == -1) {
    // Discrete: colors induce the only candidate bijection. Verify it.
    std::vector<int> where_b(colors, -1);
    for (int v = 0; v < n; ++v) where_b[cols_b[v]] = v;
    Permutation map(n);
    for (int v = 0; v < n; ++v) map[v] = where_b[cols_a[v]];
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (ma.at(u, v) != mb.at(map[u], map[v])) return false;
    out = std::move(map);
    return true;
  }

  int u = -1;
  for (int v = 0; v < n; ++v)
    if (cols_a[v] == pick) {
      u = v;
      break;
    }
  for (int w = 0; w < n; ++w) {
    if (cols_b[w] != pick) continue;
    std::vector<int> next_a = cols_a, next_b = cols_b;
    next_a[u] = colors;
    next_b[w] = colors;
    if (search_iso(ma, std::move(next_a), mb, std::move(next_b), out)) return true;
  }
  return false;
}

}  // namespace

std::optional<Permutation> find_color_isomorphism(const CodeMatrix& ma,
                                                  const std::vector<int>& cols_a,
                                                  const CodeMatrix& mb,
                                                  const std::vector<int>& cols_b) {
  if (ma.n != mb.n) return std::nullopt;
  if (ma.n == 0) return Permutation{};
  Permutation out;
  if (search_iso(ma, cols_a, mb, cols_b, out)) return out;
  return std::nullopt;
}

namespace {

void close_orbit(std::vector<int>& orbit, std::vector<char>& in_orbit,
                 const std::vector<Permutation>& gens) {
  std::size_t head = 0;
  while (head < orbit.size()) {
    int x = orbit[head++];
    for (const auto& g : gens) {
      int y = g[x];
      if (!in_orbit[y]) {
        in_orbit[y] = 1;
        orbit.push_back(y);
      }
    }
  }
}

}  // namespace

AutomorphismGroup automorphism_group(const Digraph& d) {
  const int n = d.vertex_count();
  AutomorphismGroup g;
  if (n == 0) {
    g.vertex_orbit = {};
    return g;
  }
  CodeMatrix m = CodeMatrix::directed(d);
  for (int i = 0; i < n; ++i) {
    std::vector<int> base(n, 0);
    for (int j = 0; j < i; ++j) base[j] = j + 1;
    std::vector<char> in_orbit(n, 0);
    in_orbit[i] = 1;
    std::vector<int> orbit = {i};
    std::vector<Permutation> level_gens;
    for (int w = i + 1; w < n; ++w) {
      if (in_orbit[w]) continue;
      std::vector<int> cols_a = base, cols_b = base;
      cols_a[i] = i + 1;
      cols_b[w] = i + 1;
      auto alpha = find_color_isomorphism(m, cols_a, m, cols_b);
      if (alpha) {
        level_gens.push_back(*alpha);
        g.generators.push_back(std::move(*alpha));
        std::size_t before = orbit.size();
        close_orbit(orbit, in_orbit, level_gens);
        (void)before;
      }
    }
    std::uint64_t size = orbit.size();
    if (g.order > std::numeric_limits<std::uint64_t>::max() / size)
      throw Error(Errc::order_overflow, "group order exceeds 64 bits");
    g.order *= size;
  }
  // Vertex orbits under the complete generating set.
  g.vertex_orbit.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (g.vertex_orbit[v] != -1) continue;
    std::vector<char> in_orbit(n, 0);
    in_orbit[v] = 1;
    std::vector<int> orbit = {v};
    close_orbit(orbit, in_orbit, g.generators);
    for (int x : orbit) g.vertex_orbit[x] = g.orbit_count;
    ++g.orbit_count;
  }
  return g;
}

std::optional<Permutation> extend_partial(const Digraph& d, const PartialMap& phi) {
  const int n = d.vertex_count();
  std::vector<char> dom_seen(n, 0), img_seen(n, 0);
  for (const auto& [v, w] : phi.pairs) {
    d.check_vertex(v);
    d.check_vertex(w);
    if (dom_seen[v])
      throw Error(Errc::not_partial_iso, "duplicate domain vertex " + std::to_string(v));
    if (img_seen[w])
      throw Error(Errc::not_partial_iso, "map not injective at " + std::to_string(w));
    dom_seen[v] = 1;
    img_seen[w] = 1;
  }
  for (const auto& [v1, w1] : phi.pairs)
    for (const auto& [v2, w2] : phi.pairs)
      if (d.code(v1, v2) != d.code(w1, w2))
        throw Error(Errc::not_partial_iso,
                    "images do not preserve the induced structure");
  if (phi.pairs.empty()) return identity_perm(n);

  CodeMatrix m = CodeMatrix::directed(d);
  std::vector<int> cols_a(n, 0), cols_b(n, 0);
  int next = 1;
  for (const auto& [v, w] : phi.pairs) {
    cols_a[v] = next;
    cols_b[w] = next;
    ++next;
  }
  return find_color_isomorphism(m, cols_a, m, cols_b);
}

bool same_orbit(const Digraph& d, const std::vector<int>& t1,
                const std::vector<int>& t2) {
  if (t1.size() != t2.size())
    throw Error(Errc::not_partial_iso, "tuples of different length");
  for (std::size_t i = 0; i < t1.size(); ++i) {
    d.check_vertex(t1[i]);
    d.check_vertex(t2[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (t1[i] == t1[j] || t2[i] == t2[j])
        throw Error(Errc::not_partial_iso, "tuple entries not distinct");
    }
  }
  // Different induced labeled structures cannot share an orbit.
  for (std::size_t i = 0; i < t1.size(); ++i)
    for (std::size_t j = 0; j < t1.size(); ++j)
      if (d.code(t1[i], t1[j]) != d.code(t2[i], t2[j])) return false;
  PartialMap phi;
  for (std::size_t i = 0; i < t1.size(); ++i) phi.pairs.push_back({t1[i], t2[i]});
  if (phi.pairs.empty()) return true;
  return extend_partial(d, phi).has_value();
}

bool vertex_transitive(const Digraph& d) {
  const int n = d.vertex_count();
  if (n <= 1) return true;
  CodeMatrix m = CodeMatrix::directed(d);
  std::vector<char> in_orbit(n, 0);
  in_orbit[0] = 1;
  std::vector<int> orbit = {0};
  std::vector<Permutation> gens;
  for (int w = 1; w < n; ++w) {
    if (in_orbit[w]) continue;
    std::vector<int> cols_a(n, 0), cols_b(n, 0);
    cols_a[0] = 1;
    cols_b[w] = 1;
    auto alpha = find_color_isomorphism(m, cols_a, m, cols_b);
    if (!alpha) return false;
    gens.push_back(std::move(*alpha));
    close_orbit(orbit, in_orbit, gens);
  }
  return true;
}

namespace {

std::string serialize_under(const CodeMatrix& m, const Permutation& labeling) {
  // position -> vertex
  std::vector<int> at(m.n);
  for (int v = 0; v < m.n; ++v) at[labeling[v]] = v;
  std::string s;
  s.reserve(static_cast<std::size_t>(m.n) * m.n + 8);
  s += std::to_string(m.n);
  s += ';';
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      s += static_cast<char>('0' + m.at(at[i], at[j]));
  return s;
}

void canon_rec(const CodeMatrix& m, std::vector<int> cols, std::string& best,
               Permutation& best_labeling, bool& have_best) {
  refine_single(m, cols);
  int colors = color_count(cols);
  std::vector<int> size_of(colors, 0);
  for (int c : cols) ++size_of[c];
  int pick = -1;
  for (int c = 0; c < colors; ++c)
    if (size_of[c] >= 2 && (pick == -1 || size_of[c] < size_of[pick])) pick = c;
  if (pick == -1) {
    Permutation labeling(m.n);
    for (int v = 0; v < m.n; ++v) labeling[v] = cols[v];
    std::string cand = serialize_under(m, labeling);
    if (!have_best || cand < best) {
      best = std::move(cand);
      best_labeling = std::move(labeling);
      have_best = true;
    }
    return;
  }
  for (int v = 0; v < m.n; ++v) {
    if (cols[v] != pick) continue;
    std::vector<int> next = cols;
    next[v] = colors;
    canon_rec(m, std::move(next), best, best_labeling, have_best);
  }
}

}  // namespace

Permutation canonical_labeling(const CodeMatrix& m, const std::vector<int>& colors) {
  if (m.n == 0) return {};
  std::string best;
  Permutation best_labeling;
  bool have_best = false;
  canon_rec(m, colors, best, best_labeling, have_best);
  return best_labeling;
}

std::string canonical_form_colored(const CodeMatrix& m, const std::vector<int>& colors) {
  if (m.n == 0) return "0;";
  std::string best;
  Permutation best_labeling;
  bool have_best = false;
  canon_rec(m, colors, best, best_labeling, have_best);
  return best;
}

std::string canonical_form(const Digraph& d) {
  return canonical_form_colored(CodeMatrix::directed(d),
                                std::vector<int>(d.vertex_count(), 0));
}

Digraph canonicalize(const Digraph& d) {
  if (d.vertex_count() == 0) return d;
  Permutation labeling =
      canonical_labeling(CodeMatrix::directed(d), std::vector<int>(d.vertex_count(), 0));
  return relabel(d, labeling);
}

std::optional<Permutation> find_digraph_isomorphism(const Digraph& a, const Digraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  return find_color_isomorphism(CodeMatrix::directed(a),
                                std::vector<int>(a.vertex_count(), 0),
                                CodeMatrix::directed(b),
                                std::vector<int>(b.vertex_count(), 0));
}

bool isomorphic(const Digraph& a, const Digraph& b) {
  return find_digraph_isomorphism(a, b).has_value();
}

}  // namespace chdig
