#include "chdig/quotients.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "chdig/families.hpp"

namespace chdig {

namespace {

bool is_permutation(const std::vector<int>& p, int k) {
  if (static_cast<int>(p.size()) != k) return false;
  std::vector<char> seen(k, 0);
  for (int v : p) {
    if (v < 0 || v >= k || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

void validate_quotient_spec(const QuotientSpec& spec) {
  if (spec.k < 1) throw Error(Errc::too_small, "k must be positive");
  if (!is_permutation(spec.a, spec.k) || !is_permutation(spec.b, spec.k))
    throw Error(Errc::vertex_out_of_range, "a and b must be permutations of 0..k-1");
  for (const auto* p : {&spec.a, &spec.b}) {
    for (int v = 0; v < spec.k; ++v)
      if ((*p)[v] == v)
        throw Error(Errc::fixed_point,
                    "point " + std::to_string(v) + " is fixed");
    for (int v = 0; v < spec.k; ++v)
      if ((*p)[(*p)[(*p)[v]]] != v)
        throw Error(Errc::wrong_order, "permutation order is not 3");
    bool identity3 = true;
    for (int v = 0; v < spec.k; ++v)
      if ((*p)[v] != v) identity3 = false;
    if (identity3) throw Error(Errc::wrong_order, "identity permutation");
  }
  // Transitivity of <A, B>.
  std::vector<int> parent(spec.k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (int v = 0; v < spec.k; ++v) {
    for (int w : {spec.a[v], spec.b[v]}) {
      int rv = find(v), rw = find(w);
      if (rv != rw) parent[rv] = rw;
    }
  }
  for (int v = 0; v < spec.k; ++v)
    if (find(v) != find(0))
      throw Error(Errc::not_transitive, "<A,B> is not transitive");
}

Digraph build_quotient(const QuotientSpec& spec) {
  validate_quotient_spec(spec);
  std::vector<Edge> edges;
  for (int p = 0; p < spec.k; ++p) {
    edges.push_back({p, spec.a[p]});
    edges.push_back({p, spec.b[p]});
  }
  try {
    return Digraph(spec.k, std::move(edges));
  } catch (const Error& e) {
    if (e.code() == Errc::symmetric_pair)
      throw Error(Errc::quotient_symmetric, e.what());
    throw;
  }
}

std::optional<Permutation> check_swap_invariance(const QuotientSpec& spec) {
  validate_quotient_spec(spec);
  CodeMatrix ma, mb;
  ma.n = mb.n = spec.k;
  ma.codes.assign(static_cast<std::size_t>(spec.k) * spec.k, 0);
  mb.codes = ma.codes;
  for (int p = 0; p < spec.k; ++p) {
    ma.codes[static_cast<std::size_t>(p) * spec.k + spec.a[p]] |= 1;
    ma.codes[static_cast<std::size_t>(p) * spec.k + spec.b[p]] |= 2;
    // Generator-swapped copy: conjugating A into B and B into A is exactly a
    // code-preserving map onto this matrix.
    mb.codes[static_cast<std::size_t>(p) * spec.k + spec.a[p]] |= 2;
    mb.codes[static_cast<std::size_t>(p) * spec.k + spec.b[p]] |= 1;
  }
  std::vector<int> zero(spec.k, 0);
  return find_color_isomorphism(ma, zero, mb, zero);
}

QuotientReport verify_quotient(const QuotientSpec& spec) {
  QuotientReport report;
  report.spec = spec;
  try {
    report.digraph = build_quotient(spec);
    report.valid = true;
  } catch (const Error& e) {
    report.error = e.what();
    return report;
  }
  report.connected = is_connected(report.digraph);
  report.has_triangle = has_directed_triangle(report.digraph);
  report.c_homogeneous = is_c_homogeneous(report.digraph);
  DeltaReport delta = delta_shape(report.digraph);
  report.delta = delta.shape;
  report.delta_per_class = delta.class_shapes;
  report.class_count = static_cast<int>(delta.partition.classes.size());
  report.swap_witness = check_swap_invariance(spec);
  report.note =
      "finite quotient of the triangle tree: every class of the collapsed "
      "relation is infinite, so the quotient has at most one end";
  return report;
}

bool covering_check(const QuotientSpec& spec, int radius) {
  validate_quotient_spec(spec);
  if (radius < 1) throw Error(Errc::too_small, "radius must be >= 1");
  Digraph q = build_quotient(spec);
  families::T2Ball ball = families::t2_ball(radius);
  const int bn = ball.digraph.vertex_count();

  std::vector<int> image(bn);
  for (int v = 0; v < bn; ++v) {
    int point = 0;
    for (const auto& [gen, exp] : ball.words[v])
      for (int i = 0; i < exp; ++i)
        point = gen == 0 ? spec.a[point] : spec.b[point];
    image[v] = point;
  }

  for (const auto& [g, h] : ball.digraph.edges())
    if (!q.has_edge(image[g], image[h])) return false;

  for (int g : ball.interior) {
    for (bool outward : {true, false}) {
      const auto& ball_nb =
          outward ? ball.digraph.out_neighbors(g) : ball.digraph.in_neighbors(g);
      const auto& q_nb =
          outward ? q.out_neighbors(image[g]) : q.in_neighbors(image[g]);
      std::set<int> mapped;
      for (int u : ball_nb) mapped.insert(image[u]);
      if (mapped != std::set<int>(q_nb.begin(), q_nb.end())) return false;
    }
  }
  return true;
}

namespace {

/// First-appearance enumeration of coset tables for <x,y | x^3 = y^3 = 1>
/// acting transitively and fixed-point-freely on k points. Slots are scanned
/// in the order (0,a),(0,b),(1,a),(1,b),...; a fresh point may only be the
/// next unused integer, which quotients out most relabelings. Closing an
/// order-3 cycle forces the third image.
struct TableEnum {
  int k;
  std::vector<int> a, b;
  int fresh = 1;  // points 0..fresh-1 are live
  std::vector<QuotientSpec> out;

  explicit TableEnum(int k) : k(k), a(k, -1), b(k, -1) {}

  void run() { step(0); }

  void step(int slot) {
    if (slot == 2 * k) {
      if (fresh == k) out.push_back(QuotientSpec{k, a, b});
      return;
    }
    const int p = slot / 2;
    std::vector<int>& gen = (slot % 2 == 0) ? a : b;
    if (p >= fresh) return;  // point never introduced: dead branch
    if (gen[p] != -1) {
      step(slot + 1);
      return;
    }
    std::vector<char> taken(k, 0);
    for (int v = 0; v < k; ++v)
      if (gen[v] != -1) taken[gen[v]] = 1;
    const int limit = std::min(fresh + 1, k);
    for (int q = 0; q < limit; ++q) {
      if (q == p || taken[q]) continue;
      // Cycle bookkeeping: p -> q; maybe close to a 3-cycle.
      int forced_at = -1;
      if (gen[q] != -1) {
        int r = gen[q];
        if (r == p) continue;  // would be a 2-cycle
        if (gen[r] == -1) {
          if (taken[p]) continue;  // p already an image elsewhere
          gen[r] = p;
          forced_at = r;
        } else if (gen[r] != p) {
          continue;
        }
      }
      gen[p] = q;
      int old_fresh = fresh;
      if (q == fresh) ++fresh;
      step(slot + 1);
      fresh = old_fresh;
      gen[p] = -1;
      if (forced_at != -1) gen[forced_at] = -1;
    }
  }
};

}  // namespace

std::vector<QuotientSearchResult> search_quotients(int k_max) {
  if (k_max < 3) throw Error(Errc::too_small, "k_max must be >= 3");
  std::vector<QuotientSearchResult> results;
  std::set<std::string> seen;
  for (int k = 3; k <= k_max; k += 3) {
    TableEnum e(k);
    e.run();
    std::vector<std::pair<std::string, QuotientSearchResult>> verified;
    for (const QuotientSpec& spec : e.out) {
      Digraph d;
      try {
        d = build_quotient(spec);
      } catch (const Error&) {
        continue;
      }
      // Cheap necessary conditions before the full checker.
      bool regular = true;
      for (int v = 0; v < k && regular; ++v)
        if (d.out_degree(v) != d.out_degree(0) || d.in_degree(v) != d.in_degree(0))
          regular = false;
      if (!regular || !vertex_transitive(d)) continue;
      std::string form = canonical_form(d);
      if (seen.count(form)) continue;
      QuotientReport report = verify_quotient(spec);
      if (!report.verified()) continue;
      seen.insert(form);
      verified.push_back({form, QuotientSearchResult{spec, std::move(report)}});
    }
    std::sort(verified.begin(), verified.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [form, r] : verified) results.push_back(std::move(r));
  }
  return results;
}

}  // namespace chdig
