// Command-line front door: generate catalog digraphs, decide homogeneity
// variants, inspect reachability structure, build and search triangle-tree
// quotients, and run the census. Outputs are deterministic: identical
// invocations produce byte-identical stdout; timing goes to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chdig/census.hpp"
#include "chdig/families.hpp"
#include "chdig/homogeneity.hpp"
#include "chdig/io.hpp"
#include "chdig/quotients.hpp"
#include "chdig/reachability.hpp"
#include "chdig/symmetry.hpp"

namespace {

using nlohmann::json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInvalid = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw chdig::Error(chdig::Errc::parse_error, "cannot write " + out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
  }
}

std::string witness_line(const chdig::PartialMap& w) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w.pairs.size(); ++i) {
    if (i) os << ", ";
    os << w.pairs[i].first << "->" << w.pairs[i].second;
  }
  os << "]";
  return os.str();
}

std::string perm_line(const chdig::Permutation& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ",";
    os << p[i];
  }
  os << "]";
  return os.str();
}

json verdict_json(const chdig::HomogeneityVerdict& v) {
  json j;
  j["holds"] = v.holds;
  j["levels_checked"] = v.levels_checked;
  j["complete"] = v.complete;
  if (v.witness) {
    json pairs = json::array();
    for (const auto& [a, b] : v.witness->pairs) pairs.push_back({a, b});
    j["witness"] = pairs;
  }
  return j;
}

json quotient_report_json(const chdig::QuotientReport& r) {
  json j;
  j["k"] = r.spec.k;
  j["a"] = r.spec.a;
  j["b"] = r.spec.b;
  j["valid"] = r.valid;
  if (!r.valid) {
    j["error"] = r.error;
    return j;
  }
  j["digraph"] = json::parse(chdig::to_interchange(r.digraph));
  j["connected"] = r.connected;
  j["has_triangle"] = r.has_triangle;
  j["c_homogeneous"] = verdict_json(r.c_homogeneous);
  j["delta_shape"] = chdig::to_string(r.delta);
  json shapes = json::array();
  for (const auto& s : r.delta_per_class) shapes.push_back(chdig::to_string(s));
  j["delta_per_class"] = shapes;
  j["class_count"] = r.class_count;
  j["swap_invariant"] = r.swap_witness.has_value();
  if (r.swap_witness) j["swap_witness"] = *r.swap_witness;
  j["verified"] = r.verified();
  j["note"] = r.note;
  return j;
}

int run_gen(const std::string& family, int p1, int compose_empty, bool dot,
            const std::string& out_path) {
  chdig::Digraph d;
  if (family == "cycle") {
    d = chdig::families::directed_cycle(p1);
  } else if (family == "cp") {
    d = chdig::families::cp(p1);
  } else if (family == "y") {
    d = chdig::families::y(p1);
  } else if (family == "t2-ball") {
    d = chdig::families::t2_ball(p1).digraph;
  } else if (family == "empty") {
    d = chdig::families::empty(p1);
  } else if (family == "h") {
    d = chdig::families::h();
  } else {
    std::cerr << "unknown family '" << family << "'\n";
    return kExitInvalid;
  }
  if (compose_empty > 1)
    d = chdig::lex_product(d, chdig::families::empty(compose_empty));
  if (!chdig::is_connected(d))
    std::cerr << "note: generated digraph is disconnected\n";
  emit(dot ? chdig::to_dot(d) : chdig::to_interchange(d), out_path);
  return kExitHolds;
}

int run_check(const std::string& path, const std::string& mode) {
  chdig::Digraph d = chdig::read_digraph_file(path);
  chdig::HomogeneityVerdict v;
  if (mode == "homogeneous") {
    v = chdig::is_homogeneous(d);
  } else if (mode == "c-homogeneous") {
    v = chdig::is_c_homogeneous(d);
  } else if (mode == "c-bipartite") {
    // 2-color the underlying graph; sides are determined per component.
    const int n = d.vertex_count();
    std::vector<int> side(n, -1);
    for (int start = 0; start < n; ++start) {
      if (side[start] != -1) continue;
      side[start] = 0;
      std::vector<int> stack = {start};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < n; ++y) {
          if (!d.adjacent(x, y)) continue;
          if (side[y] == -1) {
            side[y] = 1 - side[x];
            stack.push_back(y);
          } else if (side[y] == side[x]) {
            std::cout << "invalid: underlying graph is not bipartite\n";
            return kExitInvalid;
          }
        }
      }
    }
    v = chdig::is_c_homogeneous_bipartite(d, side);
  } else {
    std::cerr << "unknown mode '" << mode << "'\n";
    return kExitInvalid;
  }
  if (v.holds) {
    std::cout << "holds (levels checked: " << v.levels_checked
              << (v.complete ? "" : ", capped") << ")\n";
    return kExitHolds;
  }
  std::cout << "fails at subdigraph size " << v.levels_checked << "\n";
  std::cout << "witness: " << witness_line(*v.witness) << "\n";
  std::cout << "witness domain: " << chdig::to_interchange(v.witness_domain) << "\n";
  std::cout << "witness codomain: " << chdig::to_interchange(v.witness_codomain)
            << "\n";
  return kExitFails;
}

int run_reach(const std::string& path, const std::string& dot_prefix) {
  chdig::Digraph d = chdig::read_digraph_file(path);
  chdig::DeltaReport report = chdig::delta_shape(d);
  std::cout << "classes: " << report.partition.classes.size() << "\n";
  std::cout << "sizes:";
  for (const auto& cls : report.partition.classes) std::cout << " " << cls.size();
  std::cout << "\n";
  std::cout << "universal: " << (report.partition.universal ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < report.class_shapes.size(); ++i)
    std::cout << "class " << i << " shape: " << chdig::to_string(report.class_shapes[i])
              << "\n";
  std::cout << "shape: " << chdig::to_string(report.shape) << "\n";
  if (!dot_prefix.empty()) {
    for (std::size_t i = 0; i < report.partition.classes.size(); ++i) {
      int e = report.partition.classes[i][0];
      chdig::Digraph delta = chdig::reachability_digraph(d, d.edges()[e]);
      std::ofstream out(dot_prefix + "-class" + std::to_string(i) + ".dot");
      out << chdig::to_dot(delta);
    }
  }
  return kExitHolds;
}

int run_quotient(int k, const std::string& a_text, const std::string& b_text,
                 const std::string& out_path) {
  chdig::QuotientSpec spec;
  spec.k = k;
  spec.a = chdig::parse_image_array(a_text);
  spec.b = chdig::parse_image_array(b_text);
  chdig::QuotientReport report = chdig::verify_quotient(spec);
  emit(quotient_report_json(report).dump(2), out_path);
  if (!report.valid) return kExitInvalid;
  return report.verified() ? kExitHolds : kExitFails;
}

int run_quotient_search(int max_k, const std::string& out_path) {
  auto results = chdig::search_quotients(max_k);
  json j = json::array();
  for (const auto& r : results) j.push_back(quotient_report_json(r.report));
  emit(j.dump(2), out_path);
  return kExitHolds;
}

int run_census(int max_n, bool allow_seven, const std::string& out_path) {
  if (max_n == 7 && !allow_seven) {
    std::cerr << "census at n=7 scans ~2.1 million digraph classes and can "
                 "take a long time; pass --allow-seven to confirm\n";
    return kExitInvalid;
  }
  if (max_n > 7) {
    std::cerr << "census ceiling is 7\n";
    return kExitInvalid;
  }
  chdig::CensusReport report = chdig::census(max_n, allow_seven ? 7 : 6);
  std::ostringstream os;
  os << "census up to n=" << report.n_max << "\n";
  os << "survivors: " << report.found.size() + report.unexplained.size() << "\n";
  for (const auto& [d, entry] : report.found)
    os << "  " << chdig::to_string(entry) << ": " << chdig::to_interchange(d) << "\n";
  for (const auto& d : report.unexplained)
    os << "  UNEXPLAINED: " << chdig::to_interchange(d) << "\n";
  os << "counts:";
  for (const auto& [tag, count] : report.counts) os << " " << tag << "=" << count;
  os << "\n";
  os << "missing catalog members: " << report.missing.size() << "\n";
  for (const auto& e : report.missing) os << "  MISSING: " << chdig::to_string(e) << "\n";
  emit(os.str(), out_path);
  std::cerr << "census took " << report.elapsed_seconds << "s\n";
  if (!report.unexplained.empty() || !report.missing.empty()) return kExitFails;
  return kExitHolds;
}

int run_classify(const std::string& path) {
  chdig::Digraph d = chdig::read_digraph_file(path);
  std::cout << chdig::to_string(chdig::recognize(d)) << "\n";
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"laboratory for connected-homogeneous digraphs"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker cap (reserved; all commands run deterministically)");

  // gen
  auto* gen = app.add_subcommand("gen", "emit a catalog digraph");
  std::string family;
  int p1 = 0, compose_empty = 1;
  bool dot = false;
  std::string out_path;
  gen->add_option("family", family, "cycle | cp | y | t2-ball | empty | h")->required();
  gen->add_option("param", p1, "family parameter (m, k, r, or n; h takes none)");
  gen->add_option("--compose-empty", compose_empty,
                  "lexicographic composition with the edgeless digraph on n vertices");
  gen->add_flag("--dot", dot, "emit DOT instead of the interchange format");
  gen->add_option("--out", out_path, "write to file instead of stdout");

  // check
  auto* check = app.add_subcommand("check", "decide a homogeneity property");
  std::string check_path, mode = "c-homogeneous";
  check->add_option("path", check_path, "digraph file (interchange format)")->required();
  check->add_option("--mode", mode, "homogeneous | c-homogeneous | c-bipartite");

  // reach
  auto* reach = app.add_subcommand("reach", "reachability classes and shape");
  std::string reach_path, dot_prefix;
  reach->add_option("path", reach_path, "digraph file")->required();
  reach->add_option("--export-dot", dot_prefix,
                    "write one DOT file per class with this path prefix");

  // quotient
  auto* quot = app.add_subcommand("quotient", "build and verify a triangle-tree quotient");
  int qk = 0;
  std::string qa, qb, q_out;
  quot->add_option("--k", qk, "point count")->required();
  quot->add_option("--a", qa, "first generator as zero-based image array, e.g. 1,2,0")->required();
  quot->add_option("--b", qb, "second generator image array")->required();
  quot->add_option("--out", q_out, "write the report to a file");

  // quotient-search
  auto* qsearch = app.add_subcommand("quotient-search", "enumerate verified quotients");
  int max_k = 3;
  std::string qs_out;
  qsearch->add_option("--max-k", max_k, "largest point count")->required();
  qsearch->add_option("--out", qs_out, "write the report to a file");

  // census
  auto* census_cmd = app.add_subcommand("census", "exhaustive C-homogeneity census");
  int max_n = 6;
  bool allow_seven = false;
  std::string census_out;
  census_cmd->add_option("--max-n", max_n, "largest vertex count (default 6)");
  census_cmd->add_flag("--allow-seven", allow_seven, "permit the slow n=7 run");
  census_cmd->add_option("--out", census_out, "write the report to a file");

  // classify
  auto* classify = app.add_subcommand("classify", "recognize catalog membership");
  std::string classify_path;
  classify->add_option("path", classify_path, "digraph file")->required();

  CLI11_PARSE(app, argc, argv);
  (void)jobs;

  try {
    if (gen->parsed()) return run_gen(family, p1, compose_empty, dot, out_path);
    if (check->parsed()) return run_check(check_path, mode);
    if (reach->parsed()) return run_reach(reach_path, dot_prefix);
    if (quot->parsed()) return run_quotient(qk, qa, qb, q_out);
    if (qsearch->parsed()) return run_quotient_search(max_k, qs_out);
    if (census_cmd->parsed()) return run_census(max_n, allow_seven, census_out);
    if (classify->parsed()) return run_classify(classify_path);
  } catch (const chdig::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
