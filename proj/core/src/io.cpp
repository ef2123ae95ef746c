#include "chdig/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace chdig {

std::string to_interchange(const Digraph& d) {
  // Emitted by hand to keep the byte layout canonical: edges are already
  // sorted, keys appear as "n" then "edges".
  std::ostringstream os;
  os << "{\"n\": " << d.vertex_count() << ", \"edges\": [";
  bool first = true;
  for (const auto& [u, v] : d.edges()) {
    if (!first) os << ", ";
    first = false;
    os << "[" << u << ", " << v << "]";
  }
  os << "]}";
  return os.str();
}

Digraph from_interchange(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_integer() || !j["edges"].is_array())
    throw Error(Errc::parse_error, "expected {\"n\": int, \"edges\": [[u,v],...]}");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw Error(Errc::parse_error, "edge entries must be 2-element int arrays");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Digraph(j["n"].get<int>(), std::move(edges));
}

Digraph read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return from_interchange(os.str());
}

void write_digraph_file(const Digraph& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::parse_error, "cannot write " + path);
  out << to_interchange(d) << "\n";
}

std::string to_dot(const Digraph& d) {
  std::ostringstream os;
  os << "digraph D {\n";
  for (const auto& [u, v] : d.edges()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string format_image_array(const std::vector<int>& perm) {
  std::ostringstream os;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) os << ",";
    os << perm[i];
  }
  return os.str();
}

std::vector<int> parse_image_array(const std::string& text) {
  std::vector<int> images;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    try {
      images.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "bad image array entry '" + token + "'");
    }
  }
  if (images.empty()) throw Error(Errc::parse_error, "empty image array");
  return images;
}

}  // namespace chdig
