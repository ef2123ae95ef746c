#ifndef CHDIG_IO_HPP
#define CHDIG_IO_HPP

#include <string>

#include "chdig/digraph.hpp"

namespace chdig {

/// Interchange format: {"n": <int>, "edges": [[u,v], ...]} with edges sorted
/// lexicographically. Serialization is canonical (byte-stable).
std::string to_interchange(const Digraph& d);
Digraph from_interchange(const std::string& text);

Digraph read_digraph_file(const std::string& path);
void write_digraph_file(const Digraph& d, const std::string& path);

/// DOT export: one "u -> v;" line per edge, vertices as integers.
std::string to_dot(const Digraph& d);

/// Zero-based image array, e.g. "1,2,0". Used for permutations in CLI flags.
std::string format_image_array(const std::vector<int>& perm);
std::vector<int> parse_image_array(const std::string& text);

}  // namespace chdig

#endif
