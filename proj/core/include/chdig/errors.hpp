#ifndef CHDIG_ERRORS_HPP
#define CHDIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chdig {

/// Error codes for every rejection a chdig operation can produce.
enum class Errc {
  loop_edge,
  symmetric_pair,
  vertex_out_of_range,
  bad_partition,
  not_tripartite_oriented,
  quotient_loop,
  quotient_symmetric,
  too_short,
  too_small,
  too_large,
  no_edges,
  unknown_edge,
  not_partial_iso,
  not_bipartite,
  not_connected,
  fixed_point,
  wrong_order,
  not_transitive,
  search_exhausted,
  order_overflow,
  parse_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace chdig

#endif
