#include <doctest.h>

#include "chdig/families.hpp"
#include "chdig/io.hpp"

using namespace chdig;

TEST_CASE("interchange round trip") {
  for (const Digraph& d : {families::directed_cycle(5), families::y(3),
                           families::empty(4), families::cp(2)}) {
    CHECK(from_interchange(to_interchange(d)) == d);
  }
  CHECK(to_interchange(families::directed_cycle(3)) ==
        "{\"n\": 3, \"edges\": [[0, 1], [1, 2], [2, 0]]}");
}

TEST_CASE("interchange parse errors") {
  CHECK_THROWS_AS(from_interchange("{"), Error);
  CHECK_THROWS_AS(from_interchange("{\"n\": 2}"), Error);
  CHECK_THROWS_AS(from_interchange("{\"n\": 2, \"edges\": [[0]]}"), Error);
  CHECK_THROWS_AS(from_interchange("{\"n\": 1, \"edges\": [[0, 0]]}"), Error);
}

TEST_CASE("dot export") {
  CHECK(to_dot(families::directed_cycle(3)) ==
        "digraph D {\n  0 -> 1;\n  1 -> 2;\n  2 -> 0;\n}\n");
}

TEST_CASE("image arrays") {
  CHECK(parse_image_array("1,2,0") == std::vector<int>{1, 2, 0});
  CHECK(format_image_array({1, 2, 0}) == "1,2,0");
  CHECK_THROWS_AS(parse_image_array("1,x"), Error);
}
