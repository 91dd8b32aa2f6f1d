#include <doctest.h>

#include "gfactor/io.hpp"

using namespace gfactor;

TEST_CASE("smoke") {
  auto a = load_algebra_file(GFACTOR_DATA_DIR "/weyl1.alg");
  CHECK(to_string(parse_poly("d*x", a)) == "x*d + 1");
}
