#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "quiveralg/quiver_io.hpp"

using namespace qalg;

TEST_CASE("quiver files") {
  std::istringstream in(
      "# Kronecker\n"
      "vertices 2\n"
      "arrow 1 0\n"
      "arrow 1 0\n"
      "type A1~\n");
  Quiver q = read_quiver(in);
  REQUIRE(q.vertex_count() == 2);
  REQUIRE(q.arrow_count() == 2);
  REQUIRE(q.type_tag() == "A1~");

  std::istringstream bad1("vertices x\n");
  REQUIRE_THROWS_AS(read_quiver(bad1), ParseError);
  std::istringstream bad2("vertices 2\narrow 0\n");
  try {
    read_quiver(bad2);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.line == 2);
    REQUIRE(e.field == "arrow");
  }
  std::istringstream bad3("vertices 1\narrow 0 0\n");
  REQUIRE_THROWS_AS(read_quiver(bad3), ParseError);  // edge loop
  std::istringstream bad4("arrow 0 1\n");
  REQUIRE_THROWS_AS(read_quiver(bad4), ParseError);  // missing vertex count
}

TEST_CASE("module files round-trip") {
  Quiver q(2, {{1, 0}, {1, 0}}, "A1~");
  std::istringstream in(
      "dim 1 1\n"
      "x 0\n"
      "1\n"
      "xstar 0\n"
      "0\n"
      "x 1\n"
      "0\n"
      "xstar 1\n"
      "0\n");
  PiRep m = read_module(in, q);
  REQUIRE(m.dim == DimVector{1, 1});
  REQUIRE(m.x[0].at(0, 0) == 1);
  std::string text = write_module(q, m);
  std::istringstream in2(text);
  PiRep m2 = read_module(in2, q);
  REQUIRE(m2.x == m.x);
  REQUIRE(m2.xstar == m.xstar);

  // relation violations are rejected at parse time
  std::istringstream badrel(
      "dim 1 1\n"
      "x 0\n1\nxstar 0\n1\n"
      "x 1\n0\nxstar 1\n0\n");
  REQUIRE_THROWS_AS(read_module(badrel, q), DomainError);
}

TEST_CASE("shuffle element serialization round-trips bit-exactly") {
  ShuffleAlgebra sh(Quiver(2, {{1, 0}, {1, 0}}, "A1~"));
  ShuffleElt p = sh.mul(sh.mul(sh.generator(1, 2), sh.generator(0, 1)), sh.generator(1, 0));
  p = sh.scale(Rat(-7, 3), p);
  std::string text = write_shuffle_elt(sh, p);
  std::istringstream in(text);
  ShuffleElt p2 = read_shuffle_elt(sh, in);
  REQUIRE(p2 == p);
  REQUIRE(write_shuffle_elt(sh, p2) == text);

  // symmetry invariant enforced on read
  Weight wt{0, 2};
  std::ostringstream bad;
  bad << "weight 0 2\n1";
  for (int i = 0; i < sh.nvars(wt); ++i) bad << " " << (i == sh.zvar(wt, 1, 0) ? 1 : 0);
  bad << "\n";
  std::istringstream badin(bad.str());
  REQUIRE_THROWS_AS(read_shuffle_elt(sh, badin), ParseError);
}
