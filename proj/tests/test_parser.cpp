#include "helpers.hpp"
#include "torbar/parser.hpp"

#include <doctest.h>

using namespace torbar;
using torbar::testing::read_file;

TEST_CASE("parse reads the presentation directives") {
  AlgebraPresentation p = parse_presentation(
      "# comment\n"
      "algebra demo\n"
      "generator x degree 2\n"
      "generator u degree 2\n"
      "rbase u\n"
      "relation x^2 - u^2\n"
      "augment x -> -u\n");
  CHECK(p.name == "demo");
  REQUIRE(p.generators.size() == 2);
  CHECK(p.generators[0].name == "x");
  CHECK(p.generators[1].degree == 2);
  CHECK(p.r_generators == std::vector<int>{1});
  CHECK(p.relations.size() == 1);
  CHECK(p.augmentation.count(0) == 1);
  CHECK(!p.has_differential());
}

TEST_CASE("parse then render is the identity on canonical documents") {
  for (const char* name : {"s2-circle.alg", "point.alg", "s2-loops.alg",
                           "lambda-uxy.alg", "omega-s2-oracle.alg"}) {
    AlgebraPresentation p =
        parse_presentation(read_file(std::string(TORBAR_DATA_DIR) + "/" + name));
    std::string canon = render_presentation(p);
    CHECK(parse_presentation(canon) == p);
    CHECK(render_presentation(parse_presentation(canon)) == canon);
  }
}

TEST_CASE("expressions support rationals, powers, and cancellation") {
  AlgebraPresentation p = parse_presentation(
      "algebra e\n"
      "generator u degree 2\n");
  Polynomial q = parse_polynomial("1/2*u^2 + 3*u*u - u^2", p);
  REQUIRE(q.size() == 1);
  CHECK(q.begin()->second == Rational(5) / 2);

  CHECK(parse_polynomial("u - u", p).empty());
  CHECK(parse_polynomial("0", p).empty());
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_presentation("algebra e\ngenerator x degree 2\nrelation x^2 +\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.col > 0);
  }
}

TEST_CASE("semantic violations are rejected") {
  // inhomogeneous relation: degrees 4 vs 2
  CHECK_THROWS_AS(parse_presentation("algebra e\n"
                                     "generator x degree 2\n"
                                     "generator u degree 2\n"
                                     "relation x^2 - u\n"),
                  InputError);
  // undeclared generator
  CHECK_THROWS_AS(parse_presentation("algebra e\n"
                                     "generator x degree 2\n"
                                     "relation x*y\n"),
                  InputError);
  // duplicate generator
  CHECK_THROWS_AS(parse_presentation("algebra e\n"
                                     "generator x degree 2\n"
                                     "generator x degree 4\n"),
                  InputError);
  // augmentation not landing in R
  CHECK_THROWS_AS(parse_presentation("algebra e\n"
                                     "generator x degree 2\n"
                                     "generator u degree 2\n"
                                     "rbase u\n"
                                     "augment x -> x\n"),
                  InputError);
  // odd r-base generator
  CHECK_THROWS_AS(parse_presentation("algebra e\n"
                                     "generator a degree 1\n"
                                     "rbase a\n"),
                  InputError);
}
