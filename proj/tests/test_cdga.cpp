#include "helpers.hpp"
#include "torbar/cdga.hpp"
#include "torbar/parser.hpp"

#include <doctest.h>

using namespace torbar;
using torbar::testing::load_algebra;

namespace {

GradedElement gen_elt(const AlgebraContext& ctx, const char* name) {
  const auto& pres = ctx.presentation();
  int i = *pres.generator_index(name);
  Monomial m(pres.generators.size(), 0);
  m[i] = 1;
  return ctx.normal_form({{m, Rational(1)}}, pres.generators[i].degree);
}

}  // namespace

TEST_CASE("minimal model cohomology is one class per degree") {
  auto ctx = load_algebra("lambda-uxy.alg");
  CdgaInstance inst(ctx, 6);
  CohomologyTable t = cohomology(inst, true);
  for (int n = 0; n <= 6; ++n) {
    INFO("degree " << n);
    CHECK(t.betti.at(n) == 1);
  }

  // u*x is exact (it is dy), so its class vanishes
  GradedElement ux = ctx->multiply(gen_elt(*ctx, "u"), gen_elt(*ctx, "x"));
  Vec c = inst.class_coordinates(ux, t);
  for (const auto& v : c) CHECK(v == 0);

  // u^2 survives
  GradedElement u2 = ctx->multiply(gen_elt(*ctx, "u"), gen_elt(*ctx, "u"));
  Vec c2 = inst.class_coordinates(u2, t);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0] != 0);

  // ring constants: [x][u] = 0, [u][u] = [u^2]
  CHECK(t.ring_constants.count({1, 0, 2, 0}) == 1);
  for (const auto& v : t.ring_constants.at({1, 0, 2, 0})) CHECK(v == 0);
}

TEST_CASE("representatives are cocycles with unit leading structure") {
  auto ctx = load_algebra("lambda-uxy.alg");
  CdgaInstance inst(ctx, 6);
  CohomologyTable t = cohomology(inst);
  for (const auto& [n, reps] : t.representatives)
    for (const auto& z : reps) {
      INFO("degree " << n);
      CHECK(inst.differential(z).zero());
    }
}

TEST_CASE("massey triple of x, u, x is nonzero with zero indeterminacy") {
  auto ctx = load_algebra("lambda-uxy.alg");
  CdgaInstance inst(ctx, 6);
  GradedElement x = gen_elt(*ctx, "x"), u = gen_elt(*ctx, "u");
  MasseyResult r = massey_triple(x, u, x, inst);
  CHECK(r.defined);
  CHECK(r.indeterminacy_dim == 0);
  CHECK(!r.contains_zero);
  CHECK(!r.representative.zero());
  CHECK(r.representative.degree == 3);
}

TEST_CASE("indecomposable cohomology distinguishes the augmentation targets") {
  auto ctx = load_algebra("lambda-uxy.alg");
  CdgaInstance inst(ctx, 6);
  std::map<int, int> over_r = indecomposables_homotopy(inst, AugTarget::OverR);
  std::map<int, int> over_k = indecomposables_homotopy(inst, AugTarget::OverK);
  CHECK(over_r == std::map<int, int>{{1, 1}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}});
  CHECK(over_k == std::map<int, int>{{1, 1}, {2, 2}, {3, 0}, {4, 0}, {5, 0}, {6, 0}});
}

TEST_CASE("d squared nonzero is rejected at instance construction") {
  auto pres = parse_presentation(
      "algebra bad\n"
      "generator x degree 1\n"
      "generator y degree 2\n"
      "augment x -> 0\n"
      "augment y -> 0\n"
      "differential x -> y\n"
      "differential y -> x*y\n");
  auto ctx = std::make_shared<AlgebraContext>(std::move(pres));
  CHECK_THROWS_AS(CdgaInstance(ctx, 6), InvariantError);
}
