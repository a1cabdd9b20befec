#include "helpers.hpp"
#include "torbar/tor.hpp"

#include <doctest.h>

using namespace torbar;
using torbar::testing::load_algebra;

namespace {

TorResult run(const char* name, int max_degree, TorMode mode = TorMode::OverR,
              bool ring = false) {
  TorRequest req;
  req.algebra = load_algebra(name);
  req.max_degree = max_degree;
  req.mode = mode;
  req.want_ring = ring;
  return tor_compute(req);
}

}  // namespace

TEST_CASE("free module over R gives the exterior pattern of a point") {
  TorResult r = run("point.alg", 8);
  const std::vector<int> expect = {1, 0, 1, 0, 1, 0, 1, 0, 1};
  CHECK(r.betti == expect);
  CHECK(r.generators[2][0].display == "(u | 1)");
  CHECK(r.generators[4][0].display == "(u^2 | 1)");
}

TEST_CASE("two fixed points give one class per degree") {
  TorResult r = run("s2-circle.alg", 8);
  for (int n = 0; n <= 8; ++n) {
    INFO("degree " << n);
    CHECK(r.betti[n] == 1);
  }
  CHECK(r.generators[0][0].display == "(1 | 1)");
  CHECK(r.generators[1][0].display == "(1 | (u + x) | 1)");
  CHECK(r.generators[2][0].display == "(u | 1)");
  CHECK(r.generators[3][0].display == "(1 | (u + x) | (u + x) | (u + x) | 1)");
  CHECK(r.generators[4][0].display == "(u^2 | 1)");
}

TEST_CASE("representatives are cocycles reduced against boundaries") {
  TorResult r = run("s2-circle.alg", 6);
  auto algebra = load_algebra("s2-circle.alg");
  BarContext bar(algebra, BarMode::OverR, 6);
  for (int n = 0; n <= 6; ++n)
    for (const auto& g : r.generators[n]) {
      INFO("degree " << n);
      // zero in the working complex, i.e. after the move-span projection
      Vec img = bar.project(bar.bar_D(g.rep));
      for (const auto& c : img) CHECK(c == 0);
      CHECK(!g.rep.zero());
    }
}

TEST_CASE("ring constants match the split form over R") {
  TorResult r = run("s2-circle.alg", 8, TorMode::OverR, true);
  auto algebra = load_algebra("s2-circle.alg");
  const int rg = algebra->presentation().r_generators.at(0);  // u

  auto entry = [&](int n1, int n2) {
    return r.ring_constants.at({n1, 0, n2, 0});
  };
  // odd * odd = 0
  for (const auto& v : entry(1, 1).coeffs) CHECK(v == 0);
  for (const auto& v : entry(1, 3).coeffs) CHECK(v == 0);
  for (const auto& v : entry(3, 3).coeffs) CHECK(v == 0);
  // u-powers multiply freely
  REQUIRE(entry(2, 2).coeffs.size() == 1);
  CHECK(entry(2, 2).coeffs[0] == 1);
  CHECK(entry(2, 4).coeffs[0] == 1);
  CHECK(entry(4, 4).coeffs[0] == 1);
  // u annihilates the odd part and acts freely on its own powers
  for (const auto& v : r.r_action.at({rg, {1, 0}}).coeffs) CHECK(v == 0);
  for (const auto& v : r.r_action.at({rg, {3, 0}}).coeffs) CHECK(v == 0);
  CHECK(r.r_action.at({rg, {2, 0}}).coeffs[0] == 1);
  CHECK(r.r_action.at({rg, {0, 0}}).coeffs[0] == 1);
  // products past the truncation are flagged, not computed
  CHECK(r.ring_constants.at({4, 0, 6, 0}).outside_truncation);
}

TEST_CASE("both modes agree at desk scale") {
  TorResult r = run("s2-circle.alg", 6, TorMode::Both);
  CHECK(r.modes_agree);
  TorResult p = run("point.alg", 6, TorMode::Both);
  CHECK(p.modes_agree);
}

TEST_CASE("truncation is monotone") {
  TorResult small = run("s2-circle.alg", 4);
  TorResult large = run("s2-circle.alg", 8);
  for (int n = 0; n <= 4; ++n) CHECK(small.betti[n] == large.betti[n]);
}

TEST_CASE("oracle crosscheck accepts the matching table and rejects the wrong one") {
  TorResult r = run("s2-loops.alg", 8, TorMode::OverR);
  auto oracle_ctx = load_algebra("omega-s2-oracle.alg");
  CdgaInstance inst(oracle_ctx, 8);
  CohomologyTable good = cohomology(inst);
  CrosscheckReport ok = crosscheck_oracle(r, good, 8);
  CHECK(ok.ok);

  auto wrong_ctx = load_algebra("point.alg");
  CdgaInstance winst(wrong_ctx, 8);
  CohomologyTable bad = cohomology(winst);
  CrosscheckReport nope = crosscheck_oracle(r, bad, 8);
  CHECK(!nope.ok);
  CHECK(nope.first_divergent_degree == 1);
}

TEST_CASE("nonzero differential is rejected as tor input") {
  TorRequest req;
  req.algebra = load_algebra("lambda-uxy.alg");
  req.max_degree = 4;
  CHECK_THROWS_AS(tor_compute(req), InputError);
}
