#include "helpers.hpp"
#include "torbar/bar.hpp"
#include "torbar/parser.hpp"

#include <doctest.h>

using namespace torbar;
using torbar::testing::load_algebra;

namespace {

bool chains_equal(const BarChain& a, const BarChain& b) {
  return chain_add(a, chain_scale(b, -1)).zero();
}

}  // namespace

TEST_CASE("word degrees and slice dimensions") {
  auto ctx = load_algebra("s2-circle.alg");
  BarContext over_k(ctx, BarMode::OverK, 8);
  BarContext over_r(ctx, BarMode::OverR, 8);

  // complex degree = tensor degree - bar degree; one degree-2 slot
  // contributes 1
  const std::vector<int> k_dims = {1, 2, 6, 14, 35, 84, 204};
  for (int n = 0; n < static_cast<int>(k_dims.size()); ++n) {
    INFO("degree " << n);
    CHECK(over_k.complex_dim(n) == k_dims[n]);
  }

  // the r-move quotient of the over-k slice has the over-R dimension
  for (int n = 0; n <= 6; ++n) {
    INFO("degree " << n);
    CHECK(static_cast<int>(over_k.quotient_over_R(n).basis_words.size()) ==
          over_r.complex_dim(n));
  }
}

TEST_CASE("slice requests past the truncation fail loudly") {
  auto ctx = load_algebra("point.alg");
  BarContext bar(ctx, BarMode::OverK, 4);
  CHECK_NOTHROW(bar.complex_dim(5));  // one past N is kept for D
  CHECK_THROWS_AS(bar.complex_dim(6), TruncationError);
}

TEST_CASE("delta merges adjacent slots with the frozen sign") {
  auto ctx = load_algebra("s2-circle.alg");
  BarContext bar(ctx, BarMode::OverR, 8);

  // ker eps over R in degree 2 is spanned by xi = u + x; xi*xi = 2*u*xi
  REQUIRE(bar.slot_basis(2).size() == 1);
  REQUIRE(bar.slot_basis(4).size() == 1);

  BarWord w;
  w.left = Monomial(2, 0);
  w.right = Monomial(2, 0);
  w.slots = {SlotRef{2, 0}, SlotRef{2, 0}};
  BarChain d = bar.bar_delta(bar.word_chain(w));

  // the boundary merges vanish (eps(xi) = 0 over R), so only the middle
  // merge survives, with coefficient +-2
  REQUIRE(d.terms.size() == 1);
  const auto& [mw, c] = *d.terms.begin();
  CHECK(mw.slots.size() == 1);
  CHECK(mw.slots[0].degree == 4);
  CHECK((c == 2 || c == -2));
}

TEST_CASE("internal differential acts slotwise with the bar sign") {
  auto pres = parse_presentation(
      "algebra dtest\n"
      "generator a degree 2\n"
      "generator z degree 3\n"
      "augment a -> 0\n"
      "augment z -> 0\n"
      "differential z -> a^2\n");
  auto ctx = std::make_shared<AlgebraContext>(std::move(pres));
  BarContext bar(ctx, BarMode::OverK, 6);

  // (1 | z | 1) has complex degree 2; d sends the slot to a^2 with sign
  // (-1)^{eps+1}, eps = 0 at the first slot
  BarWord w;
  w.left = Monomial(2, 0);
  w.right = Monomial(2, 0);
  REQUIRE(bar.slot_basis(3).size() == 1);
  w.slots = {SlotRef{3, 0}};
  BarChain d = bar.bar_d(bar.word_chain(w));
  REQUIRE(d.terms.size() == 1);
  CHECK(d.terms.begin()->second == -1);
  CHECK(d.terms.begin()->first.slots[0].degree == 4);
}

TEST_CASE("D squares to zero and anticommutes in parts") {
  for (const char* name : {"s2-circle.alg", "point.alg", "s2-loops.alg"}) {
    auto ctx = load_algebra(name);
    for (BarMode mode : {BarMode::OverK, BarMode::OverR}) {
      BarContext bar(ctx, mode, 6);
      for (int n = 0; n <= 4; ++n)
        for (const auto& w : bar.bar_basis(n)) {
          BarChain c = bar.word_chain(w);
          INFO(name << " degree " << n);
          CHECK(bar.bar_D(bar.bar_D(c)).zero());
          CHECK(chains_equal(bar.bar_d(bar.bar_delta(c)),
                             chain_scale(bar.bar_delta(bar.bar_d(c)), -1)));
        }
    }
  }
}

TEST_CASE("shuffle product kills the odd square and multiplies outer words") {
  auto ctx = load_algebra("s2-circle.alg");
  BarContext bar(ctx, BarMode::OverR, 8);

  BarWord odd;  // (1 | xi | 1), suspended degree 1
  odd.left = Monomial(2, 0);
  odd.right = Monomial(2, 0);
  odd.slots = {SlotRef{2, 0}};
  BarChain sq = bar.shuffle_mul(bar.word_chain(odd), bar.word_chain(odd));
  CHECK(sq.zero());

  BarWord uw;  // (u | 1)
  uw.left = Monomial(2, 0);
  uw.right = Monomial(2, 0);
  uw.left[*ctx->presentation().generator_index("u")] = 1;
  BarChain u2 = bar.shuffle_mul(bar.word_chain(uw), bar.word_chain(uw));
  REQUIRE(u2.terms.size() == 1);
  CHECK(u2.terms.begin()->second == 1);
  CHECK(u2.terms.begin()->first.left[*ctx->presentation().generator_index("u")] == 2);
}

TEST_CASE("contracting homotopy identity on the move generators") {
  for (const char* name : {"s2-circle.alg", "point.alg"}) {
    auto ctx = load_algebra(name);
    BarContext bar(ctx, BarMode::OverK, 6);
    for (int n = 1; n <= 5; ++n) {
      INFO(name << " degree " << n);
      CHECK(bar.homotopy_identity(n));
    }
  }
}
