#include "torbar/linalg.hpp"

#include <doctest.h>

using namespace torbar;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  RationalMatrix m(static_cast<int>(rows.size()),
                   rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.set(r, c, rows[r][c]);
  return m;
}

}  // namespace

TEST_CASE("rref rank and pivots") {
  RationalMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  RrefResult r = rref(m);
  CHECK(r.pivots.size() == 2);
  CHECK(rank(m) == 2);

  RationalMatrix id = from_rows({{1, 0}, {0, 1}});
  CHECK(rank(id) == 2);
  CHECK(rank(RationalMatrix(3, 4)) == 0);
}

TEST_CASE("kernel vectors are annihilated") {
  RationalMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}});
  Subspace ker = kernel_basis(m);
  CHECK(ker.dim() == 2);
  for (int i = 0; i < ker.dim(); ++i) {
    Vec v = ker.basis_vector(i);
    Vec img = m.apply(v);
    for (const auto& c : img) CHECK(c == 0);
  }
}

TEST_CASE("preimage solves exactly or reports failure") {
  RationalMatrix m = from_rows({{2, 0}, {0, 3}, {0, 0}});
  Vec rhs = {Rational(1), Rational(1), Rational(0)};
  auto sol = preimage(m, rhs);
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Rational(1) / 2);
  CHECK((*sol)[1] == Rational(1) / 3);

  Vec bad = {Rational(0), Rational(0), Rational(1)};
  CHECK(!preimage(m, bad).has_value());
}

TEST_CASE("subspace membership and reduction") {
  Subspace s = Subspace::from_vectors(3, {{Rational(1), Rational(1), Rational(0)},
                                          {Rational(0), Rational(1), Rational(1)}});
  CHECK(s.dim() == 2);
  CHECK(s.contains({Rational(1), Rational(2), Rational(1)}));
  CHECK(!s.contains({Rational(0), Rational(0), Rational(1)}));

  // residue vanishes exactly on members
  Vec v = {Rational(2), Rational(3), Rational(1)};
  Vec r = s.reduce(v);
  CHECK(s.contains({v[0] - r[0], v[1] - r[1], v[2] - r[2]}));
  CHECK(s.reduce(s.reduce(v)) == r);
}

TEST_CASE("solve_modulo recovers coefficients") {
  Subspace s = Subspace::from_vectors(2, {{Rational(1), Rational(2)}});
  auto c = solve_modulo({Rational(3), Rational(6)}, s);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 3);
  CHECK(!solve_modulo({Rational(1), Rational(0)}, s).has_value());
}

TEST_CASE("echelon span insert is idempotent on dimension") {
  EchelonSpan e(3);
  CHECK(e.insert(sparse({Rational(1), Rational(1), Rational(0)})));
  CHECK(!e.insert(sparse({Rational(2), Rational(2), Rational(0)})));
  CHECK(e.insert(sparse({Rational(0), Rational(0), Rational(5)})));
  CHECK(e.dim() == 2);
  CHECK(e.contains(sparse({Rational(-1), Rational(-1), Rational(7)})));
  CHECK(e.reduce(e.reduce(sparse({Rational(1), Rational(0), Rational(0)}))) ==
        e.reduce(sparse({Rational(1), Rational(0), Rational(0)})));
}
