#include "nilsym/catalog.hpp"
#include "nilsym/liealg.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace nilsym;

namespace {

LieVector e(int k, Rational c = 1) { return LieVector{{k, c}}; }

}  // namespace

TEST_CASE("construction normalizes and validates") {
  const LieAlgebra g("g", 3, BracketTable{{{2, 1}, e(3)}});
  CHECK(g.brackets().size() == 1);
  CHECK(g.brackets().at({1, 2}) == e(3, -1));
  CHECK(g.bracket(2, 1) == e(3));
  CHECK(g.structure_constant(1, 2, 3) == -1);
  CHECK(g.bracket(1, 1).empty());
  CHECK(g.basis_labels() == std::vector<std::string>{"e1", "e2", "e3"});
  CHECK(g.dual_labels() == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK_THROWS_AS(LieAlgebra("g", 3, BracketTable{{{1, 4}, e(3)}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra("g", 3, BracketTable{{{1, 2}, e(4)}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra("g", 3, BracketTable{{{2, 2}, e(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra("g", 0), std::invalid_argument);
  const LieAlgebra z("z", 3, BracketTable{{{1, 2}, e(3, 0)}});
  CHECK(z.is_abelian());
}

TEST_CASE("adjoint and coordinate bracket") {
  const LieAlgebra h = heisenberg(5);
  const RationalMatrix ad2 = h.adjoint(2);
  CHECK(ad2(0, 2) == 1);  // [e2, e3] = e1
  CHECK(ad2.cwiseAbs().sum() == 1);
  RationalVector a = RationalVector::Zero(5), b = RationalVector::Zero(5);
  a(1) = 2;  // 2 e2
  a(3) = 1;  // + e4
  b(2) = 3;  // 3 e3
  b(4) = -1; // - e5
  const RationalVector c = h.bracket(a, b);
  CHECK(c(0) == 5);  // 6 [e2,e3] - [e4,e5]
  CHECK(c.tail(4).isZero());
}

TEST_CASE("jacobi_holds examples") {
  CHECK(jacobi_holds(heisenberg(5)));
  CHECK(jacobi_holds(abelian(5)));
  const LieAlgebra bad("bad", 3, BracketTable{{{1, 2}, e(3)}, {{2, 3}, e(1)}, {{3, 1}, e(1)}});
  const JacobiResult r = jacobi_check(bad);
  CHECK_FALSE(r.holds);
  REQUIRE(r.violating_triple.has_value());
  CHECK(*r.violating_triple == std::array<int, 3>{1, 2, 3});
  for (const auto& v : testing::jacobi_violators()) {
    CHECK_MESSAGE(!jacobi_holds(v), v.name());
  }
}

TEST_CASE("upper central series") {
  const UcsProfile h = upper_central_series(heisenberg(5));
  CHECK(h.dims == std::vector<int>{1, 5});
  CHECK(h.nilpotency_index() == 2);
  CHECK(h.nilpotent);
  const UcsProfile a = upper_central_series(abelian(5));
  CHECK(a.dims == std::vector<int>{5});
  CHECK(a.nilpotency_index() == 1);
  CHECK(upper_central_series(g13457C()).dims == std::vector<int>{1, 3, 4, 5, 7});
  for (int n = 1; n <= 4; ++n) {
    CHECK(upper_central_series(heisenberg(2 * n + 1)).dims == std::vector<int>{1, 2 * n + 1});
  }
  // 2-dim non-abelian [e1,e2]=e2 has trivial center.
  const LieAlgebra aff("aff", 2, BracketTable{{{1, 2}, e(2)}});
  const UcsProfile u = upper_central_series(aff);
  CHECK_FALSE(u.nilpotent);
  CHECK(u.dims.empty());
  // sl2-like [e1,e2]=e3 [e1,e3]=-2e1... use so(3): center 0
  const LieAlgebra so3("so3", 3, BracketTable{{{1, 2}, e(3)}, {{2, 3}, e(1)}, {{3, 1}, e(2)}});
  CHECK(jacobi_holds(so3));
  CHECK_FALSE(upper_central_series(so3).nilpotent);
  // aff x a: center 1-dim, stabilizes below full dimension
  const UcsProfile ua = upper_central_series(direct_product(aff, abelian(1)));
  CHECK(ua.dims == std::vector<int>{1});
  CHECK_FALSE(ua.nilpotent);
}

TEST_CASE("direct products") {
  const LieAlgebra ha = direct_product(heisenberg(5), LieAlgebra("a", 1));
  CHECK(ha.dim() == 6);
  CHECK(ha.brackets() == heisenberg(5).brackets());
  CHECK(ha.dual_labels().back() == "y");
  CHECK(upper_central_series(ha).dims == std::vector<int>{2, 6});
  CHECK(direct_product(abelian(2), abelian(3)) == abelian(5));
  const LieAlgebra hh = direct_product(heisenberg(3), g13457C());
  CHECK(hh.dim() == 10);
  CHECK(hh.bracket(2, 3) == e(1));
  CHECK(hh.bracket(4, 5) == e(6));  // [e1,e2]=e3 of the second factor, shifted
  CHECK(hh.bracket(6, 7) == e(10, -1));
  CHECK(hh.dual_labels()[3] == "y1");
  CHECK(jacobi_holds(hh));
  CHECK(upper_central_series(hh).nilpotent);
}

TEST_CASE("change of basis") {
  const LieAlgebra h = heisenberg(5);
  CHECK(change_basis(h, RationalMatrix::Identity(5, 5)) == h);

  RationalMatrix swap = RationalMatrix::Identity(5, 5);
  swap(1, 1) = swap(2, 2) = 0;
  swap(1, 2) = swap(2, 1) = 1;
  const LieAlgebra s = change_basis(h, swap);
  CHECK(s.bracket(2, 3) == e(1, -1));
  CHECK(s.bracket(4, 5) == e(1));

  RationalMatrix scale = RationalMatrix::Identity(5, 5);
  scale(0, 0) = 2;
  const LieAlgebra d = change_basis(h, scale);
  CHECK(d.structure_constant(2, 3, 1) == Rational(1, 2));
  CHECK(d.structure_constant(4, 5, 1) == Rational(1, 2));
  CHECK(jacobi_holds(d));
  CHECK(upper_central_series(d).dims == upper_central_series(h).dims);

  RationalMatrix singular = RationalMatrix::Identity(5, 5);
  singular(4, 4) = 0;
  CHECK_THROWS_AS(change_basis(h, singular), std::invalid_argument);
  CHECK_THROWS_AS(change_basis(h, RationalMatrix::Identity(4, 4)), std::invalid_argument);
}

TEST_CASE("change of basis preserves jacobi and ucs on random matrices") {
  std::mt19937 rng(99);
  std::vector<LieAlgebra> algebras{heisenberg(3), heisenberg(5), g13457C(), abelian(4)};
  for (const auto& v : testing::jacobi_violators()) {
    algebras.push_back(v);
  }
  for (const auto& g : algebras) {
    for (int trial = 0; trial < 5; ++trial) {
      const RationalMatrix t = testing::random_invertible(rng, g.dim());
      const LieAlgebra gt = change_basis(g, t);
      CHECK(jacobi_holds(gt) == jacobi_holds(g));
      if (jacobi_holds(g)) {
        CHECK(upper_central_series(gt).dims == upper_central_series(g).dims);
      }
      // Oracle: transported bracket agrees with the original on the new basis vectors.
      for (int a = 1; a <= g.dim(); ++a) {
        for (int b = a + 1; b <= g.dim(); ++b) {
          RationalVector lhs = RationalVector::Zero(g.dim());
          for (const auto& [k, c] : gt.bracket(a, b)) {
            lhs += c * t.col(k - 1);
          }
          CHECK(lhs == g.bracket(RationalVector(t.col(a - 1)), RationalVector(t.col(b - 1))));
        }
      }
    }
  }
}

TEST_CASE("parametric families") {
  MPoly lambda = MPoly::variable(1, 0);
  const BasicBracketTable<MPoly> br{
      {{1, 2}, {{3, MPoly::constant(1, 1)}}},
      {{1, 3}, {{4, lambda}}},
      {{2, 3}, {{4, Rational(2) * lambda - MPoly::constant(1, 1)}}}};
  const ParametricLieAlgebra fam("fam", 4, {"lambda"}, br, {Rational(0)});
  const LieAlgebra g = instantiate_params(fam, {{"lambda", Rational(1, 2)}});
  CHECK(g.structure_constant(1, 3, 4) == Rational(1, 2));
  CHECK(g.bracket(2, 3).empty());
  CHECK_THROWS_AS(instantiate_params(fam, {}), std::invalid_argument);
  CHECK_THROWS_AS(instantiate_params(fam, {{"lambda", Rational(0)}}), std::invalid_argument);
  const std::vector<Rational> extra{Rational(3)};
  CHECK_THROWS_AS(instantiate_params(fam, {{"lambda", Rational(3)}}, extra), std::invalid_argument);

  const ParametricLieAlgebra plain("plain", 3, {}, {{{2, 3}, {{1, MPoly::constant(0, 1)}}}});
  CHECK(instantiate_params(plain, {}) == heisenberg(3));
  CHECK(instantiate_params(plain, {{"lambda", Rational(5)}}) == heisenberg(3));
}
