#include "doctest.h"
#include "parablat/lattice.hpp"

using namespace parablat;

TEST_CASE("hnf of the identity is trivial") {
  const IntMatrix id = IntMatrix::identity(3);
  const HnfResult r = hnf(id);
  CHECK(r.h == id);
  CHECK(r.u == id);
  CHECK(r.rank() == 3);
}

TEST_CASE("hnf of a triangular 2x2") {
  const IntMatrix m{{2, 1}, {0, 3}};
  const HnfResult r = hnf(m);
  CHECK(r.u * m == r.h);
  CHECK(abs(det(r.u)) == 1);
  // Row echelon, positive pivots, entries above pivots reduced: this input already is.
  CHECK(r.h == IntMatrix{{2, 1}, {0, 3}});
  CHECK(r.h(0, 0) * r.h(1, 1) == abs(det(m)));
}

TEST_CASE("hnf of a zero matrix") {
  const IntMatrix z(2, 3);
  const HnfResult r = hnf(z);
  CHECK(r.h == z);
  CHECK(r.u == IntMatrix::identity(2));
  CHECK(r.rank() == 0);
}

TEST_CASE("hnf reduces entries above pivots") {
  const IntMatrix m{{4, 7, 2}, {0, 5, 9}, {6, 1, 1}};
  const HnfResult r = hnf(m);
  CHECK(r.u * m == r.h);
  CHECK(is_unimodular(r.u));
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      CHECK(r.h(j, r.pivots[i]) >= 0);
      CHECK(r.h(j, r.pivots[i]) < r.h(i, r.pivots[i]));
    }
}

TEST_CASE("snf examples") {
  SUBCASE("already diagonal") {
    const SnfResult r = snf(IntMatrix{{2, 0}, {0, 4}});
    CHECK(r.d == IntMatrix{{2, 0}, {0, 4}});
  }
  SUBCASE("hyperbolic plane scaled by 2") {
    const IntMatrix m{{0, 2}, {2, 0}};
    const SnfResult r = snf(m);
    CHECK(r.u * m * r.v == r.d);
    CHECK(r.d == IntMatrix{{2, 0}, {0, 2}});
    CHECK(is_unimodular(r.u));
    CHECK(is_unimodular(r.v));
  }
  SUBCASE("unimodular input") {
    const SnfResult r = snf(IntMatrix{{0, 1}, {1, 0}});
    CHECK(r.d == IntMatrix::identity(2));
  }
  SUBCASE("divisibility is repaired") {
    const IntMatrix m{{2, 0}, {0, 3}};
    const SnfResult r = snf(m);
    CHECK(r.u * m * r.v == r.d);
    CHECK(r.diagonal() == std::vector<Int>{1, 6});
  }
}

TEST_CASE("rat_solve") {
  const RatMatrix b{{Rat(1, 3), 2}, {5, Rat(-7, 2)}};
  CHECK(*rat_solve(RatMatrix::identity(2), b) == b);
  CHECK(*rat_solve(RatMatrix{{2}}, RatMatrix{{1}}) == RatMatrix{{Rat(1, 2)}});
  const RatMatrix a{{1}, {1}};
  CHECK_FALSE(rat_solve(a, RatMatrix{{0}, {1}}).has_value());
  CHECK_THROWS_AS(rat_solve_or_throw(a, RatMatrix{{0}, {1}}), NoSolution);
}

TEST_CASE("saturation") {
  CHECK(saturation(IntMatrix{{2}, {0}}) == IntMatrix{{1}, {0}});
  const IntMatrix p{{1}, {1}};
  CHECK(Sublattice(to_rat(saturation(p))) == Sublattice(to_rat(p)));
  const IntMatrix m{{2, 0}, {0, 3}, {0, 0}};
  CHECK(Sublattice(to_rat(saturation(m))) == Sublattice(RatMatrix{{1, 0}, {0, 1}, {0, 0}}));
  CHECK_THROWS_AS(saturation(IntMatrix{{1, 2}, {2, 4}}), PreconditionError);
}

TEST_CASE("determinants, inverse, kernels") {
  CHECK(det(IntMatrix{{0, 2, 0}, {2, 0, 1}, {0, 1, 2}}) == -8);
  const RatMatrix g{{0, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  CHECK(g * inverse(g) == RatMatrix::identity(3));
  CHECK_THROWS_AS(inverse(RatMatrix{{1, 2}, {2, 4}}), PreconditionError);
  const IntMatrix k = kernel_int(RatMatrix{{2, 4, 6}});
  CHECK(k.cols() == 2);
  CHECK((to_rat(IntMatrix{{2, 4, 6}}) * to_rat(k)).is_zero());
  const auto x = solve_int(RatMatrix{{2, 3}}, RatVector{1});
  REQUIRE(x.has_value());
  CHECK(2 * (*x)[0] + 3 * (*x)[1] == 1);
  CHECK_FALSE(solve_int(RatMatrix{{2, 4}}, RatVector{1}).has_value());
}
