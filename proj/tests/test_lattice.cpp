#include "doctest.h"
#include "parablat/finquad.hpp"
#include "parablat/fixtures.hpp"

using namespace parablat;

namespace {
RatVector vec(std::initializer_list<Rat> xs) { return RatVector(xs); }
}  // namespace

TEST_CASE("lattice validation") {
  CHECK_THROWS_AS(EvenLattice("odd", IntMatrix{{1}}), PreconditionError);
  CHECK_THROWS_AS(EvenLattice("asym", IntMatrix{{2, 1}, {0, 2}}), PreconditionError);
  CHECK_THROWS_AS(EvenLattice("degenerate", IntMatrix{{2, 2}, {2, 2}}), PreconditionError);
  CHECK(fixture("FIX-L5").lattice.signature() == std::pair{3, 2});
  CHECK(fixture("fix-g3").lattice.signature() == std::pair{2, 1});
}

TEST_CASE("dual lattice") {
  const EvenLattice H = fixture("FIX-H").lattice;
  CHECK(dual_lattice(H) == H.lattice());
  const EvenLattice A1("A1", gram_A1());
  CHECK(dual_lattice(A1) == Sublattice(RatMatrix{{Rat(1, 2)}}));
  const EvenLattice G3 = fixture("FIX-G3").lattice;
  const RatMatrix expected{{Rat(1, 8), Rat(1, 2), Rat(-1, 4)}, {Rat(1, 2), 0, 0}, {Rat(-1, 4), 0, Rat(1, 2)}};
  CHECK(G3.gram_rat() * expected == RatMatrix::identity(3));
  CHECK(G3.gram_inverse() == expected);
  CHECK(dual_lattice(G3) == Sublattice(expected));
}

TEST_CASE("discriminant groups") {
  CHECK(discriminant_group(fixture("FIX-H").lattice).trivial());
  const FinQuadModule a1 = discriminant_group(EvenLattice("A1", gram_A1()));
  CHECK(a1.invariants() == std::vector<Int>{2});
  CHECK(a1.q(a1.unit(0)) == Rat(1, 4));
  const FinQuadModule g3 = discriminant_group(fixture("FIX-G3").lattice);
  CHECK(g3.order() == 8);
  CHECK(g3.elements().size() == 8);
  const FinQuadModule a2 = discriminant_group(EvenLattice("A2", gram_A2()));
  CHECK(a2.invariants() == std::vector<Int>{3});
  CHECK(a2.q(a2.unit(0)) == Rat(1, 3));
}

TEST_CASE("isotropy") {
  const EvenLattice H = fixture("FIX-H").lattice;
  CHECK(is_isotropic(H, Sublattice(RatMatrix{{1}, {0}})));
  CHECK_FALSE(is_isotropic(H, Sublattice(RatMatrix{{1}, {1}})));
  CHECK(is_isotropic(H, Sublattice::zero(2)));
}

TEST_CASE("orthogonal complements and intersections") {
  const EvenLattice H = fixture("FIX-H").lattice;
  const Sublattice e1(RatMatrix{{1}, {0}});
  CHECK(perp_in(H, e1, H.lattice()) == e1);

  const EvenLattice G3 = fixture("FIX-G3").lattice;
  const Sublattice v1 = coordinate_sublattice(3, {0});
  CHECK(perp_in(G3, v1, G3.lattice()) == coordinate_sublattice(3, {0, 2}));
  const Sublattice i_lstar = intersect_with_span(dual_lattice(G3), v1.basis());
  CHECK(i_lstar == Sublattice(RatMatrix{{Rat(1, 2)}, {0}, {0}}));
  CHECK(intersect(i_lstar, G3.lattice()) == v1);
  CHECK(index_in(v1, i_lstar) == 2);
}

TEST_CASE("quotient forms") {
  SUBCASE("FIX-L5") {
    const Fixture fx = fixture("FIX-L5");
    const Sublattice perp = perp_in(fx.lattice, fx.isotropic, fx.lattice.lattice());
    CHECK(perp == coordinate_sublattice(5, {0, 2, 4}));
    const QuotientForm q = quotient_form(fx.lattice, perp, fx.isotropic);
    CHECK(q.lambda.gram() == gram_A1());
  }
  SUBCASE("FIX-G3") {
    const Fixture fx = fixture("FIX-G3");
    const QuotientForm q = quotient_form(fx.lattice, perp_in(fx.lattice, fx.isotropic, fx.lattice.lattice()), fx.isotropic);
    CHECK(q.lambda.gram() == gram_A1());
    CHECK(q.section == RatMatrix{{0}, {0}, {1}});
  }
  SUBCASE("FIX-H has rank-0 quotient") {
    const Fixture fx = fixture("FIX-H");
    const QuotientForm q = quotient_form(fx.lattice, perp_in(fx.lattice, fx.isotropic, fx.lattice.lattice()), fx.isotropic);
    CHECK(q.lambda.dim() == 0);
  }
  SUBCASE("non-isotropic I rejected") {
    const EvenLattice H = fixture("FIX-H").lattice;
    CHECK_THROWS_AS(quotient_form(H, H.lattice(), H.lattice()), PreconditionError);
  }
}

TEST_CASE("H_I data") {
  const IsotropicSubgroupData l5 = H_I_data(fixture("FIX-L5").lattice, fixture("FIX-L5").isotropic);
  CHECK(l5.order == 1);
  CHECK(l5.consistent());
  const IsotropicSubgroupData g3 = H_I_data(fixture("FIX-G3").lattice, fixture("FIX-G3").isotropic);
  CHECK(g3.order == 2);
  CHECK(g3.i_lstar == Sublattice(RatMatrix{{Rat(1, 2)}, {0}, {0}}));
  CHECK(g3.isotropic);
  CHECK(g3.lambda_invariants == std::vector<Int>{2});
  CHECK(g3.consistent());
  const IsotropicSubgroupData h = H_I_data(fixture("FIX-H").lattice, fixture("FIX-H").isotropic);
  CHECK(h.order == 1);
  CHECK(h.lambda_invariants.empty());
  CHECK_THROWS_AS(H_I_data(fixture("FIX-H").lattice, Sublattice(RatMatrix{{2}, {0}})), PreconditionError);
}

TEST_CASE("sublattice canonical form") {
  const Sublattice a(RatMatrix{{1, 1}, {0, 2}});
  CHECK(a == Sublattice(RatMatrix{{1, 0}, {2, 2}}));
  CHECK(a == Sublattice(RatMatrix{{1, 1, 2}, {2, 0, 2}}));
  CHECK(a.rank() == 2);
  CHECK(a.contains(vec({2, 2})));
  CHECK(a.contains(vec({1, 0})));
  CHECK_FALSE(a.contains(vec({0, 1})));
  CHECK(a.coordinates(vec({1, 0})).has_value());
  CHECK_FALSE(a.coordinates(vec({Rat(1, 2), 0})).has_value());
  CHECK(index_in(a, Sublattice::standard(2)) == 2);
  CHECK(lattice_sum(a, Sublattice(RatMatrix{{0}, {1}})) == Sublattice::standard(2));
  CHECK(is_primitive_in(Sublattice(RatMatrix{{1}, {1}}), Sublattice::standard(2)));
  CHECK_FALSE(is_primitive_in(Sublattice(RatMatrix{{2}, {0}}), Sublattice::standard(2)));
}
