#include "doctest.h"
#include "parablat/fixtures.hpp"
#include "parablat/frame.hpp"

using namespace parablat;

namespace {
IsotropicFrame frame_of(const char* key) {
  const Fixture fx = fixture(key);
  return IsotropicFrame::build(fx.lattice, fx.isotropic);
}
RatVector e(std::size_t n, std::size_t i) {
  RatVector v(n);
  v[i] = 1;
  return v;
}
}  // namespace

TEST_CASE("unimodular complement pairs to the identity") {
  for (const Fixture& fx : all_fixtures()) {
    CAPTURE(fx.key);
    const Sublattice c = unimodular_complement(fx.lattice, fx.isotropic);
    CHECK(c.rank() == fx.isotropic.rank());
    const RatMatrix p = fx.lattice.pairings(fx.isotropic.basis(), c.basis());
    CHECK(abs(det(p)) == 1);
    CHECK(dual_lattice(fx.lattice).contains(c));
  }
  SUBCASE("FIX-H") {
    const Sublattice c = unimodular_complement(fixture("FIX-H").lattice, fixture("FIX-H").isotropic);
    CHECK(c.contains(e(2, 1)));
  }
}

TEST_CASE("frame of FIX-G3") {
  const IsotropicFrame F = frame_of("FIX-G3");
  CHECK(F.r() == 1);
  CHECK(F.m() == 1);
  CHECK(F.lambda_gram() == gram_A1());
  CHECK(F.alpha() == RatMatrix{{Rat(1, 16)}});
  CHECK(F.i_lstar_coords() == RatMatrix{{Rat(1, 2)}});
  CHECK(F.i_iota_coords() == RatMatrix{{Rat(1, 4)}});
  CHECK(F.delta_lambda().invariants() == std::vector<Int>{2});
  REQUIRE(F.iota_table().size() == 1);
  CHECK(F.iota_table()[0] == IntVector{1});
  CHECK(F.iota_dual(IntVector{1}) == RatVector{Rat(1, 4)});

  const VectorDecomposition d = F.decompose(e(3, 1));
  CHECK(d.u == RatVector{Rat(-1, 4), 0, 0});
  CHECK(d.w == RatVector{0, 0, Rat(1, 2)});
  CHECK(d.u + d.w + d.utilde == e(3, 1));
  CHECK(F.lattice().pairing(d.utilde, e(3, 0)) == 2);

  CHECK(F.member(e(3, 1), Target::L));
  CHECK(F.member(RatVector{Rat(1, 2), 0, 0}, Target::Lstar));
  CHECK_FALSE(F.member(RatVector{Rat(1, 2), 0, 0}, Target::L));
  CHECK_FALSE(F.member(RatVector{Rat(1, 4), 0, 0}, Target::Lstar));
  CHECK(F.member(RatVector{Rat(-1, 4), 0, Rat(1, 2)}, Target::Lstar));
  CHECK_FALSE(F.member(RatVector{Rat(1, 8), Rat(1, 2), Rat(-1, 4)}, Target::LstarI));
  CHECK(F.member(RatVector{0, 1, 0}, Target::LstarI));

  CHECK_FALSE(iota_class_trivial(F).trivial);
}

TEST_CASE("frame of FIX-L5") {
  const IsotropicFrame F = frame_of("FIX-L5");
  CHECK(F.r() == 2);
  CHECK(F.m() == 1);
  CHECK(F.lambda_gram() == gram_A1());
  CHECK(F.alpha() == RatMatrix(2, 2));
  CHECK(F.i_lstar_coords() == RatMatrix::identity(2));
  CHECK(F.i_iota_coords() == RatMatrix::identity(2));
  for (const auto& x : F.iota_table()) CHECK(F.delta_lambda().is_zero(x));
  const IotaClassResult t = iota_class_trivial(F);
  CHECK(t.trivial);
  REQUIRE(t.witness.has_value());
}

TEST_CASE("frame of FIX-G5") {
  const IsotropicFrame F = frame_of("FIX-G5");
  CHECK(F.r() == 2);
  CHECK(F.m() == 1);
  CHECK(F.i_lstar() == Sublattice(RatMatrix{{Rat(1, 2), 0}, {0, 0}, {0, 0}, {0, 1}, {0, 0}}));
  CHECK(F.i_iota() == Sublattice(RatMatrix{{Rat(1, 4), 0}, {0, 0}, {0, 0}, {0, 1}, {0, 0}}));
  CHECK_FALSE(iota_class_trivial(F).trivial);
}

TEST_CASE("frame of FIX-L7") {
  const IsotropicFrame F = frame_of("FIX-L7");
  CHECK(F.m() == 2);
  CHECK(F.delta_lambda().order() == 3);
  CHECK(iota_class_trivial(F).trivial);
}

TEST_CASE("frames reject bad inputs") {
  const Fixture h = fixture("FIX-H");
  CHECK_THROWS_AS(IsotropicFrame::build(h.lattice, Sublattice(RatMatrix{{1}, {1}})), PreconditionError);
  CHECK_THROWS_AS(IsotropicFrame::build(h.lattice, Sublattice(RatMatrix{{2}, {0}})), PreconditionError);
  const Fixture l5 = fixture("FIX-L5");
  CHECK_THROWS_AS(IsotropicFrame::build(l5.lattice, l5.isotropic, coordinate_sublattice(5, {1, 4})),
                  PreconditionError);
}

TEST_CASE("change of complement") {
  const IsotropicFrame F = frame_of("FIX-L5");
  SUBCASE("same complement") {
    const ComplementChange c = change_complement(F, F.Itilde());
    CHECK(c.phi == RatMatrix(1, 2));
    CHECK(c.beta == RatMatrix(2, 2));
    CHECK(c.consistent());
  }
  SUBCASE("shifted complement") {
    const Sublattice hat(RatMatrix{{0, 0}, {1, 0}, {0, 0}, {0, 1}, {1, 0}});
    const ComplementChange c = change_complement(F, hat);
    CHECK(c.consistent());
    CHECK(c.frame.Itilde() == hat);
    CHECK(c.phi != RatMatrix(1, 2));
  }
}
