#include "doctest.h"
#include "parablat/fixtures.hpp"
#include "parablat/parabolic.hpp"

using namespace parablat;

namespace {
IsotropicFrame frame_of(const char* key) {
  const Fixture fx = fixture(key);
  return IsotropicFrame::build(fx.lattice, fx.isotropic);
}
RatMatrix antisym(const Rat& t) { return RatMatrix{{0, t}, {-t, 0}}; }
}  // namespace

TEST_CASE("assemble and decompose are inverse") {
  const IsotropicFrame F = frame_of("FIX-L5");
  const ParabolicCoords c{RatMatrix{{1, 2}, {0, 1}}, RatMatrix{{-1}}, RatMatrix{{Rat(1, 2)}, {3}},
                          antisym(Rat(2, 3))};
  const RatMatrix a = assemble(c, F);
  CHECK(a.transpose() * F.lattice().gram_rat() * a == F.lattice().gram_rat());
  CHECK(decompose_parabolic(a, F) == c);
  CHECK(assemble(identity_coords(F), F) == RatMatrix::identity(5));

  const IsotropicFrame H = frame_of("FIX-H");
  CHECK_THROWS_AS(decompose_parabolic(RatMatrix{{0, 1}, {1, 0}}, H), NotInParabolic);
  CHECK_THROWS_AS(decompose_parabolic(RatMatrix{{1, 1}, {0, 1}}, H), PreconditionError);
  CHECK_THROWS_AS(check_coords({RatMatrix{{1}}, RatMatrix{{1}}, RatMatrix{{0}}, RatMatrix{{0}}}, H),
                  PreconditionError);
}

TEST_CASE("Heisenberg group law") {
  const IsotropicFrame F = frame_of("FIX-L7");
  const RatMatrix G = F.lambda_gram_rat();
  const HeisenbergElement h{RatMatrix{{1, 0}, {0, 0}} * G, RatMatrix(2, 2)};
  const HeisenbergElement k{RatMatrix{{0, 0}, {0, 1}} * G, RatMatrix(2, 2)};
  const HeisenbergElement comm = heis_mul(heis_mul(h, k, F), heis_mul(heis_inverse(h), heis_inverse(k), F), F);
  CHECK(comm.psi == RatMatrix(2, 2));
  CHECK(abs(comm.eta(0, 1)) == 1);
  CHECK(comm.eta(1, 0) == -comm.eta(0, 1));
  CHECK(heis_mul(h, heis_inverse(h), F) == heis_identity(F));
  const HeisenbergElement x{RatMatrix{{Rat(1, 3), 1}, {2, Rat(-1, 2)}}, antisym(5)};
  CHECK(heis_mul(heis_mul(h, k, F), x, F) == heis_mul(h, heis_mul(k, x, F), F));
}

TEST_CASE("c_psi representatives") {
  const IsotropicFrame L7 = frame_of("FIX-L7");
  CHECK(c_psi(RatMatrix(2, 2), L7) == RatMatrix(2, 2));
  CHECK(c_psi(L7.lambda_gram_rat(), L7) == antisym(Rat(1, 2)));
  CHECK(c_psi(RatMatrix{{1, 0}, {0, 0}} * L7.lambda_gram_rat(), L7) == RatMatrix(2, 2));
  CHECK_THROWS_AS(c_psi(RatMatrix{{1, 0}, {0, 0}}, L7), NotIntegral);

  const IsotropicFrame L5 = frame_of("FIX-L5");
  CHECK(c_psi(RatMatrix{{2}, {2}}, L5) == RatMatrix(2, 2));
  const HeisenbergElement z{RatMatrix{{2}, {2}}, RatMatrix(2, 2)};
  CHECK(zheis_member(z, L5));
  CHECK(zheis_member({RatMatrix{{2}, {2}}, antisym(3)}, L5));
  CHECK_FALSE(zheis_member({RatMatrix{{2}, {2}}, antisym(Rat(1, 2))}, L5));
  CHECK_FALSE(zheis_member({RatMatrix{{1}, {0}}, RatMatrix(2, 2)}, L5));
  CHECK(zheis_member({L7.lambda_gram_rat(), antisym(Rat(1, 2))}, L7));
  CHECK_FALSE(zheis_member({L7.lambda_gram_rat(), RatMatrix(2, 2)}, L7));
}

TEST_CASE("determinant and spinor norm") {
  const RatMatrix H = to_rat(gram_H());
  CHECK(det_spinor(RatMatrix{{0, 1}, {1, 0}}, H) == DetSpinor{-1, -1});
  CHECK(det_spinor(-RatMatrix::identity(2), H) == DetSpinor{1, -1});
  CHECK(det_spinor(RatMatrix::identity(2), H) == DetSpinor{1, 1});
  CHECK(det_spinor(RatMatrix{{0, -1}, {-1, 0}}, H) == DetSpinor{-1, 1});
  const RatMatrix A1 = to_rat(gram_A1());
  CHECK(det_spinor(RatMatrix{{-1}}, A1) == DetSpinor{-1, 1});

  const RatMatrix g = to_rat(gram_G3());
  const RatMatrix a = reflection(RatVector{0, 1, 1}, g) * reflection(RatVector{0, 0, 1}, g);
  const std::vector<RatVector> f = reflection_factorization(a, g);
  RatMatrix prod = RatMatrix::identity(3);
  for (const RatVector& v : f) prod = prod * reflection(v, g);
  CHECK(prod == a);
  CHECK(f.size() <= 3);
}

TEST_CASE("identity component") {
  const IsotropicFrame F = frame_of("FIX-L5");
  CHECK(in_identity_component(identity_coords(F), F));
  ParabolicCoords c = identity_coords(F);
  c.M = RatMatrix{{-1, 0}, {0, 1}};
  CHECK_FALSE(in_identity_component(c, F));
  c.gamma = RatMatrix{{-1}};
  CHECK_FALSE(in_identity_component(c, F));
  c.M = RatMatrix{{2, 0}, {0, Rat(1, 2)}};
  c.gamma = RatMatrix{{1}};
  CHECK(in_identity_component(c, F));
  CHECK(det_spinor_shortcut(c, F) == det_spinor(assemble(c, F), F.lattice().gram_rat()));
}

TEST_CASE("SL(J, I) membership") {
  CHECK(sl_JI_member(RatMatrix{{1}}, RatMatrix{{Rat(1, 2)}}));
  CHECK_FALSE(sl_JI_member(RatMatrix{{-1}}, RatMatrix{{Rat(1, 2)}}));
  CHECK(sl_JI_member(RatMatrix{{1, 1}, {0, 1}}, RatMatrix::identity(2)));
  CHECK_FALSE(sl_JI_member(RatMatrix{{2, 1}, {1, 0}}, RatMatrix::identity(2)));
  const RatMatrix J{{Rat(1, 2), 0}, {0, 1}};
  CHECK(sl_JI_member(RatMatrix{{1, 1}, {0, 1}}, J));
  CHECK_FALSE(sl_JI_member(RatMatrix{{1, 0}, {1, 1}}, J));
  CHECK(sl_JI_member(RatMatrix{{1, 0}, {2, 1}}, J));
}

TEST_CASE("membership conditions") {
  const IsotropicFrame F = frame_of("FIX-L5");
  const ConditionReport id = gamma_LI_member_conditions(identity_coords(F), F);
  CHECK(id.member);
  CHECK(id.identity_component);
  CHECK(gamma_LI_member_direct(RatMatrix::identity(5), F));

  ParabolicCoords c = identity_coords(F);
  c.psi = RatMatrix{{Rat(1, 2)}, {0}};
  if (auto eta = complete_eta(c.M, c.psi, F)) c.eta = *eta;
  const ConditionReport bad = gamma_LI_member_conditions(c, F);
  CHECK_FALSE(bad.member);
  REQUIRE(bad.psi_condition.has_value());
  CHECK_FALSE(*bad.psi_condition);
  CHECK_FALSE(gamma_LI_member_direct(assemble(c, F), F));

  c = identity_coords(F);
  c.eta = antisym(Rat(1, 2));
  const ConditionReport eta_bad = gamma_LI_member_conditions(c, F);
  CHECK_FALSE(eta_bad.member);
  REQUIRE(eta_bad.eta_condition.has_value());
  CHECK_FALSE(*eta_bad.eta_condition);

  c = identity_coords(F);
  c.eta = antisym(4);
  CHECK(gamma_LI_member_conditions(c, F).member);
}

TEST_CASE("completion to an element") {
  for (const char* key : {"FIX-L5", "FIX-L5b", "FIX-L7", "FIX-G5"}) {
    CAPTURE(key);
    const IsotropicFrame F = frame_of(key);
    const RatMatrix M{{1, 2}, {0, 1}};
    const RatMatrix gamma = RatMatrix::identity(F.m());
    const ParabolicCoords c = complete_to_element(M, gamma, F);
    CHECK(c.M == M);
    CHECK(c.gamma == gamma);
    CHECK(gamma_LI_member_conditions(c, F).member);
    CHECK(gamma_LI_member_direct(assemble(c, F), F));
  }
}

TEST_CASE("cocycle on FIX-G5") {
  const IsotropicFrame F = frame_of("FIX-G5");
  const RatMatrix M{{3, 1}, {2, 1}};
  const CocycleValue b = cocycle_b(M, F);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == RatVector{Rat(1, 2), Rat(1, 2)});
  CHECK(cocycle_is_zero(cocycle_b(RatMatrix::identity(2), F)));
  CHECK(cocycle_law_check(M, RatMatrix{{1, 1}, {0, 1}}, F));
  const RatMatrix psi = psi_lift(M, F);
  CHECK(is_integral(psi));
}

TEST_CASE("rank-2 congruence parameters") {
  auto params = [](const char* key, Level level) {
    const CongruenceParams p = rank2_congruence_params(frame_of(key), level);
    return std::pair{p.N, p.D};
  };
  CHECK(params("FIX-L5", Level::Lstar) == std::pair{Int(1), Int(1)});
  CHECK(params("FIX-L5b", Level::Lstar) == std::pair{Int(2), Int(1)});
  CHECK(params("FIX-G5", Level::Lstar) == std::pair{Int(2), Int(1)});
  CHECK(params("FIX-G5", Level::Iota) == std::pair{Int(4), Int(1)});
  CHECK(params("FIX-L7", Level::Iota) == std::pair{Int(1), Int(1)});
  CHECK_THROWS_AS(rank2_congruence_params(frame_of("FIX-G3")), PreconditionError);
}
