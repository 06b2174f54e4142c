#include "doctest.h"
#include "parablat/boundary.hpp"
#include "parablat/fixtures.hpp"

using namespace parablat;

namespace {
BoundaryReport report_of(const char* key) {
  const Fixture fx = fixture(key);
  return boundary_report(fx.lattice, fx.isotropic, unimodular_complement(fx.lattice, fx.isotropic));
}
}  // namespace

TEST_CASE("automorphism groups of definite lattices") {
  CHECK(aut_definite(gram_A1()).order() == 2);
  CHECK(aut_definite(gram_A2()).order() == 12);
  CHECK(aut_definite(IntMatrix(0, 0)).order() == 1);
  CHECK(aut_definite(block_diagonal({gram_A1(), gram_A1()})).order() == 8);
  CHECK(gamma_Lambda(gram_A1()).order() == 1);
  CHECK(gamma_Lambda(gram_A2()).order() == 3);
  CHECK(closure({IntMatrix{{0, -1}, {1, 0}}}, 2).order() == 4);
}

TEST_CASE("short vectors") {
  CHECK(short_vectors(gram_A2(), 2).size() == 7);
  CHECK(short_vectors(gram_A1(), 8).size() == 5);
}

TEST_CASE("boundary report of FIX-L5") {
  const BoundaryReport r = report_of("FIX-L5");
  CHECK(r.consistent());
  CHECK(r.lambda_gram == gram_A1());
  CHECK(r.gamma_lstar_index == 1);
  CHECK(r.gamma_lstar_index_counted == 1);
  CHECK(r.iota_trivial);
  CHECK(r.o_lambda_order == 2);
  for (const auto& [name, ok] : r.checks) {
    CAPTURE(name);
    CHECK(ok);
  }
}

TEST_CASE("boundary report of FIX-L5b") {
  const BoundaryReport r = report_of("FIX-L5b");
  CHECK(r.consistent());
  CHECK(r.gamma_lstar.N == 2);
  CHECK(r.gamma_lstar.D == 1);
  CHECK(r.gamma_lstar_index == 3);
  CHECK(r.gamma_lstar_index_counted == 3);
}

TEST_CASE("boundary report of FIX-L7") {
  const BoundaryReport r = report_of("FIX-L7");
  CHECK(r.consistent());
  CHECK(r.delta_invariants == std::vector<Int>{3});
  CHECK(r.gamma_lambda.order() == 3);
  CHECK(r.o_lambda_order == 12);
  CHECK(r.iota_trivial);
}

TEST_CASE("boundary report of FIX-G5") {
  const BoundaryReport r = report_of("FIX-G5");
  CHECK(r.consistent());
  CHECK(r.gamma_lstar_index == 3);
  CHECK(r.gamma_iota.N == 4);
  CHECK(r.gamma_iota_index_in_lstar == 4);
  CHECK_FALSE(r.iota_trivial);
  bool some_nonzero = false;
  for (const BTableEntry& e : r.b_table) some_nonzero |= !e.in_gamma_iota;
  CHECK(some_nonzero);
  const std::string text = boundary_text(r, "FIX-G5");
  CHECK(text.find("b-table") != std::string::npos);
}

TEST_CASE("boundary report needs rank 2") {
  const Fixture fx = fixture("FIX-G3");
  CHECK_THROWS_AS(boundary_report(fx.lattice, fx.isotropic, unimodular_complement(fx.lattice, fx.isotropic)),
                  PreconditionError);
}
