#include "doctest.h"
#include "parablat/fixtures.hpp"
#include "parablat/serialize.hpp"

using namespace parablat;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/2") == Rat(1, 2));
  CHECK(parse_rational("-3") == Rat(-3));
  CHECK(parse_rational("+4/6") == Rat(2, 3));
  CHECK(parse_rational("-0/5") == Rat(0));
  CHECK(parse_rational("123456789012345678901234567890") * 10 == parse_rational("1234567890123456789012345678900"));
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/-2", "1//2", " 1", "1/", "/2", "-", "0x10"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), InputError);
  }
  CHECK(to_string(Rat(3)) == "3");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
}

TEST_CASE("lattice and sublattice round trips") {
  for (const Fixture& fx : all_fixtures()) {
    CAPTURE(fx.key);
    const Json j = lattice_to_json(fx.lattice);
    CHECK(round_trips(j));
    const EvenLattice back = lattice_from_json(parse_json(dump(j)));
    CHECK(back.gram() == fx.lattice.gram());
    CHECK(dump(lattice_to_json(back)) == dump(j));
    const Json s = sublattice_to_json(fx.isotropic);
    CHECK(sublattice_from_json(parse_json(dump(s)), fx.lattice.dim()) == fx.isotropic);
  }
}

TEST_CASE("coordinate round trips") {
  const ParabolicCoords c{RatMatrix{{1, Rat(1, 2)}, {0, 1}}, RatMatrix{{-1}}, RatMatrix{{Rat(-7, 3)}, {2}},
                          RatMatrix{{0, Rat(5, 4)}, {Rat(-5, 4), 0}}};
  const std::string text = dump(coords_to_json(c));
  CHECK(coords_from_json(parse_json(text)) == c);
  CHECK(dump(coords_to_json(coords_from_json(parse_json(text)))) == text);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_json("{"), InputError);
  CHECK_THROWS_AS(lattice_from_json(parse_json(R"({"gram": [[2, 1]]})")), Error);
  CHECK_THROWS_AS(lattice_from_json(parse_json(R"({"gram": "x"})")), InputError);
  CHECK_THROWS_AS(rat_matrix_from_json(parse_json(R"([["1/2", 1], [3]])")), InputError);
  CHECK_THROWS_AS(rat_from_json(parse_json(R"("2/0")")), InputError);
  CHECK_THROWS_AS(rat_from_json(parse_json("1.5")), InputError);
  CHECK_THROWS_AS(sublattice_from_json(parse_json(R"({"basis": [[1], [0]]})"), 3), InputError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
  CHECK(rat_from_json(parse_json("7")) == Rat(7));
}

TEST_CASE("report writers produce stable JSON") {
  const Fixture fx = fixture("FIX-G5");
  const IsotropicFrame F = IsotropicFrame::build(fx.lattice, fx.isotropic);
  const Json f = frame_to_json(F);
  CHECK(round_trips(f));
  CHECK(f["alpha"].is_array());
  CHECK(f["iota_class_trivial"] == false);
  const Json b = boundary_to_json(boundary_report(fx.lattice, fx.isotropic, F.Itilde()));
  CHECK(round_trips(b));
  const Json d = decomposition_to_json(F.decompose(RatVector{0, 1, 0, 0, 0}));
  CHECK(round_trips(d));
}
