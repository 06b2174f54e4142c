#pragma once

#include <string>

#include "json.hpp"
#include "parablat/boundary.hpp"

namespace parablat {

using Json = nlohmann::json;

Json to_json(const Rat& x);
Json to_json(const RatVector& v);
Json to_json(const RatMatrix& m);
Json to_json(const IntMatrix& m);
Json to_json(const std::vector<Int>& v);

Rat rat_from_json(const Json& j);
RatVector rat_vector_from_json(const Json& j);
RatMatrix rat_matrix_from_json(const Json& j);  // rows of "p/q" strings (or integers)
IntMatrix int_matrix_from_json(const Json& j);

Json lattice_to_json(const EvenLattice& L);
EvenLattice lattice_from_json(const Json& j);
Json sublattice_to_json(const Sublattice& s);  // {"basis": n×k rows}
Sublattice sublattice_from_json(const Json& j, std::size_t n);
Json coords_to_json(const ParabolicCoords& c);
ParabolicCoords coords_from_json(const Json& j);

Json decomposition_to_json(const VectorDecomposition& d);
Json frame_to_json(const IsotropicFrame& F);
Json conditions_to_json(const ConditionReport& r);
Json boundary_to_json(const BoundaryReport& r);
Json element_to_json(const FinQuadModule::Element& e);

Json parse_json(const std::string& text);  // throws InputError
Json read_json_file(const std::string& path);
std::string dump(const Json& j);
bool round_trips(const Json& j);

}  // namespace parablat
