#pragma once

#include <optional>
#include <vector>

#include "parablat/checks.hpp"
#include "parablat/serialize.hpp"

// JSON reports shared by the command-line tool and the Python module.
namespace parablat {

Json analyze_report(const EvenLattice& L, const std::optional<Sublattice>& I);
// Decomposition of v with membership by the frame and by direct tests.
Json vector_report(const IsotropicFrame& F, const RatVector& v);
// Conditions (i)-(iv), the assembled matrix and the oracle verdict.
Json member_report(const IsotropicFrame& F, const ParabolicCoords& c);
Json heis_report(const IsotropicFrame& F, const HeisenbergElement& h);
// Matrices must lie in SL(I_{L*}, I).
Json cocycle_report(const IsotropicFrame& F, const std::vector<RatMatrix>& ms);
Json selfcheck_report(const std::vector<checks::CheckResult>& results);

}  // namespace parablat
