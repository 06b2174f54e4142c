#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parablat/lattice.hpp"

namespace parablat {

struct Fixture {
  std::string key;       // "FIX-H", "FIX-G3", ...
  std::string filename;  // "fix-h", ...
  EvenLattice lattice;
  Sublattice isotropic;  // default primitive isotropic sublattice
};

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

IntMatrix gram_H();
IntMatrix gram_H2();
IntMatrix gram_A1();
IntMatrix gram_A2();
IntMatrix gram_G3();

std::vector<Fixture> all_fixtures();
Fixture fixture(std::string_view key);  // accepts "FIX-L5" or "fix-l5"

// Span of the given standard basis vectors (0-based) in Z^n.
Sublattice coordinate_sublattice(std::size_t n, const std::vector<std::size_t>& indices);

}  // namespace parablat
