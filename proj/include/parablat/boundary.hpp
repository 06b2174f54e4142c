#pragma once

#include <string>
#include <utility>
#include <vector>

#include "parablat/congruence.hpp"
#include "parablat/parabolic.hpp"

namespace parablat {

struct FiniteGroup {
  std::vector<IntMatrix> elements;
  std::vector<IntMatrix> generators;
  std::size_t order() const { return elements.size(); }
};

FiniteGroup closure(const std::vector<IntMatrix>& generators, std::size_t dim);

// O(Λ) of a positive definite Gram matrix by backtracking over vectors of the basis norms.
FiniteGroup aut_definite(const IntMatrix& gram, std::size_t max_order = 200000);
// Elements of O(Λ) with det 1 acting trivially on Λ*/Λ.
FiniteGroup gamma_Lambda(const IntMatrix& gram);

// Integer vectors x with xᵀ·gram·x ≤ bound, gram positive definite.
std::vector<IntVector> short_vectors(const IntMatrix& gram, const Int& bound);

struct BTableEntry {
  IntMatrix generator;                          // in the I-basis of the frame
  CocycleValue b;                               // b_M on generators of Δ_Λ, in U/I
  std::vector<FinQuadModule::Element> b_delta;  // the same class in Δ_Λ × Δ_Λ
  bool in_gamma_iota = false;
};

struct BoundaryReport {
  IntMatrix lambda_gram;
  std::vector<Int> delta_invariants;
  CongruenceParams gamma_lstar;
  std::size_t gamma_lstar_index = 0;          // by coset enumeration
  std::size_t gamma_lstar_index_counted = 0;  // by counting in SL2(Z/N)
  CongruenceParams gamma_iota;
  std::size_t gamma_iota_index_sl2 = 0;
  std::size_t gamma_iota_index_in_lstar = 0;  // by counting modulo the level of Γ_ι
  FiniteGroup gamma_lambda;
  std::size_t o_lambda_order = 0;
  std::vector<BTableEntry> b_table;
  bool iota_trivial = false;
  std::vector<std::pair<std::string, bool>> checks;
  bool consistent() const;
};

BoundaryReport boundary_report(const EvenLattice& L, const Sublattice& I, const Sublattice& Itilde);
std::string boundary_text(const BoundaryReport& r, const std::string& lattice_name);

}  // namespace parablat
