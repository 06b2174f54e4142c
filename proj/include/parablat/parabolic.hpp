#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parablat/frame.hpp"

namespace parablat {

// Coordinates of an element of P_U, Levi part acting first:
//   M     r×r, action on U in the I-basis
//   gamma m×m, action on W in the Λ̃-basis
//   psi   r×m, ψ̃: W̃ → U (Λ̃-basis → I-basis)
//   eta   r×r, η̃: Ũ → U (dual Ĩ-basis → I-basis), antisymmetric
struct ParabolicCoords {
  RatMatrix M, gamma, psi, eta;
  friend bool operator==(const ParabolicCoords&, const ParabolicCoords&) = default;
};

struct HeisenbergElement {
  RatMatrix psi, eta;
  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

ParabolicCoords identity_coords(const IsotropicFrame& F);
HeisenbergElement heis_identity(const IsotropicFrame& F);
void check_coords(const ParabolicCoords& c, const IsotropicFrame& F);

// ψ̃*: Ũ → W̃ as an m×r matrix (dual Ĩ-basis → Λ̃-basis).
RatMatrix psi_dual(const RatMatrix& psi, const IsotropicFrame& F);
// (ψφ* − φψ*)/2
RatMatrix heis_form(const RatMatrix& psi, const RatMatrix& phi, const IsotropicFrame& F);

RatMatrix assemble(const ParabolicCoords& c, const IsotropicFrame& F);
ParabolicCoords decompose_parabolic(const RatMatrix& a, const IsotropicFrame& F);

HeisenbergElement heis_mul(const HeisenbergElement& h, const HeisenbergElement& k, const IsotropicFrame& F);
HeisenbergElement heis_inverse(const HeisenbergElement& h);
ParabolicCoords heis_times(const HeisenbergElement& h, const ParabolicCoords& c, const IsotropicFrame& F);

// Representative of c_ψ: antisymmetric, strictly-upper entries in [0, 1).
RatMatrix c_psi(const RatMatrix& psi, const IsotropicFrame& F);
bool zheis_member(const HeisenbergElement& h, const IsotropicFrame& F);

struct DetSpinor {
  int det = 1;
  int spinor_sign = 1;
  friend bool operator==(const DetSpinor&, const DetSpinor&) = default;
};
// Reflection vectors v_1, ..., v_k with a = σ_{v_1}···σ_{v_k}.
std::vector<RatVector> reflection_factorization(const RatMatrix& a, const RatMatrix& gram);
RatMatrix reflection(const RatVector& v, const RatMatrix& gram);
DetSpinor det_spinor(const RatMatrix& a, const RatMatrix& gram);
DetSpinor det_spinor_shortcut(const ParabolicCoords& c, const IsotropicFrame& F);

bool in_identity_component(const ParabolicCoords& c, const IsotropicFrame& F);

// M ∈ SL(I) with (Id − M)J ⊆ I, J given by a basis in I-coordinates.
bool sl_JI_member(const RatMatrix& M, const RatMatrix& j_coords);
bool sl_JI_member(const RatMatrix& M, const Sublattice& J, const Sublattice& I);

bool gamma_lambda_member(const RatMatrix& gamma, const IsotropicFrame& F);

struct ConditionReport {
  bool identity_component = false;
  std::optional<bool> gamma_in_gamma_lambda;  // (i)
  std::optional<bool> m_in_sl;                // (ii)
  std::optional<bool> psi_condition;          // (iii)
  std::optional<bool> eta_condition;          // (iv)
  std::vector<std::string> witnesses;
  bool member = false;
};
ConditionReport gamma_LI_member_conditions(const ParabolicCoords& c, const IsotropicFrame& F);
bool gamma_LI_member_direct(const RatMatrix& a, const IsotropicFrame& F);

// η-part forced by (iv) for given M and ψ, modulo Hom^as(I*, I); nullopt when no
// antisymmetric solution exists.
std::optional<RatMatrix> complete_eta(const RatMatrix& M, const RatMatrix& psi, const IsotropicFrame& F);
ParabolicCoords complete_to_element(const RatMatrix& M, const RatMatrix& gamma, const IsotropicFrame& F);

// b_M on the generators of Δ_Λ, each value in I-coordinates reduced modulo I.
using CocycleValue = std::vector<RatVector>;
CocycleValue cocycle_b(const RatMatrix& M, const IsotropicFrame& F);
CocycleValue cocycle_act(const RatMatrix& M, const CocycleValue& b, const IsotropicFrame& F);
CocycleValue cocycle_add(const CocycleValue& a, const CocycleValue& b, const IsotropicFrame& F);
bool cocycle_is_zero(const CocycleValue& b);
bool cocycle_law_check(const RatMatrix& M, const RatMatrix& N, const IsotropicFrame& F);
// b_M as an element of Δ_Λ^r via a lift ψ ∈ Hom(Λ, I) and ψ* on the dual basis.
std::vector<FinQuadModule::Element> cocycle_in_delta(const RatMatrix& M, const IsotropicFrame& F);

// The lift of b_M to ψ ∈ Hom(Λ, I), in Λ̃-basis → I-basis, with I-coordinates of ψ on Λ̃* in [0, 1).
RatMatrix psi_lift(const RatMatrix& M, const IsotropicFrame& F);

enum class Level { Lstar, Iota };

struct CongruenceParams {
  Int N, D;
  RatMatrix basis_change;  // columns: adapted basis (α, β) of I in I-coordinates
  std::string description;
};
CongruenceParams rank2_congruence_params(const IsotropicFrame& F, Level level = Level::Lstar);

}  // namespace parablat
