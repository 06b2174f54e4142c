#pragma once

#include <optional>
#include <vector>

#include "parablat/finquad.hpp"

namespace parablat {

// Components of a vector of V in U ⊕ W̃ ⊕ Ũ, both as vectors (L-coordinates)
// and as coordinates against the frame bases of I, Λ̃ and the dual basis of Ĩ.
struct VectorDecomposition {
  RatVector u, w, utilde;
  RatVector u_coords, w_coords, utilde_coords;
};

enum class Target { L, Lstar, LstarI };

// Complement Ĩ ⊆ L* pairing unimodularly with I: complete I to a basis of L
// and keep the part of the dual basis that is dual to I.
Sublattice unimodular_complement(const EvenLattice& L, const Sublattice& I);

class IsotropicFrame {
 public:
  using Element = FinQuadModule::Element;

  static IsotropicFrame build(const EvenLattice& L, const Sublattice& I, const Sublattice& Itilde);
  static IsotropicFrame build(const EvenLattice& L, const Sublattice& I) {
    return build(L, I, unimodular_complement(L, I));
  }

  const EvenLattice& lattice() const { return L_; }
  std::size_t n() const { return L_.dim(); }
  std::size_t r() const { return I_.rank(); }  // rank of I
  std::size_t m() const { return lambda_.rank(); }  // rank of Λ

  const Sublattice& I() const { return I_; }
  const Sublattice& Itilde() const { return itilde_; }
  const RatMatrix& i_basis() const { return I_.basis(); }
  const RatMatrix& itilde_basis() const { return itilde_dual_; }  // dual to i_basis()
  const Sublattice& lambda_tilde() const { return lambda_; }
  const Sublattice& lambda_tilde_dual() const { return lambda_dual_; }
  const IntMatrix& lambda_gram() const { return lambda_gram_; }
  const RatMatrix& lambda_gram_rat() const { return lambda_gram_rat_; }
  const RatMatrix& lambda_gram_inverse() const { return lambda_gram_inv_; }
  EvenLattice lambda_lattice() const { return EvenLattice("Lambda", lambda_gram_); }

  // Columns: basis of I, basis of Λ̃, dual basis of Ĩ.
  const RatMatrix& frame_basis() const { return frame_basis_; }
  const RatMatrix& frame_inverse() const { return frame_inverse_; }

  // α: Ũ → U as an r×r matrix (Ĩ dual basis → I basis); symmetric.
  const RatMatrix& alpha() const { return alpha_; }

  const Sublattice& i_lstar() const { return i_lstar_; }
  const RatMatrix& i_lstar_coords() const { return i_lstar_coords_; }  // basis in I-coordinates
  const Sublattice& itilde_l() const { return itilde_l_; }
  const IntMatrix& itilde_l_coords() const { return itilde_l_coords_; }  // basis in Ĩ-coordinates
  const Sublattice& i_iota() const { return i_iota_; }
  const RatMatrix& i_iota_coords() const { return i_iota_coords_; }
  const Sublattice& lstar_i() const { return lstar_i_; }
  const Sublattice& lstar() const { return lstar_; }
  const Sublattice& iperp_lstar() const { return iperp_lstar_; }

  const FinQuadModule& delta_lambda() const { return delta_lambda_; }
  // ι on the basis of Ĩ_L and ι* on the generators of Δ_Λ (I-coordinates, reduced mod I_{L*}).
  const std::vector<Element>& iota_table() const { return iota_; }
  const std::vector<RatVector>& iota_dual_table() const { return iota_dual_; }

  VectorDecomposition decompose(const RatVector& v) const;
  bool member(const RatVector& v, Target target) const;

  // ι(ũ) for ũ ∈ Ĩ_L given by its Ĩ-coordinates.
  Element iota(const IntVector& utilde_coords) const;
  // ι*(x), a representative in I-coordinates reduced modulo I_{L*}.
  RatVector iota_dual(const Element& x) const;
  // Class in Δ_Λ of w ∈ Λ̃* given by Λ̃-coordinates.
  Element lambda_class(const RatVector& w_coords) const;

  // Reduces I-coordinates u modulo a lattice J given by its basis in I-coordinates.
  static RatVector reduce_mod(const RatVector& u, const RatMatrix& j_coords);
  RatVector reduce_mod_I(const RatVector& u) const;
  RatVector reduce_mod_I_lstar(const RatVector& u) const;

  Rat utilde_norm(const RatVector& utilde_coords) const;

 private:
  EvenLattice L_;
  Sublattice I_, itilde_, lstar_, lambda_, lambda_dual_, i_lstar_, itilde_l_, i_iota_, lstar_i_, iperp_lstar_;
  RatMatrix itilde_dual_;
  IntMatrix lambda_gram_;
  RatMatrix lambda_gram_rat_, lambda_gram_inv_;
  RatMatrix frame_basis_, frame_inverse_;
  RatMatrix alpha_;
  RatMatrix i_lstar_coords_, i_iota_coords_;
  RatMatrix i_lstar_coords_inv_;
  IntMatrix itilde_l_coords_;
  RatMatrix itilde_l_coords_inv_;
  FinQuadModule delta_lambda_;
  std::vector<Element> iota_;
  std::vector<RatVector> iota_dual_;
};

struct ComplementChange {
  IsotropicFrame frame;  // rebuilt for the new complement
  RatMatrix phi;         // φ: Ĩ → Λ̃*, m×r in (Ĩ basis, Λ̃ basis)
  RatMatrix beta;        // β: Ĩ → U, r×r in (Ĩ basis, I basis)
  std::vector<IsotropicFrame::Element> delta_iota;  // ι_old − ι_new on the Ĩ_L basis
  std::vector<IsotropicFrame::Element> p_phi;       // p∘φ on the Ĩ_L basis
  bool beta_compatible;  // βũ + I_{L*} = −ι*pφũ on the Ĩ basis
  bool consistent() const { return beta_compatible && delta_iota == p_phi; }
};
ComplementChange change_complement(const IsotropicFrame& F, const Sublattice& Ihat);

// Δ_Λ-class (old frame) of an element of the new frame's Λ̂*, via W ≅ W̃ ≅ Ŵ.
IsotropicFrame::Element transport_class(const IsotropicFrame& from, const IsotropicFrame& to,
                                        const IsotropicFrame::Element& x);

struct IotaClassResult {
  bool trivial = false;
  std::optional<Sublattice> witness;  // complement with ι = 0 when trivial
};
IotaClassResult iota_class_trivial(const IsotropicFrame& F);

}  // namespace parablat
