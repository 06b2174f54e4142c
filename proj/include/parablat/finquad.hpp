#pragma once

#include <vector>

#include "parablat/lattice.hpp"

namespace parablat {

// outer/inner for lattices inner ⊆ outer of equal rank inside V, with the
// Q/Z-valued forms induced by the ambient Gram matrix. Elements are exponent
// vectors against the generators, reduced modulo the invariant factors.
class FinQuadModule {
 public:
  using Element = IntVector;

  FinQuadModule() = default;
  FinQuadModule(const RatMatrix& gram, const Sublattice& outer, const Sublattice& inner);

  const std::vector<Int>& invariants() const { return invariants_; }
  std::size_t num_generators() const { return invariants_.size(); }
  const RatMatrix& generators() const { return generators_; }  // lifts as columns
  RatVector generator(std::size_t i) const { return generators_.col(i); }
  Int order() const;
  bool trivial() const { return invariants_.empty(); }

  Element zero() const { return Element(num_generators()); }
  Element unit(std::size_t i) const;
  Element reduce(Element x) const;
  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element scale(const Int& k, const Element& x) const;
  bool is_zero(const Element& x) const { return reduce(x) == zero(); }

  bool contains(const RatVector& v) const { return outer_.contains(v); }
  bool in_inner(const RatVector& v) const { return inner_.contains(v); }
  Element coords(const RatVector& v) const;  // throws PreconditionError when v is not in outer
  RatVector lift(const Element& x) const;

  Rat q(const Element& x) const;                    // in [0, 1)
  Rat b(const Element& x, const Element& y) const;  // in [0, 1)

  std::vector<Element> elements() const;  // full enumeration; small modules only

  const Sublattice& outer() const { return outer_; }
  const Sublattice& inner() const { return inner_; }

 private:
  RatMatrix gram_;
  Sublattice outer_, inner_;
  RatMatrix adapted_inverse_rows_;  // maps span coordinates to adapted coordinates
  std::vector<std::size_t> generator_slots_;
  std::vector<Int> invariants_;
  RatMatrix generators_;
};

FinQuadModule discriminant_group(const EvenLattice& L);

// H_I = (L + I_{L*})/L inside Δ_L, with the structural checks relating it to Λ = I⊥_L/I.
struct IsotropicSubgroupData {
  FinQuadModule delta_L;
  Sublattice i_lstar;                         // I_{L*} = L* ∩ QI
  Sublattice lstar_i;                         // L*_I = L + I⊥_{L*}
  std::vector<FinQuadModule::Element> generators;  // H_I generators in Δ_L
  Int order;                                  // [I_{L*} : I]
  Int subgroup_order;                         // [L + I_{L*} : L]
  bool isotropic;                             // q vanishes on H_I
  std::vector<Int> perp_quotient_invariants;  // H_I^⊥ / H_I
  std::vector<Int> lambda_invariants;         // Λ*/Λ
  Int lstar_index;                            // [L* : L*_I]
  bool consistent() const;
};
IsotropicSubgroupData H_I_data(const EvenLattice& L, const Sublattice& I);

}  // namespace parablat
