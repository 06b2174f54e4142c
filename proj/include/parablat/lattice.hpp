#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parablat/linalg.hpp"

namespace parablat {

// Z-span of the columns of a rational n×k matrix, kept in a canonical form:
// the column-HNF of the span, so equal lattices have equal bases.
class Sublattice {
 public:
  Sublattice() = default;
  explicit Sublattice(const RatMatrix& generators);
  static Sublattice standard(std::size_t n);
  static Sublattice zero(std::size_t n);

  const RatMatrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t rank() const { return basis_.cols(); }

  bool contains(const RatVector& v) const;
  bool contains(const Sublattice& other) const;
  bool in_span(const RatVector& v) const;
  // Coordinates of v with respect to basis(); nullopt when v is outside the span.
  std::optional<RatVector> span_coordinates(const RatVector& v) const;
  std::optional<IntVector> coordinates(const RatVector& v) const;
  RatMatrix coordinates_of(const RatMatrix& vectors) const;  // throws if outside the span

  friend bool operator==(const Sublattice& a, const Sublattice& b) { return a.basis_ == b.basis_; }

 private:
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;  // row of the leading entry of each basis column
};

Sublattice lattice_sum(const Sublattice& a, const Sublattice& b);
Sublattice intersect(const Sublattice& a, const Sublattice& b);
// a ∩ (Q-span of the columns of span).
Sublattice intersect_with_span(const Sublattice& a, const RatMatrix& span);
// [outer : inner] for lattices of equal rank with inner ⊆ outer.
Int index_in(const Sublattice& inner, const Sublattice& outer);
bool is_primitive_in(const Sublattice& s, const Sublattice& ambient);

std::pair<int, int> signature(const RatMatrix& gram);  // (b+, b-), throws if degenerate

class EvenLattice {
 public:
  EvenLattice() = default;
  EvenLattice(std::string name, IntMatrix gram);

  const std::string& name() const { return name_; }
  const IntMatrix& gram() const { return gram_; }
  const RatMatrix& gram_rat() const { return gram_rat_; }
  const RatMatrix& gram_inverse() const { return gram_inv_; }
  std::size_t dim() const { return gram_.rows(); }
  std::pair<int, int> signature() const { return signature_; }
  Int determinant() const { return det_; }

  Rat pairing(const RatVector& x, const RatVector& y) const;
  Rat norm(const RatVector& x) const { return pairing(x, x); }
  // Matrix of pairings aᵀ·G·b.
  RatMatrix pairings(const RatMatrix& a, const RatMatrix& b) const;

  Sublattice lattice() const { return Sublattice::standard(dim()); }

 private:
  std::string name_;
  IntMatrix gram_;
  RatMatrix gram_rat_;
  RatMatrix gram_inv_;
  Int det_;
  std::pair<int, int> signature_{0, 0};
};

Sublattice dual_lattice(const EvenLattice& L);
bool is_isotropic(const EvenLattice& L, const Sublattice& s);
// {m in M : (m, s) = 0 for all s in S}.
Sublattice perp_in(const EvenLattice& L, const Sublattice& S, const Sublattice& M);
// L-dual of M inside the Q-span of M.
Sublattice dual_in_span(const EvenLattice& L, const Sublattice& M);

struct QuotientForm {
  EvenLattice lambda;
  RatMatrix section;  // lifts (columns, L-coordinates) of a basis of Iperp/I
};
QuotientForm quotient_form(const EvenLattice& L, const Sublattice& iperp, const Sublattice& i);

}  // namespace parablat
