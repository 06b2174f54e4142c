#include "parablat/frame.hpp"

namespace parablat {

namespace {

RatMatrix hcat3(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c) { return hcat(hcat(a, b), c); }

void check_isotropic_primitive(const EvenLattice& L, const Sublattice& I) {
  require(I.dim() == L.dim(), "sublattice dimension does not match the lattice");
  require(is_isotropic(L, I), "I is not isotropic");
  require(L.lattice().contains(I), "I is not contained in L");
  require(is_primitive_in(I, L.lattice()), "I is not primitive in L");
}

Int inverse_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw InvariantError("no modular inverse");
  return r;
}

}  // namespace

Sublattice unimodular_complement(const EvenLattice& L, const Sublattice& I) {
  check_isotropic_primitive(L, I);
  const std::size_t n = L.dim(), r = I.rank();
  IntMatrix basis = to_int(I.basis());
  SnfResult s = snf(basis);
  // basis = u⁻¹·[1;0]·v⁻¹, so u⁻¹ with its first r columns twisted by v⁻¹ completes I to a basis of L.
  RatMatrix twist = RatMatrix::identity(n);
  twist.set_block(0, 0, inverse(to_rat(s.v)));
  RatMatrix completed = inverse(to_rat(s.u)) * twist;
  ensure(completed.block(0, 0, n, r) == I.basis(), "completion does not start with the basis of I");
  RatMatrix dual = L.gram_inverse() * inverse(completed).transpose();
  return Sublattice(dual.block(0, 0, n, r));
}

IsotropicFrame IsotropicFrame::build(const EvenLattice& L, const Sublattice& I, const Sublattice& Itilde) {
  check_isotropic_primitive(L, I);
  require(Itilde.dim() == L.dim() && Itilde.rank() == I.rank(), "complement must have the same rank as I");
  IsotropicFrame F;
  F.L_ = L;
  F.I_ = I;
  F.itilde_ = Itilde;
  F.lstar_ = dual_lattice(L);
  require(F.lstar_.contains(Itilde), "complement is not contained in L*");
  const std::size_t n = L.dim(), r = I.rank();
  RatMatrix pairing = L.pairings(I.basis(), Itilde.basis());
  require(is_integral(pairing) && is_unimodular(to_int(pairing)), "pairing of I with the complement is not unimodular");
  F.itilde_dual_ = Itilde.basis() * inverse(pairing);

  const RatMatrix iu = hcat(I.basis(), F.itilde_dual_);
  F.lambda_ = Sublattice(to_rat(kernel_int(iu.transpose() * L.gram_rat())));
  ensure(F.lambda_.rank() + 2 * r == n, "W̃ has the wrong dimension");
  F.lambda_gram_ = to_int(L.pairings(F.lambda_.basis(), F.lambda_.basis()));
  F.lambda_gram_rat_ = to_rat(F.lambda_gram_);
  F.lambda_gram_inv_ = inverse(F.lambda_gram_rat_);
  F.lambda_dual_ = Sublattice(F.lambda_.basis() * F.lambda_gram_inv_);
  F.frame_basis_ = hcat3(I.basis(), F.lambda_.basis(), F.itilde_dual_);
  F.frame_inverse_ = inverse(F.frame_basis_);

  F.alpha_ = L.pairings(F.itilde_dual_, F.itilde_dual_) * Rat(1, 2);
  const RatMatrix shifted = F.itilde_dual_ - I.basis() * F.alpha_;
  ensure(L.pairings(shifted, shifted).is_zero(), "ũ − αũ is not isotropic");

  F.i_lstar_ = intersect_with_span(F.lstar_, I.basis());
  F.i_lstar_coords_ = I.coordinates_of(F.i_lstar_.basis());
  F.i_lstar_coords_inv_ = inverse(F.i_lstar_coords_);
  F.iperp_lstar_ = perp_in(L, I, F.lstar_);
  F.lstar_i_ = lattice_sum(L.lattice(), F.iperp_lstar_);
  F.itilde_l_ = intersect(F.lstar_i_, Itilde);
  F.itilde_l_coords_ = to_int(rat_solve_or_throw(F.itilde_dual_, F.itilde_l_.basis()));
  F.itilde_l_coords_inv_ = inverse(to_rat(F.itilde_l_coords_));
  const RatMatrix cross = F.i_lstar_coords_.transpose() * to_rat(F.itilde_l_coords_);
  ensure(is_integral(cross) && is_unimodular(to_int(cross)), "Ĩ_L does not pair unimodularly with I_{L*}");

  F.delta_lambda_ = FinQuadModule(L.gram_rat(), F.lambda_dual_, F.lambda_);

  // ι on the basis of Ĩ_L: lift to L through the Ũ-component (ũ-coordinates are pairings with I).
  const RatMatrix to_utilde = I.basis().transpose() * L.gram_rat();
  for (std::size_t k = 0; k < r; ++k) {
    const IntVector target = F.itilde_l_coords_.col(k);
    auto lift = solve_int(to_utilde, to_rat(target));
    ensure(lift.has_value(), "no lattice vector lies over a basis vector of Ĩ_L");
    VectorDecomposition d = F.decompose(to_rat(*lift));
    ensure(d.utilde_coords == to_rat(target), "lift has the wrong Ũ-component");
    ensure(F.lambda_dual_.contains(d.w), "W̃-component of a lattice vector is not in Λ̃*");
    RatVector corr = d.u_coords + Rat(2) * (F.alpha_ * to_rat(target));
    ensure(is_integral(corr), "U-component violates u ∈ −2αũ + I");
    Element value = F.delta_lambda_.coords(d.w);
    ensure(F.delta_lambda_.q(value) == frac(L.norm(F.itilde_dual_ * to_rat(target)) / 2), "norm condition of ι fails");
    F.iota_.push_back(value);
  }
  // Different lifts differ by I⊥_L, whose W̃-components must lie in Λ̃.
  const Sublattice iperp_l = perp_in(L, I, L.lattice());
  for (std::size_t j = 0; j < iperp_l.rank(); ++j)
    ensure(F.lambda_.contains(F.decompose(iperp_l.basis().col(j)).w), "ι is not well defined modulo Λ̃");

  // ι* by duality: (ι*x, ũ) = b(x, ιũ) for ũ in the basis of Ĩ_L.
  const RatMatrix kt_inv = F.itilde_l_coords_inv_.transpose();
  std::vector<RatVector> dual_values;
  for (std::size_t g = 0; g < F.delta_lambda_.num_generators(); ++g) {
    RatVector t(r);
    for (std::size_t k = 0; k < r; ++k) t[k] = F.delta_lambda_.b(F.delta_lambda_.unit(g), F.iota_[k]);
    RatVector u = F.reduce_mod_I_lstar(kt_inv * t);
    RatVector torsion = Rat(F.delta_lambda_.invariants()[g]) * u;
    ensure(F.reduce_mod_I_lstar(torsion) == RatVector(r), "ι* does not respect the relations of Δ_Λ");
    F.iota_dual_.push_back(u);
    dual_values.push_back(u);
  }
  RatMatrix gens = hcat(F.i_lstar_coords_, RatMatrix::from_columns(r, dual_values));
  F.i_iota_coords_ = Sublattice(gens).basis();
  F.i_iota_ = Sublattice(I.basis() * F.i_iota_coords_);
  ensure(F.i_iota_.contains(F.i_lstar_) && F.i_lstar_.contains(I), "I ⊆ I_{L*} ⊆ I_ι fails");
  ensure(index_in(F.itilde_l_, Itilde) == index_in(I, F.i_lstar_), "[Ĩ : Ĩ_L] differs from [I_{L*} : I]");
  return F;
}

VectorDecomposition IsotropicFrame::decompose(const RatVector& v) const {
  const std::size_t r = this->r(), m = this->m();
  RatVector c = frame_inverse_ * v;
  VectorDecomposition d;
  d.u_coords.assign(c.begin(), c.begin() + r);
  d.w_coords.assign(c.begin() + r, c.begin() + r + m);
  d.utilde_coords.assign(c.begin() + r + m, c.end());
  d.u = I_.basis() * d.u_coords;
  d.w = lambda_.basis() * d.w_coords;
  d.utilde = itilde_dual_ * d.utilde_coords;
  return d;
}

bool IsotropicFrame::member(const RatVector& v, Target target) const {
  VectorDecomposition d = decompose(v);
  if (!is_integral(lambda_gram_rat_ * d.w_coords)) return false;  // w ∈ Λ̃*
  const Element w_class = lambda_class(d.w_coords);
  const RatVector in_il = itilde_l_coords_inv_ * d.utilde_coords;
  if (target == Target::L) {
    if (!is_integral(in_il)) return false;
    if (w_class != iota(to_int(d.utilde_coords))) return false;
    return is_integral(d.u_coords + Rat(2) * (alpha_ * d.utilde_coords));
  }
  if (target == Target::Lstar ? !is_integral(d.utilde_coords) : !is_integral(in_il)) return false;
  return reduce_mod_I_lstar(d.u_coords + iota_dual(w_class)) == RatVector(r());
}

IsotropicFrame::Element IsotropicFrame::iota(const IntVector& utilde_coords) const {
  RatVector y = itilde_l_coords_inv_ * to_rat(utilde_coords);
  require(is_integral(y), "ι is only defined on Ĩ_L");
  Element out = delta_lambda_.zero();
  for (std::size_t k = 0; k < y.size(); ++k) out = delta_lambda_.add(out, delta_lambda_.scale(y[k].get_num(), iota_[k]));
  return out;
}

RatVector IsotropicFrame::iota_dual(const Element& x) const {
  RatVector u(r());
  for (std::size_t g = 0; g < x.size(); ++g) u = u + Rat(x[g]) * iota_dual_[g];
  return reduce_mod_I_lstar(u);
}

IsotropicFrame::Element IsotropicFrame::lambda_class(const RatVector& w_coords) const {
  return delta_lambda_.coords(lambda_.basis() * w_coords);
}

RatVector IsotropicFrame::reduce_mod(const RatVector& u, const RatMatrix& j_coords) {
  RatVector y = inverse(j_coords) * u;
  for (Rat& x : y) x = frac(x);
  return j_coords * y;
}

RatVector IsotropicFrame::reduce_mod_I_lstar(const RatVector& u) const {
  RatVector y = i_lstar_coords_inv_ * u;
  for (Rat& x : y) x = frac(x);
  return i_lstar_coords_ * y;
}

RatVector IsotropicFrame::reduce_mod_I(const RatVector& u) const {
  RatVector out = u;
  for (Rat& x : out) x = frac(x);
  return out;
}

Rat IsotropicFrame::utilde_norm(const RatVector& utilde_coords) const {
  return L_.norm(itilde_dual_ * utilde_coords);
}

IsotropicFrame::Element transport_class(const IsotropicFrame& from, const IsotropicFrame& to,
                                        const IsotropicFrame::Element& x) {
  VectorDecomposition d = to.decompose(from.delta_lambda().lift(x));
  ensure(d.utilde_coords == RatVector(to.r()), "transported class leaves U^⊥");
  return to.lambda_class(d.w_coords);
}

ComplementChange change_complement(const IsotropicFrame& F, const Sublattice& Ihat) {
  IsotropicFrame G = IsotropicFrame::build(F.lattice(), F.I(), Ihat);
  const std::size_t r = F.r(), m = F.m();
  ComplementChange out{G, RatMatrix(m, r), RatMatrix(r, r), {}, {}, true};
  for (std::size_t j = 0; j < r; ++j) {
    VectorDecomposition d = F.decompose(G.itilde_basis().col(j));
    RatVector unit(r);
    unit[j] = 1;
    ensure(d.utilde_coords == unit, "new complement basis is not dual to I");
    out.phi.set_col(j, d.w_coords);
    out.beta.set_col(j, d.u_coords);
    ensure(F.lambda_tilde_dual().contains(d.w), "φ does not land in Λ̃*");
    RatVector lhs = d.u_coords + F.iota_dual(F.lambda_class(d.w_coords));
    if (F.reduce_mod_I_lstar(lhs) != RatVector(r)) out.beta_compatible = false;
  }
  for (std::size_t k = 0; k < r; ++k) {
    IntVector gen = F.itilde_l_coords().col(k);
    auto old_value = F.iota(gen);
    auto new_value = transport_class(G, F, G.iota(gen));
    out.delta_iota.push_back(F.delta_lambda().sub(old_value, new_value));
    out.p_phi.push_back(F.lambda_class(out.phi * to_rat(gen)));
  }
  return out;
}

IotaClassResult iota_class_trivial(const IsotropicFrame& F) {
  const FinQuadModule& delta = F.delta_lambda();
  const std::size_t r = F.r();
  IotaClassResult res;
  // Unknown y_i = value on the i-th basis vector of Ĩ; constraint Σ_i K_ik y_i = ι(k-th basis vector of Ĩ_L).
  SnfResult s = snf(F.itilde_l_coords().transpose());
  std::vector<IsotropicFrame::Element> y(r, delta.zero());
  for (std::size_t g = 0; g < delta.num_generators(); ++g) {
    const Int d = delta.invariants()[g];
    IntVector t(r);
    for (std::size_t k = 0; k < r; ++k) t[k] = F.iota_table()[k][g];
    IntVector ut = s.u * t;
    IntVector z(r);
    for (std::size_t i = 0; i < r; ++i) {
      const Int dii = s.d(i, i);
      const Int h = gcd(dii, d);
      if (mod(ut[i], h) != 0) return res;
      const Int reduced_mod = d / h;
      z[i] = reduced_mod == 1 ? Int(0) : mod(Int(ut[i] / h) * inverse_mod(Int(dii / h), reduced_mod), reduced_mod);
    }
    IntVector yy = s.v * z;
    for (std::size_t i = 0; i < r; ++i) y[i][g] = mod(yy[i], d);
  }
  res.trivial = true;
  // Witness: Î_j = −ι*(y_j) + lift(y_j) + ũ_j, so that δι = p∘φ = ι.
  const EvenLattice& L = F.lattice();
  RatMatrix hat(F.n(), r);
  for (std::size_t j = 0; j < r; ++j) {
    RatVector u = F.i_basis() * F.iota_dual(y[j]);
    RatVector v = delta.lift(y[j]) - u + F.itilde_basis().col(j);
    hat.set_col(j, v);
  }
  Sublattice witness(hat);
  IsotropicFrame G = IsotropicFrame::build(L, F.I(), witness);
  for (const auto& value : G.iota_table()) ensure(G.delta_lambda().is_zero(value), "witness complement has ι ≠ 0");
  const RatMatrix iu = G.i_lstar().basis();
  ensure(Sublattice(hcat3(iu, G.lambda_tilde_dual().basis(), G.Itilde().basis())) == F.lstar(),
         "L* ≠ I_{L*} ⊕ Λ̂* ⊕ Î");
  ensure(Sublattice(hcat3(iu, G.lambda_tilde_dual().basis(), G.itilde_l().basis())) == F.lstar_i(),
         "L*_I ≠ I_{L*} ⊕ Λ̂* ⊕ Î_L");
  for (std::size_t j = 0; j < F.n(); ++j) {
    RatVector e(F.n());
    e[j] = 1;
    VectorDecomposition d = G.decompose(e);
    ensure(G.lambda_tilde().contains(d.w) && G.itilde_l().contains(d.utilde), "L ⊄ U ⊕ Λ̂ ⊕ Î_L");
  }
  res.witness = witness;
  return res;
}

}  // namespace parablat
