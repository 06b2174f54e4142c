#include "parablat/parabolic.hpp"

namespace parablat {

namespace {

RatMatrix minus_transpose_inverse(const RatMatrix& M) { return inverse(M).transpose(); }

RatMatrix id(std::size_t n) { return RatMatrix::identity(n); }

std::string matrix_text(const RatMatrix& m) { return to_string(m); }

std::string vector_text(const RatVector& v) { return to_string(RatMatrix::column(v).transpose()); }

}  // namespace

ParabolicCoords identity_coords(const IsotropicFrame& F) {
  return {id(F.r()), id(F.m()), RatMatrix(F.r(), F.m()), RatMatrix(F.r(), F.r())};
}

HeisenbergElement heis_identity(const IsotropicFrame& F) { return {RatMatrix(F.r(), F.m()), RatMatrix(F.r(), F.r())}; }

void check_coords(const ParabolicCoords& c, const IsotropicFrame& F) {
  const std::size_t r = F.r(), m = F.m();
  require(c.M.rows() == r && c.M.cols() == r, "M must be r×r");
  require(c.gamma.rows() == m && c.gamma.cols() == m, "gamma must be m×m");
  require(c.psi.rows() == r && c.psi.cols() == m, "psi must be r×m");
  require(c.eta.rows() == r && c.eta.cols() == r, "eta must be r×r");
  require(det(c.M) != 0, "M must be invertible");
  require(c.gamma.transpose() * F.lambda_gram_rat() * c.gamma == F.lambda_gram_rat(), "gamma is not in O(W)");
  require(is_antisymmetric(c.eta), "eta must be antisymmetric");
}

RatMatrix psi_dual(const RatMatrix& psi, const IsotropicFrame& F) {
  return F.lambda_gram_inverse() * psi.transpose();
}

RatMatrix heis_form(const RatMatrix& psi, const RatMatrix& phi, const IsotropicFrame& F) {
  return (psi * psi_dual(phi, F) - phi * psi_dual(psi, F)) * Rat(1, 2);
}

RatMatrix assemble(const ParabolicCoords& c, const IsotropicFrame& F) {
  check_coords(c, F);
  const std::size_t r = F.r(), m = F.m(), n = F.n();
  const RatMatrix& A = F.alpha();
  const RatMatrix Mit = minus_transpose_inverse(c.M);
  const RatMatrix X = psi_dual(c.psi, F);
  RatMatrix blk(n, n);
  blk.set_block(0, 0, c.M);
  blk.set_block(0, r, -(c.psi * c.gamma));
  blk.set_block(r, r, c.gamma);
  blk.set_block(0, r + m, c.M * A - A * Mit - c.psi * X * Mit * Rat(1, 2) - c.eta * Mit);
  blk.set_block(r, r + m, X * Mit);
  blk.set_block(r + m, r + m, Mit);
  return F.frame_basis() * blk * F.frame_inverse();
}

ParabolicCoords decompose_parabolic(const RatMatrix& a, const IsotropicFrame& F) {
  const std::size_t r = F.r(), m = F.m(), n = F.n();
  require(a.rows() == n && a.cols() == n, "element has the wrong size");
  require(a.transpose() * F.lattice().gram_rat() * a == F.lattice().gram_rat(), "matrix is not in O(V)");
  const RatMatrix blk = F.frame_inverse() * a * F.frame_basis();
  if (!blk.block(r, 0, n - r, r).is_zero()) throw NotInParabolic("element does not stabilize U");
  ParabolicCoords c;
  c.M = blk.block(0, 0, r, r);
  c.gamma = blk.block(r, r, m, m);
  ensure(blk.block(r + m, r, r, m).is_zero(), "element does not preserve U^⊥");
  c.psi = -(blk.block(0, r, r, m) * inverse(c.gamma));
  const RatMatrix Mit = minus_transpose_inverse(c.M);
  ensure(blk.block(r + m, r + m, r, r) == Mit, "Ũ-block is not M^{-*}");
  const RatMatrix X = psi_dual(c.psi, F);
  ensure(blk.block(r, r + m, m, r) == X * Mit, "W̃-component on Ũ is not ψ̃*M^{-*}");
  const RatMatrix& A = F.alpha();
  const RatMatrix C = blk.block(0, r + m, r, r);
  c.eta = (c.M * A - A * Mit - c.psi * X * Mit * Rat(1, 2) - C) * c.M.transpose();
  ensure(is_antisymmetric(c.eta), "decomposed η is not antisymmetric");
  return c;
}

HeisenbergElement heis_mul(const HeisenbergElement& h, const HeisenbergElement& k, const IsotropicFrame& F) {
  require(h.psi.rows() == k.psi.rows() && h.psi.cols() == k.psi.cols() && h.eta.rows() == k.eta.rows(),
          "Heisenberg elements have different shapes");
  return {h.psi + k.psi, h.eta + k.eta + heis_form(h.psi, k.psi, F)};
}

HeisenbergElement heis_inverse(const HeisenbergElement& h) { return {-h.psi, -h.eta}; }

ParabolicCoords heis_times(const HeisenbergElement& h, const ParabolicCoords& c, const IsotropicFrame& F) {
  HeisenbergElement prod = heis_mul(h, {c.psi, c.eta}, F);
  return {c.M, c.gamma, prod.psi, prod.eta};
}

RatMatrix c_psi(const RatMatrix& psi, const IsotropicFrame& F) {
  if (!is_integral(psi * F.lambda_gram_inverse())) throw NotIntegral("ψ(Λ*) is not contained in I");
  const RatMatrix S = psi * psi_dual(psi, F) * Rat(1, 2);
  const std::size_t r = S.rows();
  RatMatrix eta0(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    if (!is_integer(S(i, i))) throw NotIntegral("ψψ*/2 has a non-integral diagonal entry");
    for (std::size_t j = i + 1; j < r; ++j) {
      eta0(i, j) = frac(S(i, j));
      eta0(j, i) = -eta0(i, j);
    }
  }
  return eta0;
}

bool zheis_member(const HeisenbergElement& h, const IsotropicFrame& F) {
  if (!is_antisymmetric(h.eta)) return false;
  RatMatrix eta0;
  try {
    eta0 = c_psi(h.psi, F);
  } catch (const NotIntegral&) {
    return false;
  }
  return is_integral(h.eta - eta0);
}

bool sl_JI_member(const RatMatrix& M, const RatMatrix& j_coords) {
  if (!M.square() || M.rows() != j_coords.rows()) throw InputError("M and J have incompatible shapes");
  if (!is_integral(M) || det(M) != 1) return false;
  return is_integral((id(M.rows()) - M) * j_coords);
}

bool sl_JI_member(const RatMatrix& M, const Sublattice& J, const Sublattice& I) {
  require(J.contains(I) && J.rank() == I.rank(), "I must have finite index in J");
  return sl_JI_member(M, I.coordinates_of(J.basis()));
}

bool gamma_lambda_member(const RatMatrix& gamma, const IsotropicFrame& F) {
  if (!is_integral(gamma) || abs(det(gamma)) != 1) return false;
  if (gamma.transpose() * F.lambda_gram_rat() * gamma != F.lambda_gram_rat()) return false;
  if (!is_integral((gamma - id(F.m())) * F.lambda_gram_inverse())) return false;
  return det_spinor(gamma, F.lambda_gram_rat()) == DetSpinor{1, 1};
}

namespace {

// The residual T of condition (iv): η̃ must equal T − κ̃ with κ̃ integral.
RatMatrix eta_residual(const RatMatrix& M, const RatMatrix& psi, const IsotropicFrame& F) {
  const std::size_t r = F.r();
  const RatMatrix& A = F.alpha();
  const RatMatrix Mt = M.transpose();
  return (id(r) - M) * A * (id(r) - Mt) + M * A - A * Mt - psi * psi_dual(psi, F) * Rat(1, 2);
}

RatVector b_value(const RatMatrix& M, const FinQuadModule::Element& x, const IsotropicFrame& F) {
  return F.reduce_mod_I((id(F.r()) - M) * F.iota_dual(x));
}

}  // namespace

ConditionReport gamma_LI_member_conditions(const ParabolicCoords& c, const IsotropicFrame& F) {
  check_coords(c, F);
  ConditionReport rep;
  rep.identity_component = in_identity_component(c, F);
  if (!rep.identity_component) {
    rep.witnesses.push_back("not in the identity component: det M = " + det(c.M).get_str() +
                            ", gamma (det, spinor) must be (1, 1)");
    return rep;
  }
  rep.gamma_in_gamma_lambda = gamma_lambda_member(c.gamma, F);
  if (!*rep.gamma_in_gamma_lambda) rep.witnesses.push_back("(i) gamma = " + matrix_text(c.gamma) + " is not in Γ_Λ");

  rep.m_in_sl = sl_JI_member(c.M, F.i_lstar_coords());
  if (!*rep.m_in_sl) rep.witnesses.push_back("(ii) M = " + matrix_text(c.M) + " is not in SL(I_{L*}, I)");

  if (*rep.m_in_sl) {
    bool ok = is_integral(c.psi);
    if (!ok) rep.witnesses.push_back("(iii) ψ(Λ) ⊄ I: psi = " + matrix_text(c.psi));
    const FinQuadModule& delta = F.delta_lambda();
    for (std::size_t g = 0; ok && g < delta.num_generators(); ++g) {
      RatVector lift = *F.lambda_tilde().span_coordinates(delta.generator(g));
      RatVector lhs = F.reduce_mod_I(c.psi * lift);
      RatVector rhs = b_value(c.M, delta.unit(g), F);
      if (lhs != rhs) {
        ok = false;
        rep.witnesses.push_back("(iii) ψ^Δ(g" + std::to_string(g) + ") = " + vector_text(lhs) +
                                " differs from (Id−M)ι*(g" + std::to_string(g) + ") = " + vector_text(rhs));
      }
    }
    rep.psi_condition = ok;
  } else {
    rep.witnesses.push_back("(iii) not evaluated: (Id−M)∘ι* is undefined unless (ii) holds");
  }

  const RatMatrix kappa = eta_residual(c.M, c.psi, F) - c.eta;
  rep.eta_condition = is_integral(kappa);
  if (!*rep.eta_condition) rep.witnesses.push_back("(iv) residual κ̃ = " + matrix_text(kappa) + " is not integral");

  rep.member = *rep.gamma_in_gamma_lambda && *rep.m_in_sl && rep.psi_condition.value_or(false) && *rep.eta_condition;
  return rep;
}

bool gamma_LI_member_direct(const RatMatrix& a, const IsotropicFrame& F) {
  const RatMatrix& G = F.lattice().gram_rat();
  const std::size_t n = F.n();
  if (a.rows() != n || a.cols() != n) return false;
  if (!is_integral(a) || abs(det(a)) != 1) return false;
  if (a.transpose() * G * a != G) return false;
  if (!is_integral((a - id(n)) * F.lattice().gram_inverse())) return false;
  if (det_spinor(a, G) != DetSpinor{1, 1}) return false;
  // AU = U
  const RatMatrix image = a * F.i_basis();
  if (!rat_solve(F.i_basis(), image)) return false;
  return in_identity_component(decompose_parabolic(a, F), F);
}

std::optional<RatMatrix> complete_eta(const RatMatrix& M, const RatMatrix& psi, const IsotropicFrame& F) {
  const RatMatrix T = eta_residual(M, psi, F);
  const std::size_t r = F.r();
  RatMatrix eta(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    if (!is_integer(T(i, i))) return std::nullopt;
    for (std::size_t j = i + 1; j < r; ++j) {
      const Rat sym = (T(i, j) + T(j, i)) / 2;
      const Rat anti = (T(i, j) - T(j, i)) / 2;
      if (!is_integer(2 * sym)) return std::nullopt;
      eta(i, j) = anti + frac(sym);
      eta(j, i) = -eta(i, j);
    }
  }
  return eta;
}

RatMatrix psi_lift(const RatMatrix& M, const IsotropicFrame& F) {
  require(sl_JI_member(M, F.i_lstar_coords()), "M is not in SL(I_{L*}, I)");
  const std::size_t r = F.r(), m = F.m();
  // Values on the basis of Λ̃* dual to the Λ̃-basis, then back to the Λ̃-basis.
  RatMatrix on_dual(r, m);
  const RatMatrix& ginv = F.lambda_gram_inverse();
  for (std::size_t j = 0; j < m; ++j) on_dual.set_col(j, b_value(M, F.lambda_class(ginv.col(j)), F));
  RatMatrix psi = on_dual * F.lambda_gram_rat();
  ensure(is_integral(psi), "lifted ψ does not map Λ into I");
  return psi;
}

ParabolicCoords complete_to_element(const RatMatrix& M, const RatMatrix& gamma, const IsotropicFrame& F) {
  require(sl_JI_member(M, F.i_lstar_coords()), "M is not in SL(I_{L*}, I)");
  require(gamma.rows() == F.m() && gamma.cols() == F.m(), "gamma has the wrong size");
  require(gamma_lambda_member(gamma, F), "gamma is not in Γ_Λ");
  ParabolicCoords c{M, gamma, psi_lift(M, F), RatMatrix()};
  auto eta = complete_eta(M, c.psi, F);
  ensure(eta.has_value(), "no antisymmetric η satisfies condition (iv)");
  c.eta = *eta;
  ensure(gamma_LI_member_conditions(c, F).member, "completed element fails the membership conditions");
  return c;
}

CocycleValue cocycle_b(const RatMatrix& M, const IsotropicFrame& F) {
  require(sl_JI_member(M, F.i_lstar_coords()), "M is not in SL(I_{L*}, I)");
  CocycleValue b;
  for (std::size_t g = 0; g < F.delta_lambda().num_generators(); ++g) b.push_back(b_value(M, F.delta_lambda().unit(g), F));
  return b;
}

CocycleValue cocycle_act(const RatMatrix& M, const CocycleValue& b, const IsotropicFrame& F) {
  CocycleValue out;
  for (const RatVector& v : b) out.push_back(F.reduce_mod_I(M * v));
  return out;
}

CocycleValue cocycle_add(const CocycleValue& a, const CocycleValue& b, const IsotropicFrame& F) {
  CocycleValue out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(F.reduce_mod_I(a[i] + b.at(i)));
  return out;
}

bool cocycle_is_zero(const CocycleValue& b) {
  for (const RatVector& v : b)
    for (const Rat& x : v)
      if (x != 0) return false;
  return true;
}

bool cocycle_law_check(const RatMatrix& M, const RatMatrix& N, const IsotropicFrame& F) {
  return cocycle_b(M * N, F) == cocycle_add(cocycle_b(M, F), cocycle_act(M, cocycle_b(N, F), F), F);
}

std::vector<FinQuadModule::Element> cocycle_in_delta(const RatMatrix& M, const IsotropicFrame& F) {
  const RatMatrix X = psi_dual(psi_lift(M, F), F);
  std::vector<FinQuadModule::Element> out;
  for (std::size_t k = 0; k < F.r(); ++k) out.push_back(F.lambda_class(X.col(k)));
  return out;
}

CongruenceParams rank2_congruence_params(const IsotropicFrame& F, Level level) {
  require(F.r() == 2, "congruence parameters need rank I = 2");
  const RatMatrix& J = level == Level::Lstar ? F.i_lstar_coords() : F.i_iota_coords();
  SnfResult s = snf(to_int(inverse(J)));
  const RatMatrix adapted = J * inverse(to_rat(s.u));
  const Int d1 = s.d(0, 0), d2 = s.d(1, 1);
  CongruenceParams p{d2, d1, RatMatrix::identity(2), ""};
  if (d2 != 1) {
    RatMatrix basis(2, 2);
    basis.set_col(0, Rat(d2) * adapted.col(1));
    basis.set_col(1, Rat(d1) * adapted.col(0));
    if (det(basis) < 0) basis.set_col(1, Rat(-1) * basis.col(1));
    p.basis_change = basis;
  }
  const std::string N = p.N.get_str(), D = p.D.get_str();
  if (p.N == 1)
    p.description = "SL2(Z)";
  else
    p.description = "Gamma_1^0(" + N + "," + D + ") = {[[a,b],[c,d]] in SL2(Z) : a = d = 1 mod " + N +
                    ", c = 0 mod " + N + (p.D == 1 ? std::string() : ", b = 0 mod " + D) + "}";
  return p;
}

}  // namespace parablat
