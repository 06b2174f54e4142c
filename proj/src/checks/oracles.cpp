#include "parablat/checks.hpp"

namespace parablat::checks {

bool oracle_in_L(const RatVector& v) { return is_integral(v); }

bool oracle_in_Lstar(const EvenLattice& L, const RatVector& v) { return is_integral(L.gram_rat() * v); }

Sublattice oracle_i_lstar(const EvenLattice& L, const Sublattice& I) {
  const RatMatrix& B = I.basis();
  const std::size_t r = B.cols();
  const long e = Int(abs(L.determinant())).get_si();
  std::vector<RatVector> found;
  for (std::size_t k = 0; k < r; ++k) found.push_back(B.col(k));
  std::vector<long> c(r, 0);
  while (true) {
    RatVector x(B.rows());
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t i = 0; i < B.rows(); ++i) x[i] += B(i, k) * Rat(Int(c[k])) / e;
    if (oracle_in_Lstar(L, x)) found.push_back(x);
    std::size_t k = 0;
    while (k < r && ++c[k] == e) c[k++] = 0;
    if (k == r) break;
  }
  return Sublattice(RatMatrix::from_columns(B.rows(), found));
}

bool oracle_in_LstarI(const EvenLattice& L, const Sublattice& i_lstar, const RatVector& v) {
  if (!oracle_in_Lstar(L, v)) return false;
  return is_integral(L.pairings(i_lstar.basis(), RatMatrix::column(v)));
}

GlueSample oracle_glue(const EvenLattice& L, const RatMatrix& i_basis, const RatMatrix& complement_basis,
                       const RatVector& lambda) {
  // λ = I·a + C·b + w with w ⊥ I and w ⊥ C.
  const RatMatrix lam = RatMatrix::column(lambda);
  const RatMatrix IC = L.pairings(i_basis, complement_basis);
  const RatMatrix b = rat_solve_or_throw(IC, L.pairings(i_basis, lam));
  const RatMatrix CI = L.pairings(complement_basis, i_basis);
  const RatMatrix CC = L.pairings(complement_basis, complement_basis);
  const RatMatrix a = rat_solve_or_throw(CI, L.pairings(complement_basis, lam) - CC * b);
  GlueSample g;
  g.lambda = lambda;
  g.utilde = (complement_basis * b).col(0);
  g.w = (lam - i_basis * a - complement_basis * b).col(0);
  g.w_in_lattice = is_integral(g.w);
  g.q_w = frac(L.norm(g.w) / 2);
  g.q_utilde = frac(L.norm(g.utilde) / 2);
  return g;
}

bool oracle_iota_class_trivial(const IsotropicFrame& F) {
  const FinQuadModule& delta = F.delta_lambda();
  const std::vector<FinQuadModule::Element> all = delta.elements();
  const IntMatrix& K = F.itilde_l_coords();
  const std::size_t r = F.r();
  std::vector<std::size_t> pick(r, 0);
  while (true) {
    bool match = true;
    for (std::size_t k = 0; k < K.cols() && match; ++k) {
      FinQuadModule::Element v = delta.zero();
      for (std::size_t j = 0; j < r; ++j) v = delta.add(v, delta.scale(K(j, k), all[pick[j]]));
      match = v == delta.reduce(F.iota_table()[k]);
    }
    if (match) return true;
    std::size_t j = 0;
    while (j < r && ++pick[j] == all.size()) pick[j++] = 0;
    if (j == r) return false;
  }
}

bool oracle_gamma_LI(const RatMatrix& a, const IsotropicFrame& F) {
  const EvenLattice& L = F.lattice();
  const RatMatrix& G = L.gram_rat();
  const std::size_t n = L.dim(), r = F.r();
  if (a.rows() != n || a.cols() != n || !is_integral(a)) return false;
  if (a.transpose() * G * a != G) return false;
  if (!is_integral((a - RatMatrix::identity(n)) * L.gram_inverse())) return false;
  const DetSpinor ds = det_spinor(a, G);
  if (ds.det != 1 || ds.spinor_sign != 1) return false;
  const RatMatrix& I = F.i_basis();
  auto on_u = rat_solve(I, a * I);
  if (!on_u) return false;
  if (det(*on_u) <= 0) return false;
  // Action on U⊥/U through a complement of U inside U⊥.
  const RatMatrix uperp = nullspace(I.transpose() * G);
  std::vector<RatVector> cols;
  for (std::size_t k = 0; k < r; ++k) cols.push_back(I.col(k));
  std::vector<RatVector> comp;
  for (std::size_t k = 0; k < uperp.cols(); ++k) {
    cols.push_back(uperp.col(k));
    if (rank(RatMatrix::from_columns(n, cols)) == cols.size())
      comp.push_back(uperp.col(k));
    else
      cols.pop_back();
  }
  if (comp.empty()) return true;
  const RatMatrix K = RatMatrix::from_columns(n, comp);
  const RatMatrix basis = hcat(I, K);
  const RatMatrix coords = rat_solve_or_throw(basis, a * K);
  const RatMatrix gamma = coords.block(r, 0, K.cols(), K.cols());
  const DetSpinor dw = det_spinor(gamma, K.transpose() * G * K);
  return dw.det == 1 && dw.spinor_sign == 1;
}

}  // namespace parablat::checks
