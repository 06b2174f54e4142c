#include "parablat/parabolic.hpp"

namespace parablat {

RatMatrix reflection(const RatVector& v, const RatMatrix& gram) {
  const RatVector gv = gram * v;
  const Rat norm = dot(v, gv);
  require(norm != 0, "reflection in an isotropic vector");
  const std::size_t n = v.size();
  RatMatrix s = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= 2 * v[i] * gv[j] / norm;
  return s;
}

namespace {

RatVector anisotropic_in(const RatMatrix& span, const RatMatrix& gram) {
  for (std::size_t j = 0; j < span.cols(); ++j) {
    RatVector c = span.col(j);
    if (dot(c, gram * c) != 0) return c;
  }
  for (std::size_t i = 0; i < span.cols(); ++i)
    for (std::size_t j = i + 1; j < span.cols(); ++j) {
      RatVector c = span.col(i) + span.col(j);
      if (dot(c, gram * c) != 0) return c;
    }
  throw InvariantError("form is degenerate on an orthogonal complement");
}

}  // namespace

std::vector<RatVector> reflection_factorization(const RatMatrix& a, const RatMatrix& gram) {
  require(a.square() && a.rows() == gram.rows(), "element and form have different dimensions");
  require(a.transpose() * gram * a == gram, "matrix is not an isometry of the form");
  const std::size_t n = a.rows();
  std::vector<RatVector> refl;
  std::vector<RatVector> fixed;
  RatMatrix b = a;
  auto apply = [&](const RatVector& v) {
    b = reflection(v, gram) * b;
    refl.push_back(v);
  };
  for (std::size_t step = 0; step < n; ++step) {
    RatMatrix complement = RatMatrix::identity(n);
    if (!fixed.empty()) complement = nullspace(RatMatrix::from_columns(n, fixed).transpose() * gram);
    RatVector x = anisotropic_in(complement, gram);
    RatVector v = b * x - x;
    if (v != RatVector(n)) {
      if (dot(v, gram * v) != 0) {
        apply(v);
      } else {
        apply(b * x + x);
        apply(x);
      }
    }
    ensure(b * x == x, "reflection step did not fix the chosen vector");
    fixed.push_back(x);
  }
  ensure(b == RatMatrix::identity(n), "reflection factorization did not terminate at the identity");
  return refl;
}

DetSpinor det_spinor(const RatMatrix& a, const RatMatrix& gram) {
  DetSpinor out;
  for (const RatVector& v : reflection_factorization(a, gram)) {
    out.det = -out.det;
    if (dot(v, gram * v) < 0) out.spinor_sign = -out.spinor_sign;
  }
  return out;
}

DetSpinor det_spinor_shortcut(const ParabolicCoords& c, const IsotropicFrame& F) {
  DetSpinor g = det_spinor(c.gamma, F.lambda_gram_rat());
  if (det(c.M) < 0) g.spinor_sign = -g.spinor_sign;
  return g;
}

bool in_identity_component(const ParabolicCoords& c, const IsotropicFrame& F) {
  if (det(c.M) <= 0) return false;
  return det_spinor(c.gamma, F.lambda_gram_rat()) == DetSpinor{1, 1};
}

}  // namespace parablat
