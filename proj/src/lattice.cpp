#include "parablat/lattice.hpp"

namespace parablat {

Sublattice::Sublattice(const RatMatrix& generators) {
  const std::size_t n = generators.rows();
  Int d = common_denominator(generators);
  IntMatrix scaled = to_int(generators * Rat(d));
  HnfResult h = hnf(scaled.transpose());
  basis_ = RatMatrix(n, h.rank());
  for (std::size_t j = 0; j < h.rank(); ++j)
    for (std::size_t i = 0; i < n; ++i) basis_(i, j) = Rat(h.h(j, i)) / d;
  for (std::size_t j = 0; j < basis_.cols(); ++j) {
    std::size_t p = 0;
    while (basis_(p, j) == 0) ++p;
    pivots_.push_back(p);
  }
}

Sublattice Sublattice::standard(std::size_t n) { return Sublattice(RatMatrix::identity(n)); }
Sublattice Sublattice::zero(std::size_t n) { return Sublattice(RatMatrix(n, 0)); }

// On the pivot rows the basis is lower triangular, so forward substitution
// gives the only candidate; it is then checked against v.
std::optional<RatVector> Sublattice::span_coordinates(const RatVector& v) const {
  require(v.size() == dim(), "vector has the wrong length for the sublattice");
  const std::size_t k = rank();
  RatVector c(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rat x = v[pivots_[i]];
    for (std::size_t j = 0; j < i; ++j) x -= basis_(pivots_[i], j) * c[j];
    c[i] = x / basis_(pivots_[i], i);
  }
  for (std::size_t row = 0; row < dim(); ++row) {
    Rat x = 0;
    for (std::size_t j = 0; j < k; ++j) x += basis_(row, j) * c[j];
    if (x != v[row]) return std::nullopt;
  }
  return c;
}

bool Sublattice::in_span(const RatVector& v) const { return span_coordinates(v).has_value(); }

std::optional<IntVector> Sublattice::coordinates(const RatVector& v) const {
  auto c = span_coordinates(v);
  if (!c || !is_integral(*c)) return std::nullopt;
  return to_int(*c);
}

bool Sublattice::contains(const RatVector& v) const { return coordinates(v).has_value(); }

bool Sublattice::contains(const Sublattice& other) const {
  auto c = rat_solve(basis_, other.basis_);
  return c && is_integral(*c);
}

RatMatrix Sublattice::coordinates_of(const RatMatrix& vectors) const {
  auto c = rat_solve(basis_, vectors);
  if (!c) throw PreconditionError("vectors are outside the span of the sublattice");
  return *c;
}

Sublattice lattice_sum(const Sublattice& a, const Sublattice& b) {
  return Sublattice(hcat(a.basis(), b.basis()));
}

Sublattice intersect(const Sublattice& a, const Sublattice& b) {
  const std::size_t k = a.rank();
  IntMatrix ker = kernel_int(hcat(a.basis(), -b.basis()));
  RatMatrix coeff = to_rat(ker).block(0, 0, k, ker.cols());
  return Sublattice(a.basis() * coeff);
}

Sublattice intersect_with_span(const Sublattice& a, const RatMatrix& span) {
  // Annihilator rows p with p·span = 0 cut out the span.
  RatMatrix ann = nullspace(span.transpose()).transpose();
  IntMatrix ker = kernel_int(ann * a.basis());
  return Sublattice(a.basis() * to_rat(ker));
}

Int index_in(const Sublattice& inner, const Sublattice& outer) {
  if (inner.rank() != outer.rank()) throw PreconditionError("index of lattices of different rank");
  auto c = rat_solve(outer.basis(), inner.basis());
  if (!c || !is_integral(*c)) throw PreconditionError("index_in: inner lattice is not contained in outer");
  return abs(det(to_int(*c)));
}

bool is_primitive_in(const Sublattice& s, const Sublattice& ambient) {
  return intersect_with_span(ambient, s.basis()) == s;
}

std::pair<int, int> signature(const RatMatrix& gram) {
  if (!is_symmetric(gram)) throw PreconditionError("gram matrix must be symmetric");
  RatMatrix a = gram;
  const std::size_t n = a.rows();
  int pos = 0, neg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, p) == 0) ++p;
      if (p < n) {
        a.swap_rows(k, p);
        a.swap_cols(k, p);
      } else {
        std::size_t q = k + 1;
        while (q < n && a(k, q) == 0) ++q;
        if (q == n) throw PreconditionError("gram matrix is degenerate");
        // Replace e_k by e_k + e_q, which has norm 2·(e_k, e_q) ≠ 0.
        for (std::size_t j = 0; j < n; ++j) a(k, j) += a(q, j);
        for (std::size_t i = 0; i < n; ++i) a(i, k) += a(i, q);
      }
    }
    const Rat pivot = a(k, k);
    (pivot > 0 ? pos : neg)++;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
    // The matching column operations only clear row k; the trailing block stays symmetric.
    for (std::size_t j = k + 1; j < n; ++j) a(k, j) = 0;
  }
  return {pos, neg};
}

EvenLattice::EvenLattice(std::string name, IntMatrix gram) : name_(std::move(name)), gram_(std::move(gram)) {
  require(gram_.square(), "gram matrix must be square");
  gram_rat_ = to_rat(gram_);
  require(is_symmetric(gram_rat_), "gram matrix must be symmetric");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    require(mod(gram_(i, i), 2) == 0, "gram diagonal must be even (lattice must be even)");
  det_ = parablat::det(gram_);
  require(det_ != 0, "gram matrix must be non-degenerate");
  gram_inv_ = inverse(gram_rat_);
  signature_ = parablat::signature(gram_rat_);
}

Rat EvenLattice::pairing(const RatVector& x, const RatVector& y) const { return dot(x, gram_rat_ * y); }

RatMatrix EvenLattice::pairings(const RatMatrix& a, const RatMatrix& b) const {
  return a.transpose() * gram_rat_ * b;
}

Sublattice dual_lattice(const EvenLattice& L) { return Sublattice(L.gram_inverse()); }

bool is_isotropic(const EvenLattice& L, const Sublattice& s) { return L.pairings(s.basis(), s.basis()).is_zero(); }

Sublattice perp_in(const EvenLattice& L, const Sublattice& S, const Sublattice& M) {
  IntMatrix ker = kernel_int(L.pairings(S.basis(), M.basis()));
  return Sublattice(M.basis() * to_rat(ker));
}

Sublattice dual_in_span(const EvenLattice& L, const Sublattice& M) {
  RatMatrix g = L.pairings(M.basis(), M.basis());
  return Sublattice(M.basis() * inverse(g));
}

QuotientForm quotient_form(const EvenLattice& L, const Sublattice& iperp, const Sublattice& i) {
  require(is_isotropic(L, i), "quotient_form: I is not isotropic");
  require(iperp.contains(i), "quotient_form: I is not contained in Iperp");
  require(L.pairings(i.basis(), iperp.basis()).is_zero(), "quotient_form: I is not in the radical of Iperp");
  // Coordinates of I inside Iperp; an adapted basis from the SNF gives a section.
  IntMatrix c = to_int(iperp.coordinates_of(i.basis()));
  SnfResult s = snf(c);
  for (std::size_t k = 0; k < i.rank(); ++k)
    require(s.d(k, k) == 1, "quotient_form: Iperp/I has torsion (I not primitive in Iperp)");
  RatMatrix adapted = iperp.basis() * inverse(to_rat(s.u));
  const std::size_t m = iperp.rank() - i.rank();
  RatMatrix section = adapted.block(0, i.rank(), adapted.rows(), m);
  IntMatrix gram = to_int(L.pairings(section, section));
  return {EvenLattice("quotient", gram), section};
}

}  // namespace parablat
