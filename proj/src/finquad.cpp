#include "parablat/finquad.hpp"

namespace parablat {

FinQuadModule::FinQuadModule(const RatMatrix& gram, const Sublattice& outer, const Sublattice& inner)
    : gram_(gram), outer_(outer), inner_(inner) {
  require(outer.rank() == inner.rank(), "finite quotient needs lattices of equal rank");
  RatMatrix c = outer.coordinates_of(inner.basis());
  require(is_integral(c), "inner lattice is not contained in outer lattice");
  // inner·v = outer·u⁻¹·d, so outer·u⁻¹ is adapted to the quotient.
  SnfResult s = snf(to_int(c));
  adapted_inverse_rows_ = to_rat(s.u);
  RatMatrix adapted = outer.basis() * inverse(to_rat(s.u));
  const std::size_t k = outer.rank();
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < k; ++i) {
    ensure(s.d(i, i) != 0, "finite quotient has infinite part");
    if (s.d(i, i) == 1) continue;
    generator_slots_.push_back(i);
    invariants_.push_back(s.d(i, i));
    gens.push_back(adapted.col(i));
  }
  generators_ = RatMatrix::from_columns(outer.dim(), gens);
}

Int FinQuadModule::order() const {
  Int o = 1;
  for (const Int& d : invariants_) o *= d;
  return o;
}

FinQuadModule::Element FinQuadModule::unit(std::size_t i) const {
  Element e = zero();
  e.at(i) = 1;
  return reduce(e);
}

FinQuadModule::Element FinQuadModule::reduce(Element x) const {
  if (x.size() != invariants_.size()) throw InputError("element has wrong number of components");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod(x[i], invariants_[i]);
  return x;
}

FinQuadModule::Element FinQuadModule::add(const Element& x, const Element& y) const {
  Element z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] += y.at(i);
  return reduce(z);
}

FinQuadModule::Element FinQuadModule::sub(const Element& x, const Element& y) const {
  Element z = x;
  for (std::size_t i = 0; i < z.size(); ++i) z[i] -= y.at(i);
  return reduce(z);
}

FinQuadModule::Element FinQuadModule::scale(const Int& k, const Element& x) const {
  Element z = x;
  for (Int& c : z) c *= k;
  return reduce(z);
}

FinQuadModule::Element FinQuadModule::coords(const RatVector& v) const {
  auto c = outer_.coordinates(v);
  require(c.has_value(), "vector does not lie in the outer lattice of the finite quotient");
  IntVector adapted(outer_.rank());
  for (std::size_t i = 0; i < outer_.rank(); ++i)
    for (std::size_t j = 0; j < outer_.rank(); ++j) adapted[i] += adapted_inverse_rows_(i, j).get_num() * (*c)[j];
  Element e(invariants_.size());
  for (std::size_t g = 0; g < generator_slots_.size(); ++g) e[g] = adapted[generator_slots_[g]];
  return reduce(e);
}

RatVector FinQuadModule::lift(const Element& x) const {
  RatVector v(outer_.dim());
  for (std::size_t g = 0; g < x.size(); ++g)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += Rat(x[g]) * generators_(i, g);
  return v;
}

Rat FinQuadModule::q(const Element& x) const {
  RatVector v = lift(x);
  return frac(dot(v, gram_ * v) / 2);
}

Rat FinQuadModule::b(const Element& x, const Element& y) const {
  return frac(dot(lift(x), gram_ * lift(y)));
}

std::vector<FinQuadModule::Element> FinQuadModule::elements() const {
  std::vector<Element> out{zero()};
  for (std::size_t g = 0; g < invariants_.size(); ++g) {
    std::vector<Element> next;
    for (const Element& e : out)
      for (Int k = 0; k < invariants_[g]; ++k) {
        Element f = e;
        f[g] = k;
        next.push_back(f);
      }
    out.swap(next);
  }
  return out;
}

FinQuadModule discriminant_group(const EvenLattice& L) {
  return FinQuadModule(L.gram_rat(), dual_lattice(L), L.lattice());
}

bool IsotropicSubgroupData::consistent() const {
  Int lambda_order = 1;
  for (const Int& x : lambda_invariants) lambda_order *= x;
  return order == subgroup_order && isotropic && perp_quotient_invariants == lambda_invariants &&
         lstar_index == order && delta_L.order() == lambda_order * order * order;
}

IsotropicSubgroupData H_I_data(const EvenLattice& L, const Sublattice& I) {
  require(is_isotropic(L, I), "I is not isotropic");
  require(is_primitive_in(I, L.lattice()), "I is not primitive in L");
  IsotropicSubgroupData d;
  d.delta_L = discriminant_group(L);
  const Sublattice lstar = dual_lattice(L);
  d.i_lstar = intersect_with_span(lstar, I.basis());
  d.order = index_in(I, d.i_lstar);
  const Sublattice h_lift = lattice_sum(L.lattice(), d.i_lstar);
  d.subgroup_order = index_in(L.lattice(), h_lift);
  for (std::size_t j = 0; j < d.i_lstar.rank(); ++j) d.generators.push_back(d.delta_L.coords(d.i_lstar.basis().col(j)));
  d.isotropic = true;
  for (const auto& g : d.generators) {
    if (d.delta_L.q(g) != 0) d.isotropic = false;
    for (const auto& h : d.generators)
      if (d.delta_L.b(g, h) != 0) d.isotropic = false;
  }
  d.lstar_i = lattice_sum(L.lattice(), perp_in(L, I, lstar));
  d.perp_quotient_invariants = FinQuadModule(L.gram_rat(), d.lstar_i, h_lift).invariants();
  QuotientForm q = quotient_form(L, perp_in(L, I, L.lattice()), I);
  d.lambda_invariants = discriminant_group(q.lambda).invariants();
  d.lstar_index = index_in(d.lstar_i, lstar);
  return d;
}

}  // namespace parablat
