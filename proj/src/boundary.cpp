#include "parablat/boundary.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace parablat {

namespace {

Int isqrt_floor(const Rat& q) {
  Int f = floor(q);
  if (f <= 0) return 0;
  Int s;
  mpz_sqrt(s.get_mpz_t(), f.get_mpz_t());
  return s;
}

Int norm(const IntVector& x, const IntMatrix& g) {
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) s += x[i] * g(i, j) * x[j];
  return s;
}

Int pair(const IntVector& x, const IntMatrix& g, const IntVector& y) {
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g(i, j) * y[j];
  return s;
}

bool contains(const std::vector<IntMatrix>& v, const IntMatrix& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

std::vector<IntVector> short_vectors(const IntMatrix& gram, const Int& bound) {
  const std::size_t m = gram.rows();
  const RatMatrix ginv = inverse(to_rat(gram));
  // |x_i|² ≤ (x,x)·(e_i*, e_i*) by Cauchy–Schwarz.
  IntVector limit(m);
  for (std::size_t i = 0; i < m; ++i) limit[i] = isqrt_floor(Rat(bound) * ginv(i, i));
  std::vector<IntVector> out;
  IntVector x(m);
  for (std::size_t i = 0; i < m; ++i) x[i] = -limit[i];
  while (true) {
    if (norm(x, gram) <= bound) out.push_back(x);
    std::size_t k = 0;
    while (k < m && x[k] == limit[k]) {
      x[k] = -limit[k];
      ++k;
    }
    if (k == m) break;
    ++x[k];
  }
  return out;
}

FiniteGroup closure(const std::vector<IntMatrix>& generators, std::size_t dim) {
  FiniteGroup g;
  g.generators = generators;
  g.elements.push_back(IntMatrix::identity(dim));
  std::deque<IntMatrix> queue{IntMatrix::identity(dim)};
  while (!queue.empty()) {
    IntMatrix x = queue.front();
    queue.pop_front();
    for (const IntMatrix& s : generators) {
      IntMatrix y = x * s;
      if (!contains(g.elements, y)) {
        g.elements.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return g;
}

namespace {

std::vector<IntMatrix> generating_set(const std::vector<IntMatrix>& elements, std::size_t dim) {
  std::vector<IntMatrix> gens;
  std::vector<IntMatrix> span{IntMatrix::identity(dim)};
  for (const IntMatrix& e : elements) {
    if (contains(span, e)) continue;
    gens.push_back(e);
    span = closure(gens, dim).elements;
  }
  return gens;
}

}  // namespace

FiniteGroup aut_definite(const IntMatrix& gram, std::size_t max_order) {
  const std::size_t m = gram.rows();
  require(m <= 8, "automorphism search is limited to rank ≤ 8");
  if (m > 0) require(signature(to_rat(gram)) == std::make_pair(int(m), 0), "lattice is not positive definite");
  Int bound = 0;
  for (std::size_t i = 0; i < m; ++i) bound = std::max(bound, gram(i, i));
  std::map<Int, std::vector<IntVector>> by_norm;
  for (IntVector& v : short_vectors(gram, bound)) by_norm[norm(v, gram)].push_back(std::move(v));

  FiniteGroup g;
  std::vector<IntVector> cols(m);
  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      require(g.elements.size() < max_order, "automorphism group is too large");
      g.elements.push_back(IntMatrix::from_columns(m, cols));
      return;
    }
    for (const IntVector& v : by_norm[gram(i, i)]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = pair(v, gram, cols[j]) == gram(i, j);
      if (!ok) continue;
      cols[i] = v;
      self(self, i + 1);
    }
  };
  search(search, 0);
  for (const IntMatrix& e : g.elements) ensure(e.transpose() * gram * e == gram, "enumerated map is not an isometry");
  g.generators = generating_set(g.elements, m);
  return g;
}

FiniteGroup gamma_Lambda(const IntMatrix& gram) {
  const std::size_t m = gram.rows();
  const RatMatrix G = to_rat(gram);
  const RatMatrix ginv = inverse(G);
  FiniteGroup g;
  for (const IntMatrix& e : aut_definite(gram).elements) {
    if (det(e) != 1) continue;
    if (!is_integral((to_rat(e) - RatMatrix::identity(m)) * ginv)) continue;
    g.elements.push_back(e);
  }
  g.generators = generating_set(g.elements, m);
  return g;
}

bool BoundaryReport::consistent() const {
  for (const auto& c : checks)
    if (!c.second) return false;
  return true;
}

BoundaryReport boundary_report(const EvenLattice& L, const Sublattice& I, const Sublattice& Itilde) {
  require(L.signature().second == 2, "boundary report needs signature (n, 2)");
  require(I.rank() == 2, "boundary report needs rank I = 2");
  const IsotropicFrame F = IsotropicFrame::build(L, I, Itilde);
  BoundaryReport rep;
  auto check = [&](std::string name, bool ok) { rep.checks.emplace_back(std::move(name), ok); };

  rep.lambda_gram = F.lambda_gram();
  const std::size_t m = F.m();
  check("Lambda positive definite", m == 0 || signature(F.lambda_gram_rat()) == std::make_pair(int(m), 0));
  rep.delta_invariants = F.delta_lambda().invariants();

  rep.gamma_lstar = rank2_congruence_params(F, Level::Lstar);
  rep.gamma_iota = rank2_congruence_params(F, Level::Iota);
  auto in_lstar = [&](const IntMatrix& M) { return sl_JI_member(to_rat(M), F.i_lstar_coords()); };
  auto in_iota = [&](const IntMatrix& M) { return sl_JI_member(to_rat(M), F.i_iota_coords()); };

  const CosetEnumeration lstar_cosets = coset_enumeration(in_lstar);
  rep.gamma_lstar_index = lstar_cosets.index();
  const Int& N = rep.gamma_lstar.N;
  const std::size_t sl2_n = sl2_mod(N).size();
  const std::size_t lstar_n = count_mod(N, [&](const IntMatrix& x) { return in_lstar(lift_sl2(x, N)); });
  rep.gamma_lstar_index_counted = sl2_n / lstar_n;
  check("Gamma_L* index: cosets = |SL2(Z/N)| / |image|", sl2_n % lstar_n == 0 && rep.gamma_lstar_index == rep.gamma_lstar_index_counted);

  // The (N, D) description must cut out the same subgroup, in the adapted basis.
  const RatMatrix P = rep.gamma_lstar.basis_change;
  const RatMatrix Pinv = inverse(P);
  const Int& D = rep.gamma_lstar.D;
  bool description_ok = true;
  for (const IntMatrix& x : sl2_mod(N)) {
    const IntMatrix M = lift_sl2(x, N);
    const IntMatrix A = to_int(Pinv * to_rat(M) * P);
    const bool described = mod(A(0, 0) - 1, N) == 0 && mod(A(1, 0), N) == 0 && mod(A(0, 1), D) == 0;
    if (described != in_lstar(M)) description_ok = false;
  }
  check("Gamma_L* equals Gamma_1^0(N,D) in the adapted basis", description_ok);

  rep.gamma_iota_index_sl2 = coset_enumeration(in_iota).index();
  const Int& Ni = rep.gamma_iota.N;
  const std::size_t lstar_ni = count_mod(Ni, [&](const IntMatrix& x) { return in_lstar(lift_sl2(x, Ni)); });
  const std::size_t iota_ni = count_mod(Ni, [&](const IntMatrix& x) { return in_iota(lift_sl2(x, Ni)); });
  rep.gamma_iota_index_in_lstar = lstar_ni / iota_ni;
  check("index(Gamma_iota in SL2) = index(Gamma_iota in Gamma_L*) * index(Gamma_L* in SL2)",
        lstar_ni % iota_ni == 0 && rep.gamma_iota_index_sl2 == rep.gamma_iota_index_in_lstar * rep.gamma_lstar_index);

  const FiniteGroup aut = aut_definite(F.lambda_gram());
  rep.o_lambda_order = aut.order();
  rep.gamma_lambda = gamma_Lambda(F.lambda_gram());
  check("Gamma_Lambda order divides |O(Lambda)|", rep.o_lambda_order % rep.gamma_lambda.order() == 0);
  bool closed = true;
  for (const IntMatrix& a : rep.gamma_lambda.elements)
    for (const IntMatrix& b : rep.gamma_lambda.elements)
      if (!contains(rep.gamma_lambda.elements, a * b)) closed = false;
  check("Gamma_Lambda closed under multiplication", closed);

  for (const IntMatrix& g : lstar_cosets.schreier_generators) {
    BTableEntry e;
    e.generator = g;
    e.b = cocycle_b(to_rat(g), F);
    e.b_delta = cocycle_in_delta(to_rat(g), F);
    e.in_gamma_iota = in_iota(g);
    rep.b_table.push_back(e);
  }
  bool vanishing_ok = true, law_ok = true;
  for (const BTableEntry& e : rep.b_table) {
    bool delta_zero = true;
    for (const auto& x : e.b_delta) delta_zero = delta_zero && F.delta_lambda().is_zero(x);
    if (cocycle_is_zero(e.b) != e.in_gamma_iota || delta_zero != e.in_gamma_iota) vanishing_ok = false;
    for (const BTableEntry& f : rep.b_table) {
      CocycleValue lhs = cocycle_b(to_rat(e.generator * f.generator), F);
      if (lhs != cocycle_add(e.b, cocycle_act(to_rat(e.generator), f.b, F), F)) law_ok = false;
    }
  }
  check("b_M vanishes exactly on Gamma_iota", vanishing_ok);
  check("b_gh = b_g + g(b_h) on generator pairs", law_ok);
  rep.iota_trivial = iota_class_trivial(F).trivial;
  return rep;
}

std::string boundary_text(const BoundaryReport& r, const std::string& lattice_name) {
  std::ostringstream os;
  auto inv = [](const std::vector<Int>& v) {
    if (v.empty()) return std::string("trivial");
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " x " : "") + std::string("Z/") + v[i].get_str();
    return s;
  };
  os << "Boundary component for " << lattice_name << "\n";
  os << "  Lambda gram        : " << to_string(to_rat(r.lambda_gram)) << "\n";
  os << "  Delta_Lambda       : " << inv(r.delta_invariants) << "\n";
  os << "  Gamma_L*           : " << r.gamma_lstar.description << ", (N, D) = (" << r.gamma_lstar.N << ", "
     << r.gamma_lstar.D << "), index " << r.gamma_lstar_index << " in SL2(Z)\n";
  os << "  Gamma_iota         : " << r.gamma_iota.description << ", index " << r.gamma_iota_index_in_lstar
     << " in Gamma_L*\n";
  os << "  Gamma_Lambda       : order " << r.gamma_lambda.order() << " (O(Lambda) has order " << r.o_lambda_order << ")\n";
  std::size_t nonzero = 0;
  for (const auto& e : r.b_table) nonzero += e.in_gamma_iota ? 0 : 1;
  os << "  b-table            : " << r.b_table.size() << " generators, " << nonzero << " with b_M != 0\n";
  os << "  iota class trivial : " << (r.iota_trivial ? "yes" : "no") << "\n";
  os << "The boundary component is isomorphic to Gamma_Lambda \\ W_{L*}^{Lambda,b}: a Kuga-Sato family\n"
     << "E^Lambda over the modular curve of Gamma_L* (level " << r.gamma_lstar.N << "), twisted by b with values in\n"
     << "Delta_Lambda x Delta_Lambda, divided by a group of order " << r.gamma_lambda.order() << ".\n";
  for (const auto& c : r.checks) os << "  [" << (c.second ? "ok" : "FAIL") << "] " << c.first << "\n";
  return os.str();
}

}  // namespace parablat
