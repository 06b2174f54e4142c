#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "parablat/checks.hpp"
#include "parablat/serialize.hpp"

namespace parablat::checks {

std::size_t SuiteOptions::count(std::size_t base) const {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(base) * scale)));
}

namespace {

// Accumulates failures with the first few messages kept for the report.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (messages_.size() < 4) messages_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  std::size_t failed() const { return failed_; }
  CheckResult result(const std::string& name) const {
    std::ostringstream os;
    os << checked_ << " checks, " << failed_ << " failed";
    for (const auto& n : notes_) os << "; " << n;
    for (const auto& m : messages_) os << "; FAIL " << m;
    return {name, failed_ == 0, os.str()};
  }

 private:
  std::size_t checked_ = 0, failed_ = 0;
  std::vector<std::string> messages_, notes_;
};

template <class F>
CheckResult guarded(const std::string& name, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

Int exponent(const FinQuadModule& d) { return d.trivial() ? Int(1) : d.invariants().back(); }

// Calls f(v) for every v = x/s with x ∈ [−bound, bound]^n and s among the
// divisors of the exponent of Δ_L, and for v = G⁻¹x.
template <class F>
void scaled_box(const EvenLattice& L, long bound, F&& f) {
  const Int e = exponent(discriminant_group(L));
  std::vector<Int> scales;
  for (long d = 1; d <= e.get_si(); ++d)
    if (e % d == 0) scales.push_back(d);
  const std::size_t n = L.dim();
  std::vector<long> x(n, -bound);
  while (true) {
    for (const Int& s : scales) {
      bool primitive = s == 1;
      for (long xi : x)
        if (!primitive && gcd(Int(xi), s) == 1) primitive = true;
      if (!primitive) continue;  // x/s already visited with a smaller scale
      RatVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = Rat(Int(x[i]), s), v[i].canonicalize();
      f(v);
    }
    if (abs(L.determinant()) != 1) {  // the same box against the basis of L*
      RatVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = x[i];
      f(L.gram_inverse() * v);
    }
    std::size_t i = 0;
    while (i < n && ++x[i] > bound) x[i++] = -bound;
    if (i == n) break;
  }
}

std::string show(const RatMatrix& m) { return to_string(m); }

RatMatrix id(std::size_t n) { return RatMatrix::identity(n); }

}  // namespace

CheckResult acceptance_1_decomposition(const SuiteOptions&) {
  const std::string name = "decomposition soundness for L, L*, L*_I on the [-3,3] box";
  return guarded(name, [&] {
    Tally t;
    for (const Fixture& fx : all_fixtures()) {
      const IsotropicFrame F = IsotropicFrame::build(fx.lattice, fx.isotropic);
      const Sublattice i_lstar = oracle_i_lstar(fx.lattice, fx.isotropic);
      t.check(i_lstar == F.i_lstar(), fx.key + ": I_{L*} differs from the scan");
      std::size_t count = 0, inL = 0, inLs = 0, inLsI = 0;
      scaled_box(fx.lattice, 3, [&](const RatVector& v) {
        ++count;
        const bool dl = oracle_in_L(v), ds = oracle_in_Lstar(fx.lattice, v),
                   dsi = oracle_in_LstarI(fx.lattice, i_lstar, v);
        inL += dl, inLs += ds, inLsI += dsi;
        if (F.member(v, Target::L) != dl || F.member(v, Target::Lstar) != ds ||
            F.member(v, Target::LstarI) != dsi)
          t.check(false, fx.key + ": mismatch at " + show(RatMatrix::column(v).transpose()));
      });
      t.check(true, fx.key);
      std::ostringstream os;
      os << fx.key << " " << count << " vectors (" << inL << " in L, " << inLs << " in L*, " << inLsI << " in L*_I)";
      t.note(os.str());
    }
    return t.result(name);
  });
}

CheckResult acceptance_2_iota(const SuiteOptions&) {
  const std::string name = "iota(2 mu) nonzero in Z/2 with q = 1/4 on FIX-G3 and FIX-G5";
  return guarded(name, [&] {
    Tally t;
    for (const char* key : {"FIX-G3", "FIX-G5"}) {
      const Fixture fx = fixture(key);
      const EvenLattice& L = fx.lattice;
      const IsotropicFrame F = IsotropicFrame::build(L, fx.isotropic);
      const FinQuadModule& delta = F.delta_lambda();
      t.check(delta.invariants() == std::vector<Int>{2}, std::string(key) + ": Delta_Lambda is not Z/2");
      const RatVector mu = L.gram_inverse().col(0);
      auto mu_c = F.Itilde().coordinates(mu);
      t.check(mu_c.has_value(), std::string(key) + ": mu is not in the complement");
      if (!mu_c) continue;
      IntVector two_mu_c = *mu_c;
      for (Int& x : two_mu_c) x *= 2;
      RatVector two_mu = mu;
      for (Rat& x : two_mu) x *= 2;
      t.check(F.itilde_l().contains(two_mu), std::string(key) + ": 2 mu not in Itilde_L");
      t.check(!F.itilde_l().contains(mu), std::string(key) + ": mu in Itilde_L");
      const auto value = F.iota(two_mu_c);
      t.check(!delta.is_zero(value), std::string(key) + ": iota(2 mu) = 0");
      t.check(delta.q(value) == Rat(1, 4), std::string(key) + ": q(iota(2 mu)) != 1/4");
      t.check(frac(L.norm(two_mu) / 2) == Rat(1, 4), std::string(key) + ": (2 mu)^2/2 != 1/4");

      // Every λ in the box lying over 2μ carries the same nonzero glue class.
      const RatMatrix target = L.pairings(F.i_basis(), RatMatrix::column(two_mu));
      std::size_t found = 0;
      const std::size_t n = L.dim();
      std::vector<long> x(n, -3);
      while (true) {
        RatVector lam(n);
        for (std::size_t i = 0; i < n; ++i) lam[i] = x[i];
        if (L.pairings(F.i_basis(), RatMatrix::column(lam)) == target) {
          ++found;
          const GlueSample g = oracle_glue(L, F.i_basis(), F.Itilde().basis(), lam);
          t.check(g.utilde == two_mu, std::string(key) + ": oracle utilde differs from 2 mu");
          t.check(!g.w_in_lattice, std::string(key) + ": oracle glue class trivial");
          t.check(g.q_w == Rat(1, 4) && g.q_utilde == Rat(1, 4), std::string(key) + ": oracle q mismatch");
          auto wc = F.lambda_tilde().span_coordinates(g.w);
          t.check(wc && F.lambda_class(*wc) == delta.reduce(value), std::string(key) + ": oracle class differs");
        }
        std::size_t i = 0;
        while (i < n && ++x[i] > 3) x[i++] = -3;
        if (i == n) break;
      }
      t.check(found > 0, std::string(key) + ": no lattice vector over 2 mu in the box");
      t.note(std::string(key) + " " + std::to_string(found) + " lifts of 2 mu checked");
      if (std::string(key) == "FIX-G5") {
        RatVector e5(n);
        e5[4] = 1;
        auto c5 = F.Itilde().coordinates(e5);
        t.check(c5 && delta.is_zero(F.iota(*c5)), "FIX-G5: iota(e5) != 0");
      }
    }
    return t.result(name);
  });
}

CheckResult acceptance_3_membership(const SuiteOptions& o) {
  const std::string name = "membership conditions (i)-(iv) agree with the direct oracle";
  return guarded(name, [&] {
    Tally t;
    Sampler s(o.seed + 3);
    for (const FrameContext& ctx : fixture_contexts()) {
      const IsotropicFrame& F = ctx.frame;
      const std::size_t total = o.count(1000);
      std::size_t members = 0, misses = 0;
      std::map<int, std::size_t> miss_count;
      for (std::size_t k = 0; k < total; ++k) {
        ParabolicCoords c;
        const std::size_t kind = k % 10;
        if (kind < 4) {
          c = ctx.random_member(s);
        } else if (kind < 8) {
          const int cond = 1 + static_cast<int>(k / 10 % 4);
          auto nm = ctx.near_miss(s, cond);
          if (!nm) nm = ctx.near_miss(s, 2 + static_cast<int>(k / 10 % 3));
          if (!nm) nm = ctx.near_miss(s, 2);
          c = *nm;
          ++miss_count[cond];
        } else {
          c = ctx.random_coords(s);
        }
        const ConditionReport rep = gamma_LI_member_conditions(c, F);
        const RatMatrix a = assemble(c, F);
        const bool direct = gamma_LI_member_direct(a, F);
        const bool oracle = oracle_gamma_LI(a, F);
        members += rep.member;
        misses += kind >= 4 && kind < 8 && !rep.member;
        if (rep.member != direct || direct != oracle)
          t.check(false, ctx.key + ": conditions " + std::to_string(rep.member) + " direct " + std::to_string(direct) +
                             " oracle " + std::to_string(oracle) + " at M=" + show(c.M) + " psi=" + show(c.psi));
        else
          t.check(true, "");
      }
      t.check(members > 0 && members < total, ctx.key + ": degenerate sample");
      t.note(ctx.key + " " + std::to_string(total) + " samples, " + std::to_string(members) + " members, " +
             std::to_string(misses) + " rejected near-misses");
    }
    return t.result(name);
  });
}

CheckResult acceptance_4_heisenberg(const SuiteOptions& o) {
  const std::string name = "integral Heisenberg closure, commutator identity, FIX-L7 t-criterion";
  return guarded(name, [&] {
    Tally t;
    Sampler s(o.seed + 4);
    for (const FrameContext& ctx : fixture_contexts()) {
      const IsotropicFrame& F = ctx.frame;
      const std::size_t r = F.r(), m = F.m();
      for (std::size_t k = 0; k < o.count(500); ++k) {
        const HeisenbergElement h = ctx.random_zheis(s), g = ctx.random_zheis(s), l = ctx.random_zheis(s);
        t.check(zheis_member(h, F) && zheis_member(g, F), ctx.key + ": sampled element not in ZHeis");
        t.check(zheis_member(heis_mul(h, g, F), F), ctx.key + ": product left ZHeis");
        t.check(zheis_member(heis_inverse(h), F), ctx.key + ": inverse left ZHeis");
        t.check(heis_mul(heis_mul(h, g, F), l, F) == heis_mul(h, heis_mul(g, l, F), F), ctx.key + ": not associative");
        t.check(heis_mul(h, heis_inverse(h), F) == heis_identity(F), ctx.key + ": h h^-1 != 1");
      }
      for (std::size_t k = 0; k < o.count(200); ++k) {
        const RatMatrix psi = s.rational_matrix(r, m, 4, 6), phi = s.rational_matrix(r, m, 4, 6);
        const RatMatrix A = assemble({id(r), id(m), psi, RatMatrix(r, r)}, F);
        const RatMatrix B = assemble({id(r), id(m), phi, RatMatrix(r, r)}, F);
        const ParabolicCoords d = decompose_parabolic(A * B * inverse(A) * inverse(B), F);
        const RatMatrix expected = psi * psi_dual(phi, F) - phi * psi_dual(psi, F);
        t.check(d.M == id(r) && d.gamma == id(m) && d.psi.is_zero() && d.eta == expected,
                ctx.key + ": commutator eta-part differs from psi phi* - phi psi*");
        const HeisenbergElement h{psi, RatMatrix(r, r)}, g{phi, RatMatrix(r, r)};
        const HeisenbergElement comm = heis_mul(heis_mul(h, g, F), heis_mul(heis_inverse(h), heis_inverse(g), F), F);
        t.check(comm.psi.is_zero() && comm.eta == expected, ctx.key + ": group-law commutator differs");
      }
    }
    // FIX-L7: ψ ↔ (ε1, ε2), i.e. ψ = G_Λ in the Λ̃-basis.
    const Fixture fx = fixture("FIX-L7");
    const IsotropicFrame F = IsotropicFrame::build(fx.lattice, fx.isotropic);
    t.check(F.lambda_gram() == gram_A2(), "FIX-L7: Lambda is not A2");
    const RatMatrix psi = F.lambda_gram_rat();
    std::size_t hits = 0;
    for (long num = -18; num <= 18; ++num) {
      Rat tt(Int(num), Int(6));
      tt.canonicalize();
      RatMatrix eta(2, 2);
      eta(0, 1) = tt;
      eta(1, 0) = -tt;
      const bool expect = is_integer(tt - Rat(1, 2));
      const bool got = zheis_member({psi, eta}, F);
      const bool direct = gamma_LI_member_direct(assemble({id(2), id(2), psi, eta}, F), F);
      hits += got;
      t.check(got == expect && direct == expect, "FIX-L7: t = " + tt.get_str());
    }
    t.check(c_psi(psi, F)(0, 1) == Rat(1, 2), "FIX-L7: c_psi representative is not t = 1/2");
    t.note("FIX-L7 t in (1/6)Z, |t| <= 3: " + std::to_string(hits) + " members");
    return t.result(name);
  });
}

CheckResult acceptance_5_cocycle(const SuiteOptions& o) {
  const std::string name = "cocycle law and congruence description on FIX-G5";
  return guarded(name, [&] {
    Tally t;
    Sampler s(o.seed + 5);
    const FrameContext ctx = FrameContext::make("FIX-G5", IsotropicFrame::build(fixture("FIX-G5").lattice, fixture("FIX-G5").isotropic));
    const IsotropicFrame& F = ctx.frame;
    for (std::size_t k = 0; k < o.count(100); ++k) {
      const RatMatrix M = ctx.random_lstar_element(s, 1 + s.uniform(0, 6));
      const RatMatrix N = ctx.random_lstar_element(s, 1 + s.uniform(0, 6));
      t.check(cocycle_law_check(M, N, F), "b_MN != b_M + M b_N at M=" + show(M) + " N=" + show(N));
      const CocycleValue lhs = cocycle_b(M * N, F);
      const CocycleValue rhs = cocycle_add(cocycle_b(M, F), cocycle_act(M, cocycle_b(N, F), F), F);
      t.check(lhs == rhs, "recomputed cocycle law fails");
    }
    // Two fixed matrices, one on each side, then random words.
    const std::vector<RatMatrix> fixed{id(2), RatMatrix{{3, 1}, {2, 1}}};
    std::size_t zero = 0, total = fixed.size() + o.count(200);
    for (std::size_t k = 0; k < total; ++k) {
      const RatMatrix M = k < fixed.size() ? fixed[k] : ctx.random_lstar_element(s, s.uniform(0, 8));
      const bool vanishes = cocycle_is_zero(cocycle_b(M, F));
      zero += vanishes;
      t.check(vanishes == sl_JI_member(M, F.i_iota_coords()), "b_M = 0 disagrees with SL(I_iota, I) at " + show(M));
    }
    t.check(zero > 0 && zero < total, "b_M sample does not cover both cases");
    t.note(std::to_string(zero) + "/" + std::to_string(total) + " sampled M with b_M = 0");

    // Exhaustive over SL2(Z/4): membership depends only on M mod 4.
    std::size_t in_lstar = 0, in_iota = 0;
    const auto all = sl2_mod(4);
    for (const IntMatrix& x : all) {
      const RatMatrix M = to_rat(lift_sl2(x, 4));
      const Int a = x(0, 0), c = x(1, 0);
      const bool e2 = mod(a, 2) == 1 && mod(c, 2) == 0, e4 = mod(a, 4) == 1 && mod(c, 4) == 0;
      const bool m2 = sl_JI_member(M, F.i_lstar_coords()), m4 = sl_JI_member(M, F.i_iota_coords());
      in_lstar += m2, in_iota += m4;
      t.check(m2 == e2 && m4 == e4, "congruence mismatch at " + show(M));
    }
    const std::size_t c2 = count_mod(2, [](const IntMatrix& x) { return x(0, 0) == 1 && x(1, 0) == 0; });
    t.check(all.size() / in_lstar == 3 && sl2_mod(2).size() / c2 == 3, "index of SL(I_L*, I) is not 3");
    t.check(all.size() / in_iota == 12, "index of SL(I_iota, I) is not 12");
    const CongruenceParams pl = rank2_congruence_params(F, Level::Lstar), pi = rank2_congruence_params(F, Level::Iota);
    t.check(pl.N == 2 && pl.D == 1, "(N, D) for I_L* is not (2, 1)");
    t.check(pi.N == 4 && pi.D == 1, "(N, D) for I_iota is not (4, 1)");
    t.note("|SL2(Z/4)| = " + std::to_string(all.size()) + ", " + std::to_string(in_lstar) + " in SL(I_L*,I), " +
           std::to_string(in_iota) + " in SL(I_iota,I)");
    return t.result(name);
  });
}

CheckResult acceptance_6_splitting(const SuiteOptions& o) {
  const std::string name = "complete_to_element splits; FIX-G3 members are the Hom(Lambda*,I) translations";
  return guarded(name, [&] {
    Tally t;
    Sampler s(o.seed + 6);
    for (const FrameContext& ctx : fixture_contexts()) {
      const IsotropicFrame& F = ctx.frame;
      for (std::size_t k = 0; k < o.count(50); ++k) {
        const RatMatrix M = ctx.random_lstar_element(s, s.uniform(0, 6));
        const RatMatrix g = ctx.random_gamma(s);
        const ParabolicCoords c = complete_to_element(M, g, F);
        const RatMatrix a = assemble(c, F);
        t.check(gamma_LI_member_direct(a, F) && oracle_gamma_LI(a, F), ctx.key + ": completion fails the oracle");
        t.check(c.M == M && c.gamma == g, ctx.key + ": completion changed (M, gamma)");
      }
    }
    const FrameContext ctx = FrameContext::make("FIX-G3", IsotropicFrame::build(fixture("FIX-G3").lattice, fixture("FIX-G3").isotropic));
    const IsotropicFrame& F = ctx.frame;
    t.check(ctx.gamma_lambda.size() == 1, "FIX-G3: Gamma_Lambda is not trivial");
    std::size_t members = 0;
    for (const Rat& M : {Rat(1), Rat(-1), Rat(2), Rat(1, 2)})
      for (const IntMatrix& g : ctx.o_lambda)
        for (long k = -8; k <= 8; ++k) {
          Rat p(Int(k), Int(2));
          p.canonicalize();
          const ParabolicCoords c{RatMatrix{{M}}, to_rat(g), RatMatrix{{p}}, RatMatrix(1, 1)};
          const bool in_hom = is_integral(c.psi * F.lambda_gram_inverse());
          const bool expect = M == 1 && g == IntMatrix::identity(1) && in_hom;
          const bool got = gamma_LI_member_direct(assemble(c, F), F);
          members += got;
          t.check(got == expect, "FIX-G3: membership of M=" + M.get_str() + " psi=" + p.get_str());
        }
    for (long a = -4; a <= 4; ++a)
      for (long b = -4; b <= 4; ++b) {
        const RatMatrix pa{{Rat(2 * a)}}, pb{{Rat(2 * b)}};
        const RatMatrix prod = assemble({id(1), id(1), pa, RatMatrix(1, 1)}, F) * assemble({id(1), id(1), pb, RatMatrix(1, 1)}, F);
        t.check(prod == assemble({id(1), id(1), pa + pb, RatMatrix(1, 1)}, F), "FIX-G3: translations do not add");
      }
    t.note("FIX-G3 box: " + std::to_string(members) + " members, all translations");
    return t.result(name);
  });
}

CheckResult acceptance_7_spinor(const SuiteOptions& o) {
  const std::string name = "reflection (det, spinor) equals the parabolic shortcut";
  return guarded(name, [&] {
    Tally t;
    Sampler s(o.seed + 7);
    std::map<std::pair<int, int>, std::size_t> seen;
    for (const FrameContext& ctx : fixture_contexts()) {
      for (std::size_t k = 0; k < o.count(300); ++k) {
        const ParabolicCoords c = ctx.random_coords(s);
        const DetSpinor full = det_spinor(assemble(c, ctx.frame), ctx.frame.lattice().gram_rat());
        const DetSpinor quick = det_spinor_shortcut(c, ctx.frame);
        ++seen[{full.det, full.spinor_sign}];
        t.check(full == quick, ctx.key + ": mismatch at M=" + show(c.M) + " gamma=" + show(c.gamma));
      }
    }
    t.check(seen.size() == 4, "not all four (det, spinor) classes were sampled");
    const RatMatrix G = to_rat(gram_H());
    t.check(det_spinor(-id(2), G) == DetSpinor{1, -1}, "FIX-H: -Id is not (+1, -1)");
    t.check(det_spinor(RatMatrix{{0, 1}, {1, 0}}, G) == DetSpinor{-1, -1}, "FIX-H: swap is not (-1, -1)");
    t.check(det_spinor(id(2), G) == DetSpinor{1, 1}, "FIX-H: identity is not (+1, +1)");
    return t.result(name);
  });
}

CheckResult acceptance_8_boundary(const SuiteOptions&) {
  const std::string name = "boundary reports for FIX-L5 and FIX-L5b";
  return guarded(name, [&] {
    Tally t;
    {
      const Fixture fx = fixture("FIX-L5");
      const IsotropicFrame F = IsotropicFrame::build(fx.lattice, fx.isotropic);
      const BoundaryReport r = boundary_report(fx.lattice, fx.isotropic, F.Itilde());
      t.check(r.lambda_gram == gram_A1(), "FIX-L5: Lambda is not A1");
      t.check(r.delta_invariants == std::vector<Int>{2}, "FIX-L5: Delta is not Z/2");
      t.check(r.gamma_lstar.N == 1 && r.gamma_lstar.D == 1 && r.gamma_lstar_index == 1, "FIX-L5: Gamma_L* != SL2(Z)");
      t.check(r.gamma_lambda.order() == 1, "FIX-L5: Gamma_Lambda not trivial");
      t.check(r.iota_trivial, "FIX-L5: iota class not trivial");
      for (const BTableEntry& e : r.b_table) t.check(cocycle_is_zero(e.b), "FIX-L5: nonzero b");
      t.check(r.consistent(), "FIX-L5: report checks fail");
    }
    {
      const Fixture fx = fixture("FIX-L5b");
      const IsotropicFrame F = IsotropicFrame::build(fx.lattice, fx.isotropic);
      const BoundaryReport r = boundary_report(fx.lattice, fx.isotropic, F.Itilde());
      t.check(r.gamma_lstar.N == 2 && r.gamma_lstar.D == 1, "FIX-L5b: (N, D) != (2, 1)");
      const std::size_t hits = count_mod(2, [](const IntMatrix& x) { return x(0, 0) == 1 && x(1, 0) == 0; });
      const std::size_t counted = sl2_mod(2).size() / hits;
      t.check(r.gamma_lstar_index == 3 && r.gamma_lstar_index_counted == 3 && counted == 3,
              "FIX-L5b: index of Gamma_L* is not 3 by both methods");
      t.check(r.gamma_lambda.order() == 1, "FIX-L5b: Gamma_Lambda not trivial");
      for (const BTableEntry& e : r.b_table) t.check(cocycle_is_zero(e.b), "FIX-L5b: nonzero b");
      t.check(r.consistent(), "FIX-L5b: report checks fail");
      t.note("FIX-L5b index " + std::to_string(r.gamma_lstar_index) + " by cosets, " + std::to_string(counted) +
             " by counting in SL2(Z/2)");
    }
    return t.result(name);
  });
}

CheckResult acceptance_9_complement(const SuiteOptions& o) {
  const std::string name = "complement changes: delta iota = p phi, verdicts unchanged, iota-class triviality";
  return guarded(name, [&] {
    Tally t;
    Sampler s(o.seed + 9);
    const std::map<std::string, bool> expected{{"FIX-G3", false}, {"FIX-G5", false}, {"FIX-L5", true},
                                               {"FIX-L5b", true}, {"FIX-L7", true},  {"FIX-H", true}};
    for (const FrameContext& ctx : fixture_contexts()) {
      const IsotropicFrame& F = ctx.frame;
      const bool trivial = iota_class_trivial(F).trivial;
      t.check(trivial == expected.at(ctx.key), ctx.key + ": iota_class_trivial");
      t.check(trivial == oracle_iota_class_trivial(F), ctx.key + ": iota_class_trivial disagrees with the scan");
      const ComplementChange same = change_complement(F, F.Itilde());
      t.check(same.consistent() && same.phi.is_zero() && same.beta.is_zero(), ctx.key + ": identity change nonzero");
      for (std::size_t k = 0; k < o.count(20); ++k) {
        const Sublattice Ihat = ctx.random_complement(s);
        const ComplementChange ch = change_complement(F, Ihat);
        t.check(ch.consistent(), ctx.key + ": delta iota != p phi or beta incompatible");
        const IsotropicFrame& H = ch.frame;
        t.check(iota_class_trivial(H).trivial == trivial, ctx.key + ": triviality depends on the complement");
        for (int j = 0; j < 40; ++j) {
          RatVector v(F.n());
          const long den = s.pick(std::vector<long>{1, 2, 4, 8, 3});
          for (Rat& x : v) x = Rat(Int(s.uniform(-3, 3)), Int(den)), x.canonicalize();
          for (Target tg : {Target::L, Target::Lstar, Target::LstarI})
            t.check(F.member(v, tg) == H.member(v, tg), ctx.key + ": vector verdict changed");
        }
        for (int j = 0; j < 5; ++j) {
          ParabolicCoords c = j < 3 ? ctx.random_member(s) : *ctx.near_miss(s, 2);
          const RatMatrix a = assemble(c, F);
          const bool before = gamma_LI_member_conditions(c, F).member;
          const bool after = gamma_LI_member_conditions(decompose_parabolic(a, H), H).member;
          t.check(before == after, ctx.key + ": element verdict changed");
        }
      }
    }
    return t.result(name);
  });
}

std::vector<CheckResult> acceptance_suite(const SuiteOptions& o) {
  return {acceptance_1_decomposition(o), acceptance_2_iota(o),   acceptance_3_membership(o),
          acceptance_4_heisenberg(o),    acceptance_5_cocycle(o), acceptance_6_splitting(o),
          acceptance_7_spinor(o),        acceptance_8_boundary(o), acceptance_9_complement(o)};
}

std::vector<CheckResult> linalg_invariants(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  Sampler s(o.seed + 11);
  out.push_back(guarded("hnf/snf reconstruction and unimodularity", [&] {
    Tally t;
    for (std::size_t k = 0; k < o.count(150); ++k) {
      const std::size_t rows = s.uniform(1, 8), cols = s.uniform(1, 8);
      const IntMatrix m = s.integer_matrix(rows, cols, 20);
      const HnfResult h = hnf(m);
      t.check(h.u * m == h.h && is_unimodular(h.u), "hnf reconstruction");
      for (std::size_t i = 0; i < h.rank(); ++i) {
        const std::size_t p = h.pivots[i];
        t.check(h.h(i, p) > 0, "hnf pivot not positive");
        for (std::size_t j = 0; j < i; ++j) t.check(h.h(j, p) >= 0 && h.h(j, p) < h.h(i, p), "hnf not reduced");
      }
      const SnfResult d = snf(m);
      t.check(d.u * m * d.v == d.d && is_unimodular(d.u) && is_unimodular(d.v), "snf reconstruction");
      const auto diag = d.diagonal();
      for (std::size_t i = 0; i + 1 < diag.size(); ++i)
        t.check(diag[i + 1] == 0 ? true : (diag[i] != 0 && diag[i + 1] % diag[i] == 0), "snf divisibility");
    }
    return t.result("hnf/snf reconstruction and unimodularity");
  }));
  out.push_back(guarded("saturation idempotent with index = product of invariants", [&] {
    Tally t;
    for (std::size_t k = 0; k < o.count(100); ++k) {
      const std::size_t n = s.uniform(2, 6), c = s.uniform(1, n);
      const IntMatrix m = s.integer_matrix(n, c, 6);
      if (rank(to_rat(m)) < c) continue;
      const IntMatrix sat = saturation(m);
      t.check(saturation(sat) == sat, "not idempotent");
      const Sublattice inner(to_rat(m)), outer(to_rat(sat));
      t.check(outer.contains(inner), "does not contain the input");
      Int prod = 1;
      for (const Int& d : snf(m).diagonal()) prod *= d;
      t.check(index_in(inner, outer) == prod, "index differs from the product of invariant factors");
    }
    return t.result("saturation idempotent with index = product of invariants");
  }));
  return out;
}

std::vector<CheckResult> lattice_invariants(const SuiteOptions& o) {
  Sampler s(o.seed + 12);
  return {guarded("dual lattice, discriminant forms, quotient form, H_I identities", [&] {
    Tally t;
    for (const Fixture& fx : all_fixtures()) {
      const EvenLattice& L = fx.lattice;
      const Sublattice Ls = dual_lattice(L);
      t.check(Ls.contains(L.lattice()), fx.key + ": L not in L*");
      t.check(index_in(L.lattice(), Ls) == abs(L.determinant()), fx.key + ": [L*:L] != |det|");
      const FinQuadModule D = discriminant_group(L);
      const auto elems = D.elements();
      for (const auto& x : elems)
        for (const auto& y : elems) {
          t.check(frac(D.q(D.add(x, y)) - D.q(x) - D.q(y)) == D.b(x, y), fx.key + ": q polarization");
        }
      for (const auto& x : elems)
        for (long k = -3; k <= 3; ++k) t.check(D.q(D.scale(k, x)) == frac(Rat(k * k) * D.q(x)), fx.key + ": q(kx)");

      const Sublattice& I = fx.isotropic;
      const Sublattice iperp = perp_in(L, I, L.lattice());
      const QuotientForm qf = quotient_form(L, iperp, I);
      for (int k = 0; k < 5; ++k) {
        RatMatrix shifted = qf.section;
        for (std::size_t j = 0; j < shifted.cols(); ++j) {
          RatVector col = shifted.col(j);
          for (std::size_t b = 0; b < I.rank(); ++b) {
            const long c = s.uniform(-3, 3);
            for (std::size_t i = 0; i < col.size(); ++i) col[i] += I.basis()(i, b) * c;
          }
          shifted.set_col(j, col);
        }
        t.check(L.pairings(shifted, shifted) == to_rat(qf.lambda.gram()), fx.key + ": Gram depends on the section");
      }
      const IsotropicSubgroupData h = H_I_data(L, I);
      t.check(h.consistent(), fx.key + ": H_I data inconsistent");
      t.check(discriminant_group(qf.lambda).order() * h.order * h.order == D.order(), fx.key + ": |Δ_Λ||H_I|^2 != |Δ_L|");
      t.check(h.lstar_index == h.order, fx.key + ": [L*:L*_I] != |H_I|");
    }
    return t.result("dual lattice, discriminant forms, quotient form, H_I identities");
  })};
}

std::vector<CheckResult> frame_invariants(const SuiteOptions& o) {
  Sampler s(o.seed + 13);
  return {guarded("iota homomorphism and norm law, alpha uniqueness, index identities", [&] {
    Tally t;
    for (const FrameContext& ctx : fixture_contexts()) {
      const IsotropicFrame& F = ctx.frame;
      const FinQuadModule& D = F.delta_lambda();
      const IntMatrix& K = F.itilde_l_coords();
      const std::size_t r = F.r();
      for (std::size_t k = 0; k < o.count(50); ++k) {
        IntVector a(r), b(r);
        for (std::size_t j = 0; j < r; ++j) a[j] = s.uniform(-4, 4), b[j] = s.uniform(-4, 4);
        const IntVector ua = K * a, ub = K * b;
        IntVector sum(r);
        for (std::size_t j = 0; j < r; ++j) sum[j] = ua[j] + ub[j];
        t.check(D.add(F.iota(ua), F.iota(ub)) == F.iota(sum), ctx.key + ": iota not additive");
        t.check(D.q(F.iota(ua)) == frac(F.utilde_norm(to_rat(ua)) / 2), ctx.key + ": q(iota u) != u^2/2");
      }
      // α from its defining equations: 2·α(j, i) = (ũ_i, ũ_j), one unknown per i ≤ j.
      const RatMatrix& Id = F.itilde_basis();
      const RatMatrix P = F.lattice().pairings(Id, Id);
      std::vector<std::pair<std::size_t, std::size_t>> unknowns;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) unknowns.push_back({i, j});
      RatMatrix sys(r * r, unknowns.size()), rhs(r * r, 1);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          const auto key = std::make_pair(std::min(i, j), std::max(i, j));
          const std::size_t u = std::find(unknowns.begin(), unknowns.end(), key) - unknowns.begin();
          sys(i * r + j, u) = 2;
          rhs(i * r + j, 0) = P(i, j);
        }
      t.check(rank(sys) == unknowns.size(), ctx.key + ": alpha not unique");
      auto sol = rat_solve(sys, rhs);
      t.check(sol.has_value(), ctx.key + ": alpha equations inconsistent");
      if (sol)
        for (std::size_t u = 0; u < unknowns.size(); ++u)
          t.check((*sol)(u, 0) == F.alpha()(unknowns[u].first, unknowns[u].second), ctx.key + ": alpha differs");
      t.check(is_symmetric(F.alpha()), ctx.key + ": alpha not symmetric");
      const RatMatrix shifted = Id - F.i_basis() * F.alpha();
      t.check(F.lattice().pairings(shifted, shifted).is_zero(), ctx.key + ": u - alpha u not isotropic");
      const IsotropicSubgroupData h = H_I_data(F.lattice(), F.I());
      t.check(index_in(F.itilde_l(), F.Itilde()) == h.order, ctx.key + ": [Itilde:Itilde_L] != |H_I|");
      t.check(F.i_lstar().contains(F.I()) && F.i_iota().contains(F.i_lstar()), ctx.key + ": I ⊆ I_L* ⊆ I_iota fails");
    }
    return t.result("iota homomorphism and norm law, alpha uniqueness, index identities");
  })};
}

std::vector<CheckResult> parabolic_invariants(const SuiteOptions& o) {
  Sampler s(o.seed + 14);
  std::vector<CheckResult> out;
  const auto contexts = fixture_contexts();
  out.push_back(guarded("assemble is an isometry and inverts decompose", [&] {
    Tally t;
    for (const FrameContext& ctx : contexts) {
      const RatMatrix& G = ctx.frame.lattice().gram_rat();
      for (std::size_t k = 0; k < o.count(1000); ++k) {
        const ParabolicCoords c = ctx.random_coords(s);
        const RatMatrix a = assemble(c, ctx.frame);
        t.check(a.transpose() * G * a == G, ctx.key + ": not an isometry");
        t.check(decompose_parabolic(a, ctx.frame) == c, ctx.key + ": decompose(assemble(c)) != c");
        if (k % 10 == 0) {
          const RatMatrix b = a * assemble(ctx.random_coords(s), ctx.frame);
          t.check(assemble(decompose_parabolic(b, ctx.frame), ctx.frame) == b, ctx.key + ": assemble(decompose(A)) != A");
        }
      }
    }
    const Fixture fx = fixture("FIX-H");
    const IsotropicFrame F = IsotropicFrame::build(fx.lattice, fx.isotropic);
    bool thrown = false;
    try {
      decompose_parabolic(RatMatrix{{0, 1}, {1, 0}}, F);
    } catch (const NotInParabolic&) {
      thrown = true;
    }
    t.check(thrown, "FIX-H swap was not rejected");
    return t.result("assemble is an isometry and inverts decompose");
  }));
  out.push_back(guarded("eta is determined modulo Hom^as(I*, I)", [&] {
    Tally t;
    for (const FrameContext& ctx : contexts) {
      const std::size_t r = ctx.frame.r();
      if (r < 2) continue;
      for (std::size_t k = 0; k < o.count(100); ++k) {
        ParabolicCoords c = ctx.random_member(s);
        ParabolicCoords shifted = c;
        shifted.eta = c.eta + to_rat(to_int(s.antisymmetric(r, 3, 1)));
        t.check(gamma_LI_member_conditions(shifted, ctx.frame).member, ctx.key + ": integral eta shift left the group");
        const ParabolicCoords redo{c.M, c.gamma, c.psi, *complete_eta(c.M, c.psi, ctx.frame)};
        t.check(is_integral(redo.eta - c.eta), ctx.key + ": two eta choices differ by a non-integral map");
      }
    }
    return t.result("eta is determined modulo Hom^as(I*, I)");
  }));
  out.push_back(guarded("b_M = 0 iff M in SL(I_iota, I) on all rank-2 fixtures", [&] {
    Tally t;
    for (const FrameContext& ctx : contexts) {
      if (ctx.frame.r() != 2) continue;
      for (std::size_t k = 0; k < o.count(200); ++k) {
        const RatMatrix M = ctx.random_lstar_element(s, s.uniform(0, 8));
        t.check(cocycle_is_zero(cocycle_b(M, ctx.frame)) == sl_JI_member(M, ctx.frame.i_iota_coords()), ctx.key);
        if (k % 4 == 0) {
          const RatMatrix N = ctx.random_lstar_element(s, s.uniform(0, 8));
          t.check(cocycle_law_check(M, N, ctx.frame), ctx.key + ": cocycle law");
        }
      }
    }
    return t.result("b_M = 0 iff M in SL(I_iota, I) on all rank-2 fixtures");
  }));
  out.push_back(guarded("SL(J, I) congruence examples", [&] {
    Tally t;
    const Fixture l5b = fixture("FIX-L5b");
    const IsotropicFrame F = IsotropicFrame::build(l5b.lattice, l5b.isotropic);
    t.check(sl_JI_member(RatMatrix{{1, 1}, {0, 1}}, F.i_lstar(), F.I()), "FIX-L5b: T not a member");
    t.check(!sl_JI_member(RatMatrix{{0, -1}, {1, 0}}, F.i_lstar(), F.I()), "FIX-L5b: S is a member");
    t.check(sl_JI_member(id(2), F.i_lstar(), F.I()), "FIX-L5b: identity not a member");
    return t.result("SL(J, I) congruence examples");
  }));
  return out;
}

std::vector<CheckResult> boundary_invariants(const SuiteOptions&) {
  std::vector<CheckResult> out;
  out.push_back(guarded("O(Lambda) and Gamma_Lambda orders", [&] {
    Tally t;
    t.check(aut_definite(gram_A1()).order() == 2, "|O(A1)| != 2");
    t.check(aut_definite(gram_A2()).order() == 12, "|O(A2)| != 12");
    t.check(aut_definite(IntMatrix(0, 0)).order() == 1, "|O(0)| != 1");
    t.check(gamma_Lambda(gram_A1()).order() == 1, "Gamma_A1 not trivial");
    t.check(gamma_Lambda(gram_A2()).order() == 3, "|Gamma_A2| != 3");
    const FiniteGroup g = gamma_Lambda(block_diagonal({gram_A1(), gram_A1()}));
    const FiniteGroup all = aut_definite(block_diagonal({gram_A1(), gram_A1()}));
    t.check(all.order() == 8 && all.order() % g.order() == 0, "O(A1+A1) order");
    t.note("|Gamma_{A1+A1}| = " + std::to_string(g.order()));
    return t.result("O(Lambda) and Gamma_Lambda orders");
  }));
  for (const char* key : {"FIX-L5", "FIX-L5b", "FIX-L7", "FIX-G5"}) {
    const std::string name = std::string("boundary report self-checks on ") + key;
    out.push_back(guarded(name, [&] {
      Tally t;
      const Fixture fx = fixture(key);
      const IsotropicFrame F = IsotropicFrame::build(fx.lattice, fx.isotropic);
      const BoundaryReport r = boundary_report(fx.lattice, fx.isotropic, F.Itilde());
      for (const auto& c : r.checks) t.check(c.second, c.first);
      if (std::string(key) == "FIX-L7") t.check(r.gamma_lambda.order() == 3, "FIX-L7: |Gamma_Lambda| != 3");
      if (std::string(key) == "FIX-G5")
        t.check(r.gamma_lstar_index == 3 && r.gamma_iota_index_in_lstar == 4, "FIX-G5: indices");
      return t.result(name);
    }));
  }
  return out;
}

std::vector<CheckResult> serialization_invariants(const SuiteOptions& o) {
  Sampler s(o.seed + 16);
  return {guarded("JSON round trips", [&] {
    Tally t;
    for (const FrameContext& ctx : fixture_contexts()) {
      const IsotropicFrame& F = ctx.frame;
      const Json lat = lattice_to_json(F.lattice());
      t.check(round_trips(lat) && lattice_from_json(parse_json(dump(lat))).gram() == F.lattice().gram(), ctx.key + ": lattice");
      const Json sub = sublattice_to_json(F.Itilde());
      t.check(round_trips(sub) && sublattice_from_json(parse_json(dump(sub)), F.n()) == F.Itilde(), ctx.key + ": sublattice");
      for (int k = 0; k < 10; ++k) {
        const ParabolicCoords c = ctx.random_coords(s);
        const Json cj = coords_to_json(c);
        t.check(round_trips(cj) && coords_from_json(parse_json(dump(cj))) == c, ctx.key + ": coords");
        const Json el = to_json(assemble(c, F));
        t.check(round_trips(el) && rat_matrix_from_json(parse_json(dump(el))) == assemble(c, F), ctx.key + ": element");
        t.check(round_trips(conditions_to_json(gamma_LI_member_conditions(c, F))), ctx.key + ": member report");
      }
      t.check(round_trips(frame_to_json(F)), ctx.key + ": frame report");
      if (F.r() == 2 && F.lattice().signature().second == 2)
        t.check(round_trips(boundary_to_json(boundary_report(F.lattice(), F.I(), F.Itilde()))), ctx.key + ": boundary");
    }
    return t.result("JSON round trips");
  })};
}

std::vector<CheckResult> full_suite(const SuiteOptions& o) {
  std::vector<CheckResult> out = acceptance_suite(o);
  for (auto part : {linalg_invariants(o), lattice_invariants(o), frame_invariants(o), parabolic_invariants(o),
                    boundary_invariants(o), serialization_invariants(o)})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace parablat::checks
