#include "parablat/reports.hpp"

namespace parablat {

Json analyze_report(const EvenLattice& L, const std::optional<Sublattice>& I) {
  const FinQuadModule D = discriminant_group(L);
  Json j;
  j["lattice"] = lattice_to_json(L);
  j["signature"] = {L.signature().first, L.signature().second};
  j["determinant"] = L.determinant().get_str();
  j["discriminant_order"] = D.order().get_str();
  j["discriminant_invariants"] = to_json(D.invariants());
  Json q = Json::array();
  for (std::size_t g = 0; g < D.num_generators(); ++g) q.push_back(to_json(D.q(D.unit(g))));
  j["discriminant_q"] = q;
  if (!I) return j;
  Json s;
  s["sublattice"] = sublattice_to_json(*I);
  s["isotropic"] = is_isotropic(L, *I);
  s["primitive"] = is_primitive_in(*I, L.lattice());
  if (s["isotropic"] && s["primitive"]) {
    const IsotropicSubgroupData h = H_I_data(L, *I);
    s["H_I_order"] = h.order.get_str();
    s["H_I_isotropic"] = h.isotropic;
    s["H_I_perp_quotient_invariants"] = to_json(h.perp_quotient_invariants);
    s["Lambda_discriminant_invariants"] = to_json(h.lambda_invariants);
    s["Lstar_over_LstarI_index"] = h.lstar_index.get_str();
    s["consistent"] = h.consistent();
    const QuotientForm qf = quotient_form(L, perp_in(L, *I, L.lattice()), *I);
    s["lambda_gram"] = to_json(qf.lambda.gram());
  }
  j["isotropic_data"] = s;
  return j;
}

Json vector_report(const IsotropicFrame& F, const RatVector& v) {
  if (v.size() != F.n()) throw InputError("vector has the wrong length");
  Json j;
  j["decomposition"] = decomposition_to_json(F.decompose(v));
  j["in_L"] = {{"decomposition", F.member(v, Target::L)}, {"direct", checks::oracle_in_L(v)}};
  j["in_Lstar"] = {{"decomposition", F.member(v, Target::Lstar)},
                   {"direct", checks::oracle_in_Lstar(F.lattice(), v)}};
  j["in_LstarI"] = {{"decomposition", F.member(v, Target::LstarI)},
                    {"direct", checks::oracle_in_LstarI(F.lattice(), F.i_lstar(), v)}};
  return j;
}

Json member_report(const IsotropicFrame& F, const ParabolicCoords& c) {
  const ConditionReport rep = gamma_LI_member_conditions(c, F);
  const RatMatrix a = assemble(c, F);
  const bool direct = gamma_LI_member_direct(a, F);
  Json j;
  j["coords"] = coords_to_json(c);
  j["element"] = to_json(a);
  j["conditions"] = conditions_to_json(rep);
  j["oracle_member"] = direct;
  j["oracle_agrees"] = direct == rep.member;
  return j;
}

Json heis_report(const IsotropicFrame& F, const HeisenbergElement& h) {
  require(h.psi.rows() == F.r() && h.psi.cols() == F.m(), "psi must be r×m");
  require(h.eta.rows() == F.r() && h.eta.cols() == F.r(), "eta must be r×r");
  Json j;
  j["member"] = zheis_member(h, F);
  try {
    j["c_psi"] = to_json(c_psi(h.psi, F));
  } catch (const NotIntegral& e) {
    j["c_psi"] = nullptr;
    j["c_psi_error"] = e.what();
  }
  return j;
}

Json cocycle_report(const IsotropicFrame& F, const std::vector<RatMatrix>& ms) {
  for (const RatMatrix& M : ms) {
    require(M.rows() == F.r() && M.cols() == F.r(), "each matrix must be r×r");
    require(sl_JI_member(M, F.i_lstar_coords()), "matrix " + to_string(M) + " is not in SL(I_{L*}, I)");
  }
  Json values = Json::array();
  for (const RatMatrix& M : ms) {
    const CocycleValue b = cocycle_b(M, F);
    Json e;
    e["M"] = to_json(M);
    Json bj = Json::array();
    for (const RatVector& v : b) bj.push_back(to_json(v));
    e["b"] = bj;
    Json bd = Json::array();
    for (const auto& x : cocycle_in_delta(M, F)) bd.push_back(element_to_json(x));
    e["b_in_delta"] = bd;
    e["b_zero"] = cocycle_is_zero(b);
    e["in_SL_Iiota_I"] = sl_JI_member(M, F.i_iota_coords());
    values.push_back(e);
  }
  Json law = Json::array();
  for (std::size_t k = 0; k + 1 < ms.size(); ++k) law.push_back(cocycle_law_check(ms[k], ms[k + 1], F));
  return {{"values", values}, {"law_on_consecutive_pairs", law}};
}

Json selfcheck_report(const std::vector<checks::CheckResult>& results) {
  Json j = Json::array();
  for (const auto& r : results) j.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return j;
}

}  // namespace parablat
