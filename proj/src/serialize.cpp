#include "parablat/serialize.hpp"

#include <fstream>
#include <sstream>

namespace parablat {

Json to_json(const Rat& x) { return x.get_str(); }

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const RatMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).fits_slong_p())
        row.push_back(m(i, j).get_si());
      else
        row.push_back(m(i, j).get_str());
    }
    a.push_back(row);
  }
  return a;
}

Json to_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(x.get_str());
  return a;
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  throw InputError("expected a rational string \"p/q\" or an integer, got " + j.dump());
}

RatVector rat_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  RatVector v;
  for (const Json& x : j) v.push_back(rat_from_json(x));
  return v;
}

RatMatrix rat_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a matrix (array of rows)");
  std::vector<RatVector> rows;
  for (const Json& r : j) rows.push_back(rat_vector_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("matrix rows have different lengths");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rows[i][k];
  }
  return m;
}

IntMatrix int_matrix_from_json(const Json& j) {
  try {
    return to_int(rat_matrix_from_json(j));
  } catch (const NotIntegral&) {
    throw InputError("expected an integer matrix");
  }
}

Json lattice_to_json(const EvenLattice& L) {
  Json j;
  j["name"] = L.name();
  j["gram"] = to_json(L.gram());
  return j;
}

EvenLattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("gram")) throw InputError("lattice JSON needs a \"gram\" field");
  std::string name = j.value("name", std::string("lattice"));
  return EvenLattice(name, int_matrix_from_json(j.at("gram")));
}

Json sublattice_to_json(const Sublattice& s) {
  Json j;
  j["basis"] = to_json(s.basis());
  return j;
}

Sublattice sublattice_from_json(const Json& j, std::size_t n) {
  if (!j.is_object() || !j.contains("basis")) throw InputError("sublattice JSON needs a \"basis\" field");
  RatMatrix b = rat_matrix_from_json(j.at("basis"));
  if (b.rows() == 0) b = RatMatrix(n, 0);
  if (b.rows() != n) throw InputError("sublattice basis must have one row per lattice coordinate");
  require(rank(b) == b.cols(), "sublattice basis must have full column rank");
  return Sublattice(b);
}

Json coords_to_json(const ParabolicCoords& c) {
  Json j;
  j["M"] = to_json(c.M);
  j["gamma"] = to_json(c.gamma);
  j["psi"] = to_json(c.psi);
  j["eta"] = to_json(c.eta);
  return j;
}

ParabolicCoords coords_from_json(const Json& j) {
  for (const char* k : {"M", "gamma", "psi", "eta"})
    if (!j.is_object() || !j.contains(k)) throw InputError(std::string("coords JSON needs a \"") + k + "\" field");
  return {rat_matrix_from_json(j.at("M")), rat_matrix_from_json(j.at("gamma")), rat_matrix_from_json(j.at("psi")),
          rat_matrix_from_json(j.at("eta"))};
}

Json element_to_json(const FinQuadModule::Element& e) {
  Json a = Json::array();
  for (const Int& x : e) a.push_back(x.get_str());
  return a;
}

Json decomposition_to_json(const VectorDecomposition& d) {
  Json j;
  j["u"] = to_json(d.u);
  j["w"] = to_json(d.w);
  j["utilde"] = to_json(d.utilde);
  j["u_coords"] = to_json(d.u_coords);
  j["w_coords"] = to_json(d.w_coords);
  j["utilde_coords"] = to_json(d.utilde_coords);
  return j;
}

Json frame_to_json(const IsotropicFrame& F) {
  Json j;
  j["lattice"] = lattice_to_json(F.lattice());
  j["I"] = sublattice_to_json(F.I());
  j["Itilde"] = sublattice_to_json(F.Itilde());
  j["Itilde_dual_basis"] = to_json(F.itilde_basis());
  j["LambdaTilde"] = sublattice_to_json(F.lambda_tilde());
  j["LambdaTildeDual"] = sublattice_to_json(F.lambda_tilde_dual());
  j["lambda_gram"] = to_json(F.lambda_gram());
  j["alpha"] = to_json(F.alpha());
  j["I_Lstar"] = sublattice_to_json(F.i_lstar());
  j["Itilde_L"] = sublattice_to_json(F.itilde_l());
  j["I_iota"] = sublattice_to_json(F.i_iota());
  j["Lstar_I"] = sublattice_to_json(F.lstar_i());
  Json delta;
  delta["invariants"] = to_json(F.delta_lambda().invariants());
  delta["generators"] = to_json(F.delta_lambda().generators());
  Json q = Json::array();
  for (std::size_t g = 0; g < F.delta_lambda().num_generators(); ++g) q.push_back(to_json(F.delta_lambda().q(F.delta_lambda().unit(g))));
  delta["q"] = q;
  j["DeltaLambda"] = delta;
  Json iota = Json::array();
  for (std::size_t k = 0; k < F.r(); ++k) {
    Json e;
    e["Itilde_L_generator"] = to_json(to_rat(F.itilde_l_coords().col(k)));
    e["value"] = element_to_json(F.iota_table()[k]);
    iota.push_back(e);
  }
  j["iota"] = iota;
  Json idual = Json::array();
  for (const RatVector& v : F.iota_dual_table()) idual.push_back(to_json(v));
  j["iota_dual"] = idual;
  j["index_I_Lstar_over_I"] = index_in(F.I(), F.i_lstar()).get_str();
  j["index_I_iota_over_I_Lstar"] = index_in(F.i_lstar(), F.i_iota()).get_str();
  j["iota_class_trivial"] = iota_class_trivial(F).trivial;
  return j;
}

Json conditions_to_json(const ConditionReport& r) {
  Json j;
  auto opt = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  j["identity_component"] = r.identity_component;
  j["i_gamma_in_Gamma_Lambda"] = opt(r.gamma_in_gamma_lambda);
  j["ii_M_in_SL_ILstar_I"] = opt(r.m_in_sl);
  j["iii_psi_condition"] = opt(r.psi_condition);
  j["iv_eta_condition"] = opt(r.eta_condition);
  j["witnesses"] = r.witnesses;
  j["member"] = r.member;
  return j;
}

Json boundary_to_json(const BoundaryReport& r) {
  Json j;
  j["lambda_gram"] = to_json(r.lambda_gram);
  j["delta_invariants"] = to_json(r.delta_invariants);
  Json ls;
  ls["N"] = r.gamma_lstar.N.get_str();
  ls["D"] = r.gamma_lstar.D.get_str();
  ls["description"] = r.gamma_lstar.description;
  ls["adapted_basis"] = to_json(r.gamma_lstar.basis_change);
  ls["index_in_SL2Z"] = r.gamma_lstar_index;
  ls["index_counted_mod_N"] = r.gamma_lstar_index_counted;
  j["gamma_Lstar"] = ls;
  Json gi;
  gi["N"] = r.gamma_iota.N.get_str();
  gi["D"] = r.gamma_iota.D.get_str();
  gi["description"] = r.gamma_iota.description;
  gi["index_in_SL2Z"] = r.gamma_iota_index_sl2;
  gi["index_in_Gamma_Lstar"] = r.gamma_iota_index_in_lstar;
  j["gamma_iota"] = gi;
  Json gl;
  gl["order"] = r.gamma_lambda.order();
  Json gens = Json::array();
  for (const IntMatrix& g : r.gamma_lambda.generators) gens.push_back(to_json(g));
  gl["generators"] = gens;
  gl["O_Lambda_order"] = r.o_lambda_order;
  j["gamma_Lambda"] = gl;
  Json table = Json::array();
  for (const BTableEntry& e : r.b_table) {
    Json t;
    t["generator"] = to_json(e.generator);
    Json b = Json::array();
    for (const RatVector& v : e.b) b.push_back(to_json(v));
    t["b_on_delta_generators"] = b;
    Json bd = Json::array();
    for (const auto& x : e.b_delta) bd.push_back(element_to_json(x));
    t["b_in_delta_pair"] = bd;
    t["in_Gamma_iota"] = e.in_gamma_iota;
    table.push_back(t);
  }
  j["b_table"] = table;
  j["iota_trivial"] = r.iota_trivial;
  Json checks = Json::object();
  for (const auto& c : r.checks) checks[c.first] = c.second;
  j["checks"] = checks;
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string dump(const Json& j) { return j.dump(2); }

bool round_trips(const Json& j) {
  const std::string once = dump(j);
  return dump(parse_json(once)) == once;
}

}  // namespace parablat
