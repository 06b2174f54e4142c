// parablat: command-line front end for the integral parabolic library.
//
// Exit status: 0 ok, 1 malformed input, 2 precondition violated, 3 internal
// invariant failure; selfcheck also exits 3 when any check fails.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "parablat/reports.hpp"

using namespace parablat;

namespace {

struct Options {
  std::string lattice, sublattice, complement, frame, coords, element, vector, matrices, out;
  std::uint64_t seed = checks::SuiteOptions{}.seed;
  std::size_t samples = 1000;
  bool json = true;
};

bool looks_like_fixture(const std::string& s) {
  std::string low;
  for (char c : s) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return low.rfind("fix-", 0) == 0 && !std::filesystem::exists(s);
}

EvenLattice load_lattice(const Options& o) {
  if (o.lattice.empty()) throw InputError("--lattice is required");
  if (looks_like_fixture(o.lattice)) return fixture(o.lattice).lattice;
  return lattice_from_json(read_json_file(o.lattice));
}

// Sublattice and complement from --frame, --sublattice/--complement, or the
// fixture default; the complement falls back to the constructed one.
IsotropicFrame load_frame(const Options& o) {
  const EvenLattice L = load_lattice(o);
  std::optional<Sublattice> I, C;
  if (!o.frame.empty()) {
    const Json j = read_json_file(o.frame);
    if (!j.contains("sublattice")) throw InputError("frame file needs a \"sublattice\" entry");
    I = sublattice_from_json(j.at("sublattice"), L.dim());
    if (j.contains("complement")) C = sublattice_from_json(j.at("complement"), L.dim());
  }
  if (!o.sublattice.empty()) I = sublattice_from_json(read_json_file(o.sublattice), L.dim());
  if (!o.complement.empty()) C = sublattice_from_json(read_json_file(o.complement), L.dim());
  if (!I) {
    if (!looks_like_fixture(o.lattice)) throw InputError("--sublattice or --frame is required");
    I = fixture(o.lattice).isotropic;
  }
  return C ? IsotropicFrame::build(L, *I, *C) : IsotropicFrame::build(L, *I);
}

RatVector parse_vector(const std::string& text) {
  RatVector v;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) v.push_back(parse_rational(item));
  return v;
}

void emit(const Json& j, const Options& o) {
  if (o.json) {
    std::cout << dump(j) << "\n";
    return;
  }
  for (const auto& [k, v] : j.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

Json cmd_analyze(const Options& o) {
  const EvenLattice L = load_lattice(o);
  std::optional<Sublattice> I;
  if (looks_like_fixture(o.lattice)) I = fixture(o.lattice).isotropic;
  if (!o.frame.empty()) I = sublattice_from_json(read_json_file(o.frame).at("sublattice"), L.dim());
  if (!o.sublattice.empty()) I = sublattice_from_json(read_json_file(o.sublattice), L.dim());
  return analyze_report(L, I);
}

Json cmd_decompose(const Options& o) {
  const IsotropicFrame F = load_frame(o);
  if (!o.vector.empty()) return vector_report(F, parse_vector(o.vector));
  if (!o.element.empty()) return coords_to_json(decompose_parabolic(rat_matrix_from_json(read_json_file(o.element)), F));
  throw InputError("decompose needs --vector or --element");
}

Json cmd_member(const Options& o) {
  const IsotropicFrame F = load_frame(o);
  if (!o.coords.empty()) return member_report(F, coords_from_json(read_json_file(o.coords)));
  if (!o.element.empty())
    return member_report(F, decompose_parabolic(rat_matrix_from_json(read_json_file(o.element)), F));
  throw InputError("member needs --coords or --element");
}

Json cmd_heis(const Options& o) {
  const IsotropicFrame F = load_frame(o);
  if (o.coords.empty()) throw InputError("heis needs --coords (the psi and eta entries are used)");
  const Json cj = read_json_file(o.coords);
  if (!cj.contains("psi") || !cj.contains("eta")) throw InputError("coords need \"psi\" and \"eta\"");
  return heis_report(F, {rat_matrix_from_json(cj.at("psi")), rat_matrix_from_json(cj.at("eta"))});
}

Json cmd_cocycle(const Options& o) {
  const IsotropicFrame F = load_frame(o);
  if (o.matrices.empty()) throw InputError("cocycle needs --matrices (a JSON list of r×r matrices)");
  const Json mj = read_json_file(o.matrices);
  if (!mj.is_array()) throw InputError("--matrices must hold a JSON array of matrices");
  std::vector<RatMatrix> ms;
  for (const Json& m : mj) ms.push_back(rat_matrix_from_json(m));
  return cocycle_report(F, ms);
}

int cmd_selfcheck(const Options& o) {
  checks::SuiteOptions so;
  so.seed = o.seed;
  so.scale = static_cast<double>(o.samples) / 1000.0;
  const auto results = checks::full_suite(so);
  int failed = 0;
  for (const auto& r : results) {
    failed += !r.pass;
    if (!o.json) std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " [" << r.detail << "]\n";
  }
  if (o.json) std::cout << dump(selfcheck_report(results)) << "\n";
  return failed ? 3 : 0;
}

void cmd_fixtures(const Options& o) {
  const std::filesystem::path dir = o.out.empty() ? "." : o.out;
  std::filesystem::create_directories(dir);
  Json listing = Json::array();
  for (const Fixture& fx : all_fixtures()) {
    const IsotropicFrame F = IsotropicFrame::build(fx.lattice, fx.isotropic);
    const auto lat = dir / (fx.filename + ".json");
    const auto frm = dir / (fx.filename + "-frame.json");
    std::ofstream(lat) << dump(lattice_to_json(fx.lattice)) << "\n";
    Json f;
    f["sublattice"] = sublattice_to_json(fx.isotropic);
    f["complement"] = sublattice_to_json(F.Itilde());
    std::ofstream(frm) << dump(f) << "\n";
    listing.push_back({{"fixture", fx.key}, {"lattice", lat.string()}, {"frame", frm.string()}});
  }
  std::cout << dump(listing) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral parabolic subgroups of orthogonal groups of even lattices"};
  app.require_subcommand(1);
  Options o;
  bool text = false;
  auto common = [&](CLI::App* sub, bool frame) {
    sub->add_option("--lattice", o.lattice, "lattice JSON file or fixture name (FIX-H, FIX-G3, ...)");
    if (frame) {
      sub->add_option("--sublattice", o.sublattice, "isotropic sublattice JSON {\"basis\": ...}");
      sub->add_option("--complement", o.complement, "complement JSON {\"basis\": ...}");
      sub->add_option("--frame", o.frame, "JSON with \"sublattice\" and optional \"complement\"");
    }
    sub->add_flag("--json", o.json, "JSON output (default)");
    sub->add_flag("--text", text, "plain text output");
  };
  auto* analyze = app.add_subcommand("analyze", "discriminant group, signature and isotropic data");
  common(analyze, true);
  auto* frame = app.add_subcommand("frame", "adapted frame report");
  common(frame, true);
  auto* decompose = app.add_subcommand("decompose", "decompose a vector or a parabolic element");
  common(decompose, true);
  decompose->add_option("--vector", o.vector, "comma-separated rationals");
  decompose->add_option("--element", o.element, "n×n matrix JSON");
  auto* member = app.add_subcommand("member", "Gamma_{L,I} membership by conditions and by the oracle");
  common(member, true);
  member->add_option("--coords", o.coords, "coords JSON {\"M\",\"gamma\",\"psi\",\"eta\"}");
  member->add_option("--element", o.element, "n×n matrix JSON");
  auto* heis = app.add_subcommand("heis", "integral Heisenberg membership and c_psi");
  common(heis, true);
  heis->add_option("--coords", o.coords, "JSON with \"psi\" and \"eta\"");
  auto* cocycle = app.add_subcommand("cocycle", "b_M values and the cocycle law");
  common(cocycle, true);
  cocycle->add_option("--matrices", o.matrices, "JSON list of r×r matrices in SL(I_{L*}, I)");
  auto* boundary = app.add_subcommand("boundary", "boundary component data for rank-2 I");
  common(boundary, true);
  auto* fixtures = app.add_subcommand("fixtures", "write the named fixtures as JSON");
  fixtures->add_option("--out", o.out, "output directory");
  auto* selfcheck = app.add_subcommand("selfcheck", "run every acceptance and invariant suite");
  selfcheck->add_option("--seed", o.seed, "random seed");
  selfcheck->add_option("--samples", o.samples, "samples per fixture in the membership suite; other suites scale with it");
  selfcheck->add_flag("--json", o.json, "JSON output");
  selfcheck->add_flag("--text", text, "plain text output (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (text) o.json = false;
  if (selfcheck->parsed() && !selfcheck->count("--json")) o.json = false;

  try {
    if (analyze->parsed()) emit(cmd_analyze(o), o);
    if (frame->parsed()) emit(frame_to_json(load_frame(o)), o);
    if (decompose->parsed()) emit(cmd_decompose(o), o);
    if (member->parsed()) emit(cmd_member(o), o);
    if (heis->parsed()) emit(cmd_heis(o), o);
    if (cocycle->parsed()) emit(cmd_cocycle(o), o);
    if (boundary->parsed()) {
      const IsotropicFrame F = load_frame(o);
      const BoundaryReport r = boundary_report(F.lattice(), F.I(), F.Itilde());
      if (o.json)
        emit(boundary_to_json(r), o);
      else
        std::cout << boundary_text(r, F.lattice().name());
    }
    if (fixtures->parsed()) cmd_fixtures(o);
    if (selfcheck->parsed()) return cmd_selfcheck(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant failed: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
