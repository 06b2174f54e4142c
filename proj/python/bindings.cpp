// Python bindings. Structured values cross the boundary as JSON text; the
// parablat package converts them to and from Python objects.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parablat/reports.hpp"

namespace py = pybind11;
using namespace parablat;

namespace {

// {"fixture": name} or {"name", "gram"}.
EvenLattice lattice_arg(const Json& j) {
  if (j.contains("fixture")) return fixture(j.at("fixture").get<std::string>()).lattice;
  return lattice_from_json(j);
}

// Frame from a lattice and {"sublattice"?, "complement"?}; the sublattice of a
// fixture is used when none is given.
IsotropicFrame frame_arg(const std::string& lattice, const std::string& frame) {
  const Json lj = parse_json(lattice);
  const EvenLattice L = lattice_arg(lj);
  const Json fj = frame.empty() ? Json::object() : parse_json(frame);
  std::optional<Sublattice> I, C;
  if (fj.contains("sublattice") && !fj.at("sublattice").is_null()) I = sublattice_from_json(fj.at("sublattice"), L.dim());
  if (fj.contains("complement") && !fj.at("complement").is_null()) C = sublattice_from_json(fj.at("complement"), L.dim());
  if (!I) {
    if (!lj.contains("fixture")) throw InputError("an isotropic sublattice is required");
    I = fixture(lj.at("fixture").get<std::string>()).isotropic;
  }
  return C ? IsotropicFrame::build(L, *I, *C) : IsotropicFrame::build(L, *I);
}

template <class F>
std::string json_call(F&& f) {
  try {
    return dump(f());
  } catch (const Json::exception& e) {
    throw InputError(e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_parablat, m) {
  m.doc() = "Integral parabolic subgroups of orthogonal groups of even lattices";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  auto pre = py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<NotInParabolic>(m, "NotInParabolic", pre.ptr());
  py::register_exception<NotIntegral>(m, "NotIntegral", pre.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base.ptr());

  m.def("parse_rational", [](const std::string& s) { return to_string(parse_rational(s)); });

  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const Fixture& fx : all_fixtures()) out.push_back(fx.key);
    return out;
  });

  m.def("fixture", [](const std::string& name) {
    return json_call([&] {
      const Fixture fx = fixture(name);
      return Json{{"lattice", lattice_to_json(fx.lattice)}, {"sublattice", sublattice_to_json(fx.isotropic)}};
    });
  });

  m.def(
      "analyze",
      [](const std::string& lattice, const std::string& sublattice) {
        return json_call([&] {
          const Json lj = parse_json(lattice);
          const EvenLattice L = lattice_arg(lj);
          std::optional<Sublattice> I;
          if (!sublattice.empty())
            I = sublattice_from_json(parse_json(sublattice), L.dim());
          else if (lj.contains("fixture"))
            I = fixture(lj.at("fixture").get<std::string>()).isotropic;
          return analyze_report(L, I);
        });
      },
      py::arg("lattice"), py::arg("sublattice") = "");

  m.def(
      "frame", [](const std::string& l, const std::string& f) { return json_call([&] { return frame_to_json(frame_arg(l, f)); }); },
      py::arg("lattice"), py::arg("frame") = "");

  m.def(
      "decompose_vector",
      [](const std::string& l, const std::string& f, const std::string& v) {
        return json_call([&] { return vector_report(frame_arg(l, f), rat_vector_from_json(parse_json(v))); });
      },
      py::arg("lattice"), py::arg("frame"), py::arg("vector"));

  m.def(
      "decompose_element",
      [](const std::string& l, const std::string& f, const std::string& a) {
        return json_call([&] {
          const IsotropicFrame F = frame_arg(l, f);
          return coords_to_json(decompose_parabolic(rat_matrix_from_json(parse_json(a)), F));
        });
      },
      py::arg("lattice"), py::arg("frame"), py::arg("element"));

  m.def(
      "assemble",
      [](const std::string& l, const std::string& f, const std::string& c) {
        return json_call([&] {
          const IsotropicFrame F = frame_arg(l, f);
          return to_json(assemble(coords_from_json(parse_json(c)), F));
        });
      },
      py::arg("lattice"), py::arg("frame"), py::arg("coords"));

  m.def(
      "member",
      [](const std::string& l, const std::string& f, const std::string& c) {
        return json_call([&] { return member_report(frame_arg(l, f), coords_from_json(parse_json(c))); });
      },
      py::arg("lattice"), py::arg("frame"), py::arg("coords"));

  m.def(
      "complete_to_element",
      [](const std::string& l, const std::string& f, const std::string& M, const std::string& gamma) {
        return json_call([&] {
          const IsotropicFrame F = frame_arg(l, f);
          return coords_to_json(complete_to_element(rat_matrix_from_json(parse_json(M)),
                                                    rat_matrix_from_json(parse_json(gamma)), F));
        });
      },
      py::arg("lattice"), py::arg("frame"), py::arg("M"), py::arg("gamma"));

  m.def(
      "heis",
      [](const std::string& l, const std::string& f, const std::string& psi, const std::string& eta) {
        return json_call([&] {
          return heis_report(frame_arg(l, f),
                             {rat_matrix_from_json(parse_json(psi)), rat_matrix_from_json(parse_json(eta))});
        });
      },
      py::arg("lattice"), py::arg("frame"), py::arg("psi"), py::arg("eta"));

  m.def(
      "cocycle",
      [](const std::string& l, const std::string& f, const std::string& matrices) {
        return json_call([&] {
          const Json mj = parse_json(matrices);
          if (!mj.is_array()) throw InputError("expected a list of matrices");
          std::vector<RatMatrix> ms;
          for (const Json& x : mj) ms.push_back(rat_matrix_from_json(x));
          return cocycle_report(frame_arg(l, f), ms);
        });
      },
      py::arg("lattice"), py::arg("frame"), py::arg("matrices"));

  m.def(
      "boundary",
      [](const std::string& l, const std::string& f) {
        return json_call([&] {
          const IsotropicFrame F = frame_arg(l, f);
          return boundary_to_json(boundary_report(F.lattice(), F.I(), F.Itilde()));
        });
      },
      py::arg("lattice"), py::arg("frame") = "");

  m.def(
      "selfcheck",
      [](std::uint64_t seed, double scale, bool acceptance_only) {
        checks::SuiteOptions o;
        o.seed = seed;
        o.scale = scale;
        py::gil_scoped_release release;
        return dump(selfcheck_report(acceptance_only ? checks::acceptance_suite(o) : checks::full_suite(o)));
      },
      py::arg("seed") = checks::SuiteOptions{}.seed, py::arg("scale") = 1.0, py::arg("acceptance_only") = false);
}
