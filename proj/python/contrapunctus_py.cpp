#include <optional>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "contrapunctus/cli.hpp"
#include "contrapunctus/closure.hpp"
#include "contrapunctus/counterpoint.hpp"
#include "contrapunctus/errors.hpp"
#include "contrapunctus/fuzzy.hpp"
#include "contrapunctus/notation.hpp"
#include "contrapunctus/polarity.hpp"
#include "contrapunctus/report.hpp"

namespace py = pybind11;
using namespace contrapunctus;

namespace {

std::vector<std::string> names(const std::vector<Morphism>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(to_string(m));
  return out;
}

ContrapuntalContext context(const std::string& world, const std::string& kappa,
                            const std::optional<std::string>& polarity) {
  const World w = parse_world(world);
  const SubSet k = parse_subset(w, kappa);
  if (!polarity) return make_context(w, k);
  return make_context(w, k, parse_morphism(w, *polarity));
}

ClosureMode mode_of(const std::string& mode) {
  if (mode == "involutive") return ClosureMode::Involutive;
  if (mode == "single") return ClosureMode::SingleStep;
  if (mode == "iterated") return ClosureMode::Iterated;
  throw ParseError("mode must be involutive, single or iterated", mode);
}

std::vector<std::string> element_texts(const World& w, const SubSet& s) {
  std::vector<std::string> out;
  for (auto x : s.elements()) out.push_back(format_element(w, x));
  return out;
}

}  // namespace

PYBIND11_MODULE(_contrapunctus, m) {
  m.doc() = "Quasipolarities, dichotomies, counterpoint symmetries and closure operators";

  static py::exception<Error> error(m, "ContrapunctusError", PyExc_RuntimeError);
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<NonStrongDichotomy> non_strong(m, "NonStrongDichotomy", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NonStrongDichotomy& e) {
      py::object exc = py::reinterpret_borrow<py::object>(non_strong.ptr())(e.what());
      exc.attr("witnesses") = e.witnesses();
      PyErr_SetObject(non_strong.ptr(), exc.ptr());
    } catch (const ParseError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(parse_error.ptr())(e.what());
      exc.attr("token") = e.token();
      PyErr_SetObject(parse_error.ptr(), exc.ptr());
    } catch (const Error& e) {
      error(e.what());
    }
  });

  m.def("worlds", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : world_catalog()) out.emplace_back(e.spec, e.description);
    return out;
  }, "(spec, description) for each supported world kind.");

  m.def("normalize_morphism", [](const std::string& world, const std::string& morphism) {
    return to_string(parse_morphism(parse_world(world), morphism));
  }, py::arg("world"), py::arg("morphism"));

  m.def("quasipolarities", [](const std::string& world) {
    py::gil_scoped_release release;
    return names(enumerate_quasipolarities(parse_world(world)));
  }, py::arg("world"));

  m.def("is_quasipolarity", [](const std::string& world, const std::string& morphism) {
    const World w = parse_world(world);
    return is_quasipolarity(w, parse_morphism(w, morphism));
  }, py::arg("world"), py::arg("morphism"));

  m.def("is_dichotomy", [](const std::string& world, const std::string& polarity,
                           const std::string& kappa) {
    const World w = parse_world(world);
    return is_dichotomy(w, parse_morphism(w, polarity), parse_subset(w, kappa));
  }, py::arg("world"), py::arg("polarity"), py::arg("kappa"));

  m.def("quasipolarities_for", [](const std::string& world, const std::string& kappa) {
    const World w = parse_world(world);
    return names(quasipolarities_for(w, parse_subset(w, kappa)));
  }, py::arg("world"), py::arg("kappa"));

  m.def("is_strong", [](const std::string& world, const std::string& kappa) {
    const World w = parse_world(world);
    return is_strong(w, parse_subset(w, kappa));
  }, py::arg("world"), py::arg("kappa"));

  m.def("classify_json", [](const std::string& world) {
    const World w = parse_world(world);
    std::vector<DichotomyClass> classes;
    {
      py::gil_scoped_release release;
      classes = classify_dichotomies(w);
    }
    Json arr = Json::array();
    for (const auto& c : classes) arr.push_back(class_json(c));
    return arr.dump();
  }, py::arg("world"));

  m.def("symmetries_json", [](const std::string& world, const std::string& kappa,
                              const std::string& interval, const std::string& cantus,
                              bool restricted_family, const std::optional<std::string>& polarity) {
    const auto ctx = context(world, kappa, polarity);
    const DualElement xi{parse_element(ctx.base, cantus), parse_element(ctx.base, interval)};
    const auto xi_c = Consonance::point(ctx, xi);
    py::gil_scoped_release release;
    const auto report = counterpoint_symmetries(ctx, xi_c, {restricted_family, worker_count()});
    return report_json(ctx, report).dump();
  }, py::arg("world"), py::arg("kappa"), py::arg("interval"), py::arg("cantus") = "0",
     py::arg("restricted_family") = false, py::arg("polarity") = py::none());

  m.def("successors_json", [](const std::string& world, const std::string& kappa,
                              bool restricted_family, const std::optional<std::string>& polarity) {
    const auto ctx = context(world, kappa, polarity);
    std::map<std::uint32_t, SymmetryReport> table;
    {
      py::gil_scoped_release release;
      table = successors_table(ctx, {restricted_family, worker_count()});
    }
    return successors_json(ctx, table, restricted_family).dump();
  }, py::arg("world"), py::arg("kappa"), py::arg("restricted_family") = false,
     py::arg("polarity") = py::none());

  m.def("closure", [](const std::string& world, const std::string& map, const std::string& set,
                      const std::string& mode) {
    const World w = parse_world(world);
    const ClosureOperator op(parse_morphism(w, map), mode_of(mode));
    return element_texts(w, op(parse_subset(w, set)));
  }, py::arg("world"), py::arg("map"), py::arg("set"), py::arg("mode") = "iterated");

  m.def("verify_kuratowski_json", [](const std::string& world, const std::string& map,
                                     const std::string& mode, std::uint64_t trials) {
    const World w = parse_world(world);
    const ClosureOperator op(parse_morphism(w, map), mode_of(mode));
    KuratowskiReport r;
    {
      py::gil_scoped_release release;
      r = verify_kuratowski(op, trials);
    }
    return kuratowski_json(r).dump();
  }, py::arg("world"), py::arg("map"), py::arg("mode") = "iterated", py::arg("trials") = 1000);

  m.def("pseudocomplement", [](const std::vector<std::string>& grades) {
    std::vector<Grade> parsed;
    for (const auto& g : grades) parsed.push_back(parse_grade(g));
    std::vector<std::string> out;
    const auto neg = pseudocomplement(FuzzyConsonance(parsed));
    for (const auto& g : neg.grades()) out.push_back(format_grade(g));
    return out;
  }, py::arg("grades"), "Grades as strings such as '1/2'; results in the same form.");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs one CLI invocation; returns (exit code, stdout, stderr).");
}
