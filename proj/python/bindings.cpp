#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maro/efficiency.hpp"
#include "maro/fixtures.hpp"
#include "maro/images.hpp"
#include "maro/scalarize.hpp"
#include "maro/verify.hpp"

namespace py = pybind11;
using namespace maro;

namespace {

py::object xreal(XReal v) { return py::float_(v.value()); }

py::dict solution(const Instance& inst, const ScalarSolution& s) {
  py::dict values;
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) values[py::str(inst.decision_id(x))] = xreal(s.values[x]);
  py::dict guarantees;
  for (const Guarantee& g : s.efficient) guarantees[py::str(inst.decision_id(g.decision))] = xreal(g.value);
  py::dict out;
  out["values"] = values;
  out["efficient"] = guarantees;
  out["optimum"] = xreal(s.optimum);
  out["all_infeasible"] = s.all_infeasible;
  out["empty_due_to_ties"] = s.empty_due_to_ties;
  return out;
}

Strictness strictness_of(const std::string& s) { return parse_strictness(s); }

SetRelSpec set_relation(const std::string& text) {
  const RelationSelector rel = parse_relation(text);
  if (!std::holds_alternative<SetRelSpec>(rel)) throw Error("a set relation (u, l, lmin:...) is required");
  return std::get<SetRelSpec>(rel);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite multi-objective adjustable robust optimization";

  py::register_exception<Error>(m, "MaroError", PyExc_ValueError);

  py::class_<Instance>(m, "Instance")
      .def(py::init<std::string, std::size_t, std::vector<std::string>, std::vector<std::string>,
                    std::vector<std::vector<PointSet>>>(),
           py::arg("name"), py::arg("n"), py::arg("decisions"), py::arg("scenarios"), py::arg("recourse"))
      .def_property_readonly("name", &Instance::name)
      .def_property_readonly("n", &Instance::n)
      .def_property_readonly("decisions", &Instance::decisions)
      .def_property_readonly("scenarios", &Instance::scenarios)
      .def_property_readonly("sampled", &Instance::sampled)
      .def("recourse", [](const Instance& inst, const std::string& x, const std::string& u) {
        return inst.recourse(inst.decision_index(x), inst.scenario_index(u));
      })
      .def("to_json", &serialize_instance)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& inst) {
        return "<Instance " + inst.name() + " n=" + std::to_string(inst.n()) + " |X|=" +
               std::to_string(inst.num_decisions()) + " |U|=" + std::to_string(inst.num_scenarios()) + ">";
      });

  m.def("load_instance", [](const std::string& text) { return load_instance(text); }, py::arg("text"));
  m.def("load_instance_file", &load_instance_file, py::arg("path"));
  m.def("fixture", [](const std::string& name) { return fixture(name); }, py::arg("name"));
  m.def("fixture_names", &fixture_names);

  m.def(
      "f_lambda",
      [](const Instance& inst, const std::string& x, const std::vector<double>& lambda) {
        return f_lambda(inst, inst.decision_index(x), Weight(lambda));
      },
      py::arg("instance"), py::arg("x"), py::arg("weight"));
  m.def(
      "f_eps",
      [](const Instance& inst, const std::string& x, const std::vector<double>& eps, std::size_t j, double tol) {
        return xreal(f_eps_j(inst, inst.decision_index(x), GenBound(eps, j - 1), Tolerance{tol}));
      },
      py::arg("instance"), py::arg("x"), py::arg("eps"), py::arg("j"), py::arg("tol") = 1e-9);
  m.def(
      "f_pb", [](const Instance& inst, const std::string& x) { return f_pb(inst, inst.decision_index(x)); },
      py::arg("instance"), py::arg("x"));

  m.def(
      "solve_ws",
      [](const Instance& inst, const std::vector<double>& lambda, const std::string& strictness, double tol) {
        return solution(inst, ws_efficient_set(inst, Weight(lambda), strictness_of(strictness), Tolerance{tol}));
      },
      py::arg("instance"), py::arg("weight"), py::arg("strictness") = "plain", py::arg("tol") = 1e-9);
  m.def(
      "solve_eps",
      [](const Instance& inst, const std::vector<double>& eps, std::size_t j, const std::string& strictness,
         double tol) {
        return solution(inst, eps_efficient_set(inst, GenBound(eps, j - 1), strictness_of(strictness), Tolerance{tol}));
      },
      py::arg("instance"), py::arg("eps"), py::arg("j"), py::arg("strictness") = "plain", py::arg("tol") = 1e-9);
  m.def(
      "solve_pb",
      [](const Instance& inst, const std::string& strictness, double tol) {
        std::vector<std::string> ids;
        for (DecisionIndex x : pb_efficient_set(inst, strictness_of(strictness), Tolerance{tol})) {
          ids.push_back(inst.decision_id(x));
        }
        return ids;
      },
      py::arg("instance"), py::arg("strictness") = "plain", py::arg("tol") = 1e-9);

  m.def(
      "maro_efficient",
      [](const Instance& inst, const std::string& x, const std::string& kind, const std::string& strictness,
         const std::string& relation, double tol) {
        const Verdict v = maro_efficient(inst, inst.decision_index(x), parse_maro_kind(kind), strictness_of(strictness),
                                         set_relation(relation), Tolerance{tol});
        py::dict out;
        out["efficient"] = v.efficient;
        py::list witness;
        if (v.witness) {
          for (const Domination& d : v.witness->dominations) {
            witness.append(py::make_tuple(inst.scenario_id(d.scenario), inst.decision_id(d.competitor)));
          }
        }
        out["witness"] = witness;
        return out;
      },
      py::arg("instance"), py::arg("x"), py::arg("kind"), py::arg("strictness") = "strict",
      py::arg("relation") = "l", py::arg("tol") = 1e-9);
  m.def(
      "smaro_set",
      [](const Instance& inst, double tol) {
        const SmaroResult r = smaro_set(inst, Tolerance{tol});
        std::vector<std::string> ids;
        for (DecisionIndex x : r.decisions) ids.push_back(inst.decision_id(x));
        return py::make_tuple(ids, r.front.points);
      },
      py::arg("instance"), py::arg("tol") = 1e-9);

  m.def(
      "image_ws",
      [](const Instance& inst, std::size_t k, double tol) {
        std::vector<std::pair<std::vector<double>, ObjVec>> out;
        for (const WeightedPoint& wp : image_ws_grid(inst, WeightGrid(inst.n(), k), Tolerance{tol})) {
          out.emplace_back(wp.lambda.values(), wp.point);
        }
        return out;
      },
      py::arg("instance"), py::arg("grid_k") = 50, py::arg("tol") = 1e-9);
  m.def(
      "image_pb", [](const Instance& inst, double tol) { return image_pb(inst, Tolerance{tol}); }, py::arg("instance"),
      py::arg("tol") = 1e-9);

  m.def(
      "verify_json",
      [](std::uint64_t seed, std::size_t count, bool jitter) {
        VerifyOptions opts;
        opts.seed = seed;
        opts.count = count;
        opts.jitter = jitter;
        return to_json(run_verification(opts)).dump();
      },
      py::arg("seed") = 42, py::arg("count") = 500, py::arg("jitter") = false);
  m.def(
      "compare_json",
      [](const Instance& inst, const std::vector<double>& lambda, const std::vector<double>& eps, std::size_t j) {
        return to_json(compare_concepts(inst, Weight(lambda), GenBound(eps, j - 1)), inst).dump();
      },
      py::arg("instance"), py::arg("weight"), py::arg("eps"), py::arg("j"));
}
