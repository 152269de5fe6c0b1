#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "placement/errors.hpp"
#include "placement/estimation.hpp"
#include "placement/evaluation.hpp"
#include "placement/instances.hpp"
#include "placement/json_io.hpp"
#include "placement/solvers.hpp"

namespace py = pybind11;
using namespace placement;

namespace {

Placement to_placement(const Instance& inst, const std::vector<int>& slots) {
  Placement x(slots);
  if (x.m() != inst.m()) throw ContractError("placement length must equal m");
  return fill_empty(inst, x);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Product placement optimization core";

  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_RuntimeError);
  py::register_exception<UnsupportedOperation>(m, "UnsupportedOperation", PyExc_RuntimeError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  m.attr("DEFAULT_SEED") = kDefaultSeed;
  m.attr("ALGORITHMS") = std::vector<std::string>(std::begin(kAlgorithmNames),
                                                  std::end(kAlgorithmNames));

  py::class_<Instance>(m, "Instance")
      .def_static("from_json", [](const std::string& text) { return parse_instance(text); })
      .def_static("load", &load_instance)
      .def("to_json", &dump_instance)
      .def_property_readonly("n", &Instance::n)
      .def_property_readonly("m", &Instance::m)
      .def_property_readonly("prices",
                             [](const Instance& i) {
                               return std::vector<double>(i.prices().begin(), i.prices().end());
                             })
      .def_property_readonly("highest_price_product", &Instance::highest_price_product)
      .def_property_readonly("choice_model",
                             [](const Instance& i) {
                               return std::string(to_string(i.choice_model().kind()));
                             })
      .def("revenue",
           [](const Instance& i, const std::vector<int>& products) {
             return i.revenue(Assortment(products));
           })
      .def("choice_probs",
           [](const Instance& i, const std::vector<int>& products) {
             return i.choice_model().choice_probs(Assortment(products));
           })
      .def("expected_revenue",
           [](const Instance& i, const std::vector<int>& slots) {
             return evaluate_exact(i, to_placement(i, slots));
           },
           "Exact W of a placement; -1 slots are filled with the highest-priced product.")
      .def("__repr__", [](const Instance& i) {
        return "<Instance n=" + std::to_string(i.n()) + " m=" + std::to_string(i.m()) + ">";
      });

  m.def("gen_random",
        [](int n, int locations, const std::string& model, const std::string& browsing,
           std::uint64_t seed, double price_min, double price_max) {
          RandomInstanceOptions o;
          o.n = n;
          o.m = locations;
          o.model = parse_model_family(model);
          o.browsing = parse_browsing_family(browsing);
          o.seed = seed;
          o.price_min = price_min;
          o.price_max = price_max;
          return gen_random(o);
        },
        py::arg("n") = 5, py::arg("m") = 3, py::arg("model") = "mnl",
        py::arg("browsing") = "line", py::arg("seed") = kDefaultSeed,
        py::arg("price_min") = 1.0, py::arg("price_max") = 10.0);
  m.def("gen_lemma_single_1", &gen_lemma_single_1, py::arg("k"));
  m.def("gen_lemma_single_2", &gen_lemma_single_2, py::arg("m"));
  m.def("gen_instance_i",
        [](int locations, double epsilon) {
          HeavyTailInstance h = gen_instance_i(locations, epsilon);
          std::vector<std::vector<int>> groups;
          for (const auto& g : h.groups) groups.emplace_back(g.begin(), g.end());
          return py::make_tuple(std::move(h.instance), groups, h.u_products);
        },
        py::arg("m"), py::arg("epsilon"),
        "Returns (instance, groups, u_products).");
  m.def("gen_max_coverage", &gen_max_coverage_mmnl, py::arg("sets"), py::arg("q"),
        py::arg("k"), py::arg("epsilon"));

  m.def("best_assortment",
        [](const Instance& i, int k, const std::string& oracle) {
          const OracleAssortment s = make_oracle(i, oracle).best_assortment(k);
          return py::make_tuple(std::vector<int>(s.members.begin(), s.members.end()), s.dummies);
        },
        py::arg("instance"), py::arg("k"), py::arg("oracle") = "auto",
        "Returns (members, dummies) of the best assortment with k slots.");

  m.def("solve",
        [](const Instance& i, const std::string& algorithm, const std::string& oracle,
           std::uint64_t seed, int repetitions, double epsilon, double delta,
           std::optional<std::int64_t> samples_override) {
          RandomizedOptions o;
          o.seed = seed;
          o.repetitions = repetitions;
          o.epsilon = epsilon;
          o.delta = delta;
          o.samples_override = samples_override;
          SolveReport r;
          {
            py::gil_scoped_release release;
            r = solve_named(i, algorithm, oracle, o);
          }
          return to_json(r).dump();
        },
        py::arg("instance"), py::arg("algorithm"), py::arg("oracle") = "auto",
        py::arg("seed") = kDefaultSeed, py::arg("repetitions") = 32, py::arg("epsilon") = 0.1,
        py::arg("delta") = 0.05, py::arg("samples_override") = std::nullopt,
        "Runs a placement algorithm; returns the report as JSON text.");

  m.def("estimate",
        [](const Instance& i, const std::vector<int>& slots, double epsilon, double delta,
           std::uint64_t seed, std::optional<std::int64_t> samples_override) {
          const Placement x = to_placement(i, slots);
          const EstimationPlan plan = make_plan(i, epsilon, delta, samples_override);
          Estimate e;
          {
            py::gil_scoped_release release;
            e = estimate_w(i, x, plan, seed);
          }
          py::dict out;
          out["value"] = e.value;
          out["std_error"] = e.std_error;
          out["samples"] = e.samples;
          out["epsilon"] = plan.epsilon;
          out["delta"] = plan.delta;
          return out;
        },
        py::arg("instance"), py::arg("placement"), py::arg("epsilon") = 0.1,
        py::arg("delta") = 0.05, py::arg("seed") = kDefaultSeed,
        py::arg("samples_override") = std::nullopt);

  m.def("sample_size", &sample_size, py::arg("m"), py::arg("epsilon"), py::arg("delta"));
}
