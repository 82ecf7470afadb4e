// pybind11 bindings for the numsg library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "numsg/construction.hpp"
#include "numsg/core.hpp"
#include "numsg/presentation.hpp"
#include "numsg/quotient_fiber.hpp"
#include "numsg/rank.hpp"
#include "numsg/serialize.hpp"

namespace py = pybind11;
using namespace numsg;

namespace {

py::dict invariants_dict(const Invariants& inv) {
  py::dict d;
  d["m"] = inv.multiplicity;
  d["F"] = inv.frobenius;
  d["g"] = inv.genus;
  d["e"] = inv.embedding_dimension;
  d["n"] = inv.sporadic;
  d["c"] = inv.conductor;
  return d;
}

}  // namespace

PYBIND11_MODULE(_numsg, m) {
  m.doc() = "Numerical semigroups, quotients S/d and fixed-quotient fibers";

  static py::exception<Error> numsg_error(m, "NumsgError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      numsg_error((std::string(code_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
      .def(py::init([](const std::vector<Int>& gens) { return NumericalSemigroup::from_generators(gens); }),
           py::arg("generators"))
      .def_static("parse", &parse_semigroup)
      .def_property_readonly("msg", &NumericalSemigroup::msg)
      .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
      .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
      .def_property_readonly("conductor", &NumericalSemigroup::conductor)
      .def_property_readonly("genus", &NumericalSemigroup::genus)
      .def_property_readonly("embedding_dimension", &NumericalSemigroup::embedding_dimension)
      .def_property_readonly("sporadic_count", &NumericalSemigroup::sporadic_count)
      .def("gaps", &NumericalSemigroup::gaps)
      .def("__contains__", &NumericalSemigroup::contains)
      .def("__eq__", [](const NumericalSemigroup& a, const NumericalSemigroup& b) { return a == b; })
      .def("__hash__", [](const NumericalSemigroup& s) { return py::hash(py::tuple(py::cast(s.msg()))); })
      .def("__str__", &NumericalSemigroup::to_string)
      .def("__repr__", [](const NumericalSemigroup& s) { return "NumericalSemigroup([" + s.to_string() + "])"; })
      .def("to_json", [](const NumericalSemigroup& s) { return to_json(s).dump(); });

  m.def("invariants", [](const NumericalSemigroup& s) { return invariants_dict(invariants(s)); });
  m.def("apery", [](const NumericalSemigroup& s, Int base) { return apery(s, base).sorted(); },
        py::arg("s"), py::arg("base"));
  m.def("pseudo_frobenius", &pseudo_frobenius);
  m.def("is_symmetric", &is_symmetric);
  m.def("wilf_margin", &wilf_margin);
  m.def("depth", &depth);
  m.def("quotient", py::overload_cast<const NumericalSemigroup&, Int>(&quotient), py::arg("s"), py::arg("d"));
  m.def("intersect", &intersect);

  py::class_<FiberContext>(m, "FiberContext")
      .def(py::init<NumericalSemigroup, Int>(), py::arg("delta"), py::arg("d"))
      .def_property_readonly("delta", &FiberContext::delta)
      .def_property_readonly("d", &FiberContext::d)
      .def_property_readonly("delta_gaps", &FiberContext::delta_gaps)
      .def_property_readonly("d_delta_msg", &FiberContext::d_delta_msg);

  py::class_<FiberElement>(m, "FiberElement")
      .def_readonly("semigroup", &FiberElement::semigroup)
      .def_readonly("relative_msg", &FiberElement::relative_msg)
      .def_property_readonly("rank", &FiberElement::rank)
      .def("to_json", [](const FiberElement& e) { return to_json(e).dump(); });

  m.def("is_md_set", [](const FiberContext& c, const std::vector<Int>& x) { return is_md_set(c, x); });
  m.def("md_closure", [](const FiberContext& c, const std::vector<Int>& x) { return md_closure(c, x).msg(); },
        "Minimal generators of <X> + dΔ (gcd may exceed 1).");
  m.def("in_fiber", &in_fiber);
  m.def("enumerate_fiber", &enumerate_fiber, py::arg("ctx"), py::arg("gen_bound"));
  m.def("cofinite_extension",
        [](const std::vector<Int>& gens, Int n) { return cofinite_extension(Monoid::from_generators(gens), n); },
        py::arg("generators"), py::arg("n"));

  py::class_<DeltaDaSpec>(m, "DeltaDaSpec")
      .def(py::init<FiberContext, Int>(), py::arg("ctx"), py::arg("a"))
      .def_property_readonly("a", &DeltaDaSpec::a)
      .def_property_readonly("d", &DeltaDaSpec::d);
  m.def("build_delta_d_a", &build_delta_d_a);
  m.def("predicted_invariants", [](const DeltaDaSpec& s) { return invariants_dict(predicted_invariants(s)); });
  m.def("predicted_apery", [](const DeltaDaSpec& s) { return predicted_apery(s).sorted(); });
  m.def("predicted_depth", &predicted_depth);
  m.def("wilf_identity_margin", [](const DeltaDaSpec& s) {
    const auto w = wilf_identity_margin(s);
    return py::make_tuple(w.lhs, py::make_tuple(w.base_margin_term, w.sporadic_term, w.a_term));
  });
  m.def("realize_embedding_dimension", [](const NumericalSemigroup& delta, Int k) {
    auto r = realize_embedding_dimension(delta, k);
    return py::make_tuple(r.d, r.semigroup);
  });

  m.def("factorizations", py::overload_cast<const NumericalSemigroup&, Int>(&factorizations));
  m.def("minimal_presentation", [](const NumericalSemigroup& s) { return to_json(minimal_presentation(s)).dump(); },
        "Minimal presentation as a JSON string.");
  m.def("lifted_presentation", [](const DeltaDaSpec& s) { return to_json(lifted_presentation(s)).dump(); });
  m.def("verify_presentation", [](const NumericalSemigroup& s, const std::string& json, std::optional<Int> bound) {
    const auto p = presentation_from_json(Json::parse(json));
    return bound ? verify_presentation(s, p, *bound) : verify_presentation(s, p);
  }, py::arg("s"), py::arg("presentation_json"), py::arg("bound") = py::none());

  m.def("relative_msg", [](const FiberContext& c, const NumericalSemigroup& s) { return relative_msg(c, s); });
  m.def("rank", [](const FiberContext& c, const NumericalSemigroup& s) { return rank(c, s); });
  m.def("mu", [](const FiberContext& c, const NumericalSemigroup& s) { return mu(c, s); });
  m.def("max_rank_witness", [](const FiberContext& c) {
    auto w = max_rank_witness(c);
    return py::make_tuple(w.bound, w.element);
  });
  m.def("embedding_dim_via_rank", [](const FiberContext& c, const NumericalSemigroup& s) {
    auto r = embedding_dim_via_rank(c, s);
    return py::make_tuple(r.e, r.absorbed);
  });
  m.def("rank_one_build", [](const FiberContext& c, Int x) { return rank_one_build(RankOneSpec(c, x)); });
  m.def("rank_one_invariants", [](const FiberContext& c, Int x) {
    auto fg = rank_one_invariants(RankOneSpec(c, x));
    return py::make_tuple(fg.frobenius, fg.genus);
  });
  m.def("rank_one_pf", [](const FiberContext& c, Int x) { return rank_one_pf(RankOneSpec(c, x)); });
}
