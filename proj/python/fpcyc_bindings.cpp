#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fpcyc/aut_verify.hpp"
#include "fpcyc/cli.hpp"
#include "fpcyc/serialize.hpp"

namespace py = pybind11;
using namespace fpcyc;

namespace {

py::dict report_dict(const Report& r) {
  py::list checks;
  for (const auto& c : r.checks) checks.append(py::make_tuple(c.name, c.passed, c.witness));
  py::dict d;
  d["passed"] = r.all_passed();
  d["checks"] = checks;
  d["notes"] = r.notes;
  return d;
}

FuzzKind fuzz_kind(const std::string& name) {
  if (name == "helly") return FuzzKind::Helly;
  if (name == "cycle") return FuzzKind::Cycle;
  if (name == "diagonal") return FuzzKind::Diagonal;
  if (name == "fixed") return FuzzKind::Fixed;
  throw std::invalid_argument("unknown lemma " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Free products of finite cyclic groups";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<FAHypothesisError>(m, "FAHypothesisError", PyExc_ValueError);

  py::class_<Signature>(m, "Signature")
      .def(py::init<std::vector<int>>())
      .def_static("parse", [](const std::string& s) { return parse_signature(s); })
      .def_property_readonly("orders", &Signature::orders)
      .def_property_readonly("rank", &Signature::rank)
      .def("__eq__", [](const Signature& a, const Signature& b) { return a == b; })
      .def("__str__", &Signature::to_string)
      .def("__repr__", [](const Signature& s) { return "Signature(" + s.to_string() + ")"; });

  py::class_<Word>(m, "Word")
      .def_static("parse", [](const Signature& sig, const std::string& s) { return parse_word(sig, s); })
      .def_static("identity", [](const Signature& sig) { return Word(sig); })
      .def_static("generator", &Word::generator, py::arg("signature"), py::arg("factor"), py::arg("exponent") = 1)
      .def_property_readonly("signature", &Word::signature)
      .def_property_readonly("syllables",
                             [](const Word& w) {
                               py::list out;
                               for (const Syllable& s : w.syllables()) out.append(py::make_tuple(s.factor + 1, s.exponent));
                               return out;
                             })
      .def("__len__", &Word::length)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__hash__", [](const Word& w) { return std::hash<Word>{}(w); })
      .def("inverse", [](const Word& w) { return invert(w); })
      .def("__pow__", [](const Word& w, long k) { return power(w, k); })
      .def("order", [](const Word& w) -> std::optional<int> { return order(w); })
      .def("cyclically_reduce",
           [](const Word& w) {
             CyclicReduction r = cyclically_reduce(w);
             return py::make_tuple(r.core, r.conjugator);
           })
      .def("is_conjugate", [](const Word& a, const Word& b) { return is_conjugate(a, b); })
      .def("__str__", &Word::to_string)
      .def("__repr__", [](const Word& w) { return "Word(" + w.to_string() + ")"; });

  py::class_<Automorphism>(m, "Automorphism")
      .def_static("parse", [](const Signature& sig, const std::string& s) { return parse_automorphism(sig, s); })
      .def_static("identity", &Automorphism::identity)
      .def_static("partial_conjugation",
                  [](const Signature& sig, int i, int j) { return partial_conjugation(sig, i - 1, j - 1); })
      .def_static("inner", &inner)
      .def_property_readonly("images", &Automorphism::images)
      .def("__call__", &Automorphism::apply)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("inverse", [](const Automorphism& f) { return inverse(f); })
      .def("inner_conjugator", [](const Automorphism& f) { return inner_conjugator(f); })
      .def("__str__", &Automorphism::to_string);

  m.def("verify_generator_relations", [](const Signature& sig) { return report_dict(verify_generator_relations(sig)); });
  m.def("verify_fr3", [](int n) { return report_dict(verify_fr_presentation_m3(n)); });
  m.def("verify_phipsi", [](int n) { return report_dict(verify_phi_psi_m3(n)); });

  m.def("census", [](const Signature& sig) { return conjugacy_census(sig).classes; });
  m.def("census_brute_force",
        [](const Signature& sig, int max_length) { return conjugacy_census_brute_force(sig, max_length).classes; });
  m.def("occurrences", [](const Signature& sig, int k) {
    Occurrences o = occurrences(sig, k);
    return py::make_tuple(o.corrected, o.literal);
  });
  m.def("is_characteristic", [](const Signature& sig, int k) { return report_dict(is_characteristic_Nk(sig, k)); });
  m.def("fa_certificate_json", [](const Signature& sig) { return to_json(fa_case_certificate(sig)).dump(); });

  m.def("amalgam", [](const std::string& mode, int n, int radius) {
    AmalgamReport r = mode == "m3" ? amalgam_report_m3(n, radius) : amalgam_report_m2(n, radius);
    return py::make_tuple(r.vertex_group_1, r.vertex_group_2, r.edge_group, r.all_passed());
  }, py::arg("mode"), py::arg("n"), py::arg("radius") = 4);

  m.def("fuzz", [](const std::string& lemma, int trials, std::uint64_t seed, int k_min, int k_max) {
    FuzzOptions o;
    o.trials = trials;
    o.seed = seed;
    o.k_min = k_min;
    o.k_max = k_max;
    FuzzReport r = run_fuzz(fuzz_kind(lemma), o);
    return py::make_tuple(r.trials, r.failures);
  }, py::arg("lemma"), py::arg("trials") = 1000, py::arg("seed") = 0, py::arg("k_min") = 2, py::arg("k_max") = 8);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
