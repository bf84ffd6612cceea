#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mhproj/errors.hpp"
#include "mhproj/report.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace mhproj;

namespace {

Support to_support(const RingSpec& spec, const std::vector<std::string>& names) {
  std::vector<std::size_t> idx;
  for (const auto& n : names) idx.push_back(spec.variable_index(n));
  return Support(std::move(idx));
}

std::vector<std::vector<std::string>> support_names(const RingSpec& spec, const std::vector<Support>& family) {
  std::vector<std::vector<std::string>> out;
  for (const Support& J : family) {
    std::vector<std::string> names;
    for (std::size_t i : J.indices()) names.push_back(spec.variables()[i]);
    out.push_back(std::move(names));
  }
  return out;
}

IntMatrix to_matrix(const std::vector<IntVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return IntMatrix::from_rows(rows, cols);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = R"pbdoc(
        Multihomogeneous spectra of graded polynomial rings
        ---------------------------------------------------

        Exact integer lattice and cone computations behind Proj of a
        polynomial ring graded by a finitely generated abelian group.
    )pbdoc";

  static py::exception<Error> base(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<OverflowError>(m, "ArithmeticOverflowError", base.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base.ptr());

  py::class_<RingSpec>(m, "RingSpec")
      .def_static("parse", &parse_ring_spec, py::arg("text"), "Parse a JSON ring-spec document.")
      .def_property_readonly("variables", &RingSpec::variables)
      .def_property_readonly("free_rank", &RingSpec::free_rank)
      .def_property_readonly("torsion_orders", [](const RingSpec& s) { return s.grading().torsion_orders; })
      .def_property_readonly("degrees",
                             [](const RingSpec& s) {
                               std::vector<std::pair<IntVector, IntVector>> out;
                               for (const auto& d : s.degrees()) out.emplace_back(d.free, d.torsion);
                               return out;
                             })
      .def("to_json", &format_ring_spec)
      .def("__repr__", [](const RingSpec& s) { return "RingSpec(" + format_ring_spec(s) + ")"; });

  m.def(
      "smith_normal_form",
      [](const std::vector<IntVector>& A) {
        SmithDecomposition snf = smith_normal_form(to_matrix(A));
        py::dict d;
        d["U"] = snf.U.row_vectors();
        d["D"] = snf.D.row_vectors();
        d["V"] = snf.V.row_vectors();
        d["invariant_factors"] = snf.invariant_factors;
        return d;
      },
      py::arg("A"), "Smith form U*A*V = D of a matrix given as a list of rows.");

  m.def(
      "kernel_lattice",
      [](const std::vector<IntVector>& A_free, const std::vector<IntVector>& A_tor, const std::vector<Int>& moduli,
         std::size_t k) {
        if (k == 0) k = !A_free.empty() ? A_free.front().size() : !A_tor.empty() ? A_tor.front().size() : 0;
        IntMatrix F = A_free.empty() ? IntMatrix(0, k) : to_matrix(A_free);
        IntMatrix T = A_tor.empty() ? IntMatrix(0, k) : to_matrix(A_tor);
        return kernel_lattice(F, T, moduli).vectors();
      },
      py::arg("A_free"), py::arg("A_tor") = std::vector<IntVector>{}, py::arg("moduli") = std::vector<Int>{},
      py::arg("k") = 0, "HNF basis of {v : A_free v = 0, A_tor v = 0 mod moduli}; pass k when A_free is empty.");

  m.def("rank", [](const std::vector<IntVector>& A) { return rank(to_matrix(A)); }, py::arg("A"));

  m.def(
      "is_relevant_support",
      [](const RingSpec& spec, const std::vector<std::string>& names) {
        return is_relevant_support(spec, to_support(spec, names));
      },
      py::arg("spec"), py::arg("support"));

  m.def(
      "minimal_relevant_supports",
      [](const RingSpec& spec, std::size_t cap) {
        return support_names(spec, minimal_relevant_supports(spec, cap).minimal_supports);
      },
      py::arg("spec"), py::arg("cap") = kDefaultEnumerationCap);

  m.def(
      "irrelevant_radical_generators",
      [](const RingSpec& spec) {
        std::vector<std::string> out;
        for (const Monomial& mono : irrelevant_radical_generators(spec))
          out.push_back(render_laurent_monomial(spec, mono.exponents));
        return out;
      },
      py::arg("spec"));

  m.def(
      "hilbert_basis",
      [](std::size_t dim, const std::vector<IntVector>& halfspaces) {
        return hilbert_basis(dim, halfspaces).elements;
      },
      py::arg("dim"), py::arg("halfspaces"), "Hilbert basis of {x in Z^dim : <u,x> >= 0}.");

  m.def(
      "zero_subring_generators", [](const RingSpec& spec) { return zero_subring_generators(spec).elements; },
      py::arg("spec"));

  m.def(
      "veronese_generators",
      [](const RingSpec& spec, const std::vector<IntVector>& forms) {
        return veronese_generators(spec, forms).elements;
      },
      py::arg("spec"), py::arg("forms"));

  m.def(
      "binomial_relations",
      [](const std::vector<IntVector>& generators, std::size_t degree_bound) {
        HilbertBasis hb{generators.empty() ? 0 : generators.front().size(), generators};
        return binomial_relations(hb, degree_bound);
      },
      py::arg("generators"), py::arg("degree_bound"));

  m.def(
      "analyze_json",
      [](const RingSpec& spec, std::size_t cap) {
        ModelOptions opt;
        opt.enumeration_cap = cap;
        return report::analyze(build_model(spec, opt)).dump();
      },
      py::arg("spec"), py::arg("max_vars") = kDefaultEnumerationCap);

  m.def(
      "chart_json",
      [](const RingSpec& spec, const std::string& selector) {
        return report::charts(spec, build_chart(spec, parse_support(spec, selector))).dump();
      },
      py::arg("spec"), py::arg("support"));

  m.def(
      "separation_json",
      [](const RingSpec& spec, std::size_t cap) {
        ModelOptions opt;
        opt.enumeration_cap = cap;
        return report::separation(build_model(spec, opt)).dump();
      },
      py::arg("spec"), py::arg("max_vars") = kDefaultEnumerationCap);

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
