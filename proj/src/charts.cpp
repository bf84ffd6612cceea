#include "mhproj/charts.hpp"

#include "mhproj/errors.hpp"

namespace mhproj {

std::vector<IntVector> projections_on_kernel(const LatticeBasis& kernel) { return kernel.basis.row_vectors(); }

Cone chart_cone(const LatticeBasis& kernel, const Support& J) {
  const std::vector<IntVector> pr = projections_on_kernel(kernel);
  const Support rest = J.complement(kernel.ambient_dim);
  std::vector<IntVector> gens;
  for (std::size_t i : rest.indices()) gens.push_back(pr[i]);
  return Cone::from_generators(kernel.rank, gens);
}

Cone chart_cone(const RingSpec& spec, const Support& J) { return chart_cone(kernel_lattice_of(spec), J); }

Cone degree_cone(const RingSpec& spec, const Support& J) {
  std::vector<IntVector> gens;
  for (std::size_t i : J.indices()) {
    if (i >= spec.num_variables()) throw DomainError("support index out of range");
    gens.push_back(spec.degrees()[i].free);
  }
  return Cone::from_generators(spec.free_rank(), gens);
}

Chart build_chart(const RingSpec& spec, const LatticeBasis& kernel, const Support& J, std::size_t ceiling) {
  const std::size_t r = support_degree_rank(spec, J);
  if (r != spec.free_rank())
    throw DomainError("support not relevant: degree rank " + std::to_string(r) + " < " +
                      std::to_string(spec.free_rank()));

  Chart chart;
  chart.support = J;
  const std::vector<IntVector> pr = projections_on_kernel(kernel);
  const Support rest = J.complement(spec.num_variables());
  for (std::size_t i : rest.indices()) chart.monoid_inequalities.push_back(pr[i]);
  chart.generators = hilbert_basis(kernel.rank, chart.monoid_inequalities, ceiling);
  for (const IntVector& g : chart.generators.elements) chart.generator_exponents.push_back(kernel.basis * g);
  chart.fan_cone = Cone::from_generators(kernel.rank, chart.monoid_inequalities);
  chart.degree_cone = degree_cone(spec, J);
  return chart;
}

Chart build_chart(const RingSpec& spec, const Support& J, std::size_t ceiling) {
  return build_chart(spec, kernel_lattice_of(spec), J, ceiling);
}

std::vector<std::string> render_generators(const RingSpec& spec, const Chart& chart) {
  std::vector<std::string> out;
  for (const IntVector& e : chart.generator_exponents) out.push_back(render_laurent_monomial(spec, e));
  return out;
}

}  // namespace mhproj
