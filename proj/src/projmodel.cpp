#include "mhproj/projmodel.hpp"

#include "mhproj/errors.hpp"

namespace mhproj {

ProjModel build_model(const RingSpec& spec, const ModelOptions& options) {
  ProjModel model{spec, minimal_relevant_supports(spec, options.enumeration_cap), kernel_lattice_of(spec), {}, 0, {}};
  model.torus_dim = model.kernel.rank;
  for (const Support& J : model.minimal_supports.minimal_supports) {
    model.charts.push_back(build_chart(spec, model.kernel, J, options.parallelotope_ceiling));
    model.fan_cones.push_back(model.charts.back().fan_cone);
  }
  return model;
}

PairVerdict pairwise_separation(const RingSpec& spec, const Support& J1, const Support& J2) {
  if (!is_relevant_support(spec, J1) || !is_relevant_support(spec, J2))
    throw DomainError("pairwise_separation: both supports must be relevant");
  const Cone both = intersect(degree_cone(spec, J1), degree_cone(spec, J2));
  return both.dim() == spec.free_rank() ? PairVerdict::Certified : PairVerdict::Inconclusive;
}

FanVerdict fan_check(const ProjModel& model) {
  const auto& cones = model.fan_cones;
  const auto& supports = model.minimal_supports.minimal_supports;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j)
      if (cones[i] == cones[j]) return {FanVerdict::Kind::DuplicateCone, i, j};

  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      const Cone meet = intersect(cones[i], cones[j]);
      if (!is_face(meet, cones[i]) || !is_face(meet, cones[j])) return {FanVerdict::Kind::BadIntersection, i, j};
      // The charts are glued along D+(T^{J u J'}); a common face larger than
      // its cone leaves the gluing nonseparated.
      const Cone overlap = chart_cone(model.kernel, supports[i].united_with(supports[j]));
      if (meet != overlap) return {FanVerdict::Kind::BadIntersection, i, j};
    }
  return {};
}

bool SeparationReport::all_certified() const {
  for (const auto& row : pairwise)
    for (PairVerdict v : row)
      if (v != PairVerdict::Certified) return false;
  return true;
}

SeparationReport separation_verdict(const ProjModel& model) {
  const auto& supports = model.minimal_supports.minimal_supports;
  const std::size_t n = supports.size();
  SeparationReport report;
  report.pairwise.assign(n, std::vector<PairVerdict>(n, PairVerdict::Certified));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      report.pairwise[i][j] = report.pairwise[j][i] = pairwise_separation(model.spec, supports[i], supports[j]);

  report.fan_verdict = fan_check(model);
  const bool certified = report.all_certified();
  const bool refuted = report.fan_verdict.kind != FanVerdict::Kind::IsFan;
  if (certified && refuted)
    throw InvariantError("separation analysis is inconsistent: all pairs certified but the fan check failed");
  report.overall = certified ? Separation::Separated : refuted ? Separation::NotSeparated : Separation::Unknown;
  return report;
}

const char* to_string(PairVerdict v) { return v == PairVerdict::Certified ? "Certified" : "Inconclusive"; }

const char* to_string(FanVerdict::Kind k) {
  switch (k) {
    case FanVerdict::Kind::IsFan:
      return "IsFan";
    case FanVerdict::Kind::DuplicateCone:
      return "DuplicateCone";
    case FanVerdict::Kind::BadIntersection:
      return "BadIntersection";
  }
  return "?";
}

const char* to_string(Separation s) {
  switch (s) {
    case Separation::Separated:
      return "Separated";
    case Separation::NotSeparated:
      return "NotSeparated";
    case Separation::Unknown:
      return "Unknown";
  }
  return "?";
}

}  // namespace mhproj
