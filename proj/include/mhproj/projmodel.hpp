#pragma once

#include <vector>

#include "mhproj/charts.hpp"

namespace mhproj {

struct ModelOptions {
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  std::size_t parallelotope_ceiling = kDefaultParallelotopeCeiling;
};

/// Proj(S) as the union of the charts at the minimal relevant supports.
struct ProjModel {
  RingSpec spec;
  RelevantFamily minimal_supports;
  LatticeBasis kernel;  ///< M, whose dual hosts the fan
  std::vector<Chart> charts;  ///< charts[i] belongs to minimal_supports[i]
  std::size_t torus_dim = 0;  ///< rank M
  std::vector<Cone> fan_cones;  ///< fan_cones[i] == charts[i].fan_cone, duplicates kept
};

ProjModel build_model(const RingSpec& spec, const ModelOptions& options = {});

enum class PairVerdict { Certified, Inconclusive };

/// Certified iff the degree cones of J1 and J2 meet in a full-dimensional cone,
/// which makes D+(T^J1) u D+(T^J2) separated. Inconclusive says nothing.
PairVerdict pairwise_separation(const RingSpec& spec, const Support& J1, const Support& J2);

struct FanVerdict {
  enum class Kind { IsFan, DuplicateCone, BadIntersection };
  Kind kind = Kind::IsFan;
  /// Chart indices of the offending pair (meaningless for IsFan).
  std::size_t first = 0;
  std::size_t second = 0;
};

/// Toric separatedness of the chart gluing. Two charts fail if their cones
/// coincide, or if the cones do not meet exactly in the cone of the overlap
/// chart D+(T^{J u J'}) as a common face.
FanVerdict fan_check(const ProjModel& model);

enum class Separation { Separated, NotSeparated, Unknown };

struct SeparationReport {
  /// Symmetric matrix over minimal supports.
  std::vector<std::vector<PairVerdict>> pairwise;
  FanVerdict fan_verdict;
  Separation overall = Separation::Unknown;

  bool all_certified() const;
};

/// Throws InvariantError if every pair is certified yet the fan check fails.
SeparationReport separation_verdict(const ProjModel& model);

const char* to_string(PairVerdict v);
const char* to_string(FanVerdict::Kind k);
const char* to_string(Separation s);

}  // namespace mhproj
