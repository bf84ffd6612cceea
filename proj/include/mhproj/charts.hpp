#pragma once

#include <string>
#include <vector>

#include "mhproj/cones.hpp"
#include "mhproj/grading.hpp"
#include "mhproj/relevance.hpp"

namespace mhproj {

/// The affine chart D+(T^J) = Spec R[M_J] of a relevant support J, where
/// M_J = {m in M : m_i >= 0 for i not in J}.
///
/// M is presented in the canonical HNF basis of kernel_lattice_of(spec), so
/// M-coordinates are coefficients in that basis and N = Hom(M, Z) uses the dual
/// basis. The projection pr_i restricted to M is therefore row i of the basis
/// matrix.
struct Chart {
  Support support;
  /// Inequalities <u, .> >= 0 on M-coordinates cutting out M_J, one per i not in J
  /// (as given, not deduplicated, possibly zero).
  std::vector<IntVector> monoid_inequalities;
  /// Hilbert basis of M_J in M-coordinates, sorted.
  HilbertBasis generators;
  /// The same generators as exponent vectors in Z^k, in the same order.
  std::vector<IntVector> generator_exponents;
  /// sigma_{I-J} in N.
  Cone fan_cone;
  /// Cone in R^s spanned by the free parts of the degrees in J.
  Cone degree_cone;
};

/// pr_i restricted to M, in N-coordinates, for i = 0..k-1.
std::vector<IntVector> projections_on_kernel(const LatticeBasis& kernel);

/// sigma_{I-J}: the cone in N generated by pr_i|M for i not in J. Relevance is
/// not required.
Cone chart_cone(const RingSpec& spec, const Support& J);
Cone chart_cone(const LatticeBasis& kernel, const Support& J);

/// Cone in R^s generated by the free parts of deg T_i, i in J.
Cone degree_cone(const RingSpec& spec, const Support& J);

/// Throws DomainError (with the degree rank deficit) when J is not relevant.
Chart build_chart(const RingSpec& spec, const Support& J, std::size_t ceiling = kDefaultParallelotopeCeiling);
Chart build_chart(const RingSpec& spec, const LatticeBasis& kernel, const Support& J,
                  std::size_t ceiling = kDefaultParallelotopeCeiling);

/// Exponent vectors of the chart generators rendered as Laurent monomials.
std::vector<std::string> render_generators(const RingSpec& spec, const Chart& chart);

}  // namespace mhproj
