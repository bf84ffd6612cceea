#pragma once

#include <vector>

#include "mhproj/cones.hpp"
#include "mhproj/grading.hpp"

namespace mhproj {

/// Generators of S_0 = R[{v in N^k : deg(v) = 0}] as exponent vectors in Z^k.
///
/// This is the degree-zero subring of the polynomial ring itself; identifying
/// it with global sections of a geometric object needs the usual normality and
/// dimension hypotheses, which are not checked.
HilbertBasis zero_subring_generators(const RingSpec& spec, std::size_t ceiling = kDefaultParallelotopeCeiling);

/// Generators of the Veronese subring S_M for M = {d : psi(d) >= 0 for psi in forms},
/// each form a vector of length s acting on the free part. Torsion gradings are
/// rejected with DomainError.
HilbertBasis veronese_generators(const RingSpec& spec, const std::vector<IntVector>& forms,
                                 std::size_t ceiling = kDefaultParallelotopeCeiling);

inline constexpr std::size_t kDefaultRelationCeiling = 20'000'000;

/// Primitive u with |u|_1 <= degree_bound and sum_i u_i g_i = 0, one per sign
/// class (first nonzero entry positive). Each encodes
/// the binomial relation prod g_i^{u+} = prod g_i^{u-}. Brute force; descending
/// lexicographic order.
std::vector<IntVector> binomial_relations(const HilbertBasis& basis, std::size_t degree_bound,
                                          std::size_t ceiling = kDefaultRelationCeiling);

/// Positive and negative parts of a relation expanded to exponent vectors in N^k.
std::pair<IntVector, IntVector> relation_sides(const HilbertBasis& basis, std::span<const Int> relation);

}  // namespace mhproj
