#pragma once

#include <cstddef>
#include <vector>

#include "mhproj/intlin.hpp"

namespace mhproj {

/// A rational polyhedral cone in R^n holding both descriptions in canonical form.
///
/// The V-side is a set of extreme rays of the pointed quotient C / lin(C) plus a
/// saturated HNF basis of the lineality lattice; the H-side is the set of facet
/// normals plus an HNF basis of the implicit equations. Rays are reduced modulo
/// the lineality space (zero in the lineality HNF pivot columns), facets modulo
/// the equation space, and every vector is primitive. Lists are sorted, so two
/// cones are equal iff their canonical data is equal.
class Cone {
 public:
  /// The cone generated by `gens` (duality by double description).
  static Cone from_generators(std::size_t dim, const std::vector<IntVector>& gens);
  /// The cone {x : <u, x> >= 0 for all u in halfspaces}.
  static Cone from_halfspaces(std::size_t dim, const std::vector<IntVector>& halfspaces);
  static Cone zero(std::size_t dim) { return from_generators(dim, {}); }
  static Cone whole_space(std::size_t dim) { return from_halfspaces(dim, {}); }

  std::size_t ambient_dim() const noexcept { return dim_; }
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  const std::vector<IntVector>& lineality_basis() const noexcept { return lineality_; }
  const std::vector<IntVector>& facets() const noexcept { return facets_; }
  const std::vector<IntVector>& equations() const noexcept { return equations_; }

  /// V-description: rays together with +- lineality basis vectors, sorted.
  std::vector<IntVector> generators() const;
  /// H-description as <u, .> >= 0: facets together with +- equations, sorted.
  std::vector<IntVector> halfspaces() const;

  std::size_t lineality_dim() const noexcept { return lineality_.size(); }
  std::size_t dim() const noexcept { return dim_ - equations_.size(); }
  bool is_strongly_convex() const noexcept { return lineality_.empty(); }
  /// Number of extreme rays equals the dimension.
  bool is_simplicial() const noexcept { return rays_.size() == dim(); }
  bool contains(std::span<const Int> v) const;
  bool contains(const Cone& other) const;
  /// Interior of the cone is nonempty in R^n.
  bool is_full_dimensional() const noexcept { return equations_.empty(); }

  bool operator==(const Cone&) const = default;

  /// The zero cone in R^0.
  Cone() = default;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> equations_;
};

Cone dualize(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
/// f = c, or f = c meets {<u, .> = 0} for a valid inequality u of c.
bool is_face(const Cone& f, const Cone& c);

/// Dimension, strong convexity and simpliciality as free functions for symmetry
/// with the other cone operations.
inline std::size_t dim(const Cone& c) { return c.dim(); }
inline bool is_strongly_convex(const Cone& c) { return c.is_strongly_convex(); }
inline bool is_simplicial(const Cone& c) { return c.is_simplicial(); }

struct HilbertBasis {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> elements;  ///< sorted lexicographically

  bool operator==(const HilbertBasis&) const = default;
};

inline constexpr std::size_t kDefaultParallelotopeCeiling = 2'000'000;

/// Minimal generating set of the monoid {x in L : <u, x> >= 0 for u in halfspaces}.
///
/// The cone is split into simplicial cones by a pulling triangulation; lattice
/// points of each fundamental parallelotope together with the rays form a
/// candidate set, which is then reduced. If the monoid has units, the result
/// also contains +- a basis of the unit group. Throws ResourceError when the
/// total number of parallelotope points would exceed `ceiling`.
HilbertBasis hilbert_basis(std::size_t dim, const std::vector<IntVector>& halfspaces, const LatticeBasis& lattice,
                           std::size_t ceiling = kDefaultParallelotopeCeiling);

/// Convenience overload for the standard lattice Z^dim.
HilbertBasis hilbert_basis(std::size_t dim, const std::vector<IntVector>& halfspaces,
                           std::size_t ceiling = kDefaultParallelotopeCeiling);

/// Simplicial cones (as index lists into `rays`) triangulating the pointed cone
/// generated by `rays`, which must all be extreme.
std::vector<std::vector<std::size_t>> pulling_triangulation(std::size_t dim, const std::vector<IntVector>& rays);

}  // namespace mhproj
