#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mhproj/intlin.hpp"

namespace mhproj {

/// D = Z^free_rank + Z/m_1 + ... + Z/m_t. Orders are kept as given, not
/// normalized to invariant factors.
struct GradingGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion_orders;

  bool has_torsion() const noexcept { return !torsion_orders.empty(); }
  bool operator==(const GradingGroup&) const = default;
};

struct Multidegree {
  IntVector free;
  IntVector torsion;  ///< residues in [0, m_i)

  bool operator==(const Multidegree&) const = default;
};

/// Exponent vector of a monomial in k variables.
struct Monomial {
  IntVector exponents;

  /// Indices with positive exponent, ascending.
  std::vector<std::size_t> support() const;
  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;
};

/// A polynomial ring R[T_1..T_k] graded by a finitely generated abelian group.
/// The coefficient ring is a display label; nothing computed here depends on it.
class RingSpec {
 public:
  /// Validates and reduces torsion residues; throws ParseError on bad input.
  RingSpec(std::vector<std::string> variables, std::vector<Multidegree> degrees, GradingGroup grading,
           std::string coefficient_label = "Q");

  std::size_t num_variables() const noexcept { return variables_.size(); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Multidegree>& degrees() const noexcept { return degrees_; }
  const GradingGroup& grading() const noexcept { return grading_; }
  const std::string& coefficient_label() const noexcept { return coefficient_label_; }
  std::size_t free_rank() const noexcept { return grading_.free_rank; }

  /// Index of a variable by name; throws DomainError if unknown.
  std::size_t variable_index(std::string_view name) const;

  /// s x k matrix whose columns are the free parts of the degrees.
  IntMatrix free_degree_matrix() const;
  /// t x k matrix whose columns are the torsion residues.
  IntMatrix torsion_degree_matrix() const;

  bool operator==(const RingSpec&) const = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Multidegree> degrees_;
  GradingGroup grading_;
  std::string coefficient_label_;
};

/// Parse the JSON ring-spec document.
RingSpec parse_ring_spec(std::string_view text);
/// Inverse of parse_ring_spec, stable key order.
std::string format_ring_spec(const RingSpec& spec);

Multidegree degree_of_monomial(const RingSpec& spec, const Monomial& m);
/// Degree of an arbitrary integer vector (Laurent monomial).
Multidegree degree_of_exponents(const RingSpec& spec, std::span<const Int> exponents);

/// M = kernel of the degree map Z^k -> D, torsion congruences included.
LatticeBasis kernel_lattice_of(const RingSpec& spec);

/// "X^2*Y^-1"; "1" for the zero vector.
std::string render_laurent_monomial(const RingSpec& spec, std::span<const Int> exponents);

}  // namespace mhproj
