#pragma once

#include <utility>
#include <vector>

#include "mhproj/grading.hpp"

namespace mhproj {

/// Sorted, duplicate-free set of variable indices.
class Support {
 public:
  Support() = default;
  /// Sorts and deduplicates.
  explicit Support(std::vector<std::size_t> indices);

  const std::vector<std::size_t>& indices() const& noexcept { return indices_; }
  /// By value on temporaries, so `for (i : J.complement(k).indices())` is safe.
  std::vector<std::size_t> indices() && noexcept { return std::move(indices_); }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(std::size_t i) const;
  bool is_subset_of(const Support& other) const;
  Support united_with(const Support& other) const;
  /// I - J for I = {0..k-1}.
  Support complement(std::size_t k) const;

  auto operator<=>(const Support&) const = default;
  bool operator==(const Support&) const = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Parse "X1,Z" into a support; throws DomainError on unknown names.
Support parse_support(const RingSpec& spec, std::string_view selector);
std::string render_support(const RingSpec& spec, const Support& J);

struct RelevantFamily {
  std::vector<Support> minimal_supports;  ///< lexicographic order
  std::size_t enumeration_cap = 24;
};

inline constexpr std::size_t kDefaultEnumerationCap = 24;

/// Rank of the free parts of {deg T_i : i in J}.
std::size_t support_degree_rank(const RingSpec& spec, const Support& J);

/// A monomial with support J is relevant iff the free parts of the degrees in J
/// span Q^s. Torsion never matters; for s = 0 every support, including the
/// empty one, is relevant.
bool is_relevant_support(const RingSpec& spec, const Support& J);

/// Monomial-only: relevance of a non-monomial polynomial is not decided here.
bool is_relevant_monomial(const RingSpec& spec, const Monomial& m);

/// Minimal relevant supports. Throws ResourceError if k exceeds `cap`.
RelevantFamily minimal_relevant_supports(const RingSpec& spec, std::size_t cap = kDefaultEnumerationCap);

/// Squarefree monomials prod_{j in J} T_j over the minimal relevant supports J;
/// they generate the radical of the monomial part of the irrelevant ideal.
std::vector<Monomial> irrelevant_radical_generators(const RingSpec& spec, std::size_t cap = kDefaultEnumerationCap);

}  // namespace mhproj
