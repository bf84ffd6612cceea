#include "mhproj/sections.hpp"

#include <algorithm>

#include "mhproj/errors.hpp"

namespace mhproj {

namespace {

std::vector<IntVector> positive_orthant(std::size_t k) { return IntMatrix::identity(k).row_vectors(); }

}  // namespace

HilbertBasis zero_subring_generators(const RingSpec& spec, std::size_t ceiling) {
  const std::size_t k = spec.num_variables();
  return hilbert_basis(k, positive_orthant(k), kernel_lattice_of(spec), ceiling);
}

HilbertBasis veronese_generators(const RingSpec& spec, const std::vector<IntVector>& forms, std::size_t ceiling) {
  if (spec.grading().has_torsion())
    throw DomainError("veronese_generators: gradings with torsion are not supported (linear forms cannot see torsion)");
  const std::size_t k = spec.num_variables();
  const std::size_t s = spec.free_rank();
  const IntMatrix A = spec.free_degree_matrix();
  std::vector<IntVector> hs = positive_orthant(k);
  for (const IntVector& psi : forms) {
    if (psi.size() != s)
      throw DomainError("linear form has " + std::to_string(psi.size()) + " coefficients, expected " +
                        std::to_string(s));
    IntVector u(k, 0);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < s; ++i) u[j] = checked_add(u[j], checked_mul(psi[i], A(i, j)));
    hs.push_back(std::move(u));
  }
  return hilbert_basis(k, hs, ceiling);
}

std::vector<IntVector> binomial_relations(const HilbertBasis& basis, std::size_t degree_bound, std::size_t ceiling) {
  if (degree_bound < 1) throw DomainError("binomial_relations: degree bound must be >= 1");
  const std::size_t n = basis.elements.size();
  const std::size_t k = basis.ambient_dim;
  std::vector<IntVector> out;
  if (n < 2) return out;

  // Depth-first over coordinates with the remaining L1 budget; the running
  // image sum_i u_i g_i is maintained incrementally.
  IntVector u(n, 0);
  IntVector image(k, 0);
  std::size_t visited = 0;
  const Int bound = static_cast<Int>(degree_bound);

  auto step = [&](auto&& self, std::size_t pos, Int budget, bool leading) -> void {
    if (++visited > ceiling) throw ResourceError("binomial_relations: enumeration ceiling exceeded");
    if (pos == n) {
      if (!leading && is_zero(image) && content(u) == 1) out.push_back(u);
      return;
    }
    for (Int v = leading ? 0 : -budget; v <= budget; ++v) {
      u[pos] = v;
      if (v != 0)
        for (std::size_t c = 0; c < k; ++c) image[c] = checked_add(image[c], checked_mul(v, basis.elements[pos][c]));
      self(self, pos + 1, budget - (v < 0 ? -v : v), leading && v == 0);
      if (v != 0)
        for (std::size_t c = 0; c < k; ++c) image[c] = checked_sub(image[c], checked_mul(v, basis.elements[pos][c]));
    }
    u[pos] = 0;
  };
  step(step, 0, bound, true);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::pair<IntVector, IntVector> relation_sides(const HilbertBasis& basis, std::span<const Int> relation) {
  if (relation.size() != basis.elements.size()) throw DomainError("relation has wrong length");
  IntVector plus(basis.ambient_dim, 0), minus(basis.ambient_dim, 0);
  for (std::size_t i = 0; i < relation.size(); ++i) {
    IntVector& side = relation[i] > 0 ? plus : minus;
    const Int m = relation[i] > 0 ? relation[i] : -relation[i];
    for (std::size_t c = 0; c < basis.ambient_dim; ++c)
      side[c] = checked_add(side[c], checked_mul(m, basis.elements[i][c]));
  }
  return {plus, minus};
}

}  // namespace mhproj
