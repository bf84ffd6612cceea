#include "mhproj/relevance.hpp"

#include <algorithm>
#include <sstream>

#include "mhproj/errors.hpp"

namespace mhproj {

Support::Support(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

bool Support::contains(std::size_t i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

bool Support::is_subset_of(const Support& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
}

Support Support::united_with(const Support& other) const {
  std::vector<std::size_t> out;
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                 std::back_inserter(out));
  return Support(std::move(out));
}

Support Support::complement(std::size_t k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < k; ++i)
    if (!contains(i)) out.push_back(i);
  return Support(std::move(out));
}

Support parse_support(const RingSpec& spec, std::string_view selector) {
  std::vector<std::size_t> idx;
  std::size_t pos = 0;
  while (pos <= selector.size()) {
    std::size_t comma = selector.find(',', pos);
    if (comma == std::string_view::npos) comma = selector.size();
    std::string_view name = selector.substr(pos, comma - pos);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    if (!name.empty()) idx.push_back(spec.variable_index(name));
    pos = comma + 1;
  }
  return Support(std::move(idx));
}

std::string render_support(const RingSpec& spec, const Support& J) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < J.size(); ++i) os << (i ? "," : "") << spec.variables()[J.indices()[i]];
  os << '}';
  return os.str();
}

std::size_t support_degree_rank(const RingSpec& spec, const Support& J) {
  std::vector<IntVector> vs;
  for (std::size_t i : J.indices()) {
    if (i >= spec.num_variables()) throw DomainError("support index out of range");
    vs.push_back(spec.degrees()[i].free);
  }
  return rank(vs, spec.free_rank());
}

bool is_relevant_support(const RingSpec& spec, const Support& J) {
  return support_degree_rank(spec, J) == spec.free_rank();
}

bool is_relevant_monomial(const RingSpec& spec, const Monomial& m) {
  if (m.exponents.size() != spec.num_variables()) throw DomainError("monomial has wrong number of exponents");
  for (Int e : m.exponents)
    if (e < 0) throw DomainError("monomial exponents must be nonnegative");
  return is_relevant_support(spec, Support(m.support()));
}

RelevantFamily minimal_relevant_supports(const RingSpec& spec, std::size_t cap) {
  const std::size_t k = spec.num_variables();
  const std::size_t s = spec.free_rank();
  if (k > cap)
    throw ResourceError("enumeration cap exceeded: " + std::to_string(k) + " variables > cap " + std::to_string(cap));

  RelevantFamily fam{{}, cap};
  // No subset can do better than the full variable set.
  if (rank(spec.free_degree_matrix()) < s) return fam;

  // Breadth-first by cardinality. A support of size < s has rank < s, and a
  // relevant support of size > s contains a relevant one of size s, so the
  // only level that can contribute new minimal elements is |J| = s.
  for (std::size_t level = 0; level <= std::min(s, k); ++level) {
    if (level < s) continue;
    std::vector<std::size_t> comb(level);
    for (std::size_t i = 0; i < level; ++i) comb[i] = i;
    for (;;) {
      Support J{comb};
      bool dominated = std::any_of(fam.minimal_supports.begin(), fam.minimal_supports.end(),
                                   [&](const Support& m) { return m.is_subset_of(J); });
      if (!dominated && is_relevant_support(spec, J)) fam.minimal_supports.push_back(J);
      // next combination in lexicographic order
      std::size_t i = level;
      while (i > 0 && comb[i - 1] == k - level + i - 1) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < level; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  std::sort(fam.minimal_supports.begin(), fam.minimal_supports.end());
  return fam;
}

std::vector<Monomial> irrelevant_radical_generators(const RingSpec& spec, std::size_t cap) {
  std::vector<Monomial> out;
  for (const Support& J : minimal_relevant_supports(spec, cap).minimal_supports) {
    Monomial m{IntVector(spec.num_variables(), 0)};
    for (std::size_t i : J.indices()) m.exponents[i] = 1;
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.exponents > b.exponents; });
  return out;
}

}  // namespace mhproj
