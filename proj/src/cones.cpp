#include "mhproj/cones.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "mhproj/errors.hpp"

namespace mhproj {

namespace {

// Incidence set over processed constraint indices.
class Bits {
 public:
  void set(std::size_t i) {
    if (words_.size() <= i / 64) words_.resize(i / 64 + 1, 0);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.words_.resize(std::min(words_.size(), o.words_.size()));
    for (std::size_t w = 0; w < r.words_.size(); ++w) r.words_[w] = words_[w] & o.words_[w];
    return r;
  }
  bool is_subset_of(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t other = w < o.words_.size() ? o.words_[w] : 0;
      if (words_[w] & ~other) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// a*x - b*y made primitive
IntVector combine(Int a, const IntVector& x, Int b, const IntVector& y) {
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = checked_sub(checked_mul(a, x[i]), checked_mul(b, y[i]));
  return primitive(std::move(out));
}

// Extreme rays of the pointed part of {x : <a, x> >= 0 for a in constraints}, by
// incremental double description starting from the whole space. Rays are not
// canonicalized.
std::vector<IntVector> double_description(std::size_t n, const std::vector<IntVector>& constraints) {
  std::vector<IntVector> lin = IntMatrix::identity(n).row_vectors();
  std::vector<IntVector> rays;
  std::vector<Bits> zero_sets;

  for (std::size_t idx = 0; idx < constraints.size(); ++idx) {
    const IntVector& a = constraints[idx];
    if (a.size() != n) throw DomainError("constraint has wrong dimension");

    auto pivot = std::find_if(lin.begin(), lin.end(), [&](const IntVector& l) { return dot(a, l) != 0; });
    if (pivot != lin.end()) {
      IntVector l0 = *pivot;
      lin.erase(pivot);
      Int al0 = dot(a, l0);
      if (al0 < 0) {
        for (Int& x : l0) x = checked_neg(x);
        al0 = checked_neg(al0);
      }
      for (IntVector& l : lin)
        if (Int d = dot(a, l); d != 0) l = combine(al0, l, d, l0);
      for (std::size_t r = 0; r < rays.size(); ++r) {
        if (Int d = dot(a, rays[r]); d != 0) rays[r] = combine(al0, rays[r], d, l0);
        zero_sets[r].set(idx);
      }
      Bits z;
      for (std::size_t j = 0; j < idx; ++j) z.set(j);
      rays.push_back(std::move(l0));
      zero_sets.push_back(std::move(z));
      continue;
    }

    std::vector<Int> val(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) val[r] = dot(a, rays[r]);

    std::vector<IntVector> next;
    std::vector<Bits> next_zero;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] > 0) {
        next.push_back(rays[r]);
        next_zero.push_back(zero_sets[r]);
      } else if (val[r] == 0) {
        next.push_back(rays[r]);
        next_zero.push_back(zero_sets[r]);
        next_zero.back().set(idx);
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (val[q] >= 0) continue;
        Bits common = zero_sets[p] & zero_sets[q];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && common.is_subset_of(zero_sets[r])) adjacent = false;
        if (!adjacent) continue;
        IntVector c = combine(val[p], rays[q], val[q], rays[p]);
        if (is_zero(c)) continue;
        common.set(idx);
        next.push_back(std::move(c));
        next_zero.push_back(std::move(common));
      }
    }
    rays = std::move(next);
    zero_sets = std::move(next_zero);
  }
  return rays;
}

// Representative of v + span(basis) vanishing at the pivot columns of the HNF rows.
IntVector reduce_modulo(IntVector v, const std::vector<IntVector>& hnf_rows) {
  for (const IntVector& l : hnf_rows) {
    std::size_t p = 0;
    while (l[p] == 0) ++p;
    if (v[p] != 0) v = combine(l[p], v, v[p], l);
  }
  return primitive(std::move(v));
}

struct DualPair {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};

// V-data {rays, lineality} of the cone cut out by `constraints`.
DualPair solve(std::size_t n, const std::vector<IntVector>& constraints) {
  for (const auto& c : constraints)
    if (c.size() != n) throw DomainError("cone vector has wrong dimension");
  DualPair out;
  out.lineality = kernel_lattice(IntMatrix::from_rows(constraints, n)).vectors();
  for (IntVector& r : double_description(n, constraints)) {
    IntVector c = reduce_modulo(std::move(r), out.lineality);
    if (!is_zero(c)) out.rays.push_back(std::move(c));
  }
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

std::vector<IntVector> with_negatives(const std::vector<IntVector>& base, const std::vector<IntVector>& both_signs) {
  std::vector<IntVector> out = base;
  for (const IntVector& v : both_signs) {
    out.push_back(v);
    IntVector neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = checked_neg(v[i]);
    out.push_back(std::move(neg));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Cone Cone::from_generators(std::size_t dim, const std::vector<IntVector>& gens) {
  Cone c;
  c.dim_ = dim;
  DualPair h = solve(dim, gens);
  c.facets_ = std::move(h.rays);
  c.equations_ = std::move(h.lineality);
  DualPair v = solve(dim, c.halfspaces());
  c.rays_ = std::move(v.rays);
  c.lineality_ = std::move(v.lineality);
  return c;
}

Cone Cone::from_halfspaces(std::size_t dim, const std::vector<IntVector>& halfspaces) {
  Cone c;
  c.dim_ = dim;
  DualPair v = solve(dim, halfspaces);
  c.rays_ = std::move(v.rays);
  c.lineality_ = std::move(v.lineality);
  DualPair h = solve(dim, c.generators());
  c.facets_ = std::move(h.rays);
  c.equations_ = std::move(h.lineality);
  return c;
}

std::vector<IntVector> Cone::generators() const { return with_negatives(rays_, lineality_); }

std::vector<IntVector> Cone::halfspaces() const { return with_negatives(facets_, equations_); }

bool Cone::contains(std::span<const Int> v) const {
  if (v.size() != dim_) throw DomainError("vector has wrong dimension for cone");
  for (const auto& u : facets_)
    if (dot(u, v) < 0) return false;
  for (const auto& u : equations_)
    if (dot(u, v) != 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

Cone dualize(const Cone& c) {
  // The canonical data of the dual is the canonical data of c with the roles swapped.
  return Cone::from_generators(c.ambient_dim(), c.halfspaces());
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DomainError("intersect: ambient dimensions differ");
  std::vector<IntVector> hs = a.halfspaces();
  for (auto& u : b.halfspaces()) hs.push_back(std::move(u));
  return Cone::from_halfspaces(a.ambient_dim(), hs);
}

bool is_face(const Cone& f, const Cone& c) {
  if (f.ambient_dim() != c.ambient_dim()) throw DomainError("is_face: ambient dimensions differ");
  if (!c.contains(f)) return false;
  // Smallest face of c containing f: cut by every facet that vanishes on f.
  const std::vector<IntVector> gens = f.generators();
  std::vector<IntVector> hs = c.halfspaces();
  for (const IntVector& u : c.facets()) {
    bool vanishes = std::all_of(gens.begin(), gens.end(), [&](const IntVector& g) { return dot(u, g) == 0; });
    if (!vanishes) continue;
    IntVector neg(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) neg[i] = -u[i];
    hs.push_back(std::move(neg));
  }
  return Cone::from_halfspaces(c.ambient_dim(), hs) == f;
}

// ---------------------------------------------------------------------------
// Triangulation and Hilbert bases

namespace {

void pull(std::size_t dim, const std::vector<IntVector>& rays, const std::vector<std::size_t>& subset,
          std::size_t face_dim, std::vector<std::vector<std::size_t>>& out) {
  if (subset.size() == face_dim) {
    out.push_back(subset);
    return;
  }
  std::vector<IntVector> gens;
  for (std::size_t i : subset) gens.push_back(rays[i]);
  const Cone face = Cone::from_generators(dim, gens);
  const std::size_t apex = subset.front();
  for (const IntVector& u : face.facets()) {
    if (dot(u, rays[apex]) == 0) continue;
    std::vector<std::size_t> facet;
    for (std::size_t i : subset)
      if (dot(u, rays[i]) == 0) facet.push_back(i);
    std::vector<std::vector<std::size_t>> sub;
    pull(dim, rays, facet, face_dim - 1, sub);
    for (auto& simplex : sub) {
      simplex.insert(simplex.begin(), apex);
      out.push_back(std::move(simplex));
    }
  }
}

// Lattice points of the half-open parallelotope spanned by the linearly
// independent columns of V, origin excluded.
void parallelotope_points(const IntMatrix& V, std::set<IntVector>& sink, std::size_t& budget) {
  const std::size_t d = V.cols();
  SmithDecomposition snf = smith_normal_form(V);
  const std::vector<Int>& f = snf.invariant_factors;
  if (f.size() != d) throw InvariantError("simplicial cone generators are not linearly independent");
  std::size_t count = 1;
  for (Int x : f) {
    if (count > budget / static_cast<std::size_t>(x))
      throw ResourceError("Hilbert basis: parallelotope enumeration ceiling exceeded");
    count *= static_cast<std::size_t>(x);
  }
  budget -= count;

  // Points are V*lambda with lambda = W*mu, mu_i in (1/f_i)Z. Work with
  // lambda scaled by the largest factor.
  const Int denom = f.back();
  std::vector<Int> a(d, 0);
  for (;;) {
    IntVector lam(d, 0);
    bool origin = true;
    for (std::size_t j = 0; j < d; ++j) {
      Int acc = 0;
      for (std::size_t i = 0; i < d; ++i)
        acc = checked_add(acc, checked_mul(checked_mul(snf.V(j, i), a[i]), denom / f[i]));
      acc %= denom;
      if (acc < 0) acc += denom;
      lam[j] = acc;
      origin = origin && acc == 0;
    }
    if (!origin) {
      IntVector p = V * lam;
      for (Int& x : p) {
        if (x % denom != 0) throw InvariantError("parallelotope point is not integral");
        x /= denom;
      }
      sink.insert(std::move(p));
    }
    std::size_t i = 0;
    while (i < d && ++a[i] == f[i]) a[i++] = 0;
    if (i == d) break;
  }
}

std::vector<IntVector> pointed_hilbert_basis(std::size_t n, const std::vector<IntVector>& halfspaces,
                                             std::size_t ceiling) {
  const Cone c = Cone::from_halfspaces(n, halfspaces);
  if (!c.is_strongly_convex()) throw InvariantError("pointed_hilbert_basis called on a cone with lineality");
  const std::vector<IntVector>& rays = c.rays();
  if (rays.empty()) return {};

  std::set<IntVector> candidates(rays.begin(), rays.end());
  std::size_t budget = ceiling;
  for (const auto& simplex : pulling_triangulation(n, rays)) {
    std::vector<IntVector> cols;
    for (std::size_t i : simplex) cols.push_back(rays[i]);
    parallelotope_points(IntMatrix::from_columns(cols, n), candidates, budget);
  }

  // The candidate set contains every irreducible element, so x is reducible iff
  // x - h lies in the cone for some other candidate h.
  const std::vector<IntVector> cand(candidates.begin(), candidates.end());
  std::vector<IntVector> out;
  IntVector diff(n);
  for (const IntVector& x : cand) {
    bool reducible = false;
    for (const IntVector& h : cand) {
      if (&h == &x) continue;
      for (std::size_t i = 0; i < n; ++i) diff[i] = checked_sub(x[i], h[i]);
      if (c.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> pulling_triangulation(std::size_t dim, const std::vector<IntVector>& rays) {
  std::vector<std::vector<std::size_t>> out;
  if (rays.empty()) return out;
  std::vector<std::size_t> all(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) all[i] = i;
  pull(dim, rays, all, rank(rays, dim), out);
  for (auto& s : out) std::sort(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

HilbertBasis hilbert_basis(std::size_t dim, const std::vector<IntVector>& halfspaces, const LatticeBasis& lattice,
                           std::size_t ceiling) {
  if (lattice.ambient_dim != dim) throw DomainError("hilbert_basis: lattice has wrong ambient dimension");
  const std::size_t r = lattice.rank;
  const IntMatrix& B = lattice.basis;

  // Pull the inequalities back to lattice coordinates.
  std::vector<IntVector> hs;
  for (const IntVector& u : halfspaces) {
    if (u.size() != dim) throw DomainError("hilbert_basis: halfspace has wrong dimension");
    IntVector w(r, 0);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < dim; ++i) w[j] = checked_add(w[j], checked_mul(u[i], B(i, j)));
    hs.push_back(std::move(w));
  }

  const Cone c = Cone::from_halfspaces(r, hs);
  const std::size_t t = c.lineality_dim();
  std::vector<IntVector> coords;  // generators in lattice coordinates

  if (t == 0) {
    coords = pointed_hilbert_basis(r, hs, ceiling);
  } else {
    // Split Z^r = L + complement using the Smith form of the unit lattice L:
    // the first t columns of U^-1 span L, the remaining ones a complement.
    const IntMatrix L = IntMatrix::from_columns(c.lineality_basis(), r);
    const SmithDecomposition snf = smith_normal_form(L);
    const IntMatrix& lift = snf.U_inverse;
    std::vector<IntVector> quotient_hs;
    for (const IntVector& u : hs) {
      IntVector w(r - t, 0);
      for (std::size_t j = t; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i) w[j - t] = checked_add(w[j - t], checked_mul(u[i], lift(i, j)));
      quotient_hs.push_back(std::move(w));
    }
    for (const IntVector& y : pointed_hilbert_basis(r - t, quotient_hs, ceiling)) {
      IntVector x(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = t; j < r; ++j) x[i] = checked_add(x[i], checked_mul(lift(i, j), y[j - t]));
      coords.push_back(std::move(x));
    }
    for (const IntVector& l : c.lineality_basis()) {
      coords.push_back(l);
      IntVector neg(l.size());
      for (std::size_t i = 0; i < l.size(); ++i) neg[i] = checked_neg(l[i]);
      coords.push_back(std::move(neg));
    }
  }

  HilbertBasis hb{dim, {}};
  for (const IntVector& y : coords) hb.elements.push_back(B * y);
  std::sort(hb.elements.begin(), hb.elements.end());
  hb.elements.erase(std::unique(hb.elements.begin(), hb.elements.end()), hb.elements.end());
  return hb;
}

HilbertBasis hilbert_basis(std::size_t dim, const std::vector<IntVector>& halfspaces, std::size_t ceiling) {
  return hilbert_basis(dim, halfspaces, lattice_from_generators(dim, IntMatrix::identity(dim).column_vectors()),
                       ceiling);
}

}  // namespace mhproj
