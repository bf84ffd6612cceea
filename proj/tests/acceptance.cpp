// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "mhproj/projmodel.hpp"
#include "mhproj/sections.hpp"
#include "oracles.hpp"

using namespace mhproj;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Check {
 public:
  void require(bool cond, const std::string& what) {
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.detail = what;
    }
  }
  void note(const std::string& d) {
    if (out_.ok) out_.detail = d;
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream tl;
  tl.precision(3);
  tl << std::fixed << dt;
  c.require(dt < limit_s, "time " + tl.str() + " s exceeds " + std::to_string(limit_s) + " s");
  Outcome o = c.result();
  if (!o.ok) ++failures;
  std::printf("[%s] criterion %d: %s (%.3f s / limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, dt, limit_s,
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
}

std::string vec_text(const IntVector& v) { return to_string(v); }

std::size_t index_of(const std::vector<Support>& sup, const Support& J) {
  return static_cast<std::size_t>(std::find(sup.begin(), sup.end(), J) - sup.begin());
}

Int binom2(Int n) { return n * (n - 1) / 2; }

}  // namespace

int main() {
  criterion(1, "doubled affine line", 1.0, [](Check& c) {
    ProjModel m = build_model(fixtures::doubled_line());
    c.require(m.charts.size() == 2, "expected 2 charts");
    for (const Chart& ch : m.charts)
      c.require(ch.generator_exponents == std::vector<IntVector>{{1, 1}}, "chart generator is not XY");
    const Cone ray = Cone::from_generators(1, {{1}});
    c.require(m.fan_cones == std::vector<Cone>{ray, ray}, "fan is not cone(1) twice");
    SeparationReport rep = separation_verdict(m);
    c.require(rep.fan_verdict.kind == FanVerdict::Kind::DuplicateCone, "fan check is not DuplicateCone");
    c.require(rep.overall == Separation::NotSeparated, "verdict is not NotSeparated");
  });

  criterion(2, "N-graded specs are separated", 5.0, [](Check& c) {
    std::mt19937_64 rng(2002);
    for (int trial = 0; trial < 100; ++trial) {
      RingSpec spec = fixtures::random_spec(rng, fixtures::uniform(rng, 1, 6), 1, 1, 9);
      SeparationReport rep = separation_verdict(build_model(spec));
      c.require(rep.all_certified(), "a pair is not Certified");
      c.require(rep.overall == Separation::Separated, "verdict is not Separated");
    }
    c.note("100 specs");
  });

  criterion(3, "Z^2-graded nonseparated example", 5.0, [](Check& c) {
    RingSpec spec = fixtures::z2example();
    ProjModel m = build_model(spec);
    const auto& sup = m.minimal_supports.minimal_supports;
    c.require(sup.size() == 24, "expected 24 minimal supports, got " + std::to_string(sup.size()));
    std::set<Support> expected;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 4; j < 8; ++j) expected.insert(Support({i, j}));
      expected.insert(Support({i, 8}));
      expected.insert(Support({i + 4, 8}));
    }
    c.require(std::set<Support>(sup.begin(), sup.end()) == expected, "minimal supports differ");
    const Support a({0, 8}), b({4, 8});
    c.require(pairwise_separation(spec, a, b) == PairVerdict::Inconclusive, "({X1,Z},{Y1,Z}) is not Inconclusive");
    c.require(intersect(degree_cone(spec, a), degree_cone(spec, b)) == Cone::from_generators(2, {{1, 1}}),
              "intersection is not ray (1,1)");
    SeparationReport rep = separation_verdict(m);
    c.require(rep.pairwise[index_of(sup, a)][index_of(sup, b)] == PairVerdict::Inconclusive,
              "table entry is not Inconclusive");
    c.require(rep.overall == Separation::NotSeparated, "verdict is not NotSeparated");
  });

  criterion(4, "determinantal section rings", 10.0, [](Check& c) {
    for (int m = 1; m <= 3; ++m)
      for (int r = 1; r <= 3; ++r) {
        const std::string tag = "m=" + std::to_string(m) + " r=" + std::to_string(r) + ": ";
        RingSpec spec = fixtures::determinantal(m, r);
        const std::size_t k = static_cast<std::size_t>(m + 1 + r);
        HilbertBasis hb = zero_subring_generators(spec);
        std::set<IntVector> want;
        for (int i = 0; i <= m; ++i)
          for (int j = 0; j < r; ++j) {
            IntVector e(k, 0);
            e[i] = 1;
            e[m + 1 + j] = 1;
            want.insert(e);
          }
        c.require(std::set<IntVector>(hb.elements.begin(), hb.elements.end()) == want, tag + "generators differ");
        auto rels = binomial_relations(hb, 4);
        c.require(static_cast<Int>(rels.size()) == binom2(m + 1) * binom2(r),
                  tag + "relation count " + std::to_string(rels.size()));
        // Each relation must be a 2x2 minor: (X_i T_j)(X_k T_l) = (X_i T_l)(X_k T_j).
        std::set<std::pair<IntVector, IntVector>> minors;
        for (int i = 0; i <= m; ++i)
          for (int kk = i + 1; kk <= m; ++kk)
            for (int j = 0; j < r; ++j)
              for (int l = j + 1; l < r; ++l) {
                IntVector e(k, 0);
                e[i] = e[kk] = 1;
                e[m + 1 + j] = e[m + 1 + l] = 1;
                minors.insert({e, e});
              }
        std::set<std::pair<IntVector, IntVector>> seen;
        for (const IntVector& u : rels) {
          auto sides = relation_sides(hb, u);
          c.require(sides.first == sides.second, tag + "relation sides differ");
          Int l1 = 0, pos = 0;
          for (Int x : u) l1 += x < 0 ? -x : x, pos += x > 0 ? x : 0;
          c.require(l1 == 4 && pos == 2, tag + "relation is not quadratic " + vec_text(u));
          seen.insert(sides);
        }
        c.require(seen == minors, tag + "relations are not the 2x2 minors");
      }
    c.note("m, r in 1..3");
  });

  criterion(5, "projection-algebra section rings", 5.0, [](Check& c) {
    for (int m = 1; m <= 4; ++m) {
      RingSpec spec = fixtures::projection(m);
      const std::size_t k = static_cast<std::size_t>(m + 3), S = k - 2, T = k - 1;
      HilbertBasis hb = zero_subring_generators(spec);
      std::set<IntVector> want;
      for (int i = 0; i <= m; ++i) {
        IntVector e(k, 0);
        e[i] = e[S] = 1;
        want.insert(e);
      }
      IntVector st(k, 0);
      st[S] = st[T] = 1;
      want.insert(st);
      c.require(hb.elements.size() == static_cast<std::size_t>(m + 2), "m=" + std::to_string(m) + ": generator count");
      c.require(std::set<IntVector>(hb.elements.begin(), hb.elements.end()) == want,
                "m=" + std::to_string(m) + ": generators differ");
      c.require(binomial_relations(hb, 4).empty(), "m=" + std::to_string(m) + ": unexpected relation");
    }
    c.note("m in 1..4");
  });

  criterion(6, "P^2 fan", 1.0, [](Check& c) {
    ProjModel m = build_model(fixtures::p2());
    std::set<IntVector> rays;
    for (const Cone& cone : m.fan_cones)
      for (const IntVector& r : cone.rays()) rays.insert(r);
    c.require(m.fan_cones.size() == 3, "expected 3 cones");
    c.require(rays == std::set<IntVector>{{1, 0}, {0, 1}, {-1, -1}}, "ray set differs");
    c.require(fan_check(m).kind == FanVerdict::Kind::IsFan, "fan check is not IsFan");
    c.require(separation_verdict(m).overall == Separation::Separated, "verdict is not Separated");
  });

  criterion(7, "relevance vs strong convexity of chart cones", 60.0, [](Check& c) {
    std::mt19937_64 rng(7007);
    std::size_t supports = 0, disagreements = 0, converse_fail = 0, implication_fail = 0, independence_fail = 0;
    std::string example;
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t k = fixtures::uniform(rng, 1, 6), s = fixtures::uniform(rng, 0, 3);
      RingSpec spec = fixtures::random_spec(rng, k, s, -3, 3);
      LatticeBasis M = kernel_lattice_of(spec);
      const auto pr = projections_on_kernel(M);
      const bool spans = oracle::rank(spec.free_degree_matrix().row_vectors(), k) == s;
      std::vector<IntVector> unit_basis = IntMatrix::identity(M.rank).column_vectors();
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        ++supports;
        Support J(fixtures::mask_indices(mask, k));
        const bool relevant = is_relevant_support(spec, J);
        Cone sigma = chart_cone(M, J);
        const bool convex = sigma.is_strongly_convex();
        if (relevant != convex) {
          ++disagreements;
          if (relevant) ++implication_fail;
          else ++converse_fail;
          if (example.empty()) {
            std::ostringstream os;
            os << "free degrees";
            for (const auto& d : spec.degrees()) os << ' ' << vec_text(d.free);
            os << ", J = " << vec_text(IntVector(J.indices().begin(), J.indices().end()))
               << (relevant ? " relevant, cone not strongly convex" : " irrelevant, cone strongly convex");
            example = os.str();
          }
        }
        std::vector<IntVector> rest;
        for (std::size_t i : J.complement(k).indices()) rest.push_back(pr[i]);
        if (spans && relevant != (oracle::rank(rest, M.rank) == rest.size())) ++independence_fail;
        if (!relevant) continue;
        c.require(sigma.is_simplicial(), "relevant chart cone is not simplicial");
        Chart ch = build_chart(spec, M, J);
        c.require(lattice_from_generators(M.rank, ch.generators.elements) ==
                      lattice_from_generators(M.rank, unit_basis),
                  "chart generators do not span M");
      }
    }
    std::printf("  criterion 7 diagnostics: %zu supports; relevant != strongly convex on %zu "
                "(relevant but not strongly convex: %zu; irrelevant but strongly convex: %zu)\n",
                supports, disagreements, implication_fail, converse_fail);
    std::printf("  criterion 7 diagnostics: relevant <=> projections off J independent (degrees spanning): "
                "%zu mismatches\n",
                independence_fail);
    if (!example.empty()) std::printf("  criterion 7 first counterexample: %s\n", example.c_str());
    c.require(disagreements == 0, std::to_string(disagreements) + " supports where relevance and strong convexity "
                                                                  "disagree");
  });

  criterion(8, "Hilbert bases against box enumeration", 60.0, [](Check& c) {
    std::mt19937_64 rng(8008);
    int cones = 0;
    while (cones < 100) {
      const std::size_t d = fixtures::uniform(rng, 2, 3);
      std::vector<IntVector> gens(fixtures::uniform(rng, 1, 4), IntVector(d));
      for (auto& g : gens)
        for (auto& x : g) x = fixtures::uniform(rng, -2, 2);
      Cone cone = Cone::from_generators(d, gens);
      if (!cone.is_strongly_convex() || cone.rays().empty()) continue;
      ++cones;
      HilbertBasis hb = hilbert_basis(d, cone.halfspaces());
      auto member = [&](const oracle::Vec& v) { return oracle::in_cone(gens, v); };
      std::set<IntVector> expected = oracle::box_hilbert_basis(d, 6, member);
      c.require(std::set<IntVector>(hb.elements.begin(), hb.elements.end()) == expected,
                "mismatch for a cone with " + std::to_string(gens.size()) + " generators in dim " + std::to_string(d));
    }
    c.note("100 cones");
  });

  criterion(9, "Smith normal form properties", 10.0, [](Check& c) {
    std::mt19937_64 rng(9009);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t r = fixtures::uniform(rng, 1, 5), n = fixtures::uniform(rng, 1, 5);
      IntMatrix A(r, n);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) A(i, j) = fixtures::uniform(rng, -9, 9);
      SmithDecomposition s = smith_normal_form(A);
      c.require(oracle::equals(oracle::product({s.U.row_vectors(), A.row_vectors(), s.V.row_vectors()}), s.D.row_vectors()), "U*A*V != D");
      c.require(oracle::abs128(oracle::det_of(s.U.row_vectors())) == 1, "U not unimodular");
      c.require(oracle::abs128(oracle::det_of(s.V.row_vectors())) == 1, "V not unimodular");
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) c.require(s.D(i, j) == 0, "D not diagonal");
      for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
        c.require(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0, "divisibility chain broken");
      c.require(s.invariant_factors == oracle::invariant_factors(A.row_vectors()),
                "invariant factors differ from determinantal divisors");
    }
    c.note("500 matrices");
  });

  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
