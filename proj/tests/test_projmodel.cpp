#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "mhproj/errors.hpp"
#include "mhproj/projmodel.hpp"
#include "oracles.hpp"

using namespace mhproj;

namespace {

std::vector<IntVector> fan_rays(const ProjModel& m) {
  std::vector<IntVector> rays;
  for (const Cone& c : m.fan_cones)
    for (const IntVector& r : c.rays())
      if (std::find(rays.begin(), rays.end(), r) == rays.end()) rays.push_back(r);
  std::sort(rays.begin(), rays.end());
  return rays;
}

}  // namespace

TEST_CASE("doubled line model") {
  ProjModel m = build_model(fixtures::doubled_line());
  CHECK(m.charts.size() == 2);
  CHECK(m.torus_dim == 1);
  CHECK(m.fan_cones == std::vector<Cone>{Cone::from_generators(1, {{1}}), Cone::from_generators(1, {{1}})});
  FanVerdict f = fan_check(m);
  CHECK(f.kind == FanVerdict::Kind::DuplicateCone);
  CHECK(f.first == 0);
  CHECK(f.second == 1);
  CHECK(separation_verdict(m).overall == Separation::NotSeparated);
}

TEST_CASE("P2 model") {
  ProjModel m = build_model(fixtures::p2());
  CHECK(m.charts.size() == 3);
  CHECK(m.torus_dim == 2);
  CHECK(fan_rays(m) == std::vector<IntVector>{{-1, -1}, {0, 1}, {1, 0}});
  CHECK(fan_check(m).kind == FanVerdict::Kind::IsFan);
  CHECK(separation_verdict(m).overall == Separation::Separated);
}

TEST_CASE("P1xP1 and P(1,1,2)") {
  ProjModel a = build_model(fixtures::p1xp1());
  CHECK(a.charts.size() == 4);
  CHECK(fan_check(a).kind == FanVerdict::Kind::IsFan);
  SeparationReport sa = separation_verdict(a);
  CHECK(sa.overall == Separation::Separated);
  ProjModel b = build_model(fixtures::p112());
  CHECK(separation_verdict(b).overall == Separation::Separated);
  CHECK(separation_verdict(b).all_certified());
}

TEST_CASE("degenerate model without charts") {
  ProjModel m = build_model(fixtures::empty_proj());
  CHECK(m.charts.empty());
  CHECK(fan_check(m).kind == FanVerdict::Kind::IsFan);
  CHECK(separation_verdict(m).overall == Separation::Separated);
}

TEST_CASE("pairwise separation") {
  RingSpec z2 = fixtures::z2example();
  CHECK(pairwise_separation(z2, Support({0, 8}), Support({4, 8})) == PairVerdict::Inconclusive);
  CHECK(intersect(degree_cone(z2, Support({0, 8})), degree_cone(z2, Support({4, 8}))) ==
        Cone::from_generators(2, {{1, 1}}));
  CHECK(pairwise_separation(z2, Support({0, 8}), Support({0, 8})) == PairVerdict::Certified);
  CHECK(pairwise_separation(z2, Support({0, 4}), Support({1, 5})) == PairVerdict::Certified);
  RingSpec p = fixtures::p112();
  CHECK(pairwise_separation(p, Support({0}), Support({2})) == PairVerdict::Certified);
  CHECK_THROWS_AS(pairwise_separation(z2, Support({8}), Support({0, 8})), DomainError);
}

TEST_CASE("Z2 example is not separated") {
  ProjModel m = build_model(fixtures::z2example());
  CHECK(m.charts.size() == 24);
  CHECK(m.torus_dim == 7);
  SeparationReport rep = separation_verdict(m);
  CHECK(rep.overall == Separation::NotSeparated);
  CHECK(rep.fan_verdict.kind == FanVerdict::Kind::BadIntersection);
  const auto& sup = m.minimal_supports.minimal_supports;
  auto at = [&](const Support& J) { return std::find(sup.begin(), sup.end(), J) - sup.begin(); };
  CHECK(rep.pairwise[at(Support({0, 8}))][at(Support({4, 8}))] == PairVerdict::Inconclusive);
}

TEST_CASE("certification is sound with respect to the fan check") {
  std::mt19937_64 rng(51);
  int certified = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t k = fixtures::uniform(rng, 1, 5), s = fixtures::uniform(rng, 1, 2);
    RingSpec spec = fixtures::random_spec(rng, k, s, -2, 2);
    ProjModel m = build_model(spec);
    SeparationReport rep = separation_verdict(m);  // throws InvariantError on contradiction
    if (rep.all_certified()) {
      ++certified;
      CHECK(rep.fan_verdict.kind == FanVerdict::Kind::IsFan);
    }
    CHECK(m.torus_dim + oracle::rank(spec.free_degree_matrix().row_vectors(), k) == k);
  }
  CHECK(certified > 10);
}

TEST_CASE("positively graded specs are separated") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    RingSpec spec = fixtures::random_spec(rng, fixtures::uniform(rng, 1, 5), 1, 1, 9);
    SeparationReport rep = separation_verdict(build_model(spec));
    CHECK(rep.overall == Separation::Separated);
    CHECK(rep.all_certified());
  }
}

TEST_CASE("fan cones are invariant under permuting variables of equal degree") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = fixtures::uniform(rng, 2, 5);
    RingSpec spec = fixtures::random_spec(rng, k, 1, -2, 2);
    // Make variable 1 a copy of variable 0 and swap them.
    std::vector<Multidegree> degs = spec.degrees();
    degs[1] = degs[0];
    RingSpec a(spec.variables(), degs, spec.grading());
    std::vector<std::string> names = spec.variables();
    std::swap(names[0], names[1]);
    RingSpec b(names, degs, spec.grading());
    auto sorted = [](std::vector<Cone> cs) {
      std::sort(cs.begin(), cs.end(), [](const Cone& x, const Cone& y) { return x.rays() < y.rays(); });
      return cs;
    };
    CHECK(sorted(build_model(a).fan_cones) == sorted(build_model(b).fan_cones));
  }
}

TEST_CASE("enum names") {
  CHECK(std::string(to_string(PairVerdict::Certified)) == "Certified");
  CHECK(std::string(to_string(FanVerdict::Kind::BadIntersection)) == "BadIntersection");
  CHECK(std::string(to_string(Separation::Unknown)) == "Unknown");
}
