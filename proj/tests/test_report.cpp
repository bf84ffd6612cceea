#include <doctest.h>

#include "fixtures.hpp"
#include "mhproj/errors.hpp"
#include "mhproj/report.hpp"

using namespace mhproj;
using report::json;

TEST_CASE("analyze report round-trips through JSON text") {
  for (const RingSpec& spec : {fixtures::doubled_line(), fixtures::p2(), fixtures::p1xp1(), fixtures::empty_proj()}) {
    ProjModel model = build_model(spec);
    json r = report::analyze(model);
    json back = json::parse(r.dump(2));
    CHECK(back == r);
    CHECK(back["schema"] == report::kSchema);
    CHECK(parse_ring_spec(back["ring"].dump()) == spec);
    CHECK(back["torus_dim"].get<std::size_t>() == model.torus_dim);
    CHECK(back["kernel"]["basis"].get<std::vector<IntVector>>() == model.kernel.vectors());
    REQUIRE(back["charts"].size() == model.charts.size());
    for (std::size_t i = 0; i < model.charts.size(); ++i) {
      const json& ch = back["charts"][i];
      CHECK(report::cone_from_json(ch["fan_cone"]) == model.charts[i].fan_cone);
      CHECK(report::cone_from_json(ch["degree_cone"]) == model.charts[i].degree_cone);
      std::vector<IntVector> m;
      for (const auto& g : ch["generators"]) m.push_back(g["m"].get<IntVector>());
      CHECK(m == model.charts[i].generators.elements);
    }
    CHECK(back["separation"]["overall"] == to_string(separation_verdict(model).overall));
    CHECK(report::to_text(r) == report::to_text(back));
  }
}

TEST_CASE("empty model carries a warning") {
  json r = report::analyze(build_model(fixtures::empty_proj()));
  CHECK(r["warnings"] == json::array({"no monomial charts"}));
  CHECK(r["separation"]["overall"] == "Separated");
}

TEST_CASE("separation report names the offending pair") {
  json r = report::separation(build_model(fixtures::doubled_line()));
  CHECK(r["separation"]["fan_check"]["kind"] == "DuplicateCone");
  CHECK(r["separation"]["fan_check"]["pair"] == json::array({json::array({"X"}), json::array({"Y"})}));
  CHECK(r["separation"]["overall"] == "NotSeparated");
}

TEST_CASE("section reports") {
  RingSpec det = fixtures::determinantal(1, 2);
  HilbertBasis hb = zero_subring_generators(det);
  json z = report::zero_subring(det, hb, binomial_relations(hb, 4), 4);
  CHECK(z["generators"].size() == 4);
  CHECK(z["relations"].size() == 1);
  json v = report::veronese(fixtures::doubled_line(), {{1}}, veronese_generators(fixtures::doubled_line(), {{1}}));
  CHECK(v["monomials"] == json::array({"X", "X*Y"}));
}

TEST_CASE("linear form parsing") {
  CHECK(report::parse_forms("1") == std::vector<IntVector>{{1}});
  CHECK(report::parse_forms("1,0;0,-1") == std::vector<IntVector>{{1, 0}, {0, -1}});
  CHECK(report::parse_forms("").empty());
  CHECK_THROWS_AS(report::parse_forms("1,a"), DomainError);
}
