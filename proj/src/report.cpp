#include "mhproj/report.hpp"

#include <sstream>

#include "mhproj/errors.hpp"

namespace mhproj::report {

namespace {

constexpr const char* kCompletenessNote =
    "Proj(S) is universally closed over S_0; this does not imply separatedness";
constexpr const char* kCertificationNote =
    "Certified pairs have degree cones meeting in a full-dimensional cone; Inconclusive carries no negative "
    "information";
constexpr const char* kZeroSubringNote =
    "S_0 is computed unconditionally; identifying it with global sections needs normality and dim >= 1";

json header(const char* command) { return json{{"schema", kSchema}, {"command", command}}; }

std::vector<std::string> monomial_names(const RingSpec& spec, const std::vector<IntVector>& exps) {
  std::vector<std::string> out;
  for (const auto& e : exps) out.push_back(render_laurent_monomial(spec, e));
  return out;
}

}  // namespace

json cone_to_json(const Cone& c) {
  return json{{"ambient_dim", c.ambient_dim()}, {"dim", c.dim()},         {"rays", c.rays()},
              {"lineality", c.lineality_basis()}, {"facets", c.facets()}, {"equations", c.equations()}};
}

Cone cone_from_json(const json& j) {
  std::vector<IntVector> gens = j.at("rays").get<std::vector<IntVector>>();
  for (const IntVector& l : j.at("lineality").get<std::vector<IntVector>>()) {
    gens.push_back(l);
    IntVector neg(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
    gens.push_back(std::move(neg));
  }
  return Cone::from_generators(j.at("ambient_dim").get<std::size_t>(), gens);
}

json ring_to_json(const RingSpec& spec) { return json::parse(format_ring_spec(spec)); }

json support_to_json(const RingSpec& spec, const Support& J) {
  json out = json::array();
  for (std::size_t i : J.indices()) out.push_back(spec.variables()[i]);
  return out;
}

json chart_to_json(const RingSpec& spec, const Chart& chart) {
  json gens = json::array();
  for (std::size_t i = 0; i < chart.generators.elements.size(); ++i)
    gens.push_back({{"m", chart.generators.elements[i]},
                    {"exponents", chart.generator_exponents[i]},
                    {"monomial", render_laurent_monomial(spec, chart.generator_exponents[i])}});
  return json{{"support", support_to_json(spec, chart.support)},
              {"monoid_inequalities", chart.monoid_inequalities},
              {"generators", std::move(gens)},
              {"fan_cone", cone_to_json(chart.fan_cone)},
              {"degree_cone", cone_to_json(chart.degree_cone)}};
}

json separation_to_json(const ProjModel& model, const SeparationReport& sep) {
  const auto& sup = model.minimal_supports.minimal_supports;
  json pairs = json::array();
  for (std::size_t i = 0; i < sup.size(); ++i)
    for (std::size_t j = i + 1; j < sup.size(); ++j) {
      const Cone meet = intersect(model.charts[i].degree_cone, model.charts[j].degree_cone);
      pairs.push_back({{"first", support_to_json(model.spec, sup[i])},
                       {"second", support_to_json(model.spec, sup[j])},
                       {"verdict", to_string(sep.pairwise[i][j])},
                       {"degree_cone_meet", {{"dim", dim(meet)}, {"rays", meet.rays()}}}});
    }
  json fan = {{"kind", to_string(sep.fan_verdict.kind)}};
  if (sep.fan_verdict.kind != FanVerdict::Kind::IsFan)
    fan["pair"] = json::array({support_to_json(model.spec, sup[sep.fan_verdict.first]),
                               support_to_json(model.spec, sup[sep.fan_verdict.second])});
  return json{{"pairwise", std::move(pairs)}, {"fan_check", std::move(fan)}, {"overall", to_string(sep.overall)}};
}

json analyze(const ProjModel& model) {
  json out = header("analyze");
  out["ring"] = ring_to_json(model.spec);
  out["kernel"] = {{"rank", model.kernel.rank}, {"basis", model.kernel.vectors()}};
  out["torus_dim"] = model.torus_dim;
  json sups = json::array();
  for (const Support& J : model.minimal_supports.minimal_supports) sups.push_back(support_to_json(model.spec, J));
  out["minimal_supports"] = std::move(sups);
  std::vector<IntVector> irr;
  for (const Support& J : model.minimal_supports.minimal_supports) {
    IntVector e(model.spec.num_variables(), 0);
    for (std::size_t i : J.indices()) e[i] = 1;
    irr.push_back(std::move(e));
  }
  out["irrelevant_radical_generators"] = monomial_names(model.spec, irr);
  json charts = json::array();
  for (const Chart& c : model.charts) charts.push_back(chart_to_json(model.spec, c));
  out["charts"] = std::move(charts);
  json fan = json::array();
  for (const Cone& c : model.fan_cones) fan.push_back(c.rays());
  out["fan"] = std::move(fan);
  out["separation"] = separation_to_json(model, separation_verdict(model));
  out["warnings"] = json::array();
  if (model.charts.empty()) out["warnings"].push_back("no monomial charts");
  out["notes"] = {kCompletenessNote, kCertificationNote};
  return out;
}

json charts(const RingSpec& spec, const Chart& chart) {
  json out = header("charts");
  out["ring"] = ring_to_json(spec);
  out["chart"] = chart_to_json(spec, chart);
  return out;
}

json zero_subring(const RingSpec& spec, const HilbertBasis& basis, const std::vector<IntVector>& relations,
                  std::size_t relation_bound) {
  json out = header("zerosubring");
  out["ring"] = ring_to_json(spec);
  out["generators"] = basis.elements;
  out["monomials"] = monomial_names(spec, basis.elements);
  const std::vector<std::string> gens = out["monomials"].get<std::vector<std::string>>();
  auto side = [&](const IntVector& u, Int sign) {
    std::string text;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const Int e = sign * u[i];
      if (e <= 0) continue;
      if (!text.empty()) text += '*';
      text += '(' + gens[i] + ')';
      if (e > 1) text += '^' + std::to_string(e);
    }
    return text;
  };
  json rels = json::array();
  for (const IntVector& u : relations) {
    auto [lhs, rhs] = relation_sides(basis, u);
    rels.push_back({{"vector", u},
                    {"binomial", side(u, 1) + " = " + side(u, -1)},
                    {"lhs", render_laurent_monomial(spec, lhs)},
                    {"rhs", render_laurent_monomial(spec, rhs)}});
  }
  out["relation_bound"] = relation_bound;
  out["relations"] = std::move(rels);
  out["notes"] = {kZeroSubringNote};
  return out;
}

json veronese(const RingSpec& spec, const std::vector<IntVector>& forms, const HilbertBasis& basis) {
  json out = header("veronese");
  out["ring"] = ring_to_json(spec);
  out["forms"] = forms;
  out["generators"] = basis.elements;
  out["monomials"] = monomial_names(spec, basis.elements);
  return out;
}

json separation(const ProjModel& model) {
  json out = header("separation");
  out["ring"] = ring_to_json(model.spec);
  json sups = json::array();
  for (const Support& J : model.minimal_supports.minimal_supports) sups.push_back(support_to_json(model.spec, J));
  out["minimal_supports"] = std::move(sups);
  out["separation"] = separation_to_json(model, separation_verdict(model));
  out["notes"] = {kCompletenessNote, kCertificationNote};
  return out;
}

// ---------------------------------------------------------------------------
// Text rendering

namespace {

std::string vec(const json& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get<Int>();
  os << ')';
  return os.str();
}

std::string vecs(const json& list) {
  if (list.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) out += (i ? " " : "") + vec(list[i]);
  return out;
}

std::string names(const json& list, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < list.size(); ++i) out += (i ? sep : "") + list[i].get<std::string>();
  return out;
}

std::string support(const json& s) { return "{" + names(s) + "}"; }

void ring_text(std::ostream& os, const json& ring) {
  os << "ring: " << ring["coefficients"].get<std::string>() << "[" << names(ring["variables"]) << "]\n";
  os << "grading: Z^" << ring["grading"]["free_rank"].get<std::size_t>();
  for (const auto& m : ring["grading"]["torsion"]) os << " + Z/" << m.get<Int>();
  os << "\ndegrees:";
  for (std::size_t i = 0; i < ring["variables"].size(); ++i) {
    const json& d = ring["degrees"][i];
    os << ' ' << ring["variables"][i].get<std::string>() << ':' << vec(d["free"]);
    if (d.contains("torsion")) os << '+' << vec(d["torsion"]);
  }
  os << '\n';
}

void cone_text(std::ostream& os, const char* label, const json& c, const char* indent) {
  os << indent << label << ": dim " << c["dim"].get<std::size_t>() << ", rays " << vecs(c["rays"]);
  if (!c["lineality"].empty()) os << ", lineality " << vecs(c["lineality"]);
  os << '\n';
}

void chart_text(std::ostream& os, const json& ch) {
  os << "chart " << support(ch["support"]) << ":\n";
  os << "  generators (" << ch["generators"].size() << "):";
  for (const auto& g : ch["generators"]) os << ' ' << g["monomial"].get<std::string>();
  os << "\n  monoid inequalities: " << vecs(ch["monoid_inequalities"]) << '\n';
  cone_text(os, "fan cone", ch["fan_cone"], "  ");
  cone_text(os, "degree cone", ch["degree_cone"], "  ");
}

void separation_text(std::ostream& os, const json& sep) {
  os << "separation:\n  pairwise:\n";
  for (const auto& p : sep["pairwise"]) {
    os << "    " << support(p["first"]) << ' ' << support(p["second"]) << ": " << p["verdict"].get<std::string>();
    if (p["verdict"] != "Certified")
      os << " (degree cones meet in dim " << p["degree_cone_meet"]["dim"].get<std::size_t>() << ", rays "
         << vecs(p["degree_cone_meet"]["rays"]) << ')';
    os << '\n';
  }
  os << "  fan check: " << sep["fan_check"]["kind"].get<std::string>();
  if (sep["fan_check"].contains("pair"))
    os << ' ' << support(sep["fan_check"]["pair"][0]) << ' ' << support(sep["fan_check"]["pair"][1]);
  os << "\n  verdict: " << sep["overall"].get<std::string>() << '\n';
}

void notes_text(std::ostream& os, const json& r) {
  if (r.contains("warnings"))
    for (const auto& w : r["warnings"]) os << "warning: " << w.get<std::string>() << '\n';
  if (r.contains("notes"))
    for (const auto& n : r["notes"]) os << "note: " << n.get<std::string>() << '\n';
}

void generators_text(std::ostream& os, const json& r) {
  os << "generators (" << r["monomials"].size() << "): " << (r["monomials"].empty() ? "-" : names(r["monomials"], " "))
     << '\n';
}

}  // namespace

std::string to_text(const json& r) {
  std::ostringstream os;
  const std::string cmd = r.at("command").get<std::string>();
  ring_text(os, r.at("ring"));
  if (cmd == "analyze") {
    os << "torus_dim: " << r["torus_dim"].get<std::size_t>() << '\n';
    os << "kernel basis: " << vecs(r["kernel"]["basis"]) << '\n';
    os << "minimal relevant supports (" << r["minimal_supports"].size() << "):";
    for (const auto& s : r["minimal_supports"]) os << ' ' << support(s);
    os << "\nirrelevant radical generators: "
       << (r["irrelevant_radical_generators"].empty() ? "-" : names(r["irrelevant_radical_generators"], " ")) << '\n';
    for (const auto& ch : r["charts"]) chart_text(os, ch);
    os << "fan (" << r["fan"].size() << " cones):\n";
    for (std::size_t i = 0; i < r["fan"].size(); ++i)
      os << "  " << support(r["minimal_supports"][i]) << ": " << vecs(r["fan"][i]) << '\n';
    separation_text(os, r["separation"]);
  } else if (cmd == "charts") {
    chart_text(os, r["chart"]);
  } else if (cmd == "zerosubring") {
    generators_text(os, r);
    os << "relations (|u|_1 <= " << r["relation_bound"].get<std::size_t>() << "): " << r["relations"].size() << '\n';
    for (const auto& rel : r["relations"])
      os << "  " << rel["binomial"].get<std::string>() << "   " << vec(rel["vector"]) << '\n';
  } else if (cmd == "veronese") {
    os << "forms: " << vecs(r["forms"]) << '\n';
    generators_text(os, r);
  } else if (cmd == "separation") {
    os << "minimal relevant supports (" << r["minimal_supports"].size() << "):";
    for (const auto& s : r["minimal_supports"]) os << ' ' << support(s);
    os << '\n';
    separation_text(os, r["separation"]);
  } else {
    throw DomainError("unknown report command '" + cmd + "'");
  }
  notes_text(os, r);
  return os.str();
}

std::vector<IntVector> parse_forms(const std::string& text) {
  std::vector<IntVector> forms;
  std::stringstream all(text);
  std::string form;
  while (std::getline(all, form, ';')) {
    if (form.find_first_not_of(" \t") == std::string::npos) continue;
    IntVector coeffs;
    std::stringstream fs(form);
    std::string tok;
    while (std::getline(fs, tok, ',')) {
      std::size_t used = 0;
      Int v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw DomainError("malformed linear form '" + form + "'");
      }
      if (tok.find_first_not_of(" \t", used) != std::string::npos)
        throw DomainError("malformed linear form '" + form + "'");
      coeffs.push_back(v);
    }
    forms.push_back(std::move(coeffs));
  }
  return forms;
}

}  // namespace mhproj::report
