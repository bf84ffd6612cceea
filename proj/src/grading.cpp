#include "mhproj/grading.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "mhproj/errors.hpp"

namespace mhproj {

using json = nlohmann::json;
using Kind = ParseError::Kind;

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > 0) s.push_back(i);
  return s;
}

namespace {

Int reduce_residue(Int r, Int m) {
  Int q = r % m;
  return q < 0 ? q + m : q;
}

}  // namespace

RingSpec::RingSpec(std::vector<std::string> variables, std::vector<Multidegree> degrees, GradingGroup grading,
                   std::string coefficient_label)
    : variables_(std::move(variables)),
      degrees_(std::move(degrees)),
      grading_(std::move(grading)),
      coefficient_label_(std::move(coefficient_label)) {
  if (variables_.empty()) throw ParseError(Kind::EmptyRing, "ring must have at least one variable");
  if (degrees_.size() != variables_.size()) {
    std::ostringstream os;
    os << "dimension mismatch: " << variables_.size() << " variables but " << degrees_.size() << " degrees";
    throw ParseError(Kind::DimensionMismatch, os.str());
  }
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw ParseError(Kind::Malformed, "variable names must be nonempty");
    if (!seen.insert(v).second) throw ParseError(Kind::DuplicateVariable, "duplicate variable name '" + v + "'");
  }
  for (Int m : grading_.torsion_orders)
    if (m < 2)
      throw ParseError(Kind::BadTorsionOrder, "torsion order " + std::to_string(m) + " is invalid (must be >= 2)");
  const std::size_t t = grading_.torsion_orders.size();
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    auto& d = degrees_[i];
    if (d.free.size() != grading_.free_rank) {
      std::ostringstream os;
      os << "dimension mismatch: degree of '" << variables_[i] << "' has " << d.free.size()
         << " free components, expected " << grading_.free_rank;
      throw ParseError(Kind::DimensionMismatch, os.str());
    }
    if (d.torsion.size() != t) {
      std::ostringstream os;
      os << "dimension mismatch: degree of '" << variables_[i] << "' has " << d.torsion.size()
         << " torsion residues, expected " << t;
      throw ParseError(Kind::DimensionMismatch, os.str());
    }
    for (std::size_t j = 0; j < t; ++j) d.torsion[j] = reduce_residue(d.torsion[j], grading_.torsion_orders[j]);
  }
}

std::size_t RingSpec::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  throw DomainError("unknown variable '" + std::string(name) + "'");
}

IntMatrix RingSpec::free_degree_matrix() const {
  IntMatrix A(grading_.free_rank, variables_.size());
  for (std::size_t j = 0; j < variables_.size(); ++j)
    for (std::size_t i = 0; i < grading_.free_rank; ++i) A(i, j) = degrees_[j].free[i];
  return A;
}

IntMatrix RingSpec::torsion_degree_matrix() const {
  IntMatrix A(grading_.torsion_orders.size(), variables_.size());
  for (std::size_t j = 0; j < variables_.size(); ++j)
    for (std::size_t i = 0; i < grading_.torsion_orders.size(); ++i) A(i, j) = degrees_[j].torsion[i];
  return A;
}

// ---------------------------------------------------------------------------
// Document format

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ParseError(Kind::UnknownKey, "unknown key '" + key + "' in " + where);
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(Kind::Malformed, std::string("missing key '") + key + "' in " + where);
  return *it;
}

Int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(Kind::Malformed, "expected an integer in " + where);
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw ParseError(Kind::Malformed, "integer out of range in " + where);
  return v.get<Int>();
}

IntVector as_int_vector(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(Kind::Malformed, "expected an array of integers in " + where);
  IntVector out;
  for (const auto& x : v) out.push_back(as_int(x, where));
  return out;
}

}  // namespace

RingSpec parse_ring_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(Kind::Malformed, std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(Kind::Malformed, "document must be a JSON object");
  reject_unknown_keys(doc, {"variables", "grading", "degrees", "coefficients"}, "document");

  const json& vars = require(doc, "variables", "document");
  if (!vars.is_array()) throw ParseError(Kind::Malformed, "'variables' must be an array of strings");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) throw ParseError(Kind::Malformed, "'variables' must be an array of strings");
    names.push_back(v.get<std::string>());
  }

  const json& gr = require(doc, "grading", "document");
  if (!gr.is_object()) throw ParseError(Kind::Malformed, "'grading' must be an object");
  reject_unknown_keys(gr, {"free_rank", "torsion"}, "grading");
  GradingGroup group;
  Int s = as_int(require(gr, "free_rank", "grading"), "grading.free_rank");
  if (s < 0) throw ParseError(Kind::Malformed, "grading.free_rank must be nonnegative");
  group.free_rank = static_cast<std::size_t>(s);
  if (gr.contains("torsion")) group.torsion_orders = as_int_vector(gr["torsion"], "grading.torsion");

  const json& degs = require(doc, "degrees", "document");
  if (!degs.is_array()) throw ParseError(Kind::Malformed, "'degrees' must be an array");
  std::vector<Multidegree> degrees;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    const json& d = degs[i];
    const std::string where = "degrees[" + std::to_string(i) + "]";
    if (!d.is_object()) throw ParseError(Kind::Malformed, where + " must be an object");
    reject_unknown_keys(d, {"free", "torsion"}, where);
    Multidegree md;
    if (d.contains("free"))
      md.free = as_int_vector(d["free"], where + ".free");
    else if (group.free_rank != 0)
      throw ParseError(Kind::Malformed, "missing key 'free' in " + where);
    if (d.contains("torsion"))
      md.torsion = as_int_vector(d["torsion"], where + ".torsion");
    else if (group.has_torsion())
      throw ParseError(Kind::Malformed, "missing key 'torsion' in " + where);
    degrees.push_back(std::move(md));
  }

  std::string coeffs = "Q";
  if (doc.contains("coefficients")) {
    if (!doc["coefficients"].is_string()) throw ParseError(Kind::Malformed, "'coefficients' must be a string");
    coeffs = doc["coefficients"].get<std::string>();
  }
  return RingSpec(std::move(names), std::move(degrees), std::move(group), std::move(coeffs));
}

std::string format_ring_spec(const RingSpec& spec) {
  json doc = json::object();
  doc["variables"] = spec.variables();
  doc["grading"] = {{"free_rank", spec.free_rank()}, {"torsion", spec.grading().torsion_orders}};
  json degs = json::array();
  for (const auto& d : spec.degrees()) {
    json e = {{"free", d.free}};
    if (spec.grading().has_torsion()) e["torsion"] = d.torsion;
    degs.push_back(std::move(e));
  }
  doc["degrees"] = std::move(degs);
  doc["coefficients"] = spec.coefficient_label();
  return doc.dump();
}

// ---------------------------------------------------------------------------

Multidegree degree_of_exponents(const RingSpec& spec, std::span<const Int> exponents) {
  if (exponents.size() != spec.num_variables())
    throw DomainError("exponent vector has length " + std::to_string(exponents.size()) + ", expected " +
                      std::to_string(spec.num_variables()));
  const auto& orders = spec.grading().torsion_orders;
  Multidegree out{IntVector(spec.free_rank(), 0), IntVector(orders.size(), 0)};
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    const Int e = exponents[v];
    if (e == 0) continue;
    const auto& d = spec.degrees()[v];
    for (std::size_t i = 0; i < out.free.size(); ++i) out.free[i] = checked_add(out.free[i], checked_mul(e, d.free[i]));
    for (std::size_t i = 0; i < orders.size(); ++i)
      out.torsion[i] = reduce_residue(checked_add(out.torsion[i], reduce_residue(checked_mul(e, d.torsion[i]), orders[i])),
                                      orders[i]);
  }
  return out;
}

Multidegree degree_of_monomial(const RingSpec& spec, const Monomial& m) {
  for (Int e : m.exponents)
    if (e < 0) throw DomainError("monomial exponents must be nonnegative");
  return degree_of_exponents(spec, m.exponents);
}

LatticeBasis kernel_lattice_of(const RingSpec& spec) {
  return kernel_lattice(spec.free_degree_matrix(), spec.torsion_degree_matrix(), spec.grading().torsion_orders);
}

std::string render_laurent_monomial(const RingSpec& spec, std::span<const Int> exponents) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << spec.variables()[i];
    if (exponents[i] != 1) os << '^' << exponents[i];
  }
  return first ? "1" : os.str();
}

}  // namespace mhproj
