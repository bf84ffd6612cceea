// mhproj: command-line front end for multihomogeneous Proj computations.
//
// Exit codes: 0 success, 2 parse/validation error, 3 resource ceiling or
// overflow, 4 internal invariant violation.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mhproj/errors.hpp"
#include "mhproj/report.hpp"

namespace {

enum ExitCode { kOk = 0, kInvalid = 2, kResource = 3, kInternal = 4 };

struct Options {
  std::string spec_path;
  std::string format = "text";
  std::size_t max_vars = mhproj::kDefaultEnumerationCap;
  std::size_t relation_bound = 6;
  std::string support;
  std::string forms;
};

mhproj::RingSpec load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mhproj::ParseError(mhproj::ParseError::Kind::Malformed, "cannot read spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return mhproj::parse_ring_spec(buf.str());
}

void emit(const mhproj::report::json& r, const Options& opt) {
  if (opt.format == "json")
    std::cout << r.dump(2) << '\n';
  else
    std::cout << mhproj::report::to_text(r);
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("spec", opt.spec_path, "ring spec file (JSON)")->required();
  sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--max-vars", opt.max_vars, "enumeration cap on the number of variables");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace mhproj;
  CLI::App app{"Multihomogeneous spectra of graded polynomial rings"};
  app.require_subcommand(1);
  Options opt;

  auto* analyze = app.add_subcommand("analyze", "charts, fan and separation analysis");
  add_common(analyze, opt);
  auto* charts = app.add_subcommand("charts", "the chart of one relevant support");
  add_common(charts, opt);
  charts->add_option("--support", opt.support, "comma-separated variable names")->required();
  auto* zero = app.add_subcommand("zerosubring", "generators and relations of the degree-zero subring");
  add_common(zero, opt);
  zero->add_option("--relation-bound", opt.relation_bound, "L1 bound for the relation search")
      ->check(CLI::PositiveNumber);
  auto* veronese = app.add_subcommand("veronese", "generators of a Veronese subring");
  add_common(veronese, opt);
  veronese->add_option("--forms", opt.forms, "linear forms, ';'-separated, coefficients ','-separated")->required();
  auto* separation = app.add_subcommand("separation", "pairwise separation table and fan check");
  add_common(separation, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    const RingSpec spec = load(opt.spec_path);
    ModelOptions mopt;
    mopt.enumeration_cap = opt.max_vars;
    if (analyze->parsed()) {
      emit(report::analyze(build_model(spec, mopt)), opt);
    } else if (charts->parsed()) {
      emit(report::charts(spec, build_chart(spec, parse_support(spec, opt.support))), opt);
    } else if (zero->parsed()) {
      HilbertBasis hb = zero_subring_generators(spec);
      emit(report::zero_subring(spec, hb, binomial_relations(hb, opt.relation_bound), opt.relation_bound), opt);
    } else if (veronese->parsed()) {
      auto forms = report::parse_forms(opt.forms);
      emit(report::veronese(spec, forms, veronese_generators(spec, forms)), opt);
    } else if (separation->parsed()) {
      emit(report::separation(build_model(spec, mopt)), opt);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
