#include "lieorbit/cli.hpp"

#include "lieorbit/fixtures.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace lieorbit {

namespace {

/// Bad input discovered after argument parsing; printed with the usage text.
class UsageError : public InputError {
public:
  using InputError::InputError;
};

AlgebraDocument load_document(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + source + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_algebra(text.str());
  }
  const auto& all = fixtures();
  if (const auto it = all.find(source); it != all.end()) return it->second;
  throw UsageError("no such file or fixture: '" + source + "'");
}

std::string functional_or_default(const AlgebraDocument& doc, const std::string& spec) {
  return spec.empty() ? default_functional(doc) : spec;
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), res.ptr};
}

std::string format_covector(const Covector& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].to_string();
  return s + ")";
}

void write_csv(const std::string& path, const std::vector<std::string>& basis, const OrbitSample& sample) {
  std::ofstream csv(path, std::ios::binary);
  if (!csv) throw UsageError("cannot write '" + path + "'");
  for (std::size_t i = 0; i < basis.size(); ++i) csv << (i ? "," : "") << basis[i] << "*";
  csv << "\n";
  for (const auto& p : sample.points) {
    for (Eigen::Index i = 0; i < p.size(); ++i) csv << (i ? "," : "") << format_double(p(i));
    csv << "\n";
  }
}

struct ClassifyArgs {
  std::string input;
  std::string ell;
  bool json = false;
  bool strict = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultExponentialitySamples;
};

int cmd_validate(const std::string& input, std::ostream& out, std::ostream& err) {
  const AlgebraDocument doc = load_document(input);
  const LieAlgebra alg = doc.algebra();
  const ValidationReport report = validate_algebra(alg);
  if (!report.valid()) {
    const auto& names = alg.basis_names();
    for (const auto& v : report.violations) {
      err << "error: Jacobi identity fails for (" << names[v.i] << ", " << names[v.j] << ", " << names[v.k]
          << "): residual " << format_covector(Covector(v.residual)) << "\n";
    }
    return kExitInputError;
  }
  out << "ok: " << doc.name << " is a Lie algebra of dimension " << alg.dim() << "\n";
  return kExitOk;
}

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  const AlgebraDocument doc = load_document(a.input);
  const std::string name = functional_or_default(doc, a.ell);
  const Covector ell = doc.resolve_covector(name);
  const ClassifyOptions options{a.samples, a.seed};
  const ClassificationReport report = classify(doc.algebra(), ell, options);
  const ReportDocument rd = make_report_document(doc, name, ell, report, options);
  out << (a.json ? emit_report(rd) : render_report_text(rd));
  return a.strict && report.has_warnings() ? kExitCheckFailed : kExitOk;
}

struct OrbitArgs {
  std::string input;
  std::string ell;
  SampleOptions sample;
  std::string csv;
};

int cmd_orbit(const OrbitArgs& a, std::ostream& out) {
  const AlgebraDocument doc = load_document(a.input);
  const std::string name = functional_or_default(doc, a.ell);
  const Covector ell = doc.resolve_covector(name);
  const LieAlgebra alg = doc.algebra();
  if (!validate_algebra(alg).valid()) throw InputError("not a Lie algebra; run validate for the failing triple");
  const std::size_t orbit_dim = orbit_dimension(alg, ell);
  const Subspace stab = stabilizer(alg, ell);
  const bool si = is_ideal(alg, stab).ideal;

  const OrbitSample sample = orbit_sample(alg, ell, a.sample);
  bool ok = true;
  auto verdict = [&](bool pass) {
    ok = ok && pass;
    return pass ? "ok" : "FAILED";
  };

  out << "orbit of " << name << " in " << doc.name << ": " << sample.points.size() << " samples, seed "
      << a.sample.seed << ", word length " << a.sample.word_length << ", step scale "
      << format_double(a.sample.step_scale) << "\n";

  const std::size_t base_rank = tangent_rank(alg, sample.base);
  out << "tangent rank at base: " << base_rank << " (exact orbit dimension " << orbit_dim << "): "
      << verdict(base_rank == orbit_dim) << "\n";
  std::size_t rank_mismatch = 0;
  for (const auto& p : sample.points) rank_mismatch += tangent_rank(alg, p) != orbit_dim ? 1 : 0;
  out << "tangent rank along samples: " << rank_mismatch << " mismatches: " << verdict(rank_mismatch == 0) << "\n";

  if (si) {
    const Subspace direction = stab.annihilator();
    double worst = 0.0;
    for (const auto& p : sample.points) worst = std::max(worst, affine_residual(p, ell, direction));
    out << "affine hull membership: max residual " << format_double(worst) << " at tol "
        << format_double(a.sample.tolerance) << ": " << verdict(worst < a.sample.tolerance) << "\n";
  } else {
    out << "affine hull membership: skipped (stabilizer is not an ideal)\n";
  }

  if (doc.orbit_fixtures && doc.orbit_fixtures->base == name) {
    const InvariantReport inv = fixture_invariant_check(sample, doc.orbit_fixtures->invariants, a.sample.tolerance);
    for (const auto& r : inv.results) {
      out << "invariant " << r.name << ": max deviation " << format_double(r.max_deviation) << ", sign violations "
          << r.violations << ", skipped " << r.skipped << ": " << verdict(r.pass) << "\n";
    }
    for (const auto& w : inv.warnings) out << "warning: " << w << "\n";
  }
  if (doc.orbit_fixtures && doc.orbit_fixtures->flow_direction &&
      doc.orbit_fixtures->flow_direction->functional == name) {
    const auto& fd = *doc.orbit_fixtures->flow_direction;
    const double dev = flow_rate_deviation(alg, ell, fd);
    out << "flow direction " << doc.basis[fd.generator] << " on " << doc.basis[fd.coordinate] << "* (rate "
        << fd.rate << "): deviation " << format_double(dev) << ": " << verdict(dev < a.sample.tolerance) << "\n";
  }

  if (!a.csv.empty()) {
    write_csv(a.csv, doc.basis, sample);
    out << "wrote " << sample.points.size() << " rows to " << a.csv << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

struct WitnessArgs {
  std::string input;
  std::string ell;
  std::string f;
  double p = std::sqrt(2.0);
  double a = 0.0;
  double tol = kMembershipTolerance;
};

int cmd_witness(const WitnessArgs& w, std::ostream& out) {
  const AlgebraDocument doc = load_document(w.input);
  const std::string ell_name = functional_or_default(doc, w.ell);
  const Covector ell = doc.resolve_covector(ell_name);
  const Covector f = doc.resolve_covector(w.f);
  const LieAlgebra alg = doc.algebra();
  if (!validate_algebra(alg).valid()) throw InputError("not a Lie algebra; run validate for the failing triple");

  const bool cs = cs_witness_check(alg, ell, f);
  out << "stabilizer of f: " << render_span(stabilizer(alg, f), doc.basis) << "\n";
  out << "pker algebra of " << ell_name << ": " << render_span(pker_algebra(alg, ell), doc.basis) << "\n";
  out << "cs_witness_check: " << (cs ? "true" : "false") << "\n";
  bool ok = cs;

  if (doc.orbit_fixtures && doc.orbit_fixtures->midpoint && doc.orbit_fixtures->base == ell_name) {
    const MidpointResult m = midpoint_witness_details(alg, *doc.orbit_fixtures, w.p, w.a, f, w.tol);
    out << "midpoint of " << doc.orbit_fixtures->midpoint->first << " and " << doc.orbit_fixtures->midpoint->second
        << " at p = " << format_double(w.p) << ", a = " << format_double(w.a) << ": deviation from f "
        << format_double(m.midpoint_deviation) << ", max invariant deviation "
        << format_double(m.max_invariant_deviation) << ": " << (m.passed ? "ok" : "FAILED") << "\n";
    ok = ok && m.passed;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

std::string describe(const AlgebraDocument& doc) {
  std::ostringstream os;
  os << doc.name << " (dimension " << doc.dim() << ")\n";
  if (const auto it = doc.metadata.find("description"); it != doc.metadata.end() && it->is_string()) {
    os << "  " << it->get<std::string>() << "\n";
  }
  os << "basis:";
  for (const auto& b : doc.basis) os << " " << b;
  os << "\nbrackets:\n";
  for (const auto& b : doc.brackets) {
    os << "  [" << b.i << ", " << b.j << "] =";
    bool first = true;
    for (const auto& [name, c] : b.coeffs) {
      os << (first ? " " : " + ") << c << " " << name;
      first = false;
    }
    if (first) os << " 0";
    os << "\n";
  }
  os << "functionals:\n";
  for (const auto& [name, c] : doc.functionals) os << "  " << name << " = " << format_covector(c) << "\n";
  return os.str();
}

int cmd_fixtures(const std::string& action, const std::string& name, std::ostream& out) {
  if (action == "list") {
    for (const auto& [key, doc] : fixtures()) {
      out << key;
      if (const auto it = doc.metadata.find("description"); it != doc.metadata.end() && it->is_string()) {
        out << "  " << it->get<std::string>();
      }
      out << "\n";
    }
    return kExitOk;
  }
  if (name.empty()) throw UsageError("fixtures " + action + " needs a fixture name");
  if (!fixtures().contains(name)) throw UsageError("unknown fixture '" + name + "'");
  const AlgebraDocument& doc = fixture(name);
  out << (action == "show" ? describe(doc) : emit_algebra(doc));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact coadjoint orbit and coherent-state classifier for real Lie algebras", "lieorbit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string validate_input;
  auto* validate = app.add_subcommand("validate", "Check that a document defines a Lie algebra");
  validate->add_option("input", validate_input, "algebra document or fixture name")->required();

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "Classify the coadjoint orbit of a functional");
  classify_cmd->add_option("input", ca.input, "algebra document or fixture name")->required();
  classify_cmd->add_option("--ell", ca.ell, "functional name or inline pairs such as Z=1,X=-1/2");
  classify_cmd->add_flag("--json", ca.json, "emit the JSON report");
  classify_cmd->add_flag("--strict", ca.strict, "exit 1 when the report carries warnings");
  classify_cmd->add_option("--seed", ca.seed, "seed for the exponentiality search")->capture_default_str();
  classify_cmd->add_option("--samples", ca.samples, "random elements tested for imaginary spectrum")
      ->capture_default_str();

  OrbitArgs oa;
  auto* orbit_cmd = app.add_subcommand("orbit", "Sample the orbit numerically and check it against exact results");
  orbit_cmd->add_option("input", oa.input, "algebra document or fixture name")->required();
  orbit_cmd->add_option("--ell", oa.ell, "functional name or inline pairs");
  orbit_cmd->add_option("--samples", oa.sample.n_points, "number of orbit points")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  orbit_cmd->add_option("--seed", oa.sample.seed, "sampling seed")->capture_default_str();
  orbit_cmd->add_option("--tol", oa.sample.tolerance, "membership tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  orbit_cmd->add_option("--word-length", oa.sample.word_length, "flows per sample point")->capture_default_str();
  orbit_cmd->add_option("--step-scale", oa.sample.step_scale, "maximum flow time per step")->capture_default_str();
  orbit_cmd->add_option("--csv", oa.csv, "write sample points to this CSV file");

  WitnessArgs wa;
  auto* witness_cmd = app.add_subcommand("witness", "Check a coherent-state witness functional");
  witness_cmd->add_option("input", wa.input, "algebra document or fixture name")->required();
  witness_cmd->add_option("--ell", wa.ell, "functional whose orbit is studied");
  witness_cmd->add_option("--f", wa.f, "candidate functional")->required();
  witness_cmd->add_option("--p", wa.p, "midpoint parameter p")->capture_default_str();
  witness_cmd->add_option("--a", wa.a, "midpoint parameter a")->capture_default_str();
  witness_cmd->add_option("--tol", wa.tol, "midpoint tolerance")->capture_default_str()->check(CLI::PositiveNumber);

  std::string fx_action = "list";
  std::string fx_name;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "List, show or export built-in algebras");
  fixtures_cmd->add_option("action", fx_action, "list, show or export")
      ->check(CLI::IsMember({"list", "show", "export"}));
  fixtures_cmd->add_option("name", fx_name, "fixture name");

  std::vector<std::string> argv_store{"lieorbit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  auto active_help = [&]() {
    for (auto* sub : app.get_subcommands()) return sub->help();
    return app.help();
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << active_help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << active_help();
    return kExitInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_input, out, err);
    if (classify_cmd->parsed()) return cmd_classify(ca, out);
    if (orbit_cmd->parsed()) return cmd_orbit(oa, out);
    if (witness_cmd->parsed()) return cmd_witness(wa, out);
    if (fixtures_cmd->parsed()) return cmd_fixtures(fx_action, fx_name, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << active_help();
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace lieorbit
