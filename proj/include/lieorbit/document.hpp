#pragma once

#include "lieorbit/lie_algebra.hpp"
#include "lieorbit/numeric.hpp"
#include "lieorbit/orbit.hpp"

#include "json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lieorbit {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kReportFormat = "lieorbit-report/1";

/// Parse failure; `path` is a JSON pointer to the offending value.
class ParseError : public InputError {
public:
  ParseError(std::string path, const std::string& message)
      : InputError("parse error at " + (path.empty() ? std::string("/") : path) + ": " + message),
        path_(std::move(path)) {}
  [[nodiscard]] const std::string& path() const { return path_; }

private:
  std::string path_;
};

struct BracketEntry {
  std::string i;
  std::string j;
  std::map<std::string, Rational> coeffs;
  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

/// A golden expectation: a subset of the report JSON for one functional.
struct ExpectedReport {
  std::string functional;
  nlohmann::json fields;
  friend bool operator==(const ExpectedReport&, const ExpectedReport&) = default;
};

struct AlgebraDocument {
  std::string name;
  std::vector<std::string> basis;
  std::vector<BracketEntry> brackets;
  std::map<std::string, Covector> functionals;
  nlohmann::json metadata = nlohmann::json::object();
  std::optional<OrbitFixture> orbit_fixtures;
  std::vector<ExpectedReport> expected;

  [[nodiscard]] std::size_t dim() const { return basis.size(); }
  [[nodiscard]] LieAlgebra algebra() const;
  /// A functional name from `functionals`, or inline "name=p/q,..." pairs over
  /// the dual basis names.
  [[nodiscard]] Covector resolve_covector(std::string_view spec) const;

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

/// Exact parse (no floating-point intermediates). Throws ParseError.
AlgebraDocument parse_algebra(std::string_view text);
/// Deterministic JSON text with sorted keys and a trailing newline.
std::string emit_algebra(const AlgebraDocument& doc);

/// Document for an algebra built in code (no functionals or fixtures).
AlgebraDocument make_document(std::string name, const LieAlgebra& alg);

/// Inline covector syntax: comma-separated "name=p/q" pairs.
Covector parse_inline_covector(std::string_view spec, const std::vector<std::string>& basis);

nlohmann::json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const nlohmann::json& j, std::size_t ambient_dim);

nlohmann::json report_to_json(const ClassificationReport& r, const std::vector<std::string>& basis);
ClassificationReport report_from_json(const nlohmann::json& j, const std::vector<std::string>& basis);

struct Provenance {
  std::string input_hash;
  std::string tool_version{kToolVersion};
  std::uint64_t seed = 0;
  std::size_t exponentiality_samples = 0;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ReportDocument {
  std::string algebra;
  std::vector<std::string> basis;
  std::string functional_name;
  Covector functional;
  ClassificationReport report;
  Provenance provenance;
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// FNV-1a 64 over the canonical emitted document, as "fnv1a64:<hex>".
std::string input_hash(const AlgebraDocument& doc);

ReportDocument make_report_document(const AlgebraDocument& doc, std::string functional_name, const Covector& ell,
                                    const ClassificationReport& report, const ClassifyOptions& options);
nlohmann::json report_document_to_json(const ReportDocument& doc);
std::string emit_report(const ReportDocument& doc);
ReportDocument parse_report(std::string_view text);

/// Human-readable rendering derived from the JSON form.
std::string render_report_text(const ReportDocument& doc);

/// Renders a subspace basis with basis names, e.g. "span{X1, X2 - 1/2 X3}".
std::string render_span(const Subspace& s, const std::vector<std::string>& names);

}  // namespace lieorbit
