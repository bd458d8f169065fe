#include "lieorbit/fixtures.hpp"

namespace lieorbit {

namespace {

using nlohmann::json;

constexpr std::string_view kAbelian3 = R"json({
  "name": "abelian3",
  "dim": 3,
  "basis": ["E1", "E2", "E3"],
  "brackets": [],
  "functionals": {"ell_E1": ["1", "0", "0"]},
  "metadata": {"description": "abelian R^3", "default_functional": "ell_E1"},
  "expected": [
    {"functional": "ell_E1", "report": {
      "solvable": true, "nilpotent": true, "unimodular": true, "unimodular_witness": null,
      "exponentiality": "verified_nilpotent",
      "stabilizer": {"basis": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]},
      "orbit_dim": 0, "stabilizer_is_ideal": true, "si_mod_pker": true,
      "pker_algebra": {"basis": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]},
      "quotient_unimodular": true,
      "affine_hull_direction": {"basis": []},
      "zero_in_affine_hull": false, "orbit_closed_affine": "yes", "cs_status": "cs_by_si"}}
  ]
})json";

constexpr std::string_view kHeisenberg3 = R"json({
  "name": "heisenberg3",
  "dim": 3,
  "basis": ["X", "Y", "Z"],
  "brackets": [{"i": "X", "j": "Y", "coeffs": {"Z": "1"}}],
  "functionals": {"ell_Z": ["0", "0", "1"]},
  "metadata": {"description": "three-dimensional Heisenberg algebra", "default_functional": "ell_Z"},
  "expected": [
    {"functional": "ell_Z", "report": {
      "solvable": true, "nilpotent": true, "unimodular": true, "unimodular_witness": null,
      "exponentiality": "verified_nilpotent",
      "stabilizer": {"basis": [["0", "0", "1"]]},
      "orbit_dim": 2, "stabilizer_is_ideal": true, "si_mod_pker": true,
      "pker_algebra": {"basis": [["0", "0", "1"]]},
      "quotient_unimodular": true,
      "affine_hull_direction": {"basis": [["1", "0", "0"], ["0", "1", "0"]]},
      "zero_in_affine_hull": false, "orbit_closed_affine": "yes", "cs_status": "cs_by_si"}}
  ]
})json";

constexpr std::string_view kHeisenberg5 = R"json({
  "name": "heisenberg5",
  "dim": 5,
  "basis": ["X1", "X2", "Y1", "Y2", "Z"],
  "brackets": [
    {"i": "X1", "j": "Y1", "coeffs": {"Z": "1"}},
    {"i": "X2", "j": "Y2", "coeffs": {"Z": "1"}}
  ],
  "functionals": {"ell_Z": ["0", "0", "0", "0", "1"]},
  "metadata": {"description": "five-dimensional Heisenberg algebra", "default_functional": "ell_Z"},
  "expected": [
    {"functional": "ell_Z", "report": {
      "solvable": true, "nilpotent": true, "unimodular": true, "unimodular_witness": null,
      "exponentiality": "verified_nilpotent",
      "stabilizer": {"basis": [["0", "0", "0", "0", "1"]]},
      "orbit_dim": 4, "stabilizer_is_ideal": true, "si_mod_pker": true,
      "pker_algebra": {"basis": [["0", "0", "0", "0", "1"]]},
      "quotient_unimodular": true,
      "affine_hull_direction": {"basis": [["1", "0", "0", "0", "0"], ["0", "1", "0", "0", "0"],
                                          ["0", "0", "1", "0", "0"], ["0", "0", "0", "1", "0"]]},
      "zero_in_affine_hull": false, "orbit_closed_affine": "yes", "cs_status": "cs_by_si"}}
  ]
})json";

constexpr std::string_view kE2Cover = R"json({
  "name": "e2-cover",
  "dim": 3,
  "basis": ["T", "X", "Y"],
  "brackets": [
    {"i": "T", "j": "X", "coeffs": {"Y": "1"}},
    {"i": "T", "j": "Y", "coeffs": {"X": "-1"}}
  ],
  "functionals": {"ell_X": ["0", "1", "0"]},
  "metadata": {"description": "universal cover of the Euclidean motion group of the plane",
               "default_functional": "ell_X"},
  "expected": [
    {"functional": "ell_X", "report": {
      "solvable": true, "nilpotent": false, "unimodular": true, "unimodular_witness": null,
      "exponentiality": "refuted",
      "stabilizer": {"basis": [["0", "1", "0"]]},
      "orbit_dim": 2, "stabilizer_is_ideal": false, "si_mod_pker": false,
      "pker_algebra": {"basis": []},
      "quotient_unimodular": true,
      "affine_hull_direction": {"basis": [["1", "0", "0"], ["0", "0", "1"]]},
      "zero_in_affine_hull": false, "orbit_closed_affine": "unknown", "cs_status": "cs_iff_si_false"}}
  ]
})json";

constexpr std::string_view kPaper5 = R"json({
  "name": "paper-5dim",
  "dim": 5,
  "basis": ["X1", "X2", "X3", "X4", "X5"],
  "brackets": [
    {"i": "X2", "j": "X3", "coeffs": {"X1": "1"}},
    {"i": "X2", "j": "X5", "coeffs": {"X2": "1"}},
    {"i": "X3", "j": "X5", "coeffs": {"X3": "-1"}},
    {"i": "X4", "j": "X5", "coeffs": {"X1": "1"}}
  ],
  "functionals": {"ell_X3": ["0", "0", "1", "0", "0"]},
  "metadata": {"description": "completely solvable unimodular algebra with a square-integrable orbit whose quotient is not unimodular",
               "default_functional": "ell_X3"},
  "orbit_fixtures": {
    "base": "ell_X3",
    "invariants": [
      {"name": "X3-positive", "numerator": [{"coeff": "1", "powers": {"X3": 1}}], "sign": "positive"}
    ],
    "flow_direction": {"functional": "ell_X3", "generator": "X5", "coordinate": "X3", "rate": "-1"}
  },
  "expected": [
    {"functional": "ell_X3", "report": {
      "solvable": true, "nilpotent": false, "unimodular": true, "unimodular_witness": null,
      "exponentiality": "unverified",
      "stabilizer": {"basis": [["1", "0", "0", "0", "0"], ["0", "1", "0", "0", "0"], ["0", "0", "0", "1", "0"]]},
      "orbit_dim": 2, "stabilizer_is_ideal": true, "si_mod_pker": true,
      "pker_algebra": {"basis": [["1", "0", "0", "0", "0"], ["0", "1", "0", "0", "0"], ["0", "0", "0", "1", "0"]]},
      "quotient_unimodular": false,
      "affine_hull_direction": {"basis": [["0", "0", "1", "0", "0"], ["0", "0", "0", "0", "1"]]},
      "zero_in_affine_hull": true, "orbit_closed_affine": "no", "cs_status": "cs_by_si"}}
  ]
})json";

constexpr std::string_view kPaper6 = R"json({
  "name": "paper-6dim",
  "dim": 6,
  "basis": ["A", "B", "P", "Q", "R", "S"],
  "brackets": [
    {"i": "P", "j": "Q", "coeffs": {"R": "1"}},
    {"i": "P", "j": "R", "coeffs": {"S": "1"}},
    {"i": "A", "j": "P", "coeffs": {"P": "1/2"}},
    {"i": "A", "j": "R", "coeffs": {"R": "1/2"}},
    {"i": "A", "j": "S", "coeffs": {"S": "1"}},
    {"i": "B", "j": "P", "coeffs": {"P": "-1/2"}},
    {"i": "B", "j": "Q", "coeffs": {"Q": "1"}},
    {"i": "B", "j": "R", "coeffs": {"R": "1/2"}}
  ],
  "functionals": {
    "ell_BS": ["0", "1", "0", "0", "0", "1"],
    "ell_QS": ["0", "0", "0", "1", "0", "1"],
    "ell_f": ["0", "1", "0", "1", "0", "1"]
  },
  "metadata": {"description": "nonunimodular algebra with a coherent state representation that is not square-integrable modulo its projective kernel",
               "default_functional": "ell_BS",
               "parametrization_source": "orbit formulas quoted verbatim, not re-derived"},
  "orbit_fixtures": {
    "base": "ell_BS",
    "invariants": [
      {"name": "I1",
       "numerator": [{"coeff": "2", "powers": {"B": 1, "S": 1}}, {"coeff": "-1", "powers": {"P": 1, "R": 1}}],
       "denominator": [{"coeff": "2", "powers": {"S": 1}}],
       "equals": "1"},
      {"name": "I2",
       "numerator": [{"coeff": "2", "powers": {"Q": 1, "S": 1}}, {"coeff": "-1", "powers": {"R": 2}}],
       "denominator": [{"coeff": "2", "powers": {"S": 1}}],
       "equals": "0"},
      {"name": "S-positive", "numerator": [{"coeff": "1", "powers": {"S": 1}}], "sign": "positive"}
    ],
    "parametrizations": [
      {"name": "orbit-4d", "orbit_of": "ell_BS", "params": ["s", "p", "r", "a"],
       "coords": {
         "A": [{"coeff": "1", "powers": {"s": 1}}],
         "B": [{"coeff": "1"}, {"coeff": "-1/2", "powers": {"p": 1, "r": 1}}],
         "P": [{"coeff": "1", "powers": {"r": 1}, "exp": {"a": "-1/2"}}],
         "Q": [{"coeff": "1/2", "powers": {"p": 2}}],
         "R": [{"coeff": "-1", "powers": {"p": 1}, "exp": {"a": "-1/2"}}],
         "S": [{"coeff": "1", "exp": {"a": "-1"}}]}},
      {"name": "orbit-6d", "orbit_of": "ell_QS", "params": ["s1", "p1", "q1", "r1", "a1", "b1"],
       "coords": {
         "A": [{"coeff": "1", "powers": {"s1": 1}}],
         "B": [{"coeff": "1", "powers": {"r1": 1}}],
         "P": [{"coeff": "1", "powers": {"q1": 1}}],
         "Q": [{"coeff": "1", "exp": {"b1": "-1"}}, {"coeff": "1/2", "powers": {"p1": 2}, "exp": {"b1": "-1"}}],
         "R": [{"coeff": "-1", "powers": {"p1": 1}, "exp": {"a1": "-1/2", "b1": "-1/2"}}],
         "S": [{"coeff": "1", "exp": {"a1": "-1"}}]}},
      {"name": "ell1", "orbit_of": "ell_BS", "params": ["p", "a"],
       "coords": {
         "B": [{"coeff": "1"}],
         "Q": [{"coeff": "1/2", "powers": {"p": 2}}],
         "R": [{"coeff": "-1", "powers": {"p": 1}, "exp": {"a": "-1/2"}}],
         "S": [{"coeff": "1", "exp": {"a": "-1"}}]}},
      {"name": "ell2", "orbit_of": "ell_BS", "params": ["p", "a"],
       "coords": {
         "B": [{"coeff": "1"}],
         "Q": [{"coeff": "1/2", "powers": {"p": 2}}],
         "R": [{"coeff": "1", "powers": {"p": 1}, "exp": {"a": "-1/2"}}],
         "S": [{"coeff": "1", "exp": {"a": "-1"}}]}}
    ],
    "midpoint": {"first": "ell1", "second": "ell2", "target": "ell_f"}
  },
  "expected": [
    {"functional": "ell_BS", "report": {
      "solvable": true, "nilpotent": false, "unimodular": false,
      "unimodular_witness": {"basis": "A", "trace": "2"},
      "exponentiality": "unverified",
      "stabilizer": {"basis": [["0", "1", "0", "0", "0", "0"], ["0", "0", "0", "1", "0", "0"]]},
      "orbit_dim": 4, "stabilizer_is_ideal": false, "si_mod_pker": false,
      "pker_algebra": {"basis": []},
      "quotient_unimodular": false,
      "affine_hull_direction": {"basis": [["1", "0", "0", "0", "0", "0"], ["0", "0", "1", "0", "0", "0"],
                                          ["0", "0", "0", "0", "1", "0"], ["0", "0", "0", "0", "0", "1"]]},
      "zero_in_affine_hull": false, "orbit_closed_affine": "unknown",
      "cs_status": "indeterminate_nonunimodular_quotient"}},
    {"functional": "ell_QS", "report": {
      "unimodular": false, "exponentiality": "unverified",
      "stabilizer": {"basis": []},
      "orbit_dim": 6, "stabilizer_is_ideal": true, "si_mod_pker": true,
      "pker_algebra": {"basis": []},
      "quotient_unimodular": false, "zero_in_affine_hull": true,
      "orbit_closed_affine": "no", "cs_status": "cs_by_si"}},
    {"functional": "ell_f", "report": {
      "stabilizer": {"basis": []},
      "orbit_dim": 6, "si_mod_pker": true, "cs_status": "cs_by_si"}}
  ]
})json";

AlgebraDocument semidirect_traceless() {
  RationalMatrix d(2, 2);
  d(0, 0) = Rational(1);
  d(1, 1) = Rational(-1);
  AlgebraDocument doc = make_document("semidirect-traceless", semidirect_from_derivation(d));
  doc.functionals["ell_v"] = Covector({Rational(1), Rational(1), Rational(0)});
  doc.metadata = {{"description", "R^2 extended by the traceless derivation diag(1, -1)"},
                  {"default_functional", "ell_v"}};
  doc.expected.push_back({"ell_v", json::parse(R"json({
      "solvable": true, "nilpotent": false, "unimodular": true, "unimodular_witness": null,
      "exponentiality": "unverified",
      "stabilizer": {"basis": [["1", "1", "0"]]},
      "orbit_dim": 2, "stabilizer_is_ideal": false, "si_mod_pker": false,
      "pker_algebra": {"basis": []},
      "quotient_unimodular": true,
      "affine_hull_direction": {"basis": [["1", "-1", "0"], ["0", "0", "1"]]},
      "zero_in_affine_hull": false, "orbit_closed_affine": "unknown", "cs_status": "cs_iff_si_false"})json")});
  return doc;
}

std::map<std::string, AlgebraDocument> build() {
  std::map<std::string, AlgebraDocument> out;
  for (const auto text : {kAbelian3, kHeisenberg3, kHeisenberg5, kE2Cover, kPaper5, kPaper6}) {
    AlgebraDocument doc = parse_algebra(text);
    out.emplace(doc.name, std::move(doc));
  }
  AlgebraDocument sd = semidirect_traceless();
  out.emplace(sd.name, std::move(sd));
  return out;
}

}  // namespace

const std::map<std::string, AlgebraDocument>& fixtures() {
  static const std::map<std::string, AlgebraDocument> registry = build();
  return registry;
}

const AlgebraDocument& fixture(std::string_view name) {
  const auto& all = fixtures();
  const auto it = all.find(std::string(name));
  if (it == all.end()) throw InputError("unknown fixture '" + std::string(name) + "'");
  return it->second;
}

std::string default_functional(const AlgebraDocument& doc) {
  if (const auto it = doc.metadata.find("default_functional"); it != doc.metadata.end() && it->is_string()) {
    return it->get<std::string>();
  }
  if (doc.functionals.empty()) throw InputError("document '" + doc.name + "' has no functionals");
  return doc.functionals.begin()->first;
}

std::vector<std::string> golden_mismatches(const AlgebraDocument& doc, const ClassifyOptions& options) {
  std::vector<std::string> out;
  const LieAlgebra alg = doc.algebra();
  for (const auto& expected : doc.expected) {
    const ClassificationReport r = classify(alg, doc.resolve_covector(expected.functional), options);
    const json actual = report_to_json(r, doc.basis);
    for (const auto& [key, want] : expected.fields.items()) {
      const std::string where = doc.name + "/" + expected.functional + "/" + key;
      const auto it = actual.find(key);
      if (it == actual.end()) {
        out.push_back(where + ": no such report field");
        continue;
      }
      const bool subspace = want.is_object() && want.contains("basis") && !want.contains("trace");
      const bool same = subspace ? subspace_from_json(want, doc.dim()) == subspace_from_json(*it, doc.dim())
                                 : want == *it;
      if (!same) out.push_back(where + ": expected " + want.dump() + ", got " + it->dump());
    }
  }
  return out;
}

}  // namespace lieorbit
