#include "lieorbit/document.hpp"

#include <cstdio>
#include <set>
#include <sstream>

namespace lieorbit {

using nlohmann::json;

namespace {

std::string escape_pointer_token(std::string_view token) {
  std::string out;
  for (char c : token) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string child(const std::string& path, std::string_view key) { return path + "/" + escape_pointer_token(key); }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const json& require(const json& obj, std::string_view key, const std::string& path) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) throw ParseError(path, "missing field '" + std::string(key) + "'");
  return *it;
}

void expect_type(bool ok, const std::string& path, std::string_view what) {
  if (!ok) throw ParseError(path, "expected " + std::string(what));
}

Rational rational_at(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError(path, "expected a rational string such as \"-1/2\"");
  const auto text = j.get<std::string>();
  try {
    return Rational::parse(text);
  } catch (const InputError& e) {
    throw ParseError(path, e.what());
  }
}

std::string string_at(const json& j, const std::string& path) {
  expect_type(j.is_string(), path, "a string");
  return j.get<std::string>();
}

std::size_t basis_index(const std::map<std::string, std::size_t>& index, const std::string& name,
                        const std::string& path) {
  const auto it = index.find(name);
  if (it == index.end()) throw ParseError(path, "unknown basis name '" + name + "'");
  return it->second;
}

SparsePolynomial parse_sparse_polynomial(const json& j, const std::map<std::string, std::size_t>& index,
                                         const std::string& path) {
  expect_type(j.is_array(), path, "a list of terms");
  SparsePolynomial poly;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tp = child(path, t);
    const json& term = j[t];
    expect_type(term.is_object(), tp, "a term object");
    PolyTerm pt;
    pt.coeff = rational_at(require(term, "coeff", tp), child(tp, "coeff"));
    if (const auto it = term.find("powers"); it != term.end()) {
      expect_type(it->is_object(), child(tp, "powers"), "an object of exponents");
      for (const auto& [name, power] : it->items()) {
        const std::string pp = child(child(tp, "powers"), name);
        expect_type(power.is_number_unsigned(), pp, "a nonnegative integer exponent");
        pt.powers[basis_index(index, name, pp)] = power.get<unsigned>();
      }
    }
    poly.terms.push_back(std::move(pt));
  }
  return poly;
}

json sparse_polynomial_to_json(const SparsePolynomial& poly, const std::vector<std::string>& basis) {
  json out = json::array();
  for (const auto& term : poly.terms) {
    json t{{"coeff", term.coeff.to_string()}};
    if (!term.powers.empty()) {
      json powers = json::object();
      for (const auto& [i, p] : term.powers) powers[basis.at(i)] = p;
      t["powers"] = powers;
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<ParamTerm> parse_param_terms(const json& j, const std::set<std::string>& params, const std::string& path) {
  expect_type(j.is_array(), path, "a list of terms");
  std::vector<ParamTerm> terms;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tp = child(path, t);
    const json& term = j[t];
    expect_type(term.is_object(), tp, "a term object");
    ParamTerm pt;
    pt.coeff = rational_at(require(term, "coeff", tp), child(tp, "coeff"));
    if (const auto it = term.find("powers"); it != term.end()) {
      expect_type(it->is_object(), child(tp, "powers"), "an object of exponents");
      for (const auto& [name, power] : it->items()) {
        const std::string pp = child(child(tp, "powers"), name);
        if (!params.contains(name)) throw ParseError(pp, "unknown parameter '" + name + "'");
        expect_type(power.is_number_unsigned(), pp, "a nonnegative integer exponent");
        pt.powers[name] = power.get<unsigned>();
      }
    }
    if (const auto it = term.find("exp"); it != term.end()) {
      expect_type(it->is_object(), child(tp, "exp"), "an object of exponential rates");
      for (const auto& [name, rate] : it->items()) {
        const std::string ep = child(child(tp, "exp"), name);
        if (!params.contains(name)) throw ParseError(ep, "unknown parameter '" + name + "'");
        pt.exponent[name] = rational_at(rate, ep);
      }
    }
    terms.push_back(std::move(pt));
  }
  return terms;
}

json param_terms_to_json(const std::vector<ParamTerm>& terms) {
  json out = json::array();
  for (const auto& term : terms) {
    json t{{"coeff", term.coeff.to_string()}};
    if (!term.powers.empty()) t["powers"] = term.powers;
    if (!term.exponent.empty()) {
      json e = json::object();
      for (const auto& [p, r] : term.exponent) e[p] = r.to_string();
      t["exp"] = e;
    }
    out.push_back(std::move(t));
  }
  return out;
}

OrbitFixture parse_orbit_fixture(const json& j, const AlgebraDocument& doc,
                                 const std::map<std::string, std::size_t>& index, const std::string& path) {
  expect_type(j.is_object(), path, "an object");
  auto require_functional = [&](const std::string& name, const std::string& p) {
    if (!doc.functionals.contains(name)) throw ParseError(p, "unknown functional '" + name + "'");
    return name;
  };

  OrbitFixture fx;
  fx.base = require_functional(string_at(require(j, "base", path), child(path, "base")), child(path, "base"));

  if (const auto it = j.find("invariants"); it != j.end()) {
    const std::string ip = child(path, "invariants");
    expect_type(it->is_array(), ip, "a list");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string kp = child(ip, k);
      const json& inv = (*it)[k];
      expect_type(inv.is_object(), kp, "an invariant object");
      FixtureInvariant fi;
      fi.name = string_at(require(inv, "name", kp), child(kp, "name"));
      fi.numerator = parse_sparse_polynomial(require(inv, "numerator", kp), index, child(kp, "numerator"));
      if (const auto d = inv.find("denominator"); d != inv.end()) {
        fi.denominator = parse_sparse_polynomial(*d, index, child(kp, "denominator"));
      } else {
        fi.denominator.terms.push_back({Rational(1), {}});
      }
      const bool has_equals = inv.contains("equals");
      const bool has_sign = inv.contains("sign");
      if (has_equals == has_sign) throw ParseError(kp, "invariant needs exactly one of 'equals' or 'sign'");
      if (has_equals) {
        fi.kind = InvariantKind::equals;
        fi.expected = rational_at(inv["equals"], child(kp, "equals"));
      } else {
        const auto sign = string_at(inv["sign"], child(kp, "sign"));
        if (sign == "positive") fi.kind = InvariantKind::positive;
        else if (sign == "negative") fi.kind = InvariantKind::negative;
        else throw ParseError(child(kp, "sign"), "sign must be 'positive' or 'negative'");
      }
      fx.invariants.push_back(std::move(fi));
    }
  }

  if (const auto it = j.find("parametrizations"); it != j.end()) {
    const std::string pp = child(path, "parametrizations");
    expect_type(it->is_array(), pp, "a list");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string kp = child(pp, k);
      const json& par = (*it)[k];
      expect_type(par.is_object(), kp, "a parametrization object");
      OrbitParametrization op;
      op.name = string_at(require(par, "name", kp), child(kp, "name"));
      if (fx.find_parametrization(op.name) != nullptr) {
        throw ParseError(child(kp, "name"), "duplicate parametrization '" + op.name + "'");
      }
      op.orbit_of = require_functional(string_at(require(par, "orbit_of", kp), child(kp, "orbit_of")),
                                       child(kp, "orbit_of"));
      const json& params = require(par, "params", kp);
      expect_type(params.is_array(), child(kp, "params"), "a list of parameter names");
      std::set<std::string> known;
      for (std::size_t q = 0; q < params.size(); ++q) {
        op.params.push_back(string_at(params[q], child(child(kp, "params"), q)));
        known.insert(op.params.back());
      }
      op.coords.assign(doc.dim(), {});
      const json& coords = require(par, "coords", kp);
      expect_type(coords.is_object(), child(kp, "coords"), "an object keyed by basis name");
      for (const auto& [name, terms] : coords.items()) {
        const std::string cp = child(child(kp, "coords"), name);
        op.coords[basis_index(index, name, cp)] = parse_param_terms(terms, known, cp);
      }
      fx.parametrizations.push_back(std::move(op));
    }
  }

  if (const auto it = j.find("midpoint"); it != j.end()) {
    const std::string mp = child(path, "midpoint");
    expect_type(it->is_object(), mp, "an object");
    MidpointSpec ms;
    ms.first = string_at(require(*it, "first", mp), child(mp, "first"));
    ms.second = string_at(require(*it, "second", mp), child(mp, "second"));
    ms.target = require_functional(string_at(require(*it, "target", mp), child(mp, "target")), child(mp, "target"));
    for (const auto& [key, name] : {std::pair{"first", ms.first}, std::pair{"second", ms.second}}) {
      if (fx.find_parametrization(name) == nullptr) {
        throw ParseError(child(mp, key), "unknown parametrization '" + name + "'");
      }
    }
    fx.midpoint = std::move(ms);
  }

  if (const auto it = j.find("flow_direction"); it != j.end()) {
    const std::string fp = child(path, "flow_direction");
    expect_type(it->is_object(), fp, "an object");
    FlowDirection fd;
    fd.functional = require_functional(string_at(require(*it, "functional", fp), child(fp, "functional")),
                                       child(fp, "functional"));
    fd.generator = basis_index(index, string_at(require(*it, "generator", fp), child(fp, "generator")),
                               child(fp, "generator"));
    fd.coordinate = basis_index(index, string_at(require(*it, "coordinate", fp), child(fp, "coordinate")),
                                child(fp, "coordinate"));
    fd.rate = rational_at(require(*it, "rate", fp), child(fp, "rate"));
    fx.flow_direction = fd;
  }
  return fx;
}

json orbit_fixture_to_json(const OrbitFixture& fx, const std::vector<std::string>& basis) {
  json out{{"base", fx.base}};
  if (!fx.invariants.empty()) {
    json invs = json::array();
    for (const auto& inv : fx.invariants) {
      json j{{"name", inv.name},
             {"numerator", sparse_polynomial_to_json(inv.numerator, basis)},
             {"denominator", sparse_polynomial_to_json(inv.denominator, basis)}};
      switch (inv.kind) {
        case InvariantKind::equals: j["equals"] = inv.expected.to_string(); break;
        case InvariantKind::positive: j["sign"] = "positive"; break;
        case InvariantKind::negative: j["sign"] = "negative"; break;
      }
      invs.push_back(std::move(j));
    }
    out["invariants"] = std::move(invs);
  }
  if (!fx.parametrizations.empty()) {
    json pars = json::array();
    for (const auto& p : fx.parametrizations) {
      json coords = json::object();
      for (std::size_t c = 0; c < p.coords.size(); ++c) {
        if (!p.coords[c].empty()) coords[basis.at(c)] = param_terms_to_json(p.coords[c]);
      }
      pars.push_back({{"name", p.name}, {"orbit_of", p.orbit_of}, {"params", p.params}, {"coords", coords}});
    }
    out["parametrizations"] = std::move(pars);
  }
  if (fx.midpoint) {
    out["midpoint"] = {{"first", fx.midpoint->first}, {"second", fx.midpoint->second}, {"target", fx.midpoint->target}};
  }
  if (fx.flow_direction) {
    out["flow_direction"] = {{"functional", fx.flow_direction->functional},
                             {"generator", basis.at(fx.flow_direction->generator)},
                             {"coordinate", basis.at(fx.flow_direction->coordinate)},
                             {"rate", fx.flow_direction->rate.to_string()}};
  }
  return out;
}

json covector_to_json(const Covector& c) {
  json out = json::array();
  for (const auto& x : c.coeffs()) out.push_back(x.to_string());
  return out;
}

Covector covector_from_json(const json& j, std::size_t dim, const std::string& path) {
  expect_type(j.is_array(), path, "a list of rationals");
  if (j.size() != dim) {
    throw ParseError(path, "expected " + std::to_string(dim) + " coefficients, got " + std::to_string(j.size()));
  }
  RationalVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_at(j[i], child(path, i)));
  return Covector(std::move(v));
}

}  // namespace

LieAlgebra AlgebraDocument::algebra() const {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  StructureConstants constants;
  for (const auto& b : brackets) {
    const std::size_t i = index.at(b.i);
    const std::size_t j = index.at(b.j);
    const bool flip = i > j;
    for (const auto& [name, c] : b.coeffs) {
      constants[{flip ? j : i, flip ? i : j, index.at(name)}] = flip ? -c : c;
    }
  }
  return {basis, std::move(constants)};
}

Covector AlgebraDocument::resolve_covector(std::string_view spec) const {
  if (const auto it = functionals.find(std::string(spec)); it != functionals.end()) return it->second;
  if (spec.find('=') == std::string_view::npos) {
    throw InputError("unknown functional '" + std::string(spec) + "'");
  }
  return parse_inline_covector(spec, basis);
}

Covector parse_inline_covector(std::string_view spec, const std::vector<std::string>& basis) {
  RationalVector v(basis.size());
  std::vector<bool> seen(basis.size(), false);
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto end = std::min(spec.find(',', start), spec.size());
    const std::string_view pair = spec.substr(start, end - start);
    const auto eq = pair.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw InputError("malformed functional entry '" + std::string(pair) + "', expected name=p/q");
    }
    const std::string name(pair.substr(0, eq));
    std::size_t idx = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == name) idx = i;
    }
    if (idx == basis.size()) throw InputError("unknown basis name '" + name + "' in functional");
    if (seen[idx]) throw InputError("basis name '" + name + "' repeated in functional");
    seen[idx] = true;
    v[idx] = Rational::parse(pair.substr(eq + 1));
    start = end + 1;
  }
  return Covector(std::move(v));
}

AlgebraDocument parse_algebra(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", "malformed JSON at byte " + std::to_string(e.byte));
  }
  expect_type(root.is_object(), "", "a JSON object");

  AlgebraDocument doc;
  doc.name = string_at(require(root, "name", ""), "/name");

  const json& basis = require(root, "basis", "");
  expect_type(basis.is_array(), "/basis", "a list of names");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string p = child("/basis", i);
    std::string name = string_at(basis[i], p);
    if (name.empty()) throw ParseError(p, "empty basis name");
    if (!index.emplace(name, i).second) throw ParseError(p, "duplicate basis name '" + name + "'");
    doc.basis.push_back(std::move(name));
  }
  const json& dim = require(root, "dim", "");
  expect_type(dim.is_number_unsigned(), "/dim", "a nonnegative integer");
  if (dim.get<std::size_t>() == 0) throw ParseError("/dim", "dimension 0 is not accepted");
  if (dim.get<std::size_t>() != doc.basis.size()) {
    throw ParseError("/dim", "dim is " + std::to_string(dim.get<std::size_t>()) + " but basis lists " +
                                 std::to_string(doc.basis.size()) + " names");
  }

  if (const auto it = root.find("brackets"); it != root.end()) {
    expect_type(it->is_array(), "/brackets", "a list");
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t b = 0; b < it->size(); ++b) {
      const std::string bp = child("/brackets", b);
      const json& entry = (*it)[b];
      expect_type(entry.is_object(), bp, "a bracket object");
      BracketEntry be;
      be.i = string_at(require(entry, "i", bp), child(bp, "i"));
      be.j = string_at(require(entry, "j", bp), child(bp, "j"));
      const std::size_t i = basis_index(index, be.i, child(bp, "i"));
      const std::size_t j = basis_index(index, be.j, child(bp, "j"));
      if (i == j) throw ParseError(bp, "bracket of '" + be.i + "' with itself");
      if (!pairs.emplace(std::min(i, j), std::max(i, j)).second) {
        throw ParseError(bp, "duplicate bracket [" + be.i + ", " + be.j + "]");
      }
      const json& coeffs = require(entry, "coeffs", bp);
      expect_type(coeffs.is_object(), child(bp, "coeffs"), "an object keyed by basis name");
      for (const auto& [name, value] : coeffs.items()) {
        const std::string cp = child(child(bp, "coeffs"), name);
        basis_index(index, name, cp);
        Rational c = rational_at(value, cp);
        if (!c.is_zero()) be.coeffs[name] = std::move(c);
      }
      doc.brackets.push_back(std::move(be));
    }
  }

  if (const auto it = root.find("functionals"); it != root.end()) {
    expect_type(it->is_object(), "/functionals", "an object of coefficient lists");
    for (const auto& [name, coeffs] : it->items()) {
      doc.functionals[name] = covector_from_json(coeffs, doc.dim(), child("/functionals", name));
    }
  }

  if (const auto it = root.find("metadata"); it != root.end()) doc.metadata = *it;

  if (const auto it = root.find("orbit_fixtures"); it != root.end()) {
    doc.orbit_fixtures = parse_orbit_fixture(*it, doc, index, "/orbit_fixtures");
  }

  if (const auto it = root.find("expected"); it != root.end()) {
    expect_type(it->is_array(), "/expected", "a list");
    for (std::size_t e = 0; e < it->size(); ++e) {
      const std::string ep = child("/expected", e);
      const json& entry = (*it)[e];
      expect_type(entry.is_object(), ep, "an expectation object");
      ExpectedReport er;
      er.functional = string_at(require(entry, "functional", ep), child(ep, "functional"));
      if (!doc.functionals.contains(er.functional)) {
        throw ParseError(child(ep, "functional"), "unknown functional '" + er.functional + "'");
      }
      er.fields = require(entry, "report", ep);
      expect_type(er.fields.is_object(), child(ep, "report"), "an object");
      doc.expected.push_back(std::move(er));
    }
  }
  return doc;
}

std::string emit_algebra(const AlgebraDocument& doc) {
  json root{{"name", doc.name}, {"dim", doc.dim()}, {"basis", doc.basis}};
  json brackets = json::array();
  for (const auto& b : doc.brackets) {
    json coeffs = json::object();
    for (const auto& [name, c] : b.coeffs) coeffs[name] = c.to_string();
    brackets.push_back({{"i", b.i}, {"j", b.j}, {"coeffs", coeffs}});
  }
  root["brackets"] = std::move(brackets);
  json functionals = json::object();
  for (const auto& [name, c] : doc.functionals) functionals[name] = covector_to_json(c);
  root["functionals"] = std::move(functionals);
  root["metadata"] = doc.metadata;
  if (doc.orbit_fixtures) root["orbit_fixtures"] = orbit_fixture_to_json(*doc.orbit_fixtures, doc.basis);
  if (!doc.expected.empty()) {
    json expected = json::array();
    for (const auto& e : doc.expected) expected.push_back({{"functional", e.functional}, {"report", e.fields}});
    root["expected"] = std::move(expected);
  }
  return root.dump(2) + "\n";
}

AlgebraDocument make_document(std::string name, const LieAlgebra& alg) {
  AlgebraDocument doc;
  doc.name = std::move(name);
  doc.basis = alg.basis_names();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      const RationalVector br = alg.bracket_basis(i, j);
      if (is_zero(br)) continue;
      BracketEntry be{doc.basis[i], doc.basis[j], {}};
      for (std::size_t k = 0; k < br.size(); ++k) {
        if (!br[k].is_zero()) be.coeffs[doc.basis[k]] = br[k];
      }
      doc.brackets.push_back(std::move(be));
    }
  }
  return doc;
}

json subspace_to_json(const Subspace& s) {
  json rows = json::array();
  for (const auto& v : s.basis()) {
    json row = json::array();
    for (const auto& x : v) row.push_back(x.to_string());
    rows.push_back(std::move(row));
  }
  return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", rows}};
}

Subspace subspace_from_json(const json& j, std::size_t ambient_dim) {
  expect_type(j.is_object(), "", "a subspace object");
  const json& rows = require(j, "basis", "");
  expect_type(rows.is_array(), "/basis", "a list of rows");
  std::vector<RationalVector> vs;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    vs.push_back(covector_from_json(rows[r], ambient_dim, child("/basis", r)).coeffs());
  }
  Subspace s = Subspace::span(ambient_dim, vs);
  if (s.dim() != vs.size()) throw ParseError("/basis", "subspace rows are linearly dependent");
  return s;
}

json report_to_json(const ClassificationReport& r, const std::vector<std::string>& basis) {
  json out{{"solvable", r.solvable},
           {"nilpotent", r.nilpotent},
           {"unimodular", r.unimodular},
           {"exponentiality", std::string(to_string(r.exponentiality))},
           {"stabilizer", subspace_to_json(r.stabilizer)},
           {"orbit_dim", r.orbit_dim},
           {"stabilizer_is_ideal", r.stabilizer_is_ideal},
           {"pker_algebra", subspace_to_json(r.pker_algebra)},
           {"si_mod_pker", r.si_mod_pker},
           {"quotient_unimodular", r.quotient_unimodular},
           {"affine_hull_direction", subspace_to_json(r.affine_hull_direction)},
           {"zero_in_affine_hull", r.zero_in_affine_hull},
           {"orbit_closed_affine", std::string(to_string(r.orbit_closed_affine))},
           {"cs_status", std::string(to_string(r.cs_status))},
           {"notes", r.notes}};
  if (r.unimodular_witness) {
    out["unimodular_witness"] = {{"basis", basis.at(r.unimodular_witness->basis_index)},
                                 {"trace", r.unimodular_witness->trace.to_string()}};
  } else {
    out["unimodular_witness"] = nullptr;
  }
  return out;
}

ClassificationReport report_from_json(const json& j, const std::vector<std::string>& basis) {
  expect_type(j.is_object(), "/report", "an object");
  auto boolean = [&](const char* key) {
    const json& v = require(j, key, "/report");
    expect_type(v.is_boolean(), child("/report", key), "a boolean");
    return v.get<bool>();
  };
  auto text = [&](const char* key) { return string_at(require(j, key, "/report"), child("/report", key)); };
  const std::size_t n = basis.size();
  try {
    ClassificationReport r;
    r.solvable = boolean("solvable");
    r.nilpotent = boolean("nilpotent");
    r.unimodular = boolean("unimodular");
    if (const json& w = require(j, "unimodular_witness", "/report"); !w.is_null()) {
      const std::string name = string_at(require(w, "basis", "/report/unimodular_witness"),
                                         "/report/unimodular_witness/basis");
      std::size_t idx = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (basis[i] == name) idx = i;
      }
      if (idx == n) throw ParseError("/report/unimodular_witness/basis", "unknown basis name '" + name + "'");
      r.unimodular_witness = TraceWitness{idx, rational_at(require(w, "trace", "/report/unimodular_witness"),
                                                           "/report/unimodular_witness/trace")};
    }
    r.exponentiality = parse_exponentiality(text("exponentiality"));
    r.stabilizer = subspace_from_json(require(j, "stabilizer", "/report"), n);
    const json& od = require(j, "orbit_dim", "/report");
    expect_type(od.is_number_unsigned(), "/report/orbit_dim", "a nonnegative integer");
    r.orbit_dim = od.get<std::size_t>();
    r.stabilizer_is_ideal = boolean("stabilizer_is_ideal");
    r.pker_algebra = subspace_from_json(require(j, "pker_algebra", "/report"), n);
    r.si_mod_pker = boolean("si_mod_pker");
    r.quotient_unimodular = boolean("quotient_unimodular");
    r.affine_hull_direction = subspace_from_json(require(j, "affine_hull_direction", "/report"), n);
    r.zero_in_affine_hull = boolean("zero_in_affine_hull");
    r.orbit_closed_affine = parse_tristate(text("orbit_closed_affine"));
    r.cs_status = parse_cs_status(text("cs_status"));
    const json& notes = require(j, "notes", "/report");
    expect_type(notes.is_array(), "/report/notes", "a list of strings");
    for (std::size_t i = 0; i < notes.size(); ++i) r.notes.push_back(string_at(notes[i], child("/report/notes", i)));
    return r;
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError("/report", e.what());
  }
}

std::string input_hash(const AlgebraDocument& doc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : emit_algebra(doc)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

ReportDocument make_report_document(const AlgebraDocument& doc, std::string functional_name, const Covector& ell,
                                    const ClassificationReport& report, const ClassifyOptions& options) {
  ReportDocument rd;
  rd.algebra = doc.name;
  rd.basis = doc.basis;
  rd.functional_name = std::move(functional_name);
  rd.functional = ell;
  rd.report = report;
  rd.provenance.input_hash = input_hash(doc);
  rd.provenance.seed = options.seed;
  rd.provenance.exponentiality_samples = options.exponentiality_samples;
  return rd;
}

json report_document_to_json(const ReportDocument& doc) {
  return {{"format", std::string(kReportFormat)},
          {"algebra", doc.algebra},
          {"basis", doc.basis},
          {"functional", {{"name", doc.functional_name}, {"coeffs", covector_to_json(doc.functional)}}},
          {"report", report_to_json(doc.report, doc.basis)},
          {"provenance",
           {{"input_hash", doc.provenance.input_hash},
            {"tool_version", doc.provenance.tool_version},
            {"seed", doc.provenance.seed},
            {"exponentiality_samples", doc.provenance.exponentiality_samples}}}};
}

std::string emit_report(const ReportDocument& doc) { return report_document_to_json(doc).dump(2) + "\n"; }

ReportDocument parse_report(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", "malformed JSON at byte " + std::to_string(e.byte));
  }
  expect_type(root.is_object(), "", "a JSON object");
  if (string_at(require(root, "format", ""), "/format") != kReportFormat) {
    throw ParseError("/format", "unsupported report format");
  }
  ReportDocument rd;
  rd.algebra = string_at(require(root, "algebra", ""), "/algebra");
  const json& basis = require(root, "basis", "");
  expect_type(basis.is_array(), "/basis", "a list of names");
  for (std::size_t i = 0; i < basis.size(); ++i) rd.basis.push_back(string_at(basis[i], child("/basis", i)));
  const json& fn = require(root, "functional", "");
  rd.functional_name = string_at(require(fn, "name", "/functional"), "/functional/name");
  rd.functional = covector_from_json(require(fn, "coeffs", "/functional"), rd.basis.size(), "/functional/coeffs");
  rd.report = report_from_json(require(root, "report", ""), rd.basis);
  const json& prov = require(root, "provenance", "");
  rd.provenance.input_hash = string_at(require(prov, "input_hash", "/provenance"), "/provenance/input_hash");
  rd.provenance.tool_version = string_at(require(prov, "tool_version", "/provenance"), "/provenance/tool_version");
  const json& seed = require(prov, "seed", "/provenance");
  expect_type(seed.is_number_unsigned(), "/provenance/seed", "a nonnegative integer");
  rd.provenance.seed = seed.get<std::uint64_t>();
  const json& samples = require(prov, "exponentiality_samples", "/provenance");
  expect_type(samples.is_number_unsigned(), "/provenance/exponentiality_samples", "a nonnegative integer");
  rd.provenance.exponentiality_samples = samples.get<std::size_t>();
  return rd;
}

std::string render_span(const Subspace& s, const std::vector<std::string>& names) {
  if (s.is_zero()) return "{0}";
  std::ostringstream os;
  os << "span{";
  bool first_vec = true;
  for (const auto& v : s.basis()) {
    if (!first_vec) os << ", ";
    first_vec = false;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      const Rational mag = abs(v[i]);
      if (first) {
        if (v[i].sign() < 0) os << "-";
      } else {
        os << (v[i].sign() < 0 ? " - " : " + ");
      }
      first = false;
      if (mag != Rational(1)) os << mag << " ";
      os << names.at(i);
    }
  }
  os << "}";
  return os.str();
}

std::string render_report_text(const ReportDocument& doc) {
  const json j = report_document_to_json(doc);
  const json& rep = j["report"];
  std::vector<std::string> dual_names;
  for (const auto& b : doc.basis) dual_names.push_back(b + "*");
  std::ostringstream os;
  os << "algebra: " << j["algebra"].get<std::string>() << "\n";
  os << "functional: " << j["functional"]["name"].get<std::string>() << " = (";
  const auto& coeffs = j["functional"]["coeffs"];
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? ", " : "") << coeffs[i].get<std::string>();
  os << ")\n";
  for (const auto& [key, value] : rep.items()) {
    if (key == "notes") continue;
    os << key << ": ";
    if (value.is_object() && value.contains("ambient_dim")) {
      const Subspace s = subspace_from_json(value, doc.basis.size());
      os << render_span(s, key == "affine_hull_direction" ? dual_names : doc.basis);
    } else if (value.is_string()) {
      os << value.get<std::string>();
    } else if (value.is_null()) {
      os << "none";
    } else if (value.is_object()) {
      os << value["basis"].get<std::string>() << " (trace " << value["trace"].get<std::string>() << ")";
    } else {
      os << value.dump();
    }
    os << "\n";
  }
  for (const auto& note : rep["notes"]) os << "note: " << note.get<std::string>() << "\n";
  os << "provenance: " << j["provenance"]["input_hash"].get<std::string>() << ", version "
     << j["provenance"]["tool_version"].get<std::string>() << ", seed " << j["provenance"]["seed"].get<std::uint64_t>()
     << "\n";
  return os.str();
}

}  // namespace lieorbit
