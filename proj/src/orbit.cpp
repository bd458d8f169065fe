#include "lieorbit/orbit.hpp"

#include <algorithm>

namespace lieorbit {

namespace {

void check_covector(const LieAlgebra& alg, const Covector& ell) {
  if (ell.size() != alg.dim()) {
    throw InputError("covector has length " + std::to_string(ell.size()) + ", algebra has dimension " +
                     std::to_string(alg.dim()));
  }
}

}  // namespace

RationalMatrix blform(const LieAlgebra& alg, const Covector& ell) {
  check_covector(alg, ell);
  RationalMatrix b(alg.dim(), alg.dim());
  for (const auto& [key, c] : alg.structure()) {
    const auto [i, j, k] = key;
    if (ell[k].is_zero()) continue;
    const Rational v = ell[k] * c;
    b(i, j) += v;
    b(j, i) -= v;
  }
  return b;
}

Subspace stabilizer(const LieAlgebra& alg, const Covector& ell) {
  return Subspace::span(alg.dim(), kernel(blform(alg, ell)));
}

std::size_t orbit_dimension(const LieAlgebra& alg, const Covector& ell) { return rank(blform(alg, ell)); }

IdealCheck is_ideal(const LieAlgebra& alg, const Subspace& v) {
  auto w = ideal_violation(alg, v);
  return {!w.has_value(), std::move(w)};
}

Subspace largest_ideal_in(const LieAlgebra& alg, const Subspace& v) {
  if (v.ambient_dim() != alg.dim()) throw InputError("subspace does not live in this algebra");
  const std::size_t n = alg.dim();
  std::vector<RationalMatrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_basis(alg, i));

  Subspace current = v;
  while (!current.is_zero() && !current.is_full()) {
    const RationalMatrix cols = current.column_matrix();                   // n x k
    const RationalMatrix checks = current.annihilator().canonical_rows();  // (n-k) x n
    const std::size_t k = current.dim();
    const std::size_t m = checks.rows();
    // c such that checks * ad_i * cols * c = 0 for every i
    RationalMatrix stacked(n * m, k);
    for (std::size_t i = 0; i < n; ++i) {
      const RationalMatrix block = checks * ads[i] * cols;
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < k; ++c) stacked(i * m + r, c) = block(r, c);
    }
    std::vector<RationalVector> next;
    for (const auto& coeffs : kernel(stacked)) next.push_back(cols * coeffs);
    Subspace candidate = Subspace::span(n, next);
    if (candidate == current) break;
    current = std::move(candidate);
  }
  return current;
}

Subspace pker_algebra(const LieAlgebra& alg, const Covector& ell) {
  return largest_ideal_in(alg, stabilizer(alg, ell));
}

bool si_mod_pker(const LieAlgebra& alg, const Covector& ell) { return is_ideal(alg, stabilizer(alg, ell)).ideal; }

AffineHull affine_hull(const LieAlgebra& alg, const Covector& ell) {
  return {ell, stabilizer(alg, ell).annihilator()};
}

std::string_view to_string(TriState t) {
  switch (t) {
    case TriState::yes: return "yes";
    case TriState::no: return "no";
    case TriState::unknown: return "unknown";
  }
  return "unknown";
}

TriState parse_tristate(std::string_view text) {
  if (text == "yes") return TriState::yes;
  if (text == "no") return TriState::no;
  if (text == "unknown") return TriState::unknown;
  throw InputError("unknown tri-state value '" + std::string(text) + "'");
}

std::string_view to_string(CoherentStateStatus s) {
  switch (s) {
    case CoherentStateStatus::cs_by_si: return "cs_by_si";
    case CoherentStateStatus::cs_iff_si_false: return "cs_iff_si_false";
    case CoherentStateStatus::indeterminate_nonunimodular_quotient: return "indeterminate_nonunimodular_quotient";
  }
  return "indeterminate_nonunimodular_quotient";
}

CoherentStateStatus parse_cs_status(std::string_view text) {
  if (text == "cs_by_si") return CoherentStateStatus::cs_by_si;
  if (text == "cs_iff_si_false") return CoherentStateStatus::cs_iff_si_false;
  if (text == "indeterminate_nonunimodular_quotient") return CoherentStateStatus::indeterminate_nonunimodular_quotient;
  throw InputError("unknown coherent-state status '" + std::string(text) + "'");
}

bool ClassificationReport::has_warnings() const {
  return std::any_of(notes.begin(), notes.end(),
                     [](const std::string& n) { return n.starts_with(kWarningPrefix); });
}

namespace {

// When the orbit is open in its hull, orbit == hull forces every hull point to
// have the same orbit dimension. The origin has orbit dimension 0, so an orbit
// of positive dimension whose hull passes through 0 is not the whole hull.
bool hull_has_point_of_other_dimension(const AffineHull& hull, std::size_t orbit_dim) {
  return orbit_dim > 0 && hull.contains(Covector::zero(hull.base.size()));
}

}  // namespace

ClassificationReport classify(const LieAlgebra& alg, const Covector& ell, const ClassifyOptions& options) {
  check_covector(alg, ell);
  const ValidationReport validation = validate_algebra(alg);
  if (!validation.valid()) {
    const auto& v = validation.violations.front();
    const auto& names = alg.basis_names();
    throw InputError("not a Lie algebra: Jacobi identity fails for (" + names[v.i] + ", " + names[v.j] + ", " +
                     names[v.k] + ")");
  }

  ClassificationReport r;
  r.solvable = is_solvable(alg);
  r.nilpotent = is_nilpotent(alg);
  const Unimodularity uni = is_unimodular(alg);
  r.unimodular = uni.unimodular;
  if (uni.witness) r.unimodular_witness = TraceWitness{*uni.witness, uni.witness_trace};

  const ExponentialityStatus expo = exponentiality_status(alg, options.exponentiality_samples, options.seed);
  r.exponentiality = expo.status;
  if (expo.status == Exponentiality::refuted) {
    r.notes.push_back(std::string(kWarningPrefix) + "exponentiality refuted (" + expo.reason +
                      "); the orbit-method results assume an exponential group");
  } else if (expo.status == Exponentiality::unverified) {
    r.notes.emplace_back("exponentiality unverified; results assume the group is exponential");
  }

  r.stabilizer = stabilizer(alg, ell);
  r.orbit_dim = alg.dim() - r.stabilizer.dim();
  r.stabilizer_is_ideal = is_ideal(alg, r.stabilizer).ideal;
  r.si_mod_pker = r.stabilizer_is_ideal;
  r.pker_algebra = largest_ideal_in(alg, r.stabilizer);

  if (r.pker_algebra.is_full()) {
    r.quotient_unimodular = true;
    r.notes.emplace_back("projective kernel algebra is the whole algebra; quotient is trivial");
  } else {
    r.quotient_unimodular = is_unimodular(quotient_algebra(alg, r.pker_algebra).algebra).unimodular;
  }

  const AffineHull hull{ell, r.stabilizer.annihilator()};
  r.affine_hull_direction = hull.direction;
  r.zero_in_affine_hull = hull.contains(Covector::zero(alg.dim()));

  if (r.si_mod_pker && r.quotient_unimodular) {
    r.orbit_closed_affine = TriState::yes;
  } else if (r.si_mod_pker && hull_has_point_of_other_dimension(hull, r.orbit_dim)) {
    r.orbit_closed_affine = TriState::no;
  } else {
    r.orbit_closed_affine = TriState::unknown;
  }

  if (r.si_mod_pker) {
    r.cs_status = CoherentStateStatus::cs_by_si;
  } else if (r.quotient_unimodular) {
    r.cs_status = CoherentStateStatus::cs_iff_si_false;
  } else {
    r.cs_status = CoherentStateStatus::indeterminate_nonunimodular_quotient;
  }
  return r;
}

bool cs_witness_check(const LieAlgebra& alg, const Covector& ell_orbit, const Covector& f) {
  check_covector(alg, f);
  return stabilizer(alg, f) == pker_algebra(alg, ell_orbit);
}

}  // namespace lieorbit
