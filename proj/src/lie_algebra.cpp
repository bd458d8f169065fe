#include "lieorbit/lie_algebra.hpp"

#include <set>
#include <utility>

namespace lieorbit {

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, StructureConstants structure)
    : names_(std::move(basis_names)) {
  if (names_.empty()) throw InputError("Lie algebra must have dimension at least 1");
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw InputError("empty basis name");
    if (!seen.insert(name).second) throw InputError("duplicate basis name '" + name + "'");
  }
  const std::size_t n = names_.size();
  for (auto& [key, value] : structure) {
    const auto [i, j, k] = key;
    if (i >= n || j >= n || k >= n) {
      throw InputError("structure constant index out of range for dimension " + std::to_string(n));
    }
    if (i >= j) throw InputError("structure constants must be keyed with i < j");
    if (!value.is_zero()) structure_.emplace(key, value);
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t n, std::vector<std::string> names) {
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  }
  if (names.size() != n) throw InputError("abelian algebra: name count mismatch");
  return {std::move(names), {}};
}

std::optional<std::size_t> LieAlgebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Rational LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return {};
  const bool flip = i > j;
  const StructureKey key{flip ? j : i, flip ? i : j, k};
  const auto it = structure_.find(key);
  if (it == structure_.end()) return {};
  return flip ? -it->second : it->second;
}

RationalVector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  RationalVector out(dim());
  if (i == j) return out;
  const bool flip = i > j;
  const std::size_t a = flip ? j : i;
  const std::size_t b = flip ? i : j;
  for (auto it = structure_.lower_bound({a, b, 0}); it != structure_.end(); ++it) {
    if (it->first[0] != a || it->first[1] != b) break;
    out[it->first[2]] = flip ? -it->second : it->second;
  }
  return out;
}

RationalVector LieAlgebra::bracket(const RationalVector& x, const RationalVector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw InputError("bracket argument has wrong length");
  RationalVector out(dim());
  for (const auto& [key, c] : structure_) {
    const auto [i, j, k] = key;
    const Rational coeff = x[i] * y[j] - x[j] * y[i];
    if (!coeff.is_zero()) out[k] += coeff * c;
  }
  return out;
}

ValidationReport validate_algebra(const LieAlgebra& alg) {
  ValidationReport report;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const auto ei = unit_vector(n, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto ej = unit_vector(n, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto ek = unit_vector(n, k);
        RationalVector r = alg.bracket(ei, alg.bracket_basis(j, k));
        r = add(r, alg.bracket(ej, alg.bracket_basis(k, i)));
        r = add(r, alg.bracket(ek, alg.bracket_basis(i, j)));
        if (!is_zero(r)) report.violations.push_back({i, j, k, std::move(r)});
      }
    }
  }
  return report;
}

RationalMatrix ad_matrix(const LieAlgebra& alg, const RationalVector& x) {
  const std::size_t n = alg.dim();
  if (x.size() != n) throw InputError("ad_matrix: vector has wrong length");
  RationalMatrix m(n, n);
  for (const auto& [key, c] : alg.structure()) {
    const auto [i, j, k] = key;
    // [e_i, e_j] = c e_k, [e_j, e_i] = -c e_k
    if (!x[i].is_zero()) m(k, j) += x[i] * c;
    if (!x[j].is_zero()) m(k, i) -= x[j] * c;
  }
  return m;
}

RationalMatrix ad_basis(const LieAlgebra& alg, std::size_t i) {
  return ad_matrix(alg, unit_vector(alg.dim(), i));
}

Unimodularity is_unimodular(const LieAlgebra& alg) {
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const Rational t = ad_basis(alg, i).trace();
    if (!t.is_zero()) return {false, i, t};
  }
  return {};
}

Subspace bracket_space(const LieAlgebra& alg, const Subspace& a, const Subspace& b) {
  std::vector<RationalVector> gens;
  const auto ub = a.basis();
  const auto wb = b.basis();
  for (const auto& u : ub) {
    for (const auto& w : wb) {
      auto br = alg.bracket(u, w);
      if (!is_zero(br)) gens.push_back(std::move(br));
    }
  }
  return Subspace::span(alg.dim(), gens);
}

namespace {

template <typename Next>
std::vector<Subspace> iterate_series(const LieAlgebra& alg, Next next) {
  std::vector<Subspace> terms{Subspace::full(alg.dim())};
  // Dimensions strictly drop until the first repeat, so n + 1 terms suffice.
  for (std::size_t step = 0; step <= alg.dim(); ++step) {
    Subspace candidate = next(terms.back());
    if (candidate == terms.back()) break;
    terms.push_back(std::move(candidate));
  }
  return terms;
}

}  // namespace

std::vector<Subspace> derived_series(const LieAlgebra& alg) {
  return iterate_series(alg, [&](const Subspace& s) { return bracket_space(alg, s, s); });
}

std::vector<Subspace> lower_central_series(const LieAlgebra& alg) {
  const Subspace whole = Subspace::full(alg.dim());
  return iterate_series(alg, [&](const Subspace& s) { return bracket_space(alg, whole, s); });
}

bool is_solvable(const LieAlgebra& alg) { return derived_series(alg).back().is_zero(); }

bool is_nilpotent(const LieAlgebra& alg) { return lower_central_series(alg).back().is_zero(); }

Subspace center(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  RationalMatrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const RationalMatrix ad = ad_basis(alg, i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = ad(r, c);
  }
  return Subspace::span(n, kernel(stacked));
}

std::optional<IdealWitness> ideal_violation(const LieAlgebra& alg, const Subspace& v) {
  if (v.ambient_dim() != alg.dim()) throw InputError("subspace does not live in this algebra");
  const std::size_t n = alg.dim();
  for (const auto& x : v.basis()) {
    for (std::size_t i = 0; i < n; ++i) {
      auto br = alg.bracket(unit_vector(n, i), x);
      if (!v.contains(br)) return IdealWitness{i, x, std::move(br)};
    }
  }
  return std::nullopt;
}

Quotient quotient_algebra(const LieAlgebra& alg, const Subspace& ideal) {
  if (auto w = ideal_violation(alg, ideal)) {
    throw NotAnIdealError("subspace is not an ideal: [" + alg.basis_names()[w->basis_index] +
                              ", v] leaves it",
                          std::move(*w));
  }
  const std::size_t n = alg.dim();
  const std::size_t k = ideal.dim();
  if (k == n) throw InputError("quotient by the whole algebra is zero-dimensional");

  std::vector<bool> is_pivot(n, false);
  for (auto p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) complement.push_back(j);
  }

  // Subtracting the RREF rows clears the pivot coordinates; the remaining
  // (non-pivot) coordinates are the quotient coordinates.
  const RationalMatrix& rows = ideal.canonical_rows();
  RationalMatrix projection(complement.size(), n);
  for (std::size_t a = 0; a < complement.size(); ++a) {
    const std::size_t col = complement[a];
    projection(a, col) = 1;
    for (std::size_t r = 0; r < k; ++r) projection(a, ideal.pivots()[r]) -= rows(r, col);
  }

  StructureConstants constants;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < complement.size(); ++a) {
    names.push_back(alg.basis_names()[complement[a]]);
    for (std::size_t b = a + 1; b < complement.size(); ++b) {
      const RationalVector image = projection * alg.bracket_basis(complement[a], complement[b]);
      for (std::size_t c = 0; c < image.size(); ++c) {
        if (!image[c].is_zero()) constants[{a, b, c}] = image[c];
      }
    }
  }
  return {LieAlgebra(std::move(names), std::move(constants)), std::move(complement), std::move(projection)};
}

LieAlgebra semidirect_from_derivation(const RationalMatrix& derivation) {
  if (!derivation.is_square()) throw InputError("derivation must be square");
  const std::size_t n = derivation.rows();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  names.emplace_back("T");
  StructureConstants constants;
  // [v_j, T] = -D v_j
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!derivation(i, j).is_zero()) constants[{j, n, i}] = -derivation(i, j);
    }
  }
  return {std::move(names), std::move(constants)};
}

namespace {

RationalMatrix checked_inverse(const RationalMatrix& t, std::size_t n) {
  if (t.rows() != n || t.cols() != n) throw InputError("basis change has wrong shape");
  auto inv = inverse(t);
  if (!inv) throw InputError("basis change matrix is singular");
  return *std::move(inv);
}

}  // namespace

LieAlgebra change_of_basis(const LieAlgebra& alg, const RationalMatrix& transform,
                           std::vector<std::string> new_names) {
  const std::size_t n = alg.dim();
  const RationalMatrix inv = checked_inverse(transform, n);
  if (new_names.empty()) {
    for (std::size_t i = 0; i < n; ++i) new_names.push_back("f" + std::to_string(i + 1));
  }
  if (new_names.size() != n) throw InputError("basis change: name count mismatch");

  std::vector<RationalVector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(transform.column(j));
  StructureConstants constants;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const RationalVector image = inv * alg.bracket(cols[a], cols[b]);
      for (std::size_t c = 0; c < n; ++c) {
        if (!image[c].is_zero()) constants[{a, b, c}] = image[c];
      }
    }
  }
  return {std::move(new_names), std::move(constants)};
}

Covector transform_covector(const Covector& ell, const RationalMatrix& transform) {
  if (transform.rows() != ell.size() || !transform.is_square()) {
    throw InputError("basis change has wrong shape");
  }
  return Covector(transform.transpose() * ell.coeffs());
}

Subspace transform_subspace(const Subspace& v, const RationalMatrix& transform) {
  return v.image(checked_inverse(transform, v.ambient_dim()));
}

}  // namespace lieorbit
