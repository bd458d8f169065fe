#pragma once

#include "lieorbit/matrix.hpp"
#include "lieorbit/subspace.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lieorbit {

/// Structure-constant key (i, j, k) with i < j: [e_i, e_j] has coefficient c on e_k.
using StructureKey = std::array<std::size_t, 3>;
using StructureConstants = std::map<StructureKey, Rational>;

/// Finite-dimensional real Lie algebra given by rational structure constants
/// in a fixed basis. Only entries with i < j are stored; antisymmetry is
/// implied. The Jacobi identity is not enforced here, see validate_algebra().
class LieAlgebra {
public:
  LieAlgebra(std::vector<std::string> basis_names, StructureConstants structure);

  /// Abelian algebra of dimension n with names e1..en unless names are given.
  static LieAlgebra abelian(std::size_t n, std::vector<std::string> names = {});

  [[nodiscard]] std::size_t dim() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& basis_names() const { return names_; }
  [[nodiscard]] const StructureConstants& structure() const { return structure_; }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;

  /// Full antisymmetric constant c_{ij}^k.
  [[nodiscard]] Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  [[nodiscard]] RationalVector bracket_basis(std::size_t i, std::size_t j) const;
  [[nodiscard]] RationalVector bracket(const RationalVector& x, const RationalVector& y) const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
  std::vector<std::string> names_;
  StructureConstants structure_;
};

/// Element of the dual space, in the dual basis e_1^*, ..., e_n^*.
class Covector {
public:
  Covector() = default;
  explicit Covector(RationalVector coeffs) : coeffs_(std::move(coeffs)) {}
  static Covector zero(std::size_t n) { return Covector(RationalVector(n)); }
  static Covector dual_basis(std::size_t n, std::size_t i) { return Covector(unit_vector(n, i)); }

  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
  [[nodiscard]] const RationalVector& coeffs() const { return coeffs_; }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  [[nodiscard]] bool is_zero() const { return lieorbit::is_zero(coeffs_); }
  [[nodiscard]] Rational apply(const RationalVector& x) const { return dot(coeffs_, x); }

  friend Covector operator+(const Covector& a, const Covector& b) { return Covector(add(a.coeffs_, b.coeffs_)); }
  friend Covector operator-(const Covector& a, const Covector& b) { return Covector(subtract(a.coeffs_, b.coeffs_)); }
  friend Covector operator*(const Rational& s, const Covector& a) { return Covector(scale(s, a.coeffs_)); }
  friend bool operator==(const Covector&, const Covector&) = default;

private:
  RationalVector coeffs_;
};

struct JacobiViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  /// [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
  RationalVector residual;
};

struct ValidationReport {
  std::vector<JacobiViolation> violations;
  [[nodiscard]] bool valid() const { return violations.empty(); }
};

ValidationReport validate_algebra(const LieAlgebra& alg);

/// Matrix M with M e_j = [x, e_j].
RationalMatrix ad_matrix(const LieAlgebra& alg, const RationalVector& x);
RationalMatrix ad_basis(const LieAlgebra& alg, std::size_t i);

struct Unimodularity {
  bool unimodular = true;
  std::optional<std::size_t> witness;  ///< basis index with nonzero trace
  Rational witness_trace;
};

/// Tr(ad_X) is linear in X, so it suffices to test the basis.
Unimodularity is_unimodular(const LieAlgebra& alg);

/// span{[u, w] : u in a, w in b}
Subspace bracket_space(const LieAlgebra& alg, const Subspace& a, const Subspace& b);

/// Terms g = g^(0) ⊋ g^(1) ⊋ ... up to and including the first repeated term.
std::vector<Subspace> derived_series(const LieAlgebra& alg);
std::vector<Subspace> lower_central_series(const LieAlgebra& alg);
bool is_solvable(const LieAlgebra& alg);
bool is_nilpotent(const LieAlgebra& alg);
Subspace center(const LieAlgebra& alg);

/// A pair (e_i, v) with [e_i, v] outside the subspace.
struct IdealWitness {
  std::size_t basis_index = 0;
  RationalVector element;
  RationalVector bracket;
};

/// First bracket escaping the subspace, or nullopt when it is an ideal.
std::optional<IdealWitness> ideal_violation(const LieAlgebra& alg, const Subspace& v);

class NotAnIdealError : public InputError {
public:
  NotAnIdealError(const std::string& what, IdealWitness witness)
      : InputError(what), witness_(std::move(witness)) {}
  [[nodiscard]] const IdealWitness& witness() const { return witness_; }

private:
  IdealWitness witness_;
};

struct Quotient {
  LieAlgebra algebra;
  /// Basis indices of the ambient algebra spanning the chosen complement.
  std::vector<std::size_t> complement;
  /// (n-k) x n matrix sending ambient coordinates to quotient coordinates.
  RationalMatrix projection;
};

/// g / ideal on the complement spanned by the non-pivot coordinate axes.
/// Throws NotAnIdealError for a non-ideal and InputError when the quotient
/// would be zero-dimensional.
Quotient quotient_algebra(const LieAlgebra& alg, const Subspace& ideal);

/// V ⋊ R T with V = Q^n abelian and [T, v] = D v. Basis v1..vn, T.
LieAlgebra semidirect_from_derivation(const RationalMatrix& derivation);

/// New basis e'_j = sum_i T_ij e_i (the columns of T). Throws on singular T.
LieAlgebra change_of_basis(const LieAlgebra& alg, const RationalMatrix& transform,
                           std::vector<std::string> new_names = {});
/// Coefficients of the same functional in the new dual basis: T^t λ.
Covector transform_covector(const Covector& ell, const RationalMatrix& transform);
/// Coordinates of the same subspace in the new basis: T^{-1} V.
Subspace transform_subspace(const Subspace& v, const RationalMatrix& transform);

}  // namespace lieorbit
