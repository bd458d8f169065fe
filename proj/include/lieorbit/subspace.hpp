#pragma once

#include "lieorbit/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace lieorbit {

/// A linear subspace of Q^n held in canonical form.
///
/// The basis is stored as the rows of a k x n matrix in reduced row echelon
/// form, which is the transpose of the reduced column-echelon n x k basis
/// matrix. Two subspaces are equal iff their canonical matrices are equal.
class Subspace {
public:
  Subspace() = default;

  static Subspace span(std::size_t ambient_dim, std::span<const RationalVector> vectors);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Span of the given coordinate axes.
  static Subspace coordinate(std::size_t ambient_dim, std::span<const std::size_t> axes);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
  [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
  [[nodiscard]] bool is_zero() const { return dim() == 0; }
  [[nodiscard]] bool is_full() const { return dim() == ambient_dim_; }

  /// Canonical basis, one vector per row.
  [[nodiscard]] const RationalMatrix& canonical_rows() const { return basis_; }
  /// n x k reduced column-echelon form.
  [[nodiscard]] RationalMatrix column_matrix() const { return basis_.transpose(); }
  [[nodiscard]] std::vector<RationalVector> basis() const;
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

  [[nodiscard]] bool contains(const RationalVector& v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;

  /// {f : f(v) = 0 for all v in this subspace}, in the dual coordinates.
  [[nodiscard]] Subspace annihilator() const;
  [[nodiscard]] Subspace intersect(const Subspace& other) const;
  [[nodiscard]] Subspace sum(const Subspace& other) const;

  /// Image under a linear map given by an n x n matrix acting on columns.
  [[nodiscard]] Subspace image(const RationalMatrix& map) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
  Subspace(std::size_t ambient_dim, RowEchelon echelon)
      : ambient_dim_(ambient_dim), basis_(std::move(echelon.matrix)), pivots_(std::move(echelon.pivots)) {}

  std::size_t ambient_dim_ = 0;
  RationalMatrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace lieorbit
