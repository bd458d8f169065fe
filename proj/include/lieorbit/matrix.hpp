#pragma once

#include "lieorbit/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lieorbit {

using RationalVector = std::vector<Rational>;

/// Dense exact matrix, row-major.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  /// Builds a matrix whose rows are the given vectors (all of length `cols`).
  static RationalMatrix from_rows(std::span<const RationalVector> rows, std::size_t cols);
  static RationalMatrix from_columns(std::span<const RationalVector> columns, std::size_t rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] RationalVector row(std::size_t r) const;
  [[nodiscard]] RationalVector column(std::size_t c) const;
  [[nodiscard]] RationalMatrix transpose() const;
  [[nodiscard]] Rational trace() const;
  [[nodiscard]] bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& m);
  friend RationalVector operator*(const RationalMatrix& m, const RationalVector& v);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form: the nonzero rows only, plus pivot columns.
struct RowEchelon {
  RationalMatrix matrix;
  std::vector<std::size_t> pivots;
};

/// Fraction-free Gauss-Jordan elimination over the integers (rows are scaled to
/// primitive integer vectors, content removed after every update), followed by
/// normalization of the pivots to 1. The result is the unique RREF.
RowEchelon row_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in RREF-derived order.
std::vector<RationalVector> kernel(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

/// nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

// Vector helpers.
RationalVector zero_vector(std::size_t n);
RationalVector unit_vector(std::size_t n, std::size_t i);
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector subtract(const RationalVector& a, const RationalVector& b);
RationalVector scale(const Rational& s, const RationalVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);
bool is_zero(const RationalVector& v);

}  // namespace lieorbit
