#include "lieorbit/matrix.hpp"

#include <algorithm>
#include <utility>

namespace lieorbit {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::span<const RationalVector> rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::span<const RationalVector> columns, std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational RationalMatrix::trace() const {
  Rational t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
  RationalMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
      }
    }
  }
  return p;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum dimension mismatch");
  RationalMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference dimension mismatch");
  RationalMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
  RationalMatrix r = m;
  for (auto& x : r.data_) x *= s;
  return r;
}

RationalVector operator*(const RationalMatrix& m, const RationalVector& v) {
  if (m.cols_ != v.size()) throw InputError("matrix-vector dimension mismatch");
  RationalVector out(m.rows_);
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (!v[j].is_zero() && !m(i, j).is_zero()) out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

namespace {

using IntRow = std::vector<mpz_class>;

// Scales a rational row to a primitive integer row with the same span.
IntRow to_integer_row(const RationalMatrix& m, std::size_t r) {
  mpz_class common = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const mpz_class den = m(r, c).denominator();
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), den.get_mpz_t());
  }
  IntRow row(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    row[c] = m(r, c).numerator() * (common / m(r, c).denominator());
  }
  return row;
}

void remove_content(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

RowEchelon row_echelon(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<IntRow> work;
  work.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    work.push_back(to_integer_row(m, r));
    remove_content(work.back());
  }

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pick = lead;
    while (pick < rows && work[pick][c] == 0) ++pick;
    if (pick == rows) continue;
    std::swap(work[lead], work[pick]);
    const mpz_class piv = work[lead][c];
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || work[r][c] == 0) continue;
      const mpz_class factor = work[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        work[r][k] = piv * work[r][k] - factor * work[lead][k];
      }
      remove_content(work[r]);
    }
    pivots.push_back(c);
    ++lead;
  }

  RowEchelon out{RationalMatrix(pivots.size(), cols), pivots};
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const mpz_class piv = work[r][pivots[r]];
    for (std::size_t k = 0; k < cols; ++k) out.matrix(r, k) = Rational(work[r][k], piv);
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return row_echelon(m).pivots.size(); }

std::vector<RationalVector> kernel(const RationalMatrix& m) {
  const RowEchelon e = row_echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.matrix(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pick = c;
    while (pick < n && a(pick, c).is_zero()) ++pick;
    if (pick == n) return Rational{};
    if (pick != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(pick, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Rational f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = row_echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.matrix(r, n + c);
  return inv;
}

RationalVector zero_vector(std::size_t n) { return RationalVector(n); }

RationalVector unit_vector(std::size_t n, std::size_t i) {
  RationalVector v(n);
  v.at(i) = 1;
  return v;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  RationalVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

RationalVector subtract(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  RationalVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

RationalVector scale(const Rational& s, const RationalVector& v) {
  RationalVector out = v;
  for (auto& x : out) x *= s;
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

}  // namespace lieorbit
