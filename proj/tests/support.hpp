#pragma once

#include "lieorbit/fixtures.hpp"
#include "lieorbit/lie_algebra.hpp"
#include "lieorbit/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testsupport {

using lieorbit::Covector;
using lieorbit::LieAlgebra;
using lieorbit::Rational;
using lieorbit::RationalMatrix;
using lieorbit::RationalVector;

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational(long num = 5, long den = 4) { return {integer(-num, num), integer(1, den)}; }

  RationalVector vector(std::size_t n, long num = 5, long den = 4) {
    RationalVector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational(num, den));
    return v;
  }

  /// Sparse-ish covector; some coordinates forced to zero to reach special orbits.
  Covector covector(std::size_t n) {
    RationalVector v = vector(n);
    for (auto& x : v) {
      if (coin(0.3)) x = Rational(0);
    }
    return Covector(v);
  }

  RationalMatrix matrix(std::size_t rows, std::size_t cols, long num = 3, long den = 2) {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(num, den);
    return m;
  }

  RationalMatrix invertible(std::size_t n) {
    for (;;) {
      RationalMatrix m = matrix(n, n);
      if (!lieorbit::determinant(m).is_zero()) return m;
    }
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

/// Structure constants of the span of matrix units E_(r,c), r <= c (upper
/// triangular) or r < c (strictly upper), computed from matrix commutators.
inline LieAlgebra matrix_unit_algebra(std::size_t size, bool strict) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = strict ? r + 1 : r; c < size; ++c) units.emplace_back(r, c);
  auto position = [&](std::size_t r, std::size_t c) {
    return static_cast<std::size_t>(std::find(units.begin(), units.end(), std::pair{r, c}) - units.begin());
  };
  lieorbit::StructureConstants sc;
  std::vector<std::string> names;
  for (const auto& [r, c] : units) names.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
  for (std::size_t a = 0; a < units.size(); ++a) {
    for (std::size_t b = a + 1; b < units.size(); ++b) {
      const auto [i, j] = units[a];
      const auto [k, l] = units[b];
      // [E_ij, E_kl] = d_jk E_il - d_li E_kj
      if (j == k) sc[{a, b, position(i, l)}] += Rational(1);
      if (l == i) sc[{a, b, position(k, j)}] -= Rational(1);
    }
  }
  return {names, sc};
}

/// The standard filiform algebra: [X1, Xk] = X(k+1) for 2 <= k < n.
inline LieAlgebra filiform(std::size_t n) {
  lieorbit::StructureConstants sc;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("X" + std::to_string(i + 1));
  for (std::size_t k = 1; k + 1 < n; ++k) sc[{0, k, k + 1}] = Rational(1);
  return {names, sc};
}

inline std::vector<LieAlgebra> nilpotent_pool() {
  std::vector<LieAlgebra> pool;
  for (const char* name : {"abelian3", "heisenberg3", "heisenberg5"}) pool.push_back(lieorbit::fixture(name).algebra());
  pool.push_back(filiform(4));
  pool.push_back(filiform(5));
  pool.push_back(matrix_unit_algebra(4, true));
  return pool;
}

inline std::vector<LieAlgebra> algebra_pool() {
  std::vector<LieAlgebra> pool = nilpotent_pool();
  for (const char* name : {"e2-cover", "paper-5dim", "paper-6dim", "semidirect-traceless"}) {
    pool.push_back(lieorbit::fixture(name).algebra());
  }
  pool.push_back(matrix_unit_algebra(3, false));
  return pool;
}

/// A random algebra: a pool member or a semidirect product, in a random basis.
inline LieAlgebra random_algebra(Gen& g, const std::vector<LieAlgebra>& pool, bool allow_semidirect = true,
                                 bool allow_basis_change = true) {
  LieAlgebra base = pool[g.index(pool.size())];
  if (allow_semidirect && g.coin(0.3)) {
    const std::size_t n = 2 + g.index(3);
    base = lieorbit::semidirect_from_derivation(g.matrix(n, n));
  }
  if (allow_basis_change && g.coin(0.7)) return lieorbit::change_of_basis(base, g.invertible(base.dim()));
  return base;
}

/// Exact exp(M) for nilpotent M.
inline RationalMatrix nilpotent_exp(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  RationalMatrix result = RationalMatrix::identity(n);
  RationalMatrix term = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = term * m;
    term = Rational(1, static_cast<long>(k)) * term;
    if (term.is_zero()) break;
    result = result + term;
  }
  return result;
}

/// Leibniz expansion over all permutations.
inline Rational leibniz_determinant(const RationalMatrix& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rational total;
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b] ? 1 : 0;
    Rational prod(inversions % 2 == 0 ? 1 : -1);
    for (std::size_t r = 0; r < perm.size() && !prod.is_zero(); ++r) prod *= m(r, perm[r]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace testsupport
