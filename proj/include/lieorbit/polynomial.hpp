#pragma once

#include "lieorbit/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lieorbit {

/// Univariate polynomial with rational coefficients, lowest degree first.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational{}; }
  [[nodiscard]] Rational leading() const { return is_zero() ? Rational{} : coeffs_.back(); }

  [[nodiscard]] Rational evaluate(const Rational& x) const;
  [[nodiscard]] double evaluate(double x) const;
  [[nodiscard]] Polynomial derivative() const;
  /// Integer coefficients with gcd 1 and the same sign pattern (positive scale).
  [[nodiscard]] Polynomial primitive_part() const;
  [[nodiscard]] std::string to_string(const std::string& var = "t") const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

DivisionResult divide(const Polynomial& a, const Polynomial& b);

/// |lc(b)|^(deg a - deg b + 1) * a mod b. Scaling by a positive factor keeps
/// the sign information Sturm chains rely on.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);

/// det(t I - M) by the Faddeev-LeVerrier recursion (exact over Q).
Polynomial characteristic_polynomial(const RationalMatrix& m);

/// Res_t(p(t), u - t^2) up to sign: the polynomial whose roots are the squares
/// of the roots of p, computed as E(u)^2 - u O(u)^2 for p(t) = E(t^2) + t O(t^2),
/// normalized to a positive leading coefficient.
Polynomial squares_polynomial(const Polynomial& p);

/// Removes the factor u^k so that 0 is no longer a root.
Polynomial strip_zero_roots(const Polynomial& p);

/// Sturm chain p, p', -prem(...) ... with content removal at every step.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Distinct real roots in (-inf, 0). Requires p(0) != 0.
std::size_t count_negative_roots(const Polynomial& p);

}  // namespace lieorbit
