#include "lieorbit/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace lieorbit {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return {};
  mpz_class den_lcm = 1;
  for (const auto& c : coeffs_) {
    const mpz_class d = c.denominator();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    ints.push_back(c.numerator() * (den_lcm / c.denominator()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (const auto& x : ints) out.emplace_back(x / g, mpz_class(1));
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (!unit || i == 0) os << mag;
    if (i >= 1) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c = p.coeffs_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

DivisionResult divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lead = b.leading();
  for (long d = a.degree(); d >= db; --d) {
    const Rational f = rem[static_cast<std::size_t>(d)] / lead;
    if (f.is_zero()) continue;
    quot[static_cast<std::size_t>(d - db)] = f;
    for (long i = 0; i <= db; ++i) {
      rem[static_cast<std::size_t>(d - db + i)] -= f * b.coeff(static_cast<std::size_t>(i));
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const long delta = a.degree() - b.degree() + 1;
  const Rational lc = abs(b.leading());
  Rational factor = 1;
  for (long i = 0; i < delta; ++i) factor *= lc;
  return factor * divide(a, b).remainder;
}

Polynomial characteristic_polynomial(const RationalMatrix& m) {
  if (!m.is_square()) throw InputError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // Work with the integer matrix A = d M, d the common denominator; then
  // det(tI - M) = d^-n det(d t I - A), so coefficient j of M is c_A[j] / d^(n-j).
  mpz_class d = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
  std::vector<mpz_class> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = m(i, j).raw();
      a[i * n + j] = q.get_num() * (d / q.get_den());
    }

  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k, exact in Z
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  std::vector<mpz_class> mk(n * n);
  std::vector<mpz_class> next(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mpz_class sum = 0;
        for (std::size_t l = 0; l < n; ++l) sum += a[i * n + l] * mk[l * n + j];
        next[i * n + j] = std::move(sum);
      }
    std::swap(mk, next);
    for (std::size_t i = 0; i < n; ++i) mk[i * n + i] += c[n - k + 1];
    mpz_class trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += a[i * n + l] * mk[l * n + i];
    mpz_divexact_ui(c[n - k].get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -c[n - k];
  }

  std::vector<Rational> out(n + 1);
  mpz_class scale = 1;
  for (std::size_t j = n + 1; j-- > 0;) {
    out[j] = Rational(c[j], scale);
    scale *= d;
  }
  return Polynomial(std::move(out));
}

Polynomial squares_polynomial(const Polynomial& p) {
  std::vector<Rational> even;
  std::vector<Rational> odd;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    (i % 2 == 0 ? even : odd).push_back(p.coeffs()[i]);
  }
  const Polynomial e(std::move(even));
  const Polynomial o(std::move(odd));
  Polynomial q = e * e - Polynomial::monomial(1, 1) * (o * o);
  if (q.leading().sign() < 0) q = Rational(-1) * q;
  return q;
}

Polynomial strip_zero_roots(const Polynomial& p) {
  if (p.is_zero()) return p;
  std::size_t shift = 0;
  while (p.coeffs()[shift].is_zero()) ++shift;
  return Polynomial(std::vector<Rational>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(shift), p.coeffs().end()));
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p.primitive_part());
  Polynomial d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.primitive_part());
  while (true) {
    const Polynomial r = pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back((Rational(-1) * r).primitive_part());
  }
  return chain;
}

namespace {

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t count_negative_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
  if (p.coeff(0).is_zero()) throw std::domain_error("count_negative_roots requires p(0) != 0");
  const auto chain = sturm_sequence(p);
  std::vector<int> at_minus_inf;
  std::vector<int> at_zero;
  for (const auto& q : chain) {
    const int lead = q.leading().sign();
    at_minus_inf.push_back(q.degree() % 2 == 0 ? lead : -lead);
    at_zero.push_back(q.coeff(0).sign());
  }
  return sign_changes(at_minus_inf) - sign_changes(at_zero);
}

}  // namespace lieorbit
