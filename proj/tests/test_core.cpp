#include "doctest.h"

#include "support.hpp"

#include "lieorbit/exponentiality.hpp"
#include "lieorbit/polynomial.hpp"

#include <Eigen/Dense>

using namespace lieorbit;
using testsupport::Gen;

namespace {

RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

LieAlgebra h3() { return fixture("heisenberg3").algebra(); }
LieAlgebra e2() { return fixture("e2-cover").algebra(); }
LieAlgebra paper5() { return fixture("paper-5dim").algebra(); }
LieAlgebra paper6() { return fixture("paper-6dim").algebra(); }

Subspace sp(std::size_t n, std::vector<RationalVector> vs) { return Subspace::span(n, vs); }
Subspace axes(std::size_t n, std::vector<std::size_t> idx) { return Subspace::coordinate(n, idx); }

Subspace span_of(const LieAlgebra& alg, std::initializer_list<const char*> names) {
  std::vector<RationalVector> vs;
  for (const char* n : names) vs.push_back(unit_vector(alg.dim(), *alg.index_of(n)));
  return Subspace::span(alg.dim(), vs);
}

}  // namespace

TEST_CASE("rational parsing is exact and canonical") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-1/2") == Rational(-1, 2));
  CHECK(Rational::parse("-4/8").to_string() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("4/-8"), InputError);
  CHECK(Rational::parse("0/7").to_string() == "0");
  CHECK(Rational::parse("123456789012345678901234567890/3").to_string() == "41152263004115226300411522630");
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("0.5"), InputError);
  CHECK_THROWS_AS(Rational::parse(" 1"), InputError);
  CHECK_THROWS_AS(Rational::parse(""), InputError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
}

TEST_CASE("rank, kernel and inverse of exact matrices") {
  RationalMatrix m(3, 3);
  m(0, 0) = Rational(1); m(0, 1) = Rational(2); m(0, 2) = Rational(3);
  m(1, 0) = Rational(2); m(1, 1) = Rational(4); m(1, 2) = Rational(6);
  m(2, 0) = Rational(1); m(2, 1) = Rational(0); m(2, 2) = Rational(1, 2);
  CHECK(rank(m) == 2);
  const auto ker = kernel(m);
  REQUIRE(ker.size() == 1);
  CHECK(is_zero(m * ker[0]));
  CHECK(determinant(m).is_zero());
  CHECK_FALSE(inverse(m).has_value());

  Gen g(11);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalMatrix a = g.invertible(4);
    CHECK(determinant(a) == testsupport::leibniz_determinant(a));
    const auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a * *inv == RationalMatrix::identity(4));
  }
}

TEST_CASE("subspace canonical form makes equality exact") {
  const Subspace a = sp(3, {vec({1, 1, 0}), vec({0, 1, 1})});
  const Subspace b = sp(3, {vec({1, 2, 1}), vec({2, 1, -1}), vec({1, 0, -1})});
  CHECK(a.dim() == 2);
  CHECK(a == b);
  CHECK(a.contains(vec({3, 5, 2})));
  CHECK_FALSE(a.contains(vec({0, 0, 1})));
  const Subspace ann = a.annihilator();
  CHECK(ann.dim() == 1);
  for (const auto& v : a.basis()) CHECK(dot(ann.basis()[0], v).is_zero());
  CHECK(Subspace::zero(3).annihilator().is_full());
  CHECK(a.intersect(axes(3, {0, 1})).dim() == 1);
  CHECK(a.sum(axes(3, {2})).is_full());
}

TEST_CASE("validate_algebra accepts the fixtures and pinpoints a Jacobi failure") {
  for (const auto& [name, doc] : fixtures()) {
    INFO(name);
    CHECK(validate_algebra(doc.algebra()).valid());
  }
  StructureConstants sc{{{0, 1, 2}, Rational(1)}, {{0, 2, 0}, Rational(1)}};
  const LieAlgebra bogus({"X", "Y", "Z"}, sc);
  const ValidationReport report = validate_algebra(bogus);
  REQUIRE(report.violations.size() == 1);
  const auto& v = report.violations[0];
  CHECK(v.i == 0);
  CHECK(v.j == 1);
  CHECK(v.k == 2);
  // [X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]] = 0 + [Y,-X] + 0 = [X,Y] = Z
  CHECK(v.residual == vec({0, 0, 1}));
}

TEST_CASE("LieAlgebra rejects malformed structure") {
  CHECK_THROWS_AS(LieAlgebra({}, {}), InputError);
  CHECK_THROWS_AS(LieAlgebra({"X", "X"}, {}), InputError);
  CHECK_THROWS_AS(LieAlgebra({"X", "Y"}, {{{1, 0, 0}, Rational(1)}}), InputError);
  CHECK_THROWS_AS(LieAlgebra({"X", "Y"}, {{{0, 1, 5}, Rational(1)}}), InputError);
  CHECK(LieAlgebra({"X"}, {}).dim() == 1);
}

TEST_CASE("ad matrices") {
  const LieAlgebra h = h3();
  const RationalMatrix adx = ad_basis(h, 0);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) CHECK(adx(r, c) == Rational(r == 2 && c == 1 ? 1 : 0));
  CHECK(ad_matrix(h, zero_vector(3)).is_zero());

  const LieAlgebra g = paper6();
  const RationalMatrix ada = ad_basis(g, *g.index_of("A"));
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) {
      Rational want;
      if (r == c && g.basis_names()[c] == "P") want = Rational(1, 2);
      if (r == c && g.basis_names()[c] == "R") want = Rational(1, 2);
      if (r == c && g.basis_names()[c] == "S") want = Rational(1);
      CHECK(ada(r, c) == want);
    }
  const RationalMatrix adb = ad_basis(g, *g.index_of("B"));
  CHECK(adb(*g.index_of("P"), *g.index_of("P")) == Rational(-1, 2));
}

TEST_CASE("ad is a homomorphism and its trace is linear") {
  Gen gen(21);
  const auto pool = testsupport::algebra_pool();
  for (int trial = 0; trial < 100; ++trial) {
    const LieAlgebra alg = testsupport::random_algebra(gen, pool);
    const RationalVector x = gen.vector(alg.dim());
    const RationalVector y = gen.vector(alg.dim());
    const RationalMatrix ax = ad_matrix(alg, x);
    const RationalMatrix ay = ad_matrix(alg, y);
    CHECK(ad_matrix(alg, alg.bracket(x, y)) == ax * ay - ay * ax);
    const Rational a = gen.rational();
    const Rational b = gen.rational();
    CHECK(ad_matrix(alg, add(scale(a, x), scale(b, y))).trace() == a * ax.trace() + b * ay.trace());
  }
}

TEST_CASE("unimodularity with a basis witness") {
  CHECK(is_unimodular(paper5()).unimodular);
  const Unimodularity u = is_unimodular(paper6());
  CHECK_FALSE(u.unimodular);
  REQUIRE(u.witness.has_value());
  CHECK(paper6().basis_names()[*u.witness] == "A");
  CHECK(u.witness_trace == Rational(2));
  for (const auto& alg : testsupport::nilpotent_pool()) CHECK(is_unimodular(alg).unimodular);
}

TEST_CASE("derived and lower central series") {
  const auto hc = lower_central_series(h3());
  REQUIRE(hc.size() == 3);
  CHECK(hc[1] == span_of(h3(), {"Z"}));
  CHECK(hc[2].is_zero());

  const LieAlgebra e = e2();
  const auto ed = derived_series(e);
  REQUIRE(ed.size() == 3);
  CHECK(ed[1] == span_of(e, {"X", "Y"}));
  CHECK(ed[2].is_zero());
  const auto ec = lower_central_series(e);
  CHECK(ec.back() == span_of(e, {"X", "Y"}));
  CHECK(is_solvable(e));
  CHECK_FALSE(is_nilpotent(e));
  CHECK(center(e).is_zero());

  const auto ab = derived_series(fixture("abelian3").algebra());
  REQUIRE(ab.size() == 2);
  CHECK(ab[1].is_zero());

  CHECK(is_solvable(paper6()));
  CHECK_FALSE(is_nilpotent(paper6()));
  CHECK(center(paper6()).is_zero());
  CHECK(center(h3()) == span_of(h3(), {"Z"}));

  // sl2 is not solvable
  const LieAlgebra sl2({"H", "E", "F"}, {{{0, 1, 1}, Rational(2)}, {{0, 2, 2}, Rational(-2)}, {{1, 2, 0}, Rational(1)}});
  CHECK(validate_algebra(sl2).valid());
  CHECK_FALSE(is_solvable(sl2));
  CHECK(exponentiality_status(sl2).status == Exponentiality::refuted);
}

TEST_CASE("series dimensions decrease strictly until they stop") {
  Gen gen(31);
  const auto pool = testsupport::algebra_pool();
  for (int trial = 0; trial < 100; ++trial) {
    const LieAlgebra alg = testsupport::random_algebra(gen, pool);
    for (const auto& series : {derived_series(alg), lower_central_series(alg)}) {
      CHECK(series.size() <= alg.dim() + 1);
      CHECK(series.front().is_full());
      for (std::size_t k = 1; k < series.size(); ++k) CHECK(series[k].dim() < series[k - 1].dim());
    }
  }
}

TEST_CASE("quotient algebras") {
  const LieAlgebra g5 = paper5();
  const Quotient q = quotient_algebra(g5, span_of(g5, {"X1", "X2", "X4"}));
  REQUIRE(q.algebra.dim() == 2);
  CHECK(validate_algebra(q.algebra).valid());
  // complement {X3, X5}: [x3, x5] = -x3
  CHECK(q.algebra.structure_constant(0, 1, 0) == Rational(-1));
  CHECK(q.algebra.structure_constant(0, 1, 1).is_zero());
  CHECK_FALSE(is_unimodular(q.algebra).unimodular);

  const Quotient hq = quotient_algebra(h3(), center(h3()));
  CHECK(hq.algebra.dim() == 2);
  CHECK(hq.algebra.structure().empty());

  const Quotient same = quotient_algebra(paper6(), Subspace::zero(6));
  CHECK(same.algebra.structure().size() == paper6().structure().size());

  const LieAlgebra g6 = paper6();
  try {
    (void)quotient_algebra(g6, span_of(g6, {"B", "Q"}));
    FAIL("expected NotAnIdealError");
  } catch (const NotAnIdealError& e) {
    CHECK_FALSE(span_of(g6, {"B", "Q"}).contains(e.witness().bracket));
  }
}

TEST_CASE("quotients by ideals are Lie algebras") {
  Gen gen(41);
  const auto pool = testsupport::algebra_pool();
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const LieAlgebra alg = testsupport::random_algebra(gen, pool);
    const Subspace ideal = gen.coin() ? derived_series(alg)[std::min<std::size_t>(1, derived_series(alg).size() - 1)]
                                      : largest_ideal_in(alg, stabilizer(alg, gen.covector(alg.dim())));
    if (ideal.is_full()) continue;
    REQUIRE(is_ideal(alg, ideal).ideal);
    CHECK(validate_algebra(quotient_algebra(alg, ideal).algebra).valid());
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("semidirect products from derivations") {
  RationalMatrix rot(2, 2);
  rot(0, 1) = Rational(1);
  rot(1, 0) = Rational(-1);
  const LieAlgebra e = semidirect_from_derivation(rot);
  CHECK(validate_algebra(e).valid());
  CHECK(exponentiality_status(e).status == Exponentiality::refuted);
  CHECK(is_unimodular(e).unimodular);

  CHECK(semidirect_from_derivation(RationalMatrix(3, 3)).structure().empty());

  RationalMatrix d(2, 2);
  d(0, 0) = Rational(1);
  d(1, 1) = Rational(-1);
  const LieAlgebra s = semidirect_from_derivation(d);
  CHECK(is_unimodular(s).unimodular);
  CHECK(s.bracket_basis(2, 0) == vec({1, 0, 0}));  // [T, v1] = v1
}

TEST_CASE("change of basis conjugates ad and preserves brackets") {
  Gen gen(51);
  const auto pool = testsupport::algebra_pool();
  for (int trial = 0; trial < 100; ++trial) {
    const LieAlgebra alg = pool[gen.index(pool.size())];
    const RationalMatrix t = gen.invertible(alg.dim());
    const RationalMatrix tinv = *inverse(t);
    const LieAlgebra alt = change_of_basis(alg, t);
    CHECK(validate_algebra(alt).valid());
    const RationalVector x = gen.vector(alg.dim());
    CHECK(ad_matrix(alt, tinv * x) == tinv * ad_matrix(alg, x) * t);
  }
  const LieAlgebra same = change_of_basis(h3(), RationalMatrix::identity(3), h3().basis_names());
  CHECK(same.structure() == h3().structure());

  RationalMatrix swap(3, 3);
  swap(0, 1) = Rational(1);
  swap(1, 0) = Rational(1);
  swap(2, 2) = Rational(1);
  const LieAlgebra swapped = change_of_basis(h3(), swap);
  CHECK(swapped.structure_constant(0, 1, 2) == Rational(-1));
  CHECK_THROWS_AS(change_of_basis(h3(), RationalMatrix(3, 3)), InputError);
}

TEST_CASE("characteristic polynomial matches a Leibniz determinant oracle") {
  Gen gen(61);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + gen.index(5);
    const RationalMatrix m = gen.matrix(n, n);
    const Polynomial p = characteristic_polynomial(m);
    CHECK(p.degree() == static_cast<long>(n));
    for (int k = 0; k < 3; ++k) {
      const Rational t = gen.rational(7, 3);
      CHECK(p.evaluate(t) == testsupport::leibniz_determinant(t * RationalMatrix::identity(n) - m));
    }
  }
}

namespace {

/// Sylvester matrix determinant of a (degree m) and b (degree n).
Rational sylvester_resultant(const Polynomial& a, const Polynomial& b) {
  const auto m = static_cast<std::size_t>(a.degree());
  const auto n = static_cast<std::size_t>(b.degree());
  RationalMatrix s(m + n, m + n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = a.coeff(m - k);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = b.coeff(n - k);
  return testsupport::leibniz_determinant(s);
}

}  // namespace

TEST_CASE("squares polynomial is proportional to the resultant Res_t(p(t), u - t^2)") {
  Gen gen(71);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + gen.index(4);
    const Polynomial p = characteristic_polynomial(gen.matrix(n, n));
    const Polynomial q = squares_polynomial(p);
    CHECK(q.degree() == p.degree());
    CHECK(q.leading().sign() > 0);
    std::optional<Rational> ratio;
    for (int k = 0; k < 4; ++k) {
      const Rational u = gen.rational(9, 4);
      const Polynomial shift = Polynomial({u, Rational(0), Rational(-1)});  // u - t^2
      const Rational res = sylvester_resultant(p, shift);
      const Rational qu = q.evaluate(u);
      if (qu.is_zero()) {
        CHECK(res.is_zero());
        continue;
      }
      if (!ratio) ratio = res / qu;
      CHECK(res == *ratio * qu);
    }
  }
}

TEST_CASE("Sturm counting of negative roots") {
  // (u + 1)(u + 2)(u - 3)
  const Polynomial p = Polynomial({Rational(-6), Rational(-7), Rational(0), Rational(1)});
  CHECK(count_negative_roots(p) == 2);
  // u (u + 1)^2 after removing the zero root: double root counted once
  const Polynomial q = strip_zero_roots(Polynomial({Rational(0), Rational(1), Rational(2), Rational(1)}));
  CHECK(q.degree() == 2);
  CHECK(count_negative_roots(q) == 1);
  CHECK(count_negative_roots(Polynomial({Rational(1), Rational(0), Rational(1)})) == 0);
  CHECK_THROWS(count_negative_roots(Polynomial({Rational(0), Rational(1)})));
}

TEST_CASE("pure imaginary spectrum certificates") {
  const LieAlgebra e = e2();
  const SpectrumCertificate c = pure_imaginary_spectrum_certificate(e, unit_vector(3, *e.index_of("T")));
  CHECK(c.charpoly == Polynomial({Rational(0), Rational(1), Rational(0), Rational(1)}));  // t^3 + t
  CHECK(c.negative_root_count == 1);
  CHECK(c.witness_found());

  const LieAlgebra g6 = paper6();
  const SpectrumCertificate a = pure_imaginary_spectrum_certificate(g6, unit_vector(6, *g6.index_of("A")));
  CHECK_FALSE(a.witness_found());
  // spectrum {0, 0, 1/2, 0, 1/2, 1}
  CHECK(a.charpoly.evaluate(Rational(1, 2)).is_zero());
  CHECK(a.charpoly.evaluate(Rational(1)).is_zero());

  Gen gen(81);
  for (const auto& alg : testsupport::nilpotent_pool()) {
    for (int k = 0; k < 5; ++k) {
      const SpectrumCertificate n = pure_imaginary_spectrum_certificate(alg, gen.vector(alg.dim()));
      CHECK(n.charpoly == Polynomial::monomial(Rational(1), alg.dim()));
      CHECK_FALSE(n.witness_found());
    }
  }
}

TEST_CASE("spectrum certificate agrees with a numeric eigensolver") {
  Gen gen(91);
  const auto pool = testsupport::algebra_pool();
  int witnesses = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const LieAlgebra alg = testsupport::random_algebra(gen, pool);
    const RationalVector x = gen.vector(alg.dim());
    const SpectrumCertificate c = pure_imaginary_spectrum_certificate(alg, x);
    Eigen::MatrixXd m(alg.dim(), alg.dim());
    const RationalMatrix ad = ad_matrix(alg, x);
    for (std::size_t r = 0; r < alg.dim(); ++r)
      for (std::size_t col = 0; col < alg.dim(); ++col) m(r, col) = ad(r, col).to_double();
    const Eigen::VectorXcd eig = Eigen::EigenSolver<Eigen::MatrixXd>(m, false).eigenvalues();
    bool numeric_witness = false;
    bool ambiguous = false;
    for (Eigen::Index i = 0; i < eig.size(); ++i) {
      const double re = std::abs(eig(i).real());
      const double im = std::abs(eig(i).imag());
      if (re < 1e-8 && im > 1e-4) numeric_witness = true;
      if (im > 1e-4 && re >= 1e-8 && re < 1e-5) ambiguous = true;
    }
    if (ambiguous) continue;
    CHECK(c.witness_found() == numeric_witness);
    witnesses += numeric_witness ? 1 : 0;
  }
  CHECK(witnesses > 5);
}

TEST_CASE("exponentiality status") {
  CHECK(exponentiality_status(h3()).status == Exponentiality::verified_nilpotent);
  const ExponentialityStatus e = exponentiality_status(e2());
  CHECK(e.status == Exponentiality::refuted);
  REQUIRE(e.witness.has_value());
  CHECK(e.witness->element == unit_vector(3, *e2().index_of("T")));
  for (const char* name : {"paper-5dim", "paper-6dim"}) {
    const ExponentialityStatus s = exponentiality_status(fixture(name).algebra(), 200, 0);
    CHECK(s.status == Exponentiality::unverified);
    CHECK(s.elements_tested == fixture(name).dim() + 200);
  }
  CHECK(sample_rational_vector(4, 7, 3) == sample_rational_vector(4, 7, 3));
  CHECK(parse_exponentiality(to_string(Exponentiality::refuted)) == Exponentiality::refuted);
  CHECK_THROWS_AS(parse_exponentiality("exponential"), InputError);
}
