#include "lieorbit/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace lieorbit {

Eigen::MatrixXd to_float(const RationalMatrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).to_double();
  return out;
}

Eigen::VectorXd to_float(const RationalVector& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].to_double();
  return out;
}

Eigen::MatrixXd ad_matrix_float(const LieAlgebra& alg, const Eigen::VectorXd& x) {
  const auto n = static_cast<Eigen::Index>(alg.dim());
  if (x.size() != n) throw InputError("ad_matrix_float: vector has wrong length");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [key, c] : alg.structure()) {
    const auto i = static_cast<Eigen::Index>(key[0]);
    const auto j = static_cast<Eigen::Index>(key[1]);
    const auto k = static_cast<Eigen::Index>(key[2]);
    const double cv = c.to_double();
    m(k, j) += x(i) * cv;
    m(k, i) -= x(j) * cv;
  }
  return m;
}

Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw InputError("matrix_exp: matrix must be square");
  if (m.rows() > 64) throw InputError("matrix_exp: dimension above 64");
  if (!m.allFinite()) throw InputError("matrix_exp: non-finite entry");
  const Eigen::Index n = m.rows();

  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXd a = m / std::ldexp(1.0, squarings);

  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = term * a / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() <= std::numeric_limits<double>::epsilon() * 1e-3) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

Eigen::VectorXd coadjoint_flow(const LieAlgebra& alg, const Eigen::VectorXd& ell, const Eigen::VectorXd& x,
                               double t) {
  if (ell.size() != static_cast<Eigen::Index>(alg.dim())) throw InputError("coadjoint_flow: covector has wrong length");
  const Eigen::MatrixXd m = ad_matrix_float(alg, x);
  return matrix_exp(-t * m).transpose() * ell;
}

Eigen::VectorXd replay_word(const LieAlgebra& alg, const Eigen::VectorXd& base, const Word& word) {
  const auto n = static_cast<Eigen::Index>(alg.dim());
  Eigen::VectorXd point = base;
  for (const auto& s : word) {
    if (s.basis_index >= alg.dim()) throw InputError("word refers to a missing basis element");
    point = coadjoint_flow(alg, point, Eigen::VectorXd::Unit(n, static_cast<Eigen::Index>(s.basis_index)), s.step);
  }
  return point;
}

OrbitSample orbit_sample(const LieAlgebra& alg, const Covector& ell, const SampleOptions& options) {
  if (options.n_points == 0) throw InputError("orbit_sample: need at least one point");
  OrbitSample sample;
  sample.base = to_float(ell);
  sample.seed = options.seed;
  sample.tolerance = options.tolerance;
  const std::uint64_t n = alg.dim();
  for (std::uint64_t i = 0; i < options.n_points; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32U),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32U)};
    std::mt19937_64 rng(seq);
    Word word;
    for (std::size_t k = 0; k < options.word_length; ++k) {
      const auto index = static_cast<std::size_t>(rng() % n);
      const double unit = static_cast<double>(rng() >> 11U) * 0x1.0p-53;
      word.push_back({index, (2.0 * unit - 1.0) * options.step_scale});
    }
    sample.points.push_back(replay_word(alg, sample.base, word));
    sample.words.push_back(std::move(word));
  }
  return sample;
}

double affine_residual(const Eigen::VectorXd& point, const Covector& ell, const Subspace& direction) {
  const Eigen::VectorXd diff = point - to_float(ell);
  if (direction.is_zero()) return diff.cwiseAbs().maxCoeff();
  const Eigen::MatrixXd basis = to_float(direction.column_matrix());
  const Eigen::VectorXd coeffs = basis.colPivHouseholderQr().solve(diff);
  return (diff - basis * coeffs).cwiseAbs().maxCoeff();
}

bool affine_membership(const Eigen::VectorXd& point, const Covector& ell, const Subspace& direction, double tol) {
  if (point.size() != static_cast<Eigen::Index>(ell.size()) || direction.ambient_dim() != ell.size()) {
    throw InputError("affine_membership: dimension mismatch");
  }
  return affine_residual(point, ell, direction) < tol;
}

std::size_t tangent_rank(const LieAlgebra& alg, const Eigen::VectorXd& point, double tol) {
  const auto n = static_cast<Eigen::Index>(alg.dim());
  if (point.size() != n) throw InputError("tangent_rank: point has wrong length");
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [key, c] : alg.structure()) {
    const auto i = static_cast<Eigen::Index>(key[0]);
    const auto j = static_cast<Eigen::Index>(key[1]);
    const double v = point(static_cast<Eigen::Index>(key[2])) * c.to_double();
    b(i, j) += v;
    b(j, i) -= v;
  }
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(b).singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol * sv(0)) ++r;
  }
  return r;
}

double SparsePolynomial::evaluate(const Eigen::VectorXd& point) const {
  double total = 0.0;
  for (const auto& term : terms) {
    double v = term.coeff.to_double();
    for (const auto& [index, power] : term.powers) {
      if (static_cast<Eigen::Index>(index) >= point.size()) throw InputError("invariant refers to a missing coordinate");
      v *= std::pow(point(static_cast<Eigen::Index>(index)), static_cast<double>(power));
    }
    total += v;
  }
  return total;
}

bool InvariantReport::pass() const {
  return std::all_of(results.begin(), results.end(), [](const InvariantResult& r) { return r.pass; });
}

InvariantReport fixture_invariant_check(std::span<const Eigen::VectorXd> points,
                                        std::span<const FixtureInvariant> invariants, double tol) {
  InvariantReport report;
  for (const auto& inv : invariants) {
    InvariantResult res;
    res.name = inv.name;
    const double expected = inv.expected.to_double();
    for (std::size_t p = 0; p < points.size(); ++p) {
      const double den = inv.denominator.evaluate(points[p]);
      if (std::abs(den) < 10.0 * tol) {
        ++res.skipped;
        report.warnings.push_back(inv.name + ": denominator vanishes at point " + std::to_string(p) + ", skipped");
        continue;
      }
      const double value = inv.numerator.evaluate(points[p]) / den;
      switch (inv.kind) {
        case InvariantKind::equals:
          res.max_deviation = std::max(res.max_deviation, std::abs(value - expected));
          if (!std::isfinite(value)) res.max_deviation = std::numeric_limits<double>::infinity();
          break;
        case InvariantKind::positive:
          if (!(value > 0.0)) ++res.violations;
          break;
        case InvariantKind::negative:
          if (!(value < 0.0)) ++res.violations;
          break;
      }
    }
    res.pass = res.max_deviation < tol && res.violations == 0;
    report.results.push_back(std::move(res));
  }
  return report;
}

InvariantReport fixture_invariant_check(const OrbitSample& sample, std::span<const FixtureInvariant> invariants,
                                        double tol) {
  return fixture_invariant_check(std::span<const Eigen::VectorXd>(sample.points), invariants, tol);
}

Eigen::VectorXd OrbitParametrization::evaluate(const std::map<std::string, double>& values) const {
  auto lookup = [&](const std::string& param) {
    const auto it = values.find(param);
    if (it == values.end()) throw InputError("parametrization '" + name + "': missing value for '" + param + "'");
    return it->second;
  };
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t c = 0; c < coords.size(); ++c) {
    double total = 0.0;
    for (const auto& term : coords[c]) {
      double v = term.coeff.to_double();
      for (const auto& [param, power] : term.powers) v *= std::pow(lookup(param), static_cast<double>(power));
      double exponent = 0.0;
      for (const auto& [param, rate] : term.exponent) exponent += rate.to_double() * lookup(param);
      total += v * std::exp(exponent);
    }
    out(static_cast<Eigen::Index>(c)) = total;
  }
  return out;
}

const OrbitParametrization* OrbitFixture::find_parametrization(const std::string& name) const {
  for (const auto& p : parametrizations) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

double flow_rate_deviation(const LieAlgebra& alg, const Covector& ell, const FlowDirection& direction) {
  if (direction.generator >= alg.dim() || direction.coordinate >= alg.dim()) {
    throw InputError("flow direction refers to a missing basis element");
  }
  const auto coord = static_cast<Eigen::Index>(direction.coordinate);
  const Eigen::VectorXd base = to_float(ell);
  if (base(coord) == 0.0) throw InputError("flow direction: coordinate vanishes at the base point");
  const Eigen::VectorXd x = Eigen::VectorXd::Unit(base.size(), static_cast<Eigen::Index>(direction.generator));
  double worst = 0.0;
  for (const double t : {1.0, -1.0}) {
    const double ratio = coadjoint_flow(alg, base, x, t)(coord) / base(coord);
    worst = std::max(worst, std::abs(ratio - std::exp(direction.rate.to_double() * t)));
  }
  return worst;
}

MidpointResult midpoint_witness_details(const LieAlgebra& alg, const OrbitFixture& fixture, double p, double a,
                                        const Covector& target, double tol) {
  if (!fixture.midpoint) throw InputError("fixture has no midpoint data");
  const auto* first = fixture.find_parametrization(fixture.midpoint->first);
  const auto* second = fixture.find_parametrization(fixture.midpoint->second);
  if (first == nullptr || second == nullptr) throw InputError("midpoint refers to a missing parametrization");
  if (target.size() != alg.dim()) throw InputError("midpoint target has wrong length");

  const std::map<std::string, double> values{{"p", p}, {"a", a}};
  MidpointResult res;
  res.first = first->evaluate(values);
  res.second = second->evaluate(values);
  if (res.first.size() != static_cast<Eigen::Index>(alg.dim())) throw InputError("parametrization has wrong length");
  res.midpoint_deviation = (0.5 * (res.first + res.second) - to_float(target)).cwiseAbs().maxCoeff();

  const std::vector<Eigen::VectorXd> ends{res.first, res.second};
  const InvariantReport inv = fixture_invariant_check(ends, fixture.invariants, tol);
  for (const auto& r : inv.results) res.max_invariant_deviation = std::max(res.max_invariant_deviation, r.max_deviation);
  res.passed = res.midpoint_deviation < tol && inv.pass() && inv.warnings.empty();
  return res;
}

bool midpoint_witness_check(const LieAlgebra& alg, const OrbitFixture& fixture, double p, double a,
                            const Covector& target, double tol) {
  return midpoint_witness_details(alg, fixture, p, a, target, tol).passed;
}

}  // namespace lieorbit
