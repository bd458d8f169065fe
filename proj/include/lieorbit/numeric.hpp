#pragma once

#include "lieorbit/lie_algebra.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lieorbit {

// Tolerances used across the numeric checks.
inline constexpr double kMembershipTolerance = 1e-9;
inline constexpr double kExpSelfCheckTolerance = 1e-12;
inline constexpr double kRankCutoff = 1e-8;

Eigen::MatrixXd to_float(const RationalMatrix& m);
Eigen::VectorXd to_float(const RationalVector& v);
inline Eigen::VectorXd to_float(const Covector& c) { return to_float(c.coeffs()); }

/// ad_x in floating point, M e_j = [x, e_j].
Eigen::MatrixXd ad_matrix_float(const LieAlgebra& alg, const Eigen::VectorXd& x);

/// Scaling and squaring with a Taylor core. Throws InputError on non-finite
/// entries or n > 64.
Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& m);

/// Coefficients of ell o exp(-t ad_X): transpose(exp(-t M)) * ell with M = ad_X.
/// This is Ad*(exp tX) ell under the convention <Ad*(g) ell, Y> = <ell, Ad(g^-1) Y>.
Eigen::VectorXd coadjoint_flow(const LieAlgebra& alg, const Eigen::VectorXd& ell, const Eigen::VectorXd& x, double t);

struct WordStep {
  std::size_t basis_index = 0;
  double step = 0.0;
  friend bool operator==(const WordStep&, const WordStep&) = default;
};
using Word = std::vector<WordStep>;

struct SampleOptions {
  std::size_t n_points = 200;
  std::size_t word_length = 8;
  double step_scale = 1.0;
  std::uint64_t seed = 0;
  double tolerance = kMembershipTolerance;
};

struct OrbitSample {
  Eigen::VectorXd base;
  std::vector<Eigen::VectorXd> points;
  std::vector<Word> words;
  std::uint64_t seed = 0;
  double tolerance = kMembershipTolerance;
};

/// Applies the flows of a word, left to right, starting at `base`.
Eigen::VectorXd replay_word(const LieAlgebra& alg, const Eigen::VectorXd& base, const Word& word);

/// Point i uses its own generator seeded from (seed, i), so results do not
/// depend on evaluation order.
OrbitSample orbit_sample(const LieAlgebra& alg, const Covector& ell, const SampleOptions& options = {});

/// Sup-norm of (point - ell) minus its least-squares projection onto direction.
double affine_residual(const Eigen::VectorXd& point, const Covector& ell, const Subspace& direction);
bool affine_membership(const Eigen::VectorXd& point, const Covector& ell, const Subspace& direction,
                       double tol = kMembershipTolerance);

/// Singular values above tol * largest of the matrix point([e_i, e_j]).
std::size_t tangent_rank(const LieAlgebra& alg, const Eigen::VectorXd& point, double tol = kRankCutoff);

/// Polynomial in the dual coordinates with rational coefficients.
struct PolyTerm {
  Rational coeff;
  std::map<std::size_t, unsigned> powers;  ///< coordinate index -> exponent
  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

struct SparsePolynomial {
  std::vector<PolyTerm> terms;
  [[nodiscard]] double evaluate(const Eigen::VectorXd& point) const;
  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;
};

enum class InvariantKind { equals, positive, negative };

/// numerator / denominator, either equal to `expected` or of a fixed sign.
struct FixtureInvariant {
  std::string name;
  SparsePolynomial numerator;
  SparsePolynomial denominator;
  InvariantKind kind = InvariantKind::equals;
  Rational expected;
  friend bool operator==(const FixtureInvariant&, const FixtureInvariant&) = default;
};

struct InvariantResult {
  std::string name;
  double max_deviation = 0.0;  ///< equals-kind only
  std::size_t violations = 0;  ///< sign-kind only
  std::size_t skipped = 0;
  bool pass = true;
};

struct InvariantReport {
  std::vector<InvariantResult> results;
  std::vector<std::string> warnings;
  [[nodiscard]] bool pass() const;
};

/// Evaluates every invariant at every point; points whose denominator falls
/// below 10 * tol are skipped with a warning.
InvariantReport fixture_invariant_check(std::span<const Eigen::VectorXd> points,
                                        std::span<const FixtureInvariant> invariants, double tol);
InvariantReport fixture_invariant_check(const OrbitSample& sample, std::span<const FixtureInvariant> invariants,
                                        double tol);

/// coeff * prod param^k * exp(sum c_j param_j)
struct ParamTerm {
  Rational coeff;
  std::map<std::string, unsigned> powers;
  std::map<std::string, Rational> exponent;
  friend bool operator==(const ParamTerm&, const ParamTerm&) = default;
};

/// Covector-valued map of real parameters, transcribed from a closed-form
/// orbit description. Coordinates without terms are zero.
struct OrbitParametrization {
  std::string name;
  std::string orbit_of;  ///< functional name whose orbit this parametrizes
  std::vector<std::string> params;
  std::vector<std::vector<ParamTerm>> coords;  ///< one term list per basis index
  [[nodiscard]] Eigen::VectorXd evaluate(const std::map<std::string, double>& values) const;
  friend bool operator==(const OrbitParametrization&, const OrbitParametrization&) = default;
};

/// Two parametrized orbit points (parameters p and a) whose average is
/// compared with a target functional.
struct MidpointSpec {
  std::string first;
  std::string second;
  std::string target;
  friend bool operator==(const MidpointSpec&, const MidpointSpec&) = default;
};

/// Expected d/dt log(coordinate) along the flow of a generator, pinning the
/// sign convention of coadjoint_flow.
struct FlowDirection {
  std::string functional;
  std::size_t generator = 0;
  std::size_t coordinate = 0;
  Rational rate;
  friend bool operator==(const FlowDirection&, const FlowDirection&) = default;
};

struct OrbitFixture {
  std::string base;  ///< functional name
  std::vector<FixtureInvariant> invariants;
  std::vector<OrbitParametrization> parametrizations;
  std::optional<MidpointSpec> midpoint;
  std::optional<FlowDirection> flow_direction;

  [[nodiscard]] const OrbitParametrization* find_parametrization(const std::string& name) const;
  friend bool operator==(const OrbitFixture&, const OrbitFixture&) = default;
};

/// max over t = +-1 of |c(t) / c(0) - exp(rate * t)| where c is the recorded
/// coordinate of the flow of ell along the generator. Throws if c(0) == 0.
double flow_rate_deviation(const LieAlgebra& alg, const Covector& ell, const FlowDirection& direction);

struct MidpointResult {
  Eigen::VectorXd first;
  Eigen::VectorXd second;
  double midpoint_deviation = 0.0;
  double max_invariant_deviation = 0.0;
  bool passed = false;
};

/// Averages the fixture's two endpoints at (p, a), compares with target and
/// checks both endpoints against the fixture invariants.
MidpointResult midpoint_witness_details(const LieAlgebra& alg, const OrbitFixture& fixture, double p, double a,
                                        const Covector& target, double tol);
bool midpoint_witness_check(const LieAlgebra& alg, const OrbitFixture& fixture, double p, double a,
                            const Covector& target, double tol);

}  // namespace lieorbit
