#pragma once

#include "lieorbit/exponentiality.hpp"
#include "lieorbit/lie_algebra.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lieorbit {

/// Skew matrix B(i, j) = ell([e_i, e_j]).
RationalMatrix blform(const LieAlgebra& alg, const Covector& ell);

/// g(ell) = {X : ell([X, .]) = 0}, the kernel of blform.
Subspace stabilizer(const LieAlgebra& alg, const Covector& ell);

/// rank of blform = n - dim g(ell); always even.
std::size_t orbit_dimension(const LieAlgebra& alg, const Covector& ell);

struct IdealCheck {
  bool ideal = true;
  std::optional<IdealWitness> witness;
};

IdealCheck is_ideal(const LieAlgebra& alg, const Subspace& v);

/// Largest ideal of g contained in V, via V_0 = V,
/// V_{k+1} = {X in V_k : [e_i, X] in V_k for all i}.
///
/// The sum of two ideals inside V is again an ideal inside V, so the maximal
/// one is unique and the fixed point needs no tie-breaking. Each step either
/// stops or drops the dimension, hence at most dim V + 1 iterations.
Subspace largest_ideal_in(const LieAlgebra& alg, const Subspace& v);

/// Lie algebra of the projective kernel: largest_ideal_in(stabilizer(ell)).
Subspace pker_algebra(const LieAlgebra& alg, const Covector& ell);

/// Square-integrable modulo the projective kernel iff g(ell) is an ideal.
bool si_mod_pker(const LieAlgebra& alg, const Covector& ell);

/// ell + g(ell)^⊥ inside g*.
struct AffineHull {
  Covector base;
  Subspace direction;
  [[nodiscard]] bool contains(const Covector& f) const { return direction.contains((f - base).coeffs()); }
};

AffineHull affine_hull(const LieAlgebra& alg, const Covector& ell);

enum class TriState { yes, no, unknown };
std::string_view to_string(TriState t);
TriState parse_tristate(std::string_view text);

enum class CoherentStateStatus { cs_by_si, cs_iff_si_false, indeterminate_nonunimodular_quotient };
std::string_view to_string(CoherentStateStatus s);
CoherentStateStatus parse_cs_status(std::string_view text);

struct TraceWitness {
  std::size_t basis_index = 0;
  Rational trace;
  friend bool operator==(const TraceWitness&, const TraceWitness&) = default;
};

struct ClassificationReport {
  bool solvable = false;
  bool nilpotent = false;
  bool unimodular = false;
  std::optional<TraceWitness> unimodular_witness;
  Exponentiality exponentiality = Exponentiality::unverified;
  Subspace stabilizer;
  std::size_t orbit_dim = 0;
  bool stabilizer_is_ideal = false;
  Subspace pker_algebra;
  bool si_mod_pker = false;
  bool quotient_unimodular = false;
  Subspace affine_hull_direction;
  bool zero_in_affine_hull = false;
  TriState orbit_closed_affine = TriState::unknown;
  CoherentStateStatus cs_status = CoherentStateStatus::indeterminate_nonunimodular_quotient;
  std::vector<std::string> notes;

  /// Notes that make a strict run fail.
  [[nodiscard]] bool has_warnings() const;
  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

inline constexpr std::string_view kWarningPrefix = "warning: ";

struct ClassifyOptions {
  std::size_t exponentiality_samples = kDefaultExponentialitySamples;
  std::uint64_t seed = kDefaultSeed;
};

/// Throws InputError when the algebra fails validate_algebra or ell has the
/// wrong length.
ClassificationReport classify(const LieAlgebra& alg, const Covector& ell, const ClassifyOptions& options = {});

/// Stabilizer-level coherent-state criterion: g(f) == pker_algebra(ell_orbit).
bool cs_witness_check(const LieAlgebra& alg, const Covector& ell_orbit, const Covector& f);

}  // namespace lieorbit
