#pragma once

#include "lieorbit/lie_algebra.hpp"
#include "lieorbit/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lieorbit {

/// Exact test for a nonzero purely imaginary eigenvalue of ad_X.
///
/// With p the characteristic polynomial of ad_X and q(u) = Res_t(p(t), u - t^2),
/// an eigenvalue i*b (b != 0) exists iff q has a root u = -b^2 < 0. The zero
/// roots of q are stripped and the negative roots counted with a Sturm chain.
struct SpectrumCertificate {
  RationalVector element;
  Polynomial charpoly;
  Polynomial squares_poly;
  std::size_t negative_root_count = 0;
  [[nodiscard]] bool witness_found() const { return negative_root_count > 0; }
};

SpectrumCertificate pure_imaginary_spectrum_certificate(const LieAlgebra& alg, const RationalVector& x);

enum class Exponentiality { verified_nilpotent, refuted, unverified };

std::string_view to_string(Exponentiality e);
Exponentiality parse_exponentiality(std::string_view text);

struct ExponentialityStatus {
  Exponentiality status = Exponentiality::unverified;
  /// Set when refuted by a spectral witness.
  std::optional<SpectrumCertificate> witness;
  std::string reason;
  std::size_t elements_tested = 0;
};

inline constexpr std::size_t kDefaultExponentialitySamples = 200;
inline constexpr std::uint64_t kDefaultSeed = 0;

/// Nilpotent algebras are verified; non-solvable ones and those with an
/// imaginary-spectrum witness among the basis plus `sample_count` seeded
/// random rational combinations (entries p/q, |p| <= 10, 1 <= q <= 10) are
/// refuted; everything else stays unverified.
ExponentialityStatus exponentiality_status(const LieAlgebra& alg,
                                           std::size_t sample_count = kDefaultExponentialitySamples,
                                           std::uint64_t seed = kDefaultSeed);

/// Deterministic rational vector used by the exponentiality sampler.
RationalVector sample_rational_vector(std::size_t n, std::uint64_t seed, std::uint64_t index);

}  // namespace lieorbit
