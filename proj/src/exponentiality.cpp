#include "lieorbit/exponentiality.hpp"

#include <random>

namespace lieorbit {

SpectrumCertificate pure_imaginary_spectrum_certificate(const LieAlgebra& alg, const RationalVector& x) {
  SpectrumCertificate cert;
  cert.element = x;
  cert.charpoly = characteristic_polynomial(ad_matrix(alg, x));
  cert.squares_poly = squares_polynomial(cert.charpoly);
  const Polynomial reduced = strip_zero_roots(cert.squares_poly);
  cert.negative_root_count = reduced.degree() > 0 ? count_negative_roots(reduced) : 0;
  return cert;
}

std::string_view to_string(Exponentiality e) {
  switch (e) {
    case Exponentiality::verified_nilpotent: return "verified_nilpotent";
    case Exponentiality::refuted: return "refuted";
    case Exponentiality::unverified: return "unverified";
  }
  return "unverified";
}

Exponentiality parse_exponentiality(std::string_view text) {
  if (text == "verified_nilpotent") return Exponentiality::verified_nilpotent;
  if (text == "refuted") return Exponentiality::refuted;
  if (text == "unverified") return Exponentiality::unverified;
  throw InputError("unknown exponentiality status '" + std::string(text) + "'");
}

RationalVector sample_rational_vector(std::size_t n, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32U)};
  std::mt19937_64 rng(seq);
  RationalVector v(n);
  for (auto& x : v) {
    const long num = static_cast<long>(rng() % 21U) - 10;
    const long den = static_cast<long>(rng() % 10U) + 1;
    x = Rational(num, den);
  }
  return v;
}

ExponentialityStatus exponentiality_status(const LieAlgebra& alg, std::size_t sample_count, std::uint64_t seed) {
  ExponentialityStatus out;
  if (is_nilpotent(alg)) {
    out.status = Exponentiality::verified_nilpotent;
    out.reason = "nilpotent";
    return out;
  }
  if (!is_solvable(alg)) {
    out.status = Exponentiality::refuted;
    out.reason = "not solvable";
    return out;
  }
  const std::size_t n = alg.dim();
  auto try_element = [&](const RationalVector& x) {
    ++out.elements_tested;
    auto cert = pure_imaginary_spectrum_certificate(alg, x);
    if (!cert.witness_found()) return false;
    out.status = Exponentiality::refuted;
    out.reason = "ad has a nonzero purely imaginary eigenvalue";
    out.witness = std::move(cert);
    return true;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (try_element(unit_vector(n, i))) return out;
  }
  for (std::size_t s = 0; s < sample_count; ++s) {
    if (try_element(sample_rational_vector(n, seed, s))) return out;
  }
  out.status = Exponentiality::unverified;
  out.reason = "no imaginary-spectrum witness found";
  return out;
}

}  // namespace lieorbit
