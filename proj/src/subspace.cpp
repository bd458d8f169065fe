#include "lieorbit/subspace.hpp"

namespace lieorbit {

Subspace Subspace::span(std::size_t ambient_dim, std::span<const RationalVector> vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw InputError("subspace generator has wrong length");
  }
  return {ambient_dim, row_echelon(RationalMatrix::from_rows(vectors, ambient_dim))};
}

Subspace Subspace::zero(std::size_t ambient_dim) { return span(ambient_dim, {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<RationalVector> axes;
  for (std::size_t i = 0; i < ambient_dim; ++i) axes.push_back(unit_vector(ambient_dim, i));
  return span(ambient_dim, axes);
}

Subspace Subspace::coordinate(std::size_t ambient_dim, std::span<const std::size_t> axes) {
  std::vector<RationalVector> vs;
  for (auto i : axes) {
    if (i >= ambient_dim) throw InputError("coordinate axis out of range");
    vs.push_back(unit_vector(ambient_dim, i));
  }
  return span(ambient_dim, vs);
}

std::vector<RationalVector> Subspace::basis() const {
  std::vector<RationalVector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

bool Subspace::contains(const RationalVector& v) const {
  if (v.size() != ambient_dim_) throw InputError("membership test with wrong vector length");
  // Reduce against the RREF rows; what remains must vanish.
  RationalVector rest = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    const Rational coeff = rest[pivots_[r]];
    if (coeff.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_dim_; ++c) rest[c] -= coeff * basis_(r, c);
  }
  return lieorbit::is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw InputError("subspace ambient dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return full(ambient_dim_);
  const auto ker = kernel(basis_);
  return span(ambient_dim_, ker);
}

Subspace Subspace::intersect(const Subspace& other) const {
  // U ∩ W = (U^⊥ + W^⊥)^⊥
  return annihilator().sum(other.annihilator()).annihilator();
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw InputError("subspace ambient dimension mismatch");
  auto vs = basis();
  for (auto& v : other.basis()) vs.push_back(std::move(v));
  return span(ambient_dim_, vs);
}

Subspace Subspace::image(const RationalMatrix& map) const {
  if (map.cols() != ambient_dim_) throw InputError("linear map does not act on this subspace");
  std::vector<RationalVector> vs;
  for (const auto& v : basis()) vs.push_back(map * v);
  return span(map.rows(), vs);
}

}  // namespace lieorbit
