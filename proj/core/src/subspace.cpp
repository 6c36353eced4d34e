#include "msrlab/subspace.hpp"

namespace msrlab {
namespace {

void require_same_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw Error(ErrorKind::AmbientMismatch,
                std::to_string(u.ambient_dim()) + " vs " + std::to_string(v.ambient_dim()));
  if (!same_field(u.field(), v.field())) throw Error(ErrorKind::FieldMismatch, "subspaces over different fields");
}

}  // namespace

Subspace Subspace::row_space(const Matrix& m) {
  auto r = rref(m);
  return Subspace(r.rref.block(0, 0, r.rank, m.cols()));
}

Subspace Subspace::zero(FieldPtr field, std::size_t ambient_dim) {
  return Subspace(Matrix(std::move(field), 0, ambient_dim));
}

Subspace Subspace::full(FieldPtr field, std::size_t ambient_dim) {
  return Subspace(Matrix::identity(std::move(field), ambient_dim));
}

bool Subspace::contains(const Matrix& v) const {
  if (v.cols() != ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "vector length differs from ambient dimension");
  if (v.rows() == 0) return true;
  if (dim() == 0) return v.is_zero();
  return rank(vstack({basis_, v})) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  return contains(other.basis());
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(u.field(), u.ambient_dim());
  // x*U == y*V  <=>  [x | -y] lies in the left kernel of [U; V].
  const Matrix stacked = vstack({u.basis(), v.basis()});
  const Matrix kernel = left_kernel(stacked);
  if (kernel.rows() == 0) return Subspace::zero(u.field(), u.ambient_dim());
  const Matrix coeffs = kernel.block(0, 0, kernel.rows(), u.dim());
  return Subspace::row_space(coeffs * u.basis());
}

Subspace sum(const Subspace& u, const Subspace& v) {
  require_same_ambient(u, v);
  return Subspace::row_space(vstack({u.basis(), v.basis()}));
}

Subspace transform(const Subspace& v, const Matrix& a) {
  if (a.rows() != v.ambient_dim() || a.cols() != v.ambient_dim())
    throw Error(ErrorKind::AmbientMismatch, "transform needs a square matrix of the ambient dimension");
  if (v.dim() == 0) return Subspace::zero(v.field(), v.ambient_dim());
  return Subspace::row_space(v.basis() * a);
}

}  // namespace msrlab
