#pragma once

#include <cstddef>

#include "msrlab/matrix.hpp"

namespace msrlab {

/// Subspace of F_q^n held as its canonical RREF basis (no zero rows), so two
/// subspaces are equal exactly when their bases are entry-wise equal.
class Subspace {
 public:
  /// Row space of m.
  static Subspace row_space(const Matrix& m);
  static Subspace zero(FieldPtr field, std::size_t ambient_dim);
  static Subspace full(FieldPtr field, std::size_t ambient_dim);

  std::size_t dim() const noexcept { return basis_.rows(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }
  const FieldPtr& field() const noexcept { return basis_.field(); }

  /// True when every row of v lies in the subspace.
  bool contains(const Matrix& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& other) const noexcept { return basis_ == other.basis_; }

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
/// Row space of basis(v) * a, for a square a of the ambient dimension.
Subspace transform(const Subspace& v, const Matrix& a);

}  // namespace msrlab
