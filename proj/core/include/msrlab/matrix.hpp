#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "msrlab/field.hpp"

namespace msrlab {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows);
  static Matrix from_rows(FieldPtr field, std::initializer_list<std::initializer_list<Elem>> rows);
  /// 1 x n matrix holding the standard basis vector e_index (0-based).
  static Matrix unit_row(FieldPtr field, std::size_t n, std::size_t index);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& data() const noexcept { return data_; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(Elem s) const;
  std::vector<Elem> apply(std::span<const Elem> column) const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix select_rows(std::span<const std::size_t> indices) const;

  bool is_zero() const noexcept;
  std::vector<std::vector<Elem>> to_rows() const;

  bool operator==(const Matrix& other) const noexcept;

 private:
  void require_compatible(const Matrix& rhs) const;

  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

Matrix vstack(const std::vector<Matrix>& parts);
Matrix hstack(const std::vector<Matrix>& parts);

struct RrefResult {
  Matrix rref;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Unique for a given row space.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
bool is_nonsingular(const Matrix& m);

/// T with T * m == b whenever <b> is contained in <m>; throws Infeasible
/// otherwise. Underdetermined systems resolve through the RREF of m: each row
/// of b is written in the pivot basis and mapped back through the recorded
/// row operations, so the answer is reproducible.
Matrix solve_left(const Matrix& m, const Matrix& b);

/// Basis (as rows) of {x : x * m == 0}.
Matrix left_kernel(const Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace msrlab
