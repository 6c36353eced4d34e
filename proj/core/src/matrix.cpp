#include "msrlab/matrix.hpp"

#include <sstream>

namespace msrlab {
namespace {

struct Reduction {
  Matrix rref;
  std::vector<std::size_t> pivots;
  std::optional<Matrix> transform;  // E with E * input == rref
};

Reduction reduce(const Matrix& input, bool track) {
  const Field& f = *input.field();
  Matrix a = input;
  std::optional<Matrix> e;
  if (track) e = Matrix::identity(input.field(), input.rows());
  std::vector<std::size_t> pivots;

  auto swap_rows = [](Matrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
  };
  auto scale_row = [&f](Matrix& m, std::size_t i, Elem s) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = f.mul(m(i, c), s);
  };
  // row_i -= factor * row_j
  auto eliminate = [&f](Matrix& m, std::size_t i, std::size_t j, Elem factor) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(j, c) != 0) m(i, c) = f.sub(m(i, c), f.mul(factor, m(j, c)));
  };

  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    swap_rows(a, row, sel);
    if (e) swap_rows(*e, row, sel);
    const Elem s = f.inv(a(row, col));
    scale_row(a, row, s);
    if (e) scale_row(*e, row, s);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Elem factor = a(i, col);
      eliminate(a, i, row, factor);
      if (e) eliminate(*e, i, row, factor);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots), std::move(e)};
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!field_) throw Error(ErrorKind::FieldMismatch, "matrix needs a field");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (!field_) throw Error(ErrorKind::FieldMismatch, "matrix needs a field");
  if (data_.size() != rows * cols)
    throw Error(ErrorKind::DimensionMismatch, "entry count does not match rows*cols");
  for (Elem v : data_)
    if (!field_->contains(v))
      throw Error(ErrorKind::InvalidParams, "entry " + std::to_string(v) + " outside " + field_->name());
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Elem> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

Matrix Matrix::from_rows(FieldPtr field, std::initializer_list<std::initializer_list<Elem>> rows) {
  std::vector<std::vector<Elem>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(std::move(field), v);
}

Matrix Matrix::unit_row(FieldPtr field, std::size_t n, std::size_t index) {
  Matrix m(std::move(field), 1, n);
  m(0, index) = 1;
  return m;
}

void Matrix::require_compatible(const Matrix& rhs) const {
  if (!same_field(field_, rhs.field_))
    throw Error(ErrorKind::FieldMismatch, field_->name() + " vs " + rhs.field_->name());
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_compatible(rhs);
  if (cols_ != rhs.rows_)
    throw Error(ErrorKind::DimensionMismatch, "product of " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                                  " and " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  const Field& f = *field_;
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t t = 0; t < cols_; ++t) {
      const Elem a = (*this)(i, t);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (rhs(t, j) != 0) out(i, j) = f.add(out(i, j), f.mul(a, rhs(t, j)));
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_compatible(rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::DimensionMismatch, "sum shape");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require_compatible(rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::DimensionMismatch, "difference shape");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->sub(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::scaled(Elem s) const {
  Matrix out = *this;
  for (auto& v : out.data_) v = field_->mul(v, s);
  return out;
}

std::vector<Elem> Matrix::apply(std::span<const Elem> column) const {
  if (column.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "vector length");
  std::vector<Elem> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc = field_->add(acc, field_->mul((*this)(i, j), column[j]));
    out[i] = acc;
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  require_compatible(m);
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
  Matrix out(field_, indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw Error(ErrorKind::DimensionMismatch, "row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(indices[i], j);
  }
  return out;
}

bool Matrix::is_zero() const noexcept {
  for (Elem v : data_)
    if (v != 0) return false;
  return true;
}

std::vector<std::vector<Elem>> Matrix::to_rows() const {
  std::vector<std::vector<Elem>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

bool Matrix::operator==(const Matrix& other) const noexcept {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_ && same_field(field_, other.field_);
}

Matrix vstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw Error(ErrorKind::DimensionMismatch, "vstack of nothing");
  const std::size_t cols = parts.front().cols();
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw Error(ErrorKind::DimensionMismatch, "vstack column mismatch");
    rows += p.rows();
  }
  Matrix out(parts.front().field(), rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows();
  }
  return out;
}

Matrix hstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw Error(ErrorKind::DimensionMismatch, "hstack of nothing");
  const std::size_t rows = parts.front().rows();
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw Error(ErrorKind::DimensionMismatch, "hstack row mismatch");
    cols += p.cols();
  }
  Matrix out(parts.front().field(), rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols();
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  auto red = reduce(m, false);
  const std::size_t r = red.pivots.size();
  return {std::move(red.rref), r, std::move(red.pivots)};
}

std::size_t rank(const Matrix& m) { return reduce(m, false).pivots.size(); }

bool is_nonsingular(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto red = reduce(m, true);
  if (red.pivots.size() != m.rows()) return std::nullopt;
  return std::move(*red.transform);
}

Matrix solve_left(const Matrix& m, const Matrix& b) {
  if (!same_field(m.field(), b.field())) throw Error(ErrorKind::FieldMismatch, "solve_left operands");
  if (m.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "solve_left needs equal column counts");
  const Field& f = *m.field();
  auto red = reduce(m, true);
  const Matrix& r = red.rref;
  const Matrix& e = *red.transform;
  const std::size_t rk = red.pivots.size();

  Matrix t(m.field(), b.rows(), m.rows());
  std::vector<Elem> coeff(rk);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t p = 0; p < rk; ++p) coeff[p] = b(i, red.pivots[p]);
    // The pivot coordinates determine the combination; it must reproduce b_i exactly.
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Elem acc = 0;
      for (std::size_t p = 0; p < rk; ++p)
        if (coeff[p] != 0 && r(p, c) != 0) acc = f.add(acc, f.mul(coeff[p], r(p, c)));
      if (acc != b(i, c))
        throw Error(ErrorKind::Infeasible, "row " + std::to_string(i) + " of target lies outside the row space");
    }
    for (std::size_t p = 0; p < rk; ++p) {
      if (coeff[p] == 0) continue;
      for (std::size_t c = 0; c < m.rows(); ++c)
        if (e(p, c) != 0) t(i, c) = f.add(t(i, c), f.mul(coeff[p], e(p, c)));
    }
  }
  return t;
}

Matrix left_kernel(const Matrix& m) {
  auto red = reduce(m, true);
  const std::size_t rk = red.pivots.size();
  return red.transform->block(rk, 0, m.rows() - rk, m.rows());
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os.str();
}

}  // namespace msrlab
