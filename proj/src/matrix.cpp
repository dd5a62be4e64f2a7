#include "dk/matrix.hpp"

#include <sstream>

#include "dk/error.hpp"

namespace dk {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()))
    throw FieldMismatch("matrices over different fields: " + a.field().to_string() + " vs " + b.field().to_string());
}

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_ints(const Field& field, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size(), c = r ? rows.front().size() : 0;
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged integer matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(field, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("column of wrong length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, c));
  return v;
}

Matrix Matrix::columns(const std::vector<std::size_t>& which) const {
  Matrix m(field_, rows_, which.size());
  for (std::size_t j = 0; j < which.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) m(i, j) = (*this)(i, which[j]);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("vector length " + std::to_string(v.size()) + " vs " + shape(*this));
  Vector out(rows_, Scalar::zero(field_));
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::hstack(const Matrix& other) const {
  require_same_field(*this, other);
  if (rows_ != other.rows_) throw DimensionError("hstack " + shape(*this) + " with " + shape(other));
  Matrix m(field_, rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& other) const {
  require_same_field(*this, other);
  if (cols_ != other.cols_) throw DimensionError("vstack " + shape(*this) + " with " + shape(other));
  Matrix m(field_, rows_ + other.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < other.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(rows_ + i, j) = other(i, j);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(*this, o);
  if (cols_ != o.rows_) throw DimensionError("product " + shape(*this) + " * " + shape(o));
  Matrix m(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) m(i, j) += a * o(k, j);
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("sum " + shape(*this) + " + " + shape(o));
  Matrix m = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += o.data_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("difference " + shape(*this) + " - " + shape(o));
  Matrix m = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] -= o.data_[k];
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).to_string();
  }
  os << "]";
  return os.str();
}

RowEchelon row_echelon(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = col; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const Scalar inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const Scalar factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) -= factor * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  const auto [r, pivots] = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols(), Scalar::zero(m.field()));
    v[f] = Scalar::one(m.field());
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(m.field(), m.cols(), basis);
}

Matrix image_basis(const Matrix& m) { return m.columns(row_echelon(m).pivots); }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows())
    throw DimensionError("solve: right-hand side of length " + std::to_string(b.size()) + " for " + shape(m));
  Matrix rhs = Matrix::from_columns(m.field(), m.rows(), {b});
  auto x = solve(m, rhs);
  if (!x) return std::nullopt;
  return x->column(0);
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw DimensionError("solve: right-hand side " + shape(b) + " for " + shape(m));
  const auto [r, pivots] = row_echelon(m.hstack(b));
  Matrix x(m.field(), m.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= m.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = r(i, m.cols() + j);
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols() || rank(m) != m.rows()) throw StructuralError("matrix " + shape(m) + " is not invertible");
  return *solve(m, Matrix::identity(m.field(), m.rows()));
}

Matrix coordinates(const Matrix& basis, const Matrix& v, const std::string& what) {
  auto x = solve(basis, v);
  if (!x) throw StructuralError(what);
  return *x;
}

bool in_span(const Matrix& basis, const Matrix& v) { return solve(basis, v).has_value(); }

Subquotient make_subquotient(const Matrix& z, const Matrix& b) {
  if (z.rows() != b.rows()) throw DimensionError("subquotient: Z is " + shape(z) + ", B is " + shape(b));
  const auto pivots = row_echelon(b.hstack(z)).pivots;
  std::vector<std::size_t> from_b, from_z;
  for (auto p : pivots) (p < b.cols() ? from_b : from_z).push_back(p < b.cols() ? p : p - b.cols());
  if (from_b.size() + from_z.size() != rank(z))
    throw StructuralError("subquotient: span(B) is not contained in span(Z)");
  return {b.columns(from_b), z.columns(from_z)};
}

Matrix subquotient_map(const Matrix& f, const Subquotient& source, const Subquotient& target) {
  const Matrix image = f * source.representatives;
  const Matrix basis = target.boundaries.hstack(target.representatives);
  auto x = solve(basis, image);
  if (!x) throw StructuralError("subquotient map: f(Z) is not contained in span(Z')");
  const std::size_t skip = target.boundaries.cols();
  Matrix out(f.field(), target.dimension(), source.dimension());
  for (std::size_t i = 0; i < target.dimension(); ++i)
    for (std::size_t j = 0; j < source.dimension(); ++j) out(i, j) = (*x)(skip + i, j);
  return out;
}

Matrix subquotient_map(const Matrix& f, const Matrix& z, const Matrix& b, const Matrix& z2, const Matrix& b2) {
  return subquotient_map(f, make_subquotient(z, b), make_subquotient(z2, b2));
}

}  // namespace dk
