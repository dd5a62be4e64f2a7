#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dk/scalar.hpp"

namespace dk {

using Vector = std::vector<Scalar>;

/// Dense rows×cols matrix over one field, acting on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix zero(const Field& field, std::size_t rows, std::size_t cols) { return Matrix(field, rows, cols); }
  /// Builds from integer rows; convenient for tests and generators.
  static Matrix from_ints(const Field& field, const std::vector<std::vector<long>>& rows);
  /// `rows` is needed so that zero-column matrices keep their height.
  static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Matrix columns(const std::vector<std::size_t>& which) const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  /// [this | other]
  Matrix hstack(const Matrix& other) const;
  /// this stacked over other
  Matrix vstack(const Matrix& other) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero
/// entry at or below the current row.
RowEchelon row_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);
/// Columns form a basis of the null space, one per free column of the RREF.
/// For a zero matrix this is the identity.
Matrix kernel_basis(const Matrix& m);
/// The pivot columns of `m` itself.
Matrix image_basis(const Matrix& m);
/// Some x with m·x = b, or nullopt when b is not in the image.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Solves m·X = b column by column; nullopt if any column fails.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);
/// Throws StructuralError if `m` is not square and invertible.
Matrix inverse(const Matrix& m);
/// Coordinates of the columns of `v` in the basis given by the (independent)
/// columns of `basis`. Throws StructuralError naming `what` when some column
/// of `v` is outside the span.
Matrix coordinates(const Matrix& basis, const Matrix& v, const std::string& what);
bool in_span(const Matrix& basis, const Matrix& v);

/// A chosen splitting of span(Z)/span(B): a basis of span(B) followed by
/// representatives completing it to a basis of span(Z).
struct Subquotient {
  Matrix boundaries;       // independent columns spanning span(B)
  Matrix representatives;  // columns of Z completing the basis
  std::size_t dimension() const { return representatives.cols(); }
};

/// Throws StructuralError unless span(B) ⊆ span(Z).
Subquotient make_subquotient(const Matrix& z, const Matrix& b);

/// Matrix of the map span(Z)/span(B) → span(Z')/span(B') induced by f,
/// in the representative bases of both quotients.
Matrix subquotient_map(const Matrix& f, const Subquotient& source, const Subquotient& target);
Matrix subquotient_map(const Matrix& f, const Matrix& z, const Matrix& b, const Matrix& z2, const Matrix& b2);

}  // namespace dk
