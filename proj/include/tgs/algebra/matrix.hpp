#pragma once

#include <optional>
#include <vector>

#include "tgs/algebra/field.hpp"

namespace tgs {

/// Dense row-major matrix over a tower field.
class Matrix {
 public:
  Matrix(FieldPtr f, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldPtr f, std::size_t n);
  /// Columns given as coordinate vectors.
  static Matrix from_columns(FieldPtr f, std::size_t rows, const std::vector<Coeffs>& cols);

  const FieldPtr& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Value& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Value& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix scaled(const Value& c) const;
  Coeffs apply(const Coeffs& v) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;

 private:
  FieldPtr f_;
  std::size_t rows_, cols_;
  std::vector<Value> a_;
};

std::size_t rank(const Matrix& m);
/// Basis of the right kernel.
std::vector<Coeffs> kernel(const Matrix& m);
Value determinant(const Matrix& m);
Value trace(const Matrix& m);
/// Monic characteristic polynomial det(tI - M) via Hessenberg reduction.
Coeffs charpoly(const Matrix& m);
/// Monic minimal polynomial.
Coeffs minpoly(const Matrix& m);
std::optional<Coeffs> solve(const Matrix& a, const Coeffs& b);
/// Throws DivisionByZero when singular.
Matrix inverse(const Matrix& m);
/// p(M) for a polynomial with coefficients in the matrix field.
Matrix poly_eval(const Coeffs& p, const Matrix& m);

/// Incremental echelon form that reports the first linear dependency.
class RelationFinder {
 public:
  RelationFinder(FieldPtr f, std::size_t dim);
  /// nullopt if v is independent of the vectors added so far; otherwise
  /// coefficients c_0..c_k with sum c_i v_i = 0 and c_k = 1, v_k = v.
  std::optional<Coeffs> add(const Coeffs& v);
  std::size_t size() const { return count_; }

 private:
  FieldPtr f_;
  std::size_t dim_;
  std::size_t count_ = 0;
  std::vector<Coeffs> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Coeffs> combos_;
};

}  // namespace tgs
