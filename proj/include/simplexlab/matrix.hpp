#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "simplexlab/rational.hpp"

namespace simplexlab {

using Vector = std::vector<Rational>;

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);
Rational dot(const Vector& a, const Vector& b);

// Rank by exact Gaussian elimination.
std::size_t rank(Matrix m);

// Solves square * X = rhs column-wise. Returns nullopt when square is singular.
std::optional<Matrix> solve(Matrix square, Matrix rhs);
std::optional<Vector> solve(const Matrix& square, const Vector& rhs);

}  // namespace simplexlab
