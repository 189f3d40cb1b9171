#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhopf/scalar.hpp"

namespace qhopf {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
bool is_zero(const Vector& v);

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  Matrix transpose() const;

  Vector apply(const Vector& x) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;

  /// "[[a, b], [c, d]]".
  std::string str() const;

  /// Stacks the rows of `below` under this matrix.
  Matrix vstack(const Matrix& below) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form with leftmost-nonzero pivoting in row order.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

Echelon rref(Matrix a);
std::size_t rank(const Matrix& a);

/// Some x with a x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

/// Basis of {x : a x = 0}, one vector per free column, with a 1 in that free
/// column and zeros in the other free columns.
std::vector<Vector> kernel_basis(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& a);

}  // namespace qhopf
