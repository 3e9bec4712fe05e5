#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "lagrel/rational.hpp"

namespace lagrel {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
  Vector col_vector(std::size_t j) const;

  void append_row(std::span<const Rational> r);
  void append_rows(const Matrix& other);
  Matrix transpose() const;
  /// Columns [c0, c0 + count).
  Matrix col_block(std::size_t c0, std::size_t count) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  const std::vector<Rational>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
/// Matrix times column vector.
Vector operator*(const Matrix& a, const Vector& v);
/// Row vector times matrix.
Vector row_times(const Vector& v, const Matrix& a);

/// Block diagonal [[a, 0], [0, b]].
Matrix block_diagonal(const Matrix& a, const Matrix& b);
/// [a | b], same row count.
Matrix hconcat(const Matrix& a, const Matrix& b);

/// Three-way lexicographic comparison by shape, then entries.
int compare(const Matrix& a, const Matrix& b);

}  // namespace lagrel
